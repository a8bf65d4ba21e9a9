#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homnambu/element.hpp"
#include "homnambu/linalg.hpp"
#include "homnambu/space.hpp"

namespace homnambu {

// Parity-homogeneous endomorphism of a SuperSpace. Column j holds the image of basis vector j.
class GradedLinearMap {
 public:
  // Validates that every column lands in the parity class the declared parity demands.
  GradedLinearMap(SuperSpace space, Parity parity, Matrix matrix);
  GradedLinearMap(SuperSpace space, Parity parity, const std::vector<Element>& images);

  static GradedLinearMap identity(const SuperSpace& space);
  static GradedLinearMap zero(const SuperSpace& space, Parity parity = kEven);
  static GradedLinearMap diagonal(const SuperSpace& space, const std::vector<Scalar>& diag);

  const SuperSpace& space() const { return space_; }
  Parity parity() const { return parity_; }
  const Matrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }
  const Scalar& entry(std::size_t row, std::size_t col) const { return m_(row, col); }

  Element apply(const Element& x) const;
  Element column(std::size_t j) const;
  const SparseVec& sparse_column(std::size_t j) const { return cols_[j]; }
  bool is_zero() const;
  bool is_identity() const;

  GradedLinearMap operator+(const GradedLinearMap& o) const;
  GradedLinearMap operator-(const GradedLinearMap& o) const;
  friend GradedLinearMap operator*(const Scalar& s, const GradedLinearMap& f);
  friend bool operator==(const GradedLinearMap& a, const GradedLinearMap& b);

  std::string format() const;

 private:
  void check_grading() const;
  void index_columns();

  SuperSpace space_;
  Parity parity_;
  Matrix m_;
  std::vector<SparseVec> cols_;
};

GradedLinearMap map_compose(const GradedLinearMap& f, const GradedLinearMap& g);
GradedLinearMap map_power(const GradedLinearMap& f, unsigned k);
// D∘D' − (−1)^{|D||D'|} D'∘D
GradedLinearMap supercommutator_maps(const GradedLinearMap& d, const GradedLinearMap& dp);
GradedLinearMap map_inverse(const GradedLinearMap& f);

}  // namespace homnambu
