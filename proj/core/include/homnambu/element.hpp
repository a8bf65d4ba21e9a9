#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "homnambu/scalar.hpp"
#include "homnambu/space.hpp"

namespace homnambu {

// Coordinates of a vector in a SuperSpace basis. Dense: the spaces are tiny.
class Element {
 public:
  Element() = default;
  explicit Element(std::size_t dim) : c_(dim) {}
  explicit Element(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {}
  static Element basis(std::size_t dim, std::size_t i, const Scalar& coeff = Scalar(1));

  std::size_t dim() const { return c_.size(); }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Scalar>& coeffs() const { return c_; }

  bool is_zero() const;
  std::vector<std::size_t> support() const;
  // Parity of a homogeneous element; zero counts as even, mixed support gives nullopt.
  std::optional<Parity> parity(const SuperSpace& space) const;

  void add_scaled(const Element& other, const Scalar& c);
  void clear();

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& s);
  Element operator-() const;
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  friend bool operator==(const Element&, const Element&) = default;

  // "3*e1 - 1/2*e2", or "0".
  std::string format(const SuperSpace& space) const;

 private:
  std::vector<Scalar> c_;
};

// Nonzero coordinates of an element, used by the multilinear evaluators.
struct Term {
  std::size_t index;
  Scalar coeff;
};
using SparseVec = std::vector<Term>;

SparseVec sparse(const Element& e);

}  // namespace homnambu
