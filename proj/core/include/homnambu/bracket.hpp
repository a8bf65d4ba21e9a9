#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "homnambu/element.hpp"
#include "homnambu/space.hpp"

namespace homnambu {

// Structure constants of an n-linear map V^n -> V, stored for every basis tuple.
// Grading is not enforced here; check_grading and the loaders do that.
class NaryBracket {
 public:
  NaryBracket(SuperSpace space, std::size_t arity);

  // Fills every permutation of each generator with its super-skew sign.
  static NaryBracket from_generators(SuperSpace space, std::size_t arity,
                                     const std::vector<std::pair<Tuple, Element>>& generators);
  // Only the first two arguments are permuted.
  static NaryBracket from_generators_first_pair(SuperSpace space, std::size_t arity,
                                                const std::vector<std::pair<Tuple, Element>>& generators);

  const SuperSpace& space() const { return space_; }
  std::size_t arity() const { return arity_; }
  std::size_t dim() const { return space_.dim(); }
  std::size_t size() const { return table_.size(); }

  const Element& at(std::span<const std::size_t> tuple) const { return table_[flat_index_checked(tuple)]; }
  const Element& at_flat(std::size_t flat) const { return table_[flat]; }
  bool nonzero_flat(std::size_t flat) const { return nonzero_[flat]; }
  void set(std::span<const std::size_t> tuple, Element value);

  // Sorted flat indices of nonzero entries.
  std::vector<std::size_t> support() const;
  bool is_zero() const;

  Element evaluate(std::span<const Element> args) const;
  // out += coeff * B(args), each argument given by its nonzero coordinates.
  void accumulate(std::span<const SparseVec* const> args, const Scalar& coeff, Element& out) const;

  friend bool operator==(const NaryBracket& a, const NaryBracket& b);

 private:
  std::size_t flat_index_checked(std::span<const std::size_t> tuple) const;

  SuperSpace space_;
  std::size_t arity_;
  std::vector<Element> table_;
  std::vector<bool> nonzero_;
};

// Completes a partial bracket under all adjacent transpositions. Throws OrbitConflict.
NaryBracket complete_skew_orbit(const NaryBracket& partial);

}  // namespace homnambu
