#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "homnambu/space.hpp"

namespace homnambu {

// dim^n with a guard against absurd sizes.
std::size_t tuple_count(std::size_t dim, std::size_t n);

// Flat index of a tuple, first position most significant (lexicographic order).
std::size_t flat_index(std::span<const std::size_t> tuple, std::size_t dim);
Tuple tuple_at(std::size_t flat, std::size_t dim, std::size_t n);

// Calls fn(const Tuple&) for every tuple in {0..dim-1}^n in lexicographic order.
template <class Fn>
void for_each_tuple(std::size_t dim, std::size_t n, Fn&& fn) {
  Tuple t(n, 0);
  if (n > 0 && dim == 0) return;
  while (true) {
    fn(static_cast<const Tuple&>(t));
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++t[pos] < dim) break;
      t[pos] = 0;
      if (pos == 0) return;
    }
    if (n == 0) return;
  }
}

// Tuple with positions i and j (0-based) removed.
Tuple without(std::span<const std::size_t> t, std::size_t i, std::size_t j);

}  // namespace homnambu
