#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homnambu/errors.hpp"
#include "homnambu/signs.hpp"
#include "homnambu/space.hpp"

namespace homnambu {

// Spreads each generator over its orbit under the given adjacent transpositions
// (1-based positions), multiplying by the super-skew sign at every step. Works for any
// value type with unary minus, == and is_zero(). Explicit zeros are kept so that they can
// clash with nonzero values coming from another generator.
template <class V, class Format>
std::map<Tuple, V> complete_orbits(const SuperSpace& space,
                                   const std::vector<std::pair<Tuple, V>>& generators,
                                   const std::vector<std::size_t>& positions, Format format) {
  std::map<Tuple, V> result;
  for (const auto& [start, value] : generators) {
    std::map<Tuple, int> sign{{start, 1}};
    std::deque<Tuple> queue{start};
    bool forced_zero = false;
    while (!queue.empty()) {
      Tuple u = std::move(queue.front());
      queue.pop_front();
      const int s = sign.at(u);
      const auto parities = space.parities_of(u);
      for (auto pos : positions) {
        Tuple w = u;
        std::swap(w[pos - 1], w[pos]);
        const int sw = s * koszul_adjacent_sign(parities, pos);
        auto [it, inserted] = sign.emplace(w, sw);
        if (inserted) {
          queue.push_back(std::move(w));
        } else if (it->second != sw) {
          forced_zero = true;
        }
      }
    }
    if (forced_zero && !value.is_zero())
      throw OrbitConflict(space.format_tuple(start), "0", format(value));
    for (const auto& [t, s] : sign) {
      V expected = s > 0 ? value : -value;
      auto [it, inserted] = result.emplace(t, expected);
      if (!inserted && !(it->second == expected))
        throw OrbitConflict(space.format_tuple(t), format(expected), format(it->second));
    }
  }
  return result;
}

}  // namespace homnambu
