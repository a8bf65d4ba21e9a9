#include "homnambu/tuples.hpp"

#include "homnambu/errors.hpp"

namespace homnambu {

namespace {
constexpr std::size_t kMaxTuples = std::size_t{1} << 24;
}

std::size_t tuple_count(std::size_t dim, std::size_t n) {
  std::size_t c = 1;
  for (std::size_t k = 0; k < n; ++k) {
    c *= dim;
    if (c > kMaxTuples) throw InputError("tuple space too large for exhaustive treatment");
  }
  return c;
}

std::size_t flat_index(std::span<const std::size_t> tuple, std::size_t dim) {
  std::size_t f = 0;
  for (auto i : tuple) f = f * dim + i;
  return f;
}

Tuple tuple_at(std::size_t flat, std::size_t dim, std::size_t n) {
  Tuple t(n);
  for (std::size_t k = n; k > 0; --k) {
    t[k - 1] = flat % dim;
    flat /= dim;
  }
  return t;
}

Tuple without(std::span<const std::size_t> t, std::size_t i, std::size_t j) {
  Tuple out;
  out.reserve(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k != i && k != j) out.push_back(t[k]);
  }
  return out;
}

}  // namespace homnambu
