#include "homnambu/signs.hpp"

#include <string>

#include "homnambu/errors.hpp"

namespace homnambu {

int koszul_adjacent_sign(std::span<const Parity> parities, std::size_t i) {
  if (i < 1 || i >= parities.size())
    throw InputError("adjacent position " + std::to_string(i) + " out of range");
  return (parities[i - 1] * parities[i]).odd() ? 1 : -1;
}

Parity prefix_degree(std::span<const Parity> parities, std::size_t i) {
  if (i > parities.size()) throw InputError("prefix length " + std::to_string(i) + " out of range");
  Parity p;
  for (std::size_t k = 0; k < i; ++k) p += parities[k];
  return p;
}

int gamma_sign(std::span<const Parity> parities, std::size_t i, std::size_t j) {
  const std::size_t n = parities.size();
  if (i < 1 || i >= j || j > n)
    throw InputError("gamma_sign needs 1 <= i < j <= n, got i=" + std::to_string(i) +
                     " j=" + std::to_string(j) + " n=" + std::to_string(n));
  Parity tail;
  for (std::size_t k = j + 1; k <= n; ++k) tail += parities[k - 1];
  Parity between;
  for (std::size_t k = i + 1; k < j; ++k) between += parities[k - 1];
  const Parity pi = parities[i - 1];
  const Parity pj = parities[j - 1];
  const Parity gamma = tail * (pi + pj) + pi * between;
  return gamma.odd() ? -1 : 1;
}

}  // namespace homnambu
