#pragma once

#include <cstddef>
#include <span>

#include "homnambu/scalar.hpp"
#include "homnambu/space.hpp"

namespace homnambu {

// Sign picked up by a super-skew bracket when positions i and i+1 (1-based) are swapped:
// −(−1)^{p_i p_{i+1}}.
int koszul_adjacent_sign(std::span<const Parity> parities, std::size_t i);

// Mod-2 sum of the first i parities.
Parity prefix_degree(std::span<const Parity> parities, std::size_t i);

// (−1)^γ with γ = (p_{j+1}+…+p_n)(p_i+p_j) + p_i(p_{i+1}+…+p_{j−1}), positions 1-based,
// 1 ≤ i < j ≤ n = parities.size(). This is the Koszul sign for moving x_i, x_j (in that
// order) behind all the other arguments.
int gamma_sign(std::span<const Parity> parities, std::size_t i, std::size_t j);

}  // namespace homnambu
