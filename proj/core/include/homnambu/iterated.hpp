#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "homnambu/algebra.hpp"
#include "homnambu/derivations.hpp"
#include "homnambu/report.hpp"

namespace homnambu {

// Attached to reports on iterated algebras. The twist choice does not affect Rota-Baxter verdicts.
inline constexpr const char* kIteratedTwistNote =
    "iterated n-ary algebra uses twist alpha^(n-1); with alpha^(n-2) instead the Rota-Baxter verdicts "
    "are the same, since the Rota-Baxter identity does not involve the twist";

// [x1,…,xn]_n = [[x1,…,x_{n−1}]_{n−1}, α^{n−2} x_n] with every twist α^{n−1}.
// Throws PreconditionFailed unless the base is binary with a shared multiplicative twist.
HomSuperAlgebra iterated_bracket(const HomSuperAlgebra& alg, std::size_t n);

// ad_{α^{n−1}x}[y1,…,yn]_n = Σ_k (−1)^{|x||Y|^{k−1}} [α y1,…,[x,y_k],…,α yn]_n for one x and Y.
// Failures of super-Hom-Jacobi in the base are attached as notes.
CheckReport check_ad2_expansion(const HomSuperAlgebra& alg, const Element& x, std::span<const std::size_t> y,
                                std::size_t n, CheckOptions options = {});
// Every basis x and every basis n-tuple Y. Counterexample tuples are x followed by Y.
CheckReport check_ad2_expansion_exhaustive(const HomSuperAlgebra& alg, std::size_t n, CheckOptions options = {});

// D is checked as an α^k-derivation of the iterated n-ary bracket, spectators twisted by the
// base α^k. Throws PreconditionFailed unless D is one of the base algebra.
Verification iterated_transfer_derivation(const DerivationCandidate& d, const HomSuperAlgebra& alg,
                                          std::size_t n, CheckOptions options = {});

// chain = D, D′, …, D^{(n−1)} with each consecutive pair a quasi-derivation of the base.
// Checks (D, D, D′, …, D^{(n−1)}) as an (n+1)-ary α^k-derivation of the iterated bracket.
CheckReport iterated_generalized_tuple(const std::vector<GradedLinearMap>& chain, unsigned k,
                                       const HomSuperAlgebra& alg, std::size_t n, CheckOptions options = {});

}  // namespace homnambu
