#pragma once

#include <span>
#include <string>
#include <vector>

#include "homnambu/algebra.hpp"
#include "homnambu/report.hpp"

namespace homnambu {

// Identity names used in reports and on the command line.
namespace identity {
inline constexpr const char* kGrading = "grading";
inline constexpr const char* kSuperSkew = "super_skew";
inline constexpr const char* kHomJacobi = "hom_jacobi";
inline constexpr const char* kNambu = "nambu";
inline constexpr const char* kMultiplicative = "multiplicative";
}  // namespace identity

CheckReport check_super_skew(const NaryBracket& bracket, CheckOptions options = {});
CheckReport check_super_skew(const HomSuperAlgebra& alg, CheckOptions options = {});

// Cyclic super-Hom-Jacobi sum over all basis triples. Binary algebras only.
CheckReport check_hom_jacobi(const HomSuperAlgebra& alg, CheckOptions options = {});

// [α1 x1,…,α_{n−1} x_{n−1},[y1,…,yn]] against
// Σ_i (−1)^{|X||Y|^{i−1}} [α1 y1,…,α_{i−1} y_{i−1},[x1,…,x_{n−1},y_i],α_i y_{i+1},…,α_{n−1} yn].
// Counterexample tuples are X followed by Y.
CheckReport check_nambu_identity(const HomSuperAlgebra& alg, CheckOptions options = {});

// α([x1,…,xn]) = [α x1,…,α xn]; needs a single shared twist.
CheckReport check_multiplicative(const HomSuperAlgebra& alg, CheckOptions options = {});

// Every bracket value lies in the parity class of the sum of its input parities.
CheckReport check_grading(const NaryBracket& bracket, CheckOptions options = {});
CheckReport check_grading(const HomSuperAlgebra& alg, CheckOptions options = {});

// y ↦ [x1,…,x_{n−1},y], of parity Σ|x_i|. Throws InputError on mixed-parity arguments.
GradedLinearMap adjoint_map(const HomSuperAlgebra& alg, std::span<const Element> xs);

// Runs the named identities ("all" expands to every identity applicable to the arity).
Verification check_identities(const HomSuperAlgebra& alg, const std::vector<std::string>& names,
                              CheckOptions options = {});

}  // namespace homnambu
