#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homnambu/algebra.hpp"
#include "homnambu/cochains.hpp"
#include "homnambu/report.hpp"

namespace homnambu {

class RotaBaxterOperator {
 public:
  // Throws InputError for an odd map.
  RotaBaxterOperator(GradedLinearMap map, Scalar weight);
  const GradedLinearMap& map() const { return map_; }
  const Scalar& weight() const { return weight_; }

 private:
  GradedLinearMap map_;
  Scalar weight_;
};

// One term of R(Σ_I λ^{|I|−1}[R̂x1,…,R̂xn]): slot i carries x_i when in_subset[i], else R x_i.
struct RbTerm {
  std::vector<bool> in_subset;
  unsigned lambda_power;
};
// All 2^n − 1 nonempty subsets, by size and then lexicographically.
std::vector<RbTerm> rb_subset_expansion(std::size_t n);

// Commutation with every twist plus the Rota-Baxter identity over all basis tuples.
// On ternary algebras a third check evaluates the written-out seven-term form of the
// right-hand side and compares it with the subset sum.
Verification check_rb_nary(const RotaBaxterOperator& r, const HomSuperAlgebra& alg, CheckOptions options = {});
// Binary algebras only; throws PreconditionFailed otherwise.
Verification check_rb_binary(const RotaBaxterOperator& r, const HomSuperAlgebra& alg, CheckOptions options = {});

struct EquivalenceReport {
  Verification rota_baxter;
  Verification derivation;
  bool agree() const { return rota_baxter.passed() == derivation.passed(); }
};

// Weight-0 Rota-Baxter property of R against the α^0-derivation property of R^{-1}.
// Throws SingularMap when R is not invertible.
EquivalenceReport check_inverse_derivation_equiv(const GradedLinearMap& r, const HomSuperAlgebra& alg,
                                                 CheckOptions options = {});

struct KernelConditionReport {
  CheckReport kernel_condition;
  Verification nary_rota_baxter;
  std::vector<std::string> notes;
  bool agree() const { return kernel_condition.passed() == nary_rota_baxter.passed(); }
};

// For each basis n-tuple x, tests whether
//   Σ_{k<l} (−1)^{k+l+1} (−1)^{γ_kl} Σ_{i≠k,l} φ(R x1,…,x_i,…,R xn without k,l) [R x_k, R x_l]
// lies in ker R, and separately checks R as a weight-0 operator on the φ-induced n-ary algebra.
// Unmet hypotheses (R not RB(0) on the base, φ failing the induction conditions) become notes.
KernelConditionReport check_phi_rb_kernel_condition(const GradedLinearMap& r, const SuperCochain& phi,
                                                    const HomSuperAlgebra& alg, std::size_t n,
                                                    CheckOptions options = {});

}  // namespace homnambu
