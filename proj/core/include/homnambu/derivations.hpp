#pragma once

#include <span>
#include <vector>

#include "homnambu/algebra.hpp"
#include "homnambu/report.hpp"

namespace homnambu {

struct DerivationCandidate {
  GradedLinearMap map;
  unsigned power = 0;
};

class QuasiPair {
 public:
  QuasiPair(GradedLinearMap d, GradedLinearMap dprime, unsigned power);
  const GradedLinearMap& d() const { return d_; }
  const GradedLinearMap& dprime() const { return dprime_; }
  unsigned power() const { return power_; }

 private:
  GradedLinearMap d_;
  GradedLinearMap dprime_;
  unsigned power_;
};

// One map per argument slot followed by the map applied to the bracket value.
class GeneralizedTuple {
 public:
  GeneralizedTuple(std::vector<GradedLinearMap> maps, unsigned power);
  const std::vector<GradedLinearMap>& maps() const { return maps_; }
  unsigned power() const { return power_; }

 private:
  std::vector<GradedLinearMap> maps_;
  unsigned power_;
};

// D∘α = α∘D and D[x1,…,xn] = Σ_i (−1)^{|D||X|^{i−1}} [α^k x1,…,D x_i,…,α^k xn].
Verification check_derivation(const DerivationCandidate& c, const HomSuperAlgebra& alg,
                              CheckOptions options = {});
// Same, with the spectator twist α given explicitly rather than taken from the algebra.
Verification check_derivation(const DerivationCandidate& c, const NaryBracket& bracket,
                              const GradedLinearMap& alpha, CheckOptions options = {});

// Basis of the α^k-derivations of the given parity. Each basis map has coefficient 1 on
// its own free matrix entry and 0 on the other free entries; entries are ordered row-major.
std::vector<GradedLinearMap> solve_derivation_space(const HomSuperAlgebra& alg, unsigned k,
                                                    Parity parity);

// y ↦ [x1,…,x_{n−1},α^k y] with power k+1. Throws FixedPointViolation unless α(x_i) = x_i.
DerivationCandidate inner_derivation(const HomSuperAlgebra& alg, std::span<const Element> xs,
                                     unsigned k);

CheckReport check_quasi_derivation(const QuasiPair& p, const HomSuperAlgebra& alg,
                                   CheckOptions options = {});

CheckReport check_generalized_derivation(const GeneralizedTuple& t, const HomSuperAlgebra& alg,
                                         CheckOptions options = {});
CheckReport check_generalized_derivation(const GeneralizedTuple& t, const NaryBracket& bracket,
                                         const GradedLinearMap& alpha, CheckOptions options = {});

// The supercommutator of two verified derivations, checked at power k1+k2.
Verification check_derivation_closure(const DerivationCandidate& c1, const DerivationCandidate& c2,
                                      const HomSuperAlgebra& alg, CheckOptions options = {});

}  // namespace homnambu
