#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "homnambu/algebra.hpp"
#include "homnambu/derivations.hpp"
#include "homnambu/report.hpp"

namespace homnambu {

// Even, super-skew, scalar-valued k-linear form, stored for every basis k-tuple.
class SuperCochain {
 public:
  SuperCochain(SuperSpace space, std::size_t degree);
  // Orbit completion of the generators. Throws OrbitConflict, or InputError when a value
  // sits on a tuple of odd total parity.
  static SuperCochain from_generators(SuperSpace space, std::size_t degree,
                                      const std::vector<std::pair<Tuple, Scalar>>& generators);
  // Takes the table verbatim; only evenness is enforced.
  static SuperCochain from_table(SuperSpace space, std::size_t degree, std::vector<Scalar> table);

  const SuperSpace& space() const { return space_; }
  std::size_t degree() const { return degree_; }
  const Scalar& value(std::span<const std::size_t> tuple) const;
  const Scalar& value_flat(std::size_t flat) const { return table_[flat]; }
  Scalar evaluate(std::span<const Element> args) const;
  Scalar evaluate(std::span<const SparseVec* const> args) const;
  std::vector<std::size_t> support() const;
  bool is_zero() const { return support().empty(); }

  friend bool operator==(const SuperCochain&, const SuperCochain&);

 private:
  SuperSpace space_;
  std::size_t degree_;
  std::vector<Scalar> table_;
};

CheckReport check_cochain_super_skew(const SuperCochain& f, CheckOptions options = {});

// δf(x1,…,x_{k+1}) = Σ_{i<j} (−1)^{i+j+1} ε_ij f([x_i,x_j], α x1,…,x̂_i,…,x̂_j,…,α x_{k+1}), where ε_ij is
// the Koszul sign of moving x_i, x_j to the front. With that sign δ∘δ = 0 on untwisted Lie superalgebras.
SuperCochain coboundary(const SuperCochain& f, const HomSuperAlgebra& alg);

// Σ_{i<j} (−1)^{i+j} (−1)^{γ^Y_ij} φ(y without y_i, y_j) · φ(X, [y_i, y_j]) on basis tuples,
// |X| = n−3 and |Y| = n where n = degree + 2.
Scalar wedge_obstruction(const SuperCochain& phi, std::span<const std::size_t> x,
                         std::span<const std::size_t> y, const HomSuperAlgebra& alg);

// The two conditions under which the φ-bracket satisfies the Nambu identity.
Verification check_induction_conditions(const SuperCochain& phi, const HomSuperAlgebra& alg,
                                        CheckOptions options = {});

// φ(x)[y,z] + (−1)^{|x|(|y|+|z|)} φ(y)[z,x] + (−1)^{|z|(|x|+|y|)} φ(z)[x,y], twists (α, α).
HomSuperAlgebra triple_product(const SuperCochain& phi, const HomSuperAlgebra& alg);

// Σ_{i<j} (−1)^{i+j+1} (−1)^{γ_ij} φ(x without x_i, x_j) [x_i, x_j], twists (α,…,α).
HomSuperAlgebra phi_induced_bracket(const SuperCochain& phi, const HomSuperAlgebra& alg, std::size_t n);

Verification check_supertrace(const SuperCochain& phi, const HomSuperAlgebra& alg, CheckOptions options = {});
bool is_supertrace(const SuperCochain& phi, const HomSuperAlgebra& alg);

struct TransferReport {
  CheckReport hypothesis;
  std::optional<Verification> conclusion;  // empty when the hypothesis fails
  bool hypothesis_failed() const { return !hypothesis.passed(); }
  bool passed() const { return hypothesis.passed() && conclusion && conclusion->passed(); }
};

// If Σ_i (−1)^{|D||X|^{i−1}} φ(x1,…,D x_i,…) vanishes, D is checked as an α^k-derivation
// of the φ-bracket. Throws PreconditionFailed unless D is one of the base algebra.
TransferReport phi_transfer_derivation(const DerivationCandidate& d, const SuperCochain& phi,
                                       const HomSuperAlgebra& alg, CheckOptions options = {});

}  // namespace homnambu
