#include "homnambu/rotabaxter.hpp"

#include <algorithm>

#include "homnambu/derivations.hpp"
#include "homnambu/errors.hpp"
#include "homnambu/linalg.hpp"
#include "homnambu/signs.hpp"
#include "homnambu/tuples.hpp"

namespace homnambu {

namespace {

CheckReport twist_commutation(const GradedLinearMap& r, const HomSuperAlgebra& alg, CheckOptions options) {
  CheckReport report("commutes_with_twist", alg.space(), options);
  const std::size_t d = alg.dim();
  std::vector<const GradedLinearMap*> distinct;
  for (const auto& a : alg.twists()) {
    if (std::none_of(distinct.begin(), distinct.end(), [&](const GradedLinearMap* b) { return *b == a; }))
      distinct.push_back(&a);
  }
  for (const auto* a : distinct)
    for (std::size_t j = 0; j < d; ++j) {
      report.add_checked();
      const Element e = Element::basis(d, j);
      const Element lhs = r.apply(a->apply(e));
      const Element rhs = a->apply(r.apply(e));
      if (!(lhs == rhs)) report.record_failure(Tuple{j}, lhs, rhs);
    }
  return report;
}

// Σ_I λ^{|I|−1} B(R̂ args) for one basis tuple, given per-term argument choices.
Element subset_sum(const NaryBracket& b, const GradedLinearMap& r, const Scalar& lambda,
                   const std::vector<RbTerm>& terms, const Tuple& t, const std::vector<SparseVec>& units) {
  Element acc(b.dim());
  std::vector<const SparseVec*> args(t.size());
  for (const auto& term : terms) {
    const Scalar w = lambda.pow(term.lambda_power);
    if (w.is_zero()) continue;
    for (std::size_t i = 0; i < t.size(); ++i) args[i] = term.in_subset[i] ? &units[t[i]] : &r.sparse_column(t[i]);
    b.accumulate(args, w, acc);
  }
  return acc;
}

std::vector<SparseVec> unit_vectors(std::size_t d) {
  std::vector<SparseVec> u(d);
  for (std::size_t i = 0; i < d; ++i) u[i] = SparseVec{{i, Scalar(1)}};
  return u;
}

// The ternary right-hand side written out term by term.
Element seven_term_ternary(const NaryBracket& b, const GradedLinearMap& r, const Scalar& lambda, const Tuple& t,
                        const std::vector<SparseVec>& u) {
  const SparseVec& x1 = u[t[0]];
  const SparseVec& x2 = u[t[1]];
  const SparseVec& x3 = u[t[2]];
  const SparseVec& r1 = r.sparse_column(t[0]);
  const SparseVec& r2 = r.sparse_column(t[1]);
  const SparseVec& r3 = r.sparse_column(t[2]);
  Element acc(b.dim());
  auto add = [&](const SparseVec& a, const SparseVec& c, const SparseVec& e, const Scalar& w) {
    const SparseVec* args[] = {&a, &c, &e};
    b.accumulate(args, w, acc);
  };
  add(r1, r2, x3, 1);
  add(r1, x2, r3, 1);
  add(x1, r2, r3, 1);
  add(r1, x2, x3, lambda);
  add(x1, r2, x3, lambda);
  add(x1, x2, r3, lambda);
  add(x1, x2, x3, lambda * lambda);
  return acc;
}

}  // namespace

RotaBaxterOperator::RotaBaxterOperator(GradedLinearMap map, Scalar weight)
    : map_(std::move(map)), weight_(std::move(weight)) {
  if (map_.parity() != kEven) throw InputError("a Rota-Baxter operator must be even");
}

std::vector<RbTerm> rb_subset_expansion(std::size_t n) {
  if (n < 1 || n > 20) throw InputError("subset expansion arity out of range");
  std::vector<RbTerm> terms;
  for (std::size_t size = 1; size <= n; ++size) {
    // Lexicographic subsets of the given size: walk a selection mask by prev_permutation.
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      terms.push_back(RbTerm{mask, static_cast<unsigned>(size - 1)});
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return terms;
}

Verification check_rb_nary(const RotaBaxterOperator& r, const HomSuperAlgebra& alg, CheckOptions options) {
  if (!(r.map().space() == alg.space())) throw InputError("operator acts on a different space than the algebra");
  const auto& b = alg.bracket();
  const auto& R = r.map();
  const std::size_t n = alg.arity();
  const std::size_t d = alg.dim();
  const auto terms = rb_subset_expansion(n);
  const auto units = unit_vectors(d);

  Verification v{"rota_baxter_weight_" + r.weight().str(), {}, {}};
  v.checks.push_back(twist_commutation(R, alg, options));

  CheckReport identity("rota_baxter", alg.space(), options);
  std::optional<CheckReport> seven_term;
  if (n == 3) seven_term.emplace("ternary_expansion_agrees", alg.space(), options);
  std::vector<const SparseVec*> rargs(n);
  for_each_tuple(d, n, [&](const Tuple& t) {
    identity.add_checked();
    for (std::size_t i = 0; i < n; ++i) rargs[i] = &R.sparse_column(t[i]);
    Element lhs(d);
    b.accumulate(rargs, Scalar(1), lhs);
    const Element inner = subset_sum(b, R, r.weight(), terms, t, units);
    const Element rhs = R.apply(inner);
    if (!(lhs == rhs)) identity.record_failure(t, lhs, rhs);
    if (seven_term) {
      seven_term->add_checked();
      const Element written = seven_term_ternary(b, R, r.weight(), t, units);
      if (!(written == inner)) seven_term->record_failure(t, written, inner);
    }
  });
  v.checks.push_back(std::move(identity));
  if (seven_term) v.checks.push_back(std::move(*seven_term));
  return v;
}

Verification check_rb_binary(const RotaBaxterOperator& r, const HomSuperAlgebra& alg, CheckOptions options) {
  if (alg.arity() != 2) throw PreconditionFailed("binary Rota-Baxter check needs a binary algebra");
  return check_rb_nary(r, alg, options);
}

EquivalenceReport check_inverse_derivation_equiv(const GradedLinearMap& r, const HomSuperAlgebra& alg,
                                                 CheckOptions options) {
  const GradedLinearMap inv = map_inverse(r);
  Verification rb = check_rb_nary(RotaBaxterOperator(r, Scalar(0)), alg, options);
  Verification der = alg.multiplicative_flag()
                         ? check_derivation(DerivationCandidate{inv, 0}, alg, options)
                         : check_derivation(DerivationCandidate{inv, 0}, alg.bracket(), alg.twist(0), options);
  return EquivalenceReport{std::move(rb), std::move(der)};
}

KernelConditionReport check_phi_rb_kernel_condition(const GradedLinearMap& r, const SuperCochain& phi,
                                                    const HomSuperAlgebra& alg, std::size_t n,
                                                    CheckOptions options) {
  if (alg.arity() != 2) throw PreconditionFailed("the kernel condition needs a binary base algebra");
  if (!(r.space() == alg.space())) throw InputError("operator acts on a different space than the algebra");
  const HomSuperAlgebra induced = phi_induced_bracket(phi, alg, n);
  const RotaBaxterOperator op(r, Scalar(0));
  const auto& space = alg.space();
  const std::size_t d = alg.dim();
  const auto units = unit_vectors(d);

  KernelConditionReport out{CheckReport("kernel_condition", space, options), check_rb_nary(op, induced, options), {}};
  if (!check_rb_binary(op, alg, CheckOptions{1}).passed())
    out.notes.push_back("operator is not a weight-0 Rota-Baxter operator of the base algebra");
  if (!check_induction_conditions(phi, alg, CheckOptions{1}).passed())
    out.notes.push_back("cochain fails the conditions for the induced bracket to be n-Hom-Lie");

  Matrix kernel_basis(d, 0);
  {
    const auto ker = nullspace(r.matrix());
    Matrix kb(d, ker.size());
    for (std::size_t c = 0; c < ker.size(); ++c)
      for (std::size_t row = 0; row < d; ++row) kb(row, c) = ker[c][row];
    kernel_basis = std::move(kb);
  }

  std::vector<const SparseVec*> phi_args(n - 2);
  for_each_tuple(d, n, [&](const Tuple& x) {
    out.kernel_condition.add_checked();
    const auto parities = space.parities_of(x);
    Element sum(d);
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t l = k + 1; l <= n; ++l) {
        Scalar coeff;
        for (std::size_t i = 1; i <= n; ++i) {
          if (i == k || i == l) continue;
          std::size_t slot = 0;
          for (std::size_t m = 1; m <= n; ++m) {
            if (m == k || m == l) continue;
            phi_args[slot++] = m == i ? &units[x[m - 1]] : &r.sparse_column(x[m - 1]);
          }
          coeff += phi.evaluate(phi_args);
        }
        if (coeff.is_zero()) continue;
        const int s = ((k + l + 1) % 2 ? -1 : 1) * gamma_sign(parities, k, l);
        const SparseVec* pair[] = {&r.sparse_column(x[k - 1]), &r.sparse_column(x[l - 1])};
        alg.bracket().accumulate(pair, Scalar(s) * coeff, sum);
      }
    if (!in_column_span(kernel_basis, sum.coeffs())) out.kernel_condition.record_failure(x, r.apply(sum), Element(d));
  });
  return out;
}

}  // namespace homnambu
