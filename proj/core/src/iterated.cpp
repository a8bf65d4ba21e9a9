#include "homnambu/iterated.hpp"

#include "homnambu/axioms.hpp"
#include "homnambu/errors.hpp"
#include "homnambu/tuples.hpp"

namespace homnambu {

namespace {

const GradedLinearMap& require_multiplicative_base(const HomSuperAlgebra& alg) {
  if (alg.arity() != 2) throw PreconditionFailed("the iterated bracket needs a binary base algebra");
  const auto& alpha = alg.alpha();
  if (!check_multiplicative(alg, CheckOptions{1}).passed())
    throw PreconditionFailed("the iterated bracket needs a multiplicative base algebra");
  return alpha;
}

void require_arity(std::size_t n) {
  if (n < 2) throw InputError("iterated bracket arity must be at least 2");
}

// [B(t_1..t_{m−1}), α^{m−2} e_{t_m}] for each m up to n.
NaryBracket build_iterated(const HomSuperAlgebra& alg, const GradedLinearMap& alpha, std::size_t n) {
  NaryBracket current = alg.bracket();
  const std::size_t d = alg.dim();
  for (std::size_t m = 3; m <= n; ++m) {
    const GradedLinearMap twist = map_power(alpha, static_cast<unsigned>(m - 2));
    NaryBracket next(alg.space(), m);
    std::vector<const SparseVec*> args(2);
    for_each_tuple(d, m - 1, [&](const Tuple& prefix) {
      const std::size_t flat = flat_index(prefix, d);
      if (!current.nonzero_flat(flat)) return;
      const SparseVec inner = sparse(current.at_flat(flat));
      args[0] = &inner;
      Tuple t = prefix;
      t.push_back(0);
      for (std::size_t last = 0; last < d; ++last) {
        args[1] = &twist.sparse_column(last);
        Element v(d);
        alg.bracket().accumulate(args, Scalar(1), v);
        if (v.is_zero()) continue;
        t.back() = last;
        next.set(t, std::move(v));
      }
    });
    current = std::move(next);
  }
  return current;
}

void note_hom_jacobi(CheckReport& report, const HomSuperAlgebra& alg) {
  const auto jac = check_hom_jacobi(alg, CheckOptions{1});
  if (!jac.passed())
    report.add_note("base algebra fails super-Hom-Jacobi at " + std::to_string(jac.failures()) +
                    " triples; the expansion is not guaranteed");
}

// Both sides of the expansion for one homogeneous x.
void ad2_compare(const HomSuperAlgebra& alg, const NaryBracket& iterated, const GradedLinearMap& alpha,
                 const GradedLinearMap& alpha_top, const Element& x, Parity px, std::span<const std::size_t> y,
                 const Tuple& label, CheckReport& report) {
  const std::size_t d = alg.dim();
  const std::size_t n = iterated.arity();
  const auto& space = alg.space();
  report.add_checked();

  const SparseVec ax = sparse(alpha_top.apply(x));
  const SparseVec by = sparse(iterated.at(y));
  Element lhs(d);
  {
    const SparseVec* args[] = {&ax, &by};
    alg.bracket().accumulate(args, Scalar(1), lhs);
  }

  const SparseVec xs = sparse(x);
  Element rhs(d);
  std::vector<const SparseVec*> args(n);
  Parity prefix;
  for (std::size_t k = 0; k < n; ++k) {
    const SparseVec eyk = SparseVec{{y[k], Scalar(1)}};
    const SparseVec* pair[] = {&xs, &eyk};
    Element adk(d);
    alg.bracket().accumulate(pair, Scalar(1), adk);
    const SparseVec ads = sparse(adk);
    for (std::size_t m = 0; m < n; ++m) args[m] = m == k ? &ads : &alpha.sparse_column(y[m]);
    iterated.accumulate(args, sign_of((px * prefix).value()), rhs);
    prefix += space.parity(y[k]);
  }
  if (!(lhs == rhs)) report.record_failure(label, lhs, rhs);
}

}  // namespace

HomSuperAlgebra iterated_bracket(const HomSuperAlgebra& alg, std::size_t n) {
  require_arity(n);
  const auto& alpha = require_multiplicative_base(alg);
  return HomSuperAlgebra::with_alpha(build_iterated(alg, alpha, n), map_power(alpha, static_cast<unsigned>(n - 1)));
}

CheckReport check_ad2_expansion(const HomSuperAlgebra& alg, const Element& x, std::span<const std::size_t> y,
                                std::size_t n, CheckOptions options) {
  require_arity(n);
  const auto& alpha = require_multiplicative_base(alg);
  if (y.size() != n) throw InputError("adjoint expansion needs exactly n arguments");
  if (x.dim() != alg.dim()) throw InputError("element has the wrong dimension");
  for (auto i : y) {
    if (i >= alg.dim()) throw InputError("basis index out of range");
  }
  const auto px = x.parity(alg.space());
  if (!px) throw InputError("adjoint expansion needs a homogeneous element");
  CheckReport report("ad2_expansion", alg.space(), options);
  note_hom_jacobi(report, alg);
  const NaryBracket iterated = build_iterated(alg, alpha, n);
  const GradedLinearMap top = map_power(alpha, static_cast<unsigned>(n - 1));
  ad2_compare(alg, iterated, alpha, top, x, *px, y, Tuple(y.begin(), y.end()), report);
  return report;
}

CheckReport check_ad2_expansion_exhaustive(const HomSuperAlgebra& alg, std::size_t n, CheckOptions options) {
  require_arity(n);
  const auto& alpha = require_multiplicative_base(alg);
  CheckReport report("ad2_expansion", alg.space(), options);
  note_hom_jacobi(report, alg);
  const NaryBracket iterated = build_iterated(alg, alpha, n);
  const GradedLinearMap top = map_power(alpha, static_cast<unsigned>(n - 1));
  const std::size_t d = alg.dim();
  for (std::size_t xi = 0; xi < d; ++xi) {
    const Element x = Element::basis(d, xi);
    for_each_tuple(d, n, [&](const Tuple& y) {
      Tuple label{xi};
      label.insert(label.end(), y.begin(), y.end());
      ad2_compare(alg, iterated, alpha, top, x, alg.space().parity(xi), y, label, report);
    });
  }
  return report;
}

Verification iterated_transfer_derivation(const DerivationCandidate& d, const HomSuperAlgebra& alg,
                                          std::size_t n, CheckOptions options) {
  require_arity(n);
  const auto& alpha = require_multiplicative_base(alg);
  if (!check_derivation(d, alg, CheckOptions{1}).passed())
    throw PreconditionFailed("map is not an alpha^" + std::to_string(d.power) + "-derivation of the base algebra");
  Verification v = check_derivation(d, build_iterated(alg, alpha, n), alpha, options);
  v.notes.push_back("spectators twisted by the base alpha^" + std::to_string(d.power));
  return v;
}

CheckReport iterated_generalized_tuple(const std::vector<GradedLinearMap>& chain, unsigned k,
                                       const HomSuperAlgebra& alg, std::size_t n, CheckOptions options) {
  require_arity(n);
  const auto& alpha = require_multiplicative_base(alg);
  if (chain.size() != n)
    throw InputError("an n-ary generalized derivation chain needs n maps, got " + std::to_string(chain.size()));
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!check_quasi_derivation(QuasiPair(chain[i], chain[i + 1], k), alg, CheckOptions{1}).passed())
      throw PreconditionFailed("maps " + std::to_string(i) + " and " + std::to_string(i + 1) +
                               " do not form a quasi-derivation pair of the base algebra");
  }
  std::vector<GradedLinearMap> maps{chain.front()};
  maps.insert(maps.end(), chain.begin(), chain.end());
  return check_generalized_derivation(GeneralizedTuple(std::move(maps), k), build_iterated(alg, alpha, n), alpha,
                                      options);
}

}  // namespace homnambu
