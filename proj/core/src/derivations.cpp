#include "homnambu/derivations.hpp"

#include <algorithm>

#include "homnambu/errors.hpp"
#include "homnambu/linalg.hpp"
#include "homnambu/tuples.hpp"

namespace homnambu {

namespace {

void require_space(const GradedLinearMap& f, const SuperSpace& space) {
  if (!(f.space() == space)) throw InputError("map acts on a different space than the algebra");
}

// out(B(t)) against Σ_i (−1)^{|slot_i||t|^{i−1}} B(S t_1,…,slot_i t_i,…,S t_n).
CheckReport leibniz_check(std::string name, const NaryBracket& b, const GradedLinearMap& spectator,
                          const std::vector<const GradedLinearMap*>& slots,
                          const GradedLinearMap& out_map, CheckOptions options) {
  const auto& space = b.space();
  const std::size_t n = b.arity();
  CheckReport report(std::move(name), space, options);
  std::vector<const SparseVec*> args(n);
  for_each_tuple(b.dim(), n, [&](const Tuple& t) {
    report.add_checked();
    const Element lhs = out_map.apply(b.at(t));
    Element rhs(b.dim());
    Parity prefix;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k)
        args[k] = k == i ? &slots[i]->sparse_column(t[k]) : &spectator.sparse_column(t[k]);
      b.accumulate(args, Scalar((slots[i]->parity() * prefix).odd() ? -1 : 1), rhs);
      prefix += space.parity(t[i]);
    }
    if (!(lhs == rhs)) report.record_failure(t, lhs, rhs);
  });
  return report;
}

CheckReport commutation_check(const GradedLinearMap& d, const GradedLinearMap& alpha, CheckOptions options) {
  CheckReport report("commutes_with_twist", d.space(), options);
  for (std::size_t j = 0; j < d.dim(); ++j) {
    report.add_checked();
    const Element e = Element::basis(d.dim(), j);
    const Element lhs = d.apply(alpha.apply(e));
    const Element rhs = alpha.apply(d.apply(e));
    if (!(lhs == rhs)) report.record_failure(Tuple{j}, lhs, rhs);
  }
  return report;
}

}  // namespace

QuasiPair::QuasiPair(GradedLinearMap d, GradedLinearMap dprime, unsigned power)
    : d_(std::move(d)), dprime_(std::move(dprime)), power_(power) {
  if (d_.parity() != dprime_.parity()) throw InputError("quasi-derivation pair needs equal parities");
  if (!(d_.space() == dprime_.space())) throw InputError("quasi-derivation maps act on different spaces");
}

GeneralizedTuple::GeneralizedTuple(std::vector<GradedLinearMap> maps, unsigned power)
    : maps_(std::move(maps)), power_(power) {
  if (maps_.size() < 3) throw InputError("a generalized derivation needs at least three maps");
  for (const auto& m : maps_) {
    if (m.parity() != maps_.front().parity()) throw InputError("generalized derivation maps need equal parities");
    if (!(m.space() == maps_.front().space())) throw InputError("generalized derivation maps act on different spaces");
  }
}

Verification check_derivation(const DerivationCandidate& c, const NaryBracket& bracket,
                              const GradedLinearMap& alpha, CheckOptions options) {
  require_space(c.map, bracket.space());
  const GradedLinearMap spectator = map_power(alpha, c.power);
  Verification v{"alpha^" + std::to_string(c.power) + "-derivation", {}, {}};
  v.checks.push_back(commutation_check(c.map, alpha, options));
  std::vector<const GradedLinearMap*> slots(bracket.arity(), &c.map);
  v.checks.push_back(leibniz_check("leibniz", bracket, spectator, slots, c.map, options));
  return v;
}

Verification check_derivation(const DerivationCandidate& c, const HomSuperAlgebra& alg,
                              CheckOptions options) {
  return check_derivation(c, alg.bracket(), alg.alpha(), options);
}

std::vector<GradedLinearMap> solve_derivation_space(const HomSuperAlgebra& alg, unsigned k, Parity parity) {
  const auto& space = alg.space();
  const auto& b = alg.bracket();
  const auto& alpha = alg.alpha();
  const std::size_t d = alg.dim();
  const std::size_t n = alg.arity();
  const GradedLinearMap spectator = map_power(alpha, k);

  // Unknown entries D(r, c), row-major, restricted to the requested parity.
  std::vector<std::ptrdiff_t> var(d * d, -1);
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      if (space.parity(r) == space.parity(c) + parity) {
        var[r * d + c] = static_cast<std::ptrdiff_t>(entries.size());
        entries.emplace_back(r, c);
      }
    }
  const std::size_t nv = entries.size();
  Matrix system(0, nv);
  auto push = [&](const std::vector<Scalar>& row) {
    if (std::any_of(row.begin(), row.end(), [](const Scalar& s) { return !s.is_zero(); }))
      system.append_row(row);
  };

  // D α − α D = 0, entry (r, c).
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      std::vector<Scalar> row(nv);
      for (std::size_t s = 0; s < d; ++s) {
        if (var[r * d + s] >= 0) row[var[r * d + s]] += alpha.entry(s, c);
        if (var[s * d + c] >= 0) row[var[s * d + c]] -= alpha.entry(r, s);
      }
      push(row);
    }

  // Leibniz rule on every basis tuple, output coordinate r.
  std::vector<const SparseVec*> args(n);
  std::vector<SparseVec> units(d);
  for (std::size_t q = 0; q < d; ++q) units[q] = SparseVec{{q, Scalar(1)}};
  for_each_tuple(d, n, [&](const Tuple& t) {
    const Element& bt = b.at(t);
    std::vector<std::vector<Scalar>> rows(d, std::vector<Scalar>(nv));
    for (std::size_t s = 0; s < d; ++s) {
      if (bt[s].is_zero()) continue;
      for (std::size_t r = 0; r < d; ++r)
        if (var[r * d + s] >= 0) rows[r][var[r * d + s]] += bt[s];
    }
    Parity prefix;
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar sign((parity * prefix).odd() ? -1 : 1);
      for (std::size_t q = 0; q < d; ++q) {
        if (var[q * d + t[i]] < 0) continue;
        for (std::size_t m = 0; m < n; ++m) args[m] = m == i ? &units[q] : &spectator.sparse_column(t[m]);
        Element val(d);
        b.accumulate(args, sign, val);
        for (std::size_t r = 0; r < d; ++r) rows[r][var[q * d + t[i]]] -= val[r];
      }
      prefix += space.parity(t[i]);
    }
    for (const auto& row : rows) push(row);
  });

  std::vector<GradedLinearMap> basis;
  for (const auto& v : nullspace(system)) {
    Matrix m(d, d);
    for (std::size_t e = 0; e < nv; ++e) m(entries[e].first, entries[e].second) = v[e];
    basis.emplace_back(space, parity, std::move(m));
  }
  return basis;
}

DerivationCandidate inner_derivation(const HomSuperAlgebra& alg, std::span<const Element> xs, unsigned k) {
  if (xs.size() + 1 != alg.arity())
    throw InputError("inner derivation needs " + std::to_string(alg.arity() - 1) + " arguments");
  const auto& alpha = alg.alpha();
  for (const auto& x : xs) {
    if (!(alpha.apply(x) == x))
      throw FixedPointViolation("inner derivation needs alpha(x) = x, violated by " + x.format(alg.space()));
  }
  Parity p;
  for (const auto& x : xs) {
    auto px = x.parity(alg.space());
    if (!px) throw InputError("inner derivation needs homogeneous arguments");
    p += *px;
  }
  const GradedLinearMap ak = map_power(alpha, k);
  std::vector<Element> args(xs.begin(), xs.end());
  args.emplace_back(alg.dim());
  std::vector<Element> images;
  for (std::size_t y = 0; y < alg.dim(); ++y) {
    args.back() = ak.column(y);
    images.push_back(alg.bracket().evaluate(args));
  }
  return DerivationCandidate{GradedLinearMap(alg.space(), p, images), k + 1};
}

CheckReport check_quasi_derivation(const QuasiPair& p, const HomSuperAlgebra& alg, CheckOptions options) {
  require_space(p.d(), alg.space());
  const GradedLinearMap spectator =
      p.power() == 0 ? GradedLinearMap::identity(alg.space()) : map_power(alg.alpha(), p.power());
  std::vector<const GradedLinearMap*> slots(alg.arity(), &p.d());
  return leibniz_check("quasi_derivation", alg.bracket(), spectator, slots, p.dprime(), options);
}

CheckReport check_generalized_derivation(const GeneralizedTuple& t, const NaryBracket& bracket,
                                         const GradedLinearMap& alpha, CheckOptions options) {
  if (t.maps().size() != bracket.arity() + 1)
    throw InputError("generalized derivation of an arity-" + std::to_string(bracket.arity()) +
                     " bracket needs " + std::to_string(bracket.arity() + 1) + " maps");
  require_space(t.maps().front(), bracket.space());
  const GradedLinearMap spectator = map_power(alpha, t.power());
  std::vector<const GradedLinearMap*> slots;
  for (std::size_t i = 0; i < bracket.arity(); ++i) slots.push_back(&t.maps()[i]);
  return leibniz_check("generalized_derivation", bracket, spectator, slots, t.maps().back(), options);
}

CheckReport check_generalized_derivation(const GeneralizedTuple& t, const HomSuperAlgebra& alg,
                                         CheckOptions options) {
  if (t.power() == 0)
    return check_generalized_derivation(t, alg.bracket(), GradedLinearMap::identity(alg.space()), options);
  return check_generalized_derivation(t, alg.bracket(), alg.alpha(), options);
}

Verification check_derivation_closure(const DerivationCandidate& c1, const DerivationCandidate& c2,
                                      const HomSuperAlgebra& alg, CheckOptions options) {
  if (!check_derivation(c1, alg).passed())
    throw PreconditionFailed("first map is not an alpha^" + std::to_string(c1.power) + "-derivation");
  if (!check_derivation(c2, alg).passed())
    throw PreconditionFailed("second map is not an alpha^" + std::to_string(c2.power) + "-derivation");
  const DerivationCandidate bracket{supercommutator_maps(c1.map, c2.map), c1.power + c2.power};
  return check_derivation(bracket, alg, options);
}

}  // namespace homnambu
