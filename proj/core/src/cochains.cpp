#include "homnambu/cochains.hpp"

#include <numeric>

#include "homnambu/axioms.hpp"
#include "homnambu/errors.hpp"
#include "homnambu/orbit.hpp"
#include "homnambu/signs.hpp"
#include "homnambu/tuples.hpp"

namespace homnambu {

namespace {

SparseVec unit(std::size_t i) { return SparseVec{{i, Scalar(1)}}; }

std::vector<SparseVec> units(std::size_t d) {
  std::vector<SparseVec> u(d);
  for (std::size_t i = 0; i < d; ++i) u[i] = unit(i);
  return u;
}

void require_binary(const HomSuperAlgebra& alg, const char* what) {
  if (alg.arity() != 2) throw PreconditionFailed(std::string(what) + " needs a binary algebra");
}

void require_space(const SuperCochain& phi, const HomSuperAlgebra& alg) {
  if (!(phi.space() == alg.space())) throw InputError("cochain and algebra live on different spaces");
}

void note_base_status(Verification& v, const HomSuperAlgebra& alg) {
  const auto skew = check_super_skew(alg);
  if (!skew.passed())
    v.notes.push_back("base bracket is not super-skew (" + std::to_string(skew.failures()) + " failing tuples)");
  const auto jac = check_hom_jacobi(alg);
  if (!jac.passed())
    v.notes.push_back("base algebra fails super-Hom-Jacobi at " + std::to_string(jac.failures()) + " of " +
                      std::to_string(jac.tuples_checked()) + " triples; the equivalence is not guaranteed");
}

}  // namespace

SuperCochain::SuperCochain(SuperSpace space, std::size_t degree)
    : space_(std::move(space)), degree_(degree) {
  if (degree_ < 1) throw InputError("cochain degree must be at least 1");
  table_.assign(tuple_count(space_.dim(), degree_), Scalar());
}

SuperCochain SuperCochain::from_generators(SuperSpace space, std::size_t degree,
                                           const std::vector<std::pair<Tuple, Scalar>>& generators) {
  SuperCochain f(space, degree);
  for (const auto& [t, v] : generators) {
    if (t.size() != degree) throw InputError("cochain argument tuple has wrong length");
    for (auto i : t) {
      if (i >= space.dim()) throw InputError("cochain argument index out of range");
    }
    if (!v.is_zero() && space.degree_of(t) != kEven)
      throw InputError("cochain must be even but has a value on " + space.format_tuple(t));
  }
  std::vector<std::size_t> positions(degree - 1);
  std::iota(positions.begin(), positions.end(), std::size_t{1});
  const auto filled = complete_orbits(space, generators, positions, [](const Scalar& s) { return s.str(); });
  for (const auto& [t, v] : filled) f.table_[flat_index(t, space.dim())] = v;
  return f;
}

SuperCochain SuperCochain::from_table(SuperSpace space, std::size_t degree, std::vector<Scalar> table) {
  SuperCochain f(std::move(space), degree);
  if (table.size() != f.table_.size()) throw InputError("cochain table has wrong size");
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!table[i].is_zero() && f.space_.degree_of(tuple_at(i, f.space_.dim(), degree)) != kEven)
      throw InputError("cochain must be even");
  }
  f.table_ = std::move(table);
  return f;
}

const Scalar& SuperCochain::value(std::span<const std::size_t> tuple) const {
  if (tuple.size() != degree_) throw InputError("cochain called with wrong number of arguments");
  for (auto i : tuple) {
    if (i >= space_.dim()) throw InputError("basis index out of range");
  }
  return table_[flat_index(tuple, space_.dim())];
}

Scalar SuperCochain::evaluate(std::span<const SparseVec* const> args) const {
  if (args.size() != degree_) throw InputError("cochain called with wrong number of arguments");
  for (const auto* a : args) {
    if (a->empty()) return Scalar();
  }
  Scalar total;
  std::vector<std::size_t> pos(degree_, 0);
  while (true) {
    std::size_t f = 0;
    for (std::size_t k = 0; k < degree_; ++k) f = f * space_.dim() + (*args[k])[pos[k]].index;
    if (!table_[f].is_zero()) {
      Scalar c = table_[f];
      for (std::size_t k = 0; k < degree_; ++k) c *= (*args[k])[pos[k]].coeff;
      total += c;
    }
    std::size_t k = degree_;
    while (k > 0) {
      --k;
      if (++pos[k] < args[k]->size()) break;
      pos[k] = 0;
      if (k == 0) return total;
    }
  }
}

Scalar SuperCochain::evaluate(std::span<const Element> args) const {
  std::vector<SparseVec> sv;
  for (const auto& a : args) sv.push_back(sparse(a));
  std::vector<const SparseVec*> ptrs;
  for (const auto& s : sv) ptrs.push_back(&s);
  return evaluate(ptrs);
}

std::vector<std::size_t> SuperCochain::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (!table_[i].is_zero()) s.push_back(i);
  }
  return s;
}

bool operator==(const SuperCochain& a, const SuperCochain& b) {
  return a.space_ == b.space_ && a.degree_ == b.degree_ && a.table_ == b.table_;
}

CheckReport check_cochain_super_skew(const SuperCochain& f, CheckOptions options) {
  CheckReport report = CheckReport::scalar_valued("cochain_super_skew", f.space(), options);
  for_each_tuple(f.space().dim(), f.degree(), [&](const Tuple& t) {
    report.add_checked();
    const auto parities = f.space().parities_of(t);
    for (std::size_t pos = 1; pos < t.size(); ++pos) {
      Tuple w = t;
      std::swap(w[pos - 1], w[pos]);
      const Scalar rhs = Scalar(koszul_adjacent_sign(parities, pos)) * f.value(w);
      if (f.value(t) != rhs) {
        report.record_failure(t, f.value(t), rhs);
        break;
      }
    }
  });
  return report;
}

SuperCochain coboundary(const SuperCochain& f, const HomSuperAlgebra& alg) {
  require_binary(alg, "coboundary");
  require_space(f, alg);
  const auto& alpha = alg.alpha();
  const auto& space = alg.space();
  const std::size_t d = alg.dim();
  const std::size_t k = f.degree();
  std::vector<Scalar> table(tuple_count(d, k + 1));
  std::vector<const SparseVec*> args(k);
  for_each_tuple(d, k + 1, [&](const Tuple& x) {
    const auto parities = space.parities_of(x);
    Scalar total;
    for (std::size_t i = 1; i <= k + 1; ++i)
      for (std::size_t j = i + 1; j <= k + 1; ++j) {
        const SparseVec inner = sparse(alg.bracket().at(Tuple{x[i - 1], x[j - 1]}));
        if (inner.empty()) continue;
        args[0] = &inner;
        std::size_t slot = 1;
        for (std::size_t m = 1; m <= k + 1; ++m) {
          if (m != i && m != j) args[slot++] = &alpha.sparse_column(x[m - 1]);
        }
        // The bracket sits in the first slot, so the Koszul sign is the one for moving x_i, x_j to the front.
        const Parity front = parities[i - 1] * prefix_degree(parities, i - 1) +
                             parities[j - 1] * (prefix_degree(parities, j - 1) + parities[i - 1]);
        const int s = ((i + j + 1) % 2 ? -1 : 1) * (front.odd() ? -1 : 1);
        total += Scalar(s) * f.evaluate(args);
      }
    table[flat_index(x, d)] = total;
  });
  return SuperCochain::from_table(space, k + 1, std::move(table));
}

Scalar wedge_obstruction(const SuperCochain& phi, std::span<const std::size_t> x,
                         std::span<const std::size_t> y, const HomSuperAlgebra& alg) {
  require_binary(alg, "wedge obstruction");
  require_space(phi, alg);
  const std::size_t n = phi.degree() + 2;
  if (x.size() + 3 != n || y.size() != n)
    throw InputError("wedge obstruction of a degree-" + std::to_string(phi.degree()) + " cochain needs " +
                     std::to_string(n - 3) + " fixed and " + std::to_string(n) + " free arguments");
  const auto parities = alg.space().parities_of(y);
  const auto u = units(alg.dim());
  std::vector<const SparseVec*> args;
  for (auto xi : x) args.push_back(&u[xi]);
  args.push_back(nullptr);
  Scalar total;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      const Scalar& rest = phi.value(without(y, i - 1, j - 1));
      if (rest.is_zero()) continue;
      const SparseVec inner = sparse(alg.bracket().at(Tuple{y[i - 1], y[j - 1]}));
      args.back() = &inner;
      const int s = ((i + j) % 2 ? -1 : 1) * gamma_sign(parities, i, j);
      total += Scalar(s) * rest * phi.evaluate(args);
    }
  return total;
}

Verification check_induction_conditions(const SuperCochain& phi, const HomSuperAlgebra& alg,
                                        CheckOptions options) {
  require_binary(alg, "the induction conditions");
  require_space(phi, alg);
  const auto& alpha = alg.alpha();
  if (!check_multiplicative(alg).passed()) throw PreconditionFailed("base algebra is not multiplicative");
  const std::size_t d = alg.dim();
  const std::size_t n = phi.degree() + 2;
  Verification v{"induction_conditions", {}, {}};
  note_base_status(v, alg);

  CheckReport wedge = CheckReport::scalar_valued("wedge_condition", alg.space(), options);
  for_each_tuple(d, n - 3, [&](const Tuple& x) {
    for_each_tuple(d, n, [&](const Tuple& y) {
      wedge.add_checked();
      const Scalar w = wedge_obstruction(phi, x, y, alg);
      if (!w.is_zero()) {
        Tuple xy = x;
        xy.insert(xy.end(), y.begin(), y.end());
        wedge.record_failure(xy, w, Scalar());
      }
    });
  });
  v.checks.push_back(std::move(wedge));

  CheckReport inv = CheckReport::scalar_valued("twist_invariance", alg.space(), options);
  const auto u = units(d);
  std::vector<const SparseVec*> args(phi.degree());
  for_each_tuple(d, phi.degree(), [&](const Tuple& t) {
    inv.add_checked();
    args[0] = &alpha.sparse_column(t[0]);
    for (std::size_t k = 1; k < t.size(); ++k) args[k] = &u[t[k]];
    const Scalar lhs = phi.evaluate(args);
    if (lhs != phi.value(t)) inv.record_failure(t, lhs, phi.value(t));
  });
  v.checks.push_back(std::move(inv));
  return v;
}

HomSuperAlgebra triple_product(const SuperCochain& phi, const HomSuperAlgebra& alg) {
  require_binary(alg, "triple product");
  require_space(phi, alg);
  if (phi.degree() != 1) throw InputError("triple product needs a degree-1 cochain");
  const auto& alpha = alg.alpha();
  const auto& space = alg.space();
  const auto& b = alg.bracket();
  NaryBracket out(space, 3);
  for_each_tuple(alg.dim(), 3, [&](const Tuple& t) {
    const std::size_t x = t[0], y = t[1], z = t[2];
    const Parity px = space.parity(x), py = space.parity(y), pz = space.parity(z);
    Element v(alg.dim());
    v.add_scaled(b.at(Tuple{y, z}), phi.value(Tuple{x}));
    v.add_scaled(b.at(Tuple{z, x}), sign_of((px * (py + pz)).value()) * phi.value(Tuple{y}));
    v.add_scaled(b.at(Tuple{x, y}), sign_of((pz * (px + py)).value()) * phi.value(Tuple{z}));
    if (!v.is_zero()) out.set(t, std::move(v));
  });
  if (!check_super_skew(out).passed())
    throw PreconditionFailed("triple product is not super-skew; the base bracket must be super-skew");
  return HomSuperAlgebra::with_alpha(std::move(out), alpha);
}

HomSuperAlgebra phi_induced_bracket(const SuperCochain& phi, const HomSuperAlgebra& alg, std::size_t n) {
  require_binary(alg, "the cochain-induced bracket");
  require_space(phi, alg);
  if (n < 3) throw InputError("the cochain-induced bracket needs n >= 3");
  if (phi.degree() + 2 != n)
    throw InputError("an n-ary bracket with n = " + std::to_string(n) + " needs a degree-" +
                     std::to_string(n - 2) + " cochain, got degree " + std::to_string(phi.degree()));
  const auto& alpha = alg.alpha();
  const auto& space = alg.space();
  const auto& b = alg.bracket();
  NaryBracket out(space, n);
  for_each_tuple(alg.dim(), n, [&](const Tuple& t) {
    const auto parities = space.parities_of(t);
    Element v(alg.dim());
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        const Scalar& rest = phi.value(without(t, i - 1, j - 1));
        if (rest.is_zero()) continue;
        const int s = ((i + j + 1) % 2 ? -1 : 1) * gamma_sign(parities, i, j);
        v.add_scaled(b.at(Tuple{t[i - 1], t[j - 1]}), Scalar(s) * rest);
      }
    if (!v.is_zero()) out.set(t, std::move(v));
  });
  return HomSuperAlgebra::with_alpha(std::move(out), alpha);
}

Verification check_supertrace(const SuperCochain& phi, const HomSuperAlgebra& alg, CheckOptions options) {
  require_binary(alg, "supertrace");
  require_space(phi, alg);
  const auto& alpha = alg.alpha();
  const std::size_t d = alg.dim();
  const std::size_t m = phi.degree();
  const auto u = units(d);
  Verification v{"supertrace", {}, {}};

  CheckReport brackets = CheckReport::scalar_valued("vanishes_on_brackets", alg.space(), options);
  std::vector<const SparseVec*> args(m);
  for_each_tuple(d, m + 1, [&](const Tuple& t) {
    brackets.add_checked();
    const SparseVec inner = sparse(alg.bracket().at(Tuple{t[0], t[1]}));
    args[0] = &inner;
    for (std::size_t k = 1; k < m; ++k) args[k] = &u[t[k + 1]];
    const Scalar val = phi.evaluate(args);
    if (!val.is_zero()) brackets.record_failure(t, val, Scalar());
  });
  v.checks.push_back(std::move(brackets));

  CheckReport inv = CheckReport::scalar_valued("twist_invariance", alg.space(), options);
  for_each_tuple(d, m, [&](const Tuple& t) {
    inv.add_checked();
    args[0] = &alpha.sparse_column(t[0]);
    for (std::size_t k = 1; k < m; ++k) args[k] = &u[t[k]];
    const Scalar lhs = phi.evaluate(args);
    if (lhs != phi.value(t)) inv.record_failure(t, lhs, phi.value(t));
  });
  v.checks.push_back(std::move(inv));
  return v;
}

bool is_supertrace(const SuperCochain& phi, const HomSuperAlgebra& alg) {
  return check_supertrace(phi, alg, CheckOptions{1}).passed();
}

TransferReport phi_transfer_derivation(const DerivationCandidate& d, const SuperCochain& phi,
                                       const HomSuperAlgebra& alg, CheckOptions options) {
  require_binary(alg, "derivation transfer");
  require_space(phi, alg);
  if (!check_derivation(d, alg).passed())
    throw PreconditionFailed("map is not an alpha^" + std::to_string(d.power) + "-derivation of the base algebra");
  const auto& space = alg.space();
  const std::size_t m = phi.degree();
  const auto u = units(alg.dim());
  TransferReport report{CheckReport::scalar_valued("cochain_annihilation", space, options), std::nullopt};
  std::vector<const SparseVec*> args(m);
  for_each_tuple(alg.dim(), m, [&](const Tuple& t) {
    report.hypothesis.add_checked();
    Scalar total;
    Parity prefix;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < m; ++k) args[k] = k == i ? &d.map.sparse_column(t[k]) : &u[t[k]];
      total += sign_of((d.map.parity() * prefix).value()) * phi.evaluate(args);
      prefix += space.parity(t[i]);
    }
    if (!total.is_zero()) report.hypothesis.record_failure(t, total, Scalar());
  });
  if (report.hypothesis.passed()) {
    const auto induced = phi_induced_bracket(phi, alg, m + 2);
    report.conclusion = check_derivation(d, induced, options);
  } else {
    report.hypothesis.add_note("hypothesis failed; no claim about the induced bracket");
  }
  return report;
}

}  // namespace homnambu
