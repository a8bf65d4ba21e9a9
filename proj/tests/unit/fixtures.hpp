#pragma once

// Small builders and independent oracles shared by the unit and acceptance tests. The oracles
// deliberately avoid the library's sign helpers, tables and solvers.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homnambu/algebra.hpp"
#include "homnambu/algebra_file.hpp"
#include "homnambu/catalog.hpp"
#include "homnambu/linear_map.hpp"
#include "homnambu/space.hpp"

namespace fx {

using namespace homnambu;

inline SuperSpace space(std::initializer_list<std::pair<const char*, int>> basis) {
  std::vector<SuperSpace::BasisVector> vs;
  for (const auto& [label, p] : basis) vs.push_back({label, Parity(p)});
  return SuperSpace(std::move(vs));
}

inline Element vec(const SuperSpace& s, std::initializer_list<std::pair<const char*, Scalar>> terms) {
  Element e(s.dim());
  for (const auto& [label, c] : terms) e[s.index_of(label)] += c;
  return e;
}

inline Element basis(const SuperSpace& s, const char* label) { return Element::basis(s.dim(), s.index_of(label)); }

inline Tuple tup(const SuperSpace& s, std::initializer_list<const char*> labels) {
  Tuple t;
  for (const auto* l : labels) t.push_back(s.index_of(l));
  return t;
}

inline AlgebraDocument doc(std::string_view name, const ParamMap& params) { return catalog_build(name, params); }
inline HomSuperAlgebra alg(std::string_view name, const ParamMap& params) { return catalog_build(name, params).algebra; }

// Koszul sign of listing graded items in the order perm[0], perm[1], ... instead of 0, 1, ...:
// one factor (−1)^{p_a p_b} per pair that ends up inverted.
inline int koszul_sign(const std::vector<int>& parity, const std::vector<std::size_t>& perm) {
  int s = 1;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b] && (parity[perm[a]] & parity[perm[b]])) s = -s;
  return s;
}

// Sign relating [x_perm] to [x] for a super-skew bracket: each inversion contributes −(−1)^{p p'}.
inline int super_skew_sign(const std::vector<int>& parity, const std::vector<std::size_t>& perm) {
  int s = 1;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) s = (parity[perm[a]] & parity[perm[b]]) ? s : -s;
  return s;
}

inline std::vector<int> parities(const SuperSpace& s, const Tuple& t) {
  std::vector<int> out;
  for (auto i : t) out.push_back(s.parity(i).value());
  return out;
}

// Rank of a dense rational matrix by textbook elimination.
inline std::size_t dense_rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline Element apply_power(const GradedLinearMap& f, unsigned k, Element x) {
  for (unsigned i = 0; i < k; ++i) x = f.apply(x);
  return x;
}

// Linear system for the α^k-derivations of a given parity, one column per matrix entry allowed
// by the parity, rows listing the Leibniz defect on every basis tuple and the commutator with α.
struct DerivationSystem {
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;  // (row, col) of the matrix entry
  std::vector<std::vector<mpq_class>> rows;
};

inline DerivationSystem derivation_system(const HomSuperAlgebra& a, unsigned k, Parity parity) {
  const auto& s = a.space();
  const std::size_t d = s.dim();
  const std::size_t n = a.arity();
  const GradedLinearMap& alpha = a.twist(0);
  DerivationSystem sys;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      if (s.parity(r) + s.parity(c) == parity) sys.unknowns.emplace_back(r, c);

  std::vector<std::vector<Element>> defects(sys.unknowns.size());
  for (std::size_t u = 0; u < sys.unknowns.size(); ++u) {
    std::vector<Element> images(d, Element(d));
    images[sys.unknowns[u].second][sys.unknowns[u].first] = Scalar(1);
    const GradedLinearMap e(s, parity, images);
    auto& out = defects[u];
    Tuple t(n, 0);
    std::function<void(std::size_t)> walk = [&](std::size_t pos) {
      if (pos == n) {
        std::vector<Element> args;
        for (auto i : t) args.push_back(Element::basis(d, i));
        Element defect = e.apply(a.bracket().evaluate(args));
        int prefix = 0;
        for (std::size_t i = 0; i < n; ++i) {
          std::vector<Element> mixed;
          for (std::size_t m = 0; m < n; ++m)
            mixed.push_back(m == i ? e.apply(args[m]) : apply_power(alpha, k, args[m]));
          Element term = a.bracket().evaluate(mixed);
          if (parity.odd() && (prefix & 1)) term *= Scalar(-1);
          defect -= term;
          prefix += s.parity(t[i]).value();
        }
        out.push_back(defect);
        return;
      }
      for (std::size_t v = 0; v < d; ++v) {
        t[pos] = v;
        walk(pos + 1);
      }
    };
    walk(0);
    for (std::size_t j = 0; j < d; ++j) {
      const Element bj = Element::basis(d, j);
      out.push_back(e.apply(alpha.apply(bj)) - alpha.apply(e.apply(bj)));
    }
  }
  if (sys.unknowns.empty()) return sys;
  const std::size_t blocks = defects.front().size();
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t coord = 0; coord < d; ++coord) {
      std::vector<mpq_class> row;
      for (std::size_t u = 0; u < sys.unknowns.size(); ++u) row.push_back(defects[u][b][coord].raw());
      sys.rows.push_back(std::move(row));
    }
  return sys;
}

// Flattens a map onto the unknowns of a derivation system.
inline std::vector<mpq_class> coordinates(const DerivationSystem& sys, const GradedLinearMap& f) {
  std::vector<mpq_class> out;
  for (const auto& [r, c] : sys.unknowns) out.push_back(f.entry(r, c).raw());
  return out;
}

// [x1,…,xn]_n = [[x1,…,x_{n−1}]_{n−1}, α^{n−2} x_n], evaluated on elements by plain recursion.
inline Element iterated_value(const HomSuperAlgebra& base, const std::vector<Element>& xs) {
  if (xs.size() == 2) return base.bracket().evaluate(xs);
  const std::vector<Element> head(xs.begin(), xs.end() - 1);
  const std::vector<Element> args{iterated_value(base, head),
                                  apply_power(base.twist(0), static_cast<unsigned>(xs.size() - 2), xs.back())};
  return base.bracket().evaluate(args);
}

// Nilpotent 3-Lie superalgebra [e1,f1,f2] = e4 (e1, e4 even; f1, f2 odd) with twist diag(1, 2, 1/2, 1).
// diag(1, 2, 3, 6) is a derivation, so its inverse is an invertible weight-0 Rota-Baxter operator.
inline HomSuperAlgebra nilpotent_3lie() {
  const auto s = space({{"e1", 0}, {"f1", 1}, {"f2", 1}, {"e4", 0}});
  const auto b = NaryBracket::from_generators(s, 3, {{tup(s, {"e1", "f1", "f2"}), vec(s, {{"e4", 1}})}});
  return HomSuperAlgebra::with_alpha(b, GradedLinearMap::diagonal(s, {1, 2, Scalar(1, 2), 1}));
}

inline GradedLinearMap nilpotent_3lie_rb(const SuperSpace& s) {
  return GradedLinearMap::diagonal(s, {1, Scalar(1, 2), Scalar(1, 3), Scalar(1, 6)});
}

}  // namespace fx
