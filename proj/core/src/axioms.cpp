#include "homnambu/axioms.hpp"

#include <algorithm>

#include "homnambu/errors.hpp"
#include "homnambu/signs.hpp"
#include "homnambu/tuples.hpp"

namespace homnambu {

namespace {

SparseVec unit(std::size_t i) { return SparseVec{{i, Scalar(1)}}; }

}  // namespace

CheckReport check_super_skew(const NaryBracket& b, CheckOptions options) {
  CheckReport report(identity::kSuperSkew, b.space(), options);
  const auto& space = b.space();
  for_each_tuple(b.dim(), b.arity(), [&](const Tuple& t) {
    report.add_checked();
    const auto parities = space.parities_of(t);
    for (std::size_t pos = 1; pos < t.size(); ++pos) {
      Tuple w = t;
      std::swap(w[pos - 1], w[pos]);
      if (w < t) continue;  // each unordered pair of tuples is examined once
      Element rhs = b.at(w);
      rhs *= Scalar(koszul_adjacent_sign(parities, pos));
      if (!(b.at(t) == rhs)) {
        report.record_failure(t, b.at(t), rhs);
        break;
      }
    }
  });
  return report;
}

CheckReport check_super_skew(const HomSuperAlgebra& alg, CheckOptions options) {
  return check_super_skew(alg.bracket(), options);
}

CheckReport check_hom_jacobi(const HomSuperAlgebra& alg, CheckOptions options) {
  if (alg.arity() != 2) throw PreconditionFailed("super-Hom-Jacobi applies to binary brackets only");
  const auto& b = alg.bracket();
  const auto& alpha = alg.twist(0);
  const auto& space = alg.space();
  CheckReport report(identity::kHomJacobi, space, options);
  const std::size_t d = alg.dim();
  std::vector<SparseVec> inner(d * d);
  for (std::size_t y = 0; y < d; ++y)
    for (std::size_t z = 0; z < d; ++z) inner[y * d + z] = sparse(b.at(Tuple{y, z}));
  auto term = [&](std::size_t x, std::size_t y, std::size_t z, Element& out) {
    const int s = (space.parity(x) * space.parity(z)).odd() ? -1 : 1;
    const SparseVec* args[] = {&alpha.sparse_column(x), &inner[y * d + z]};
    b.accumulate(args, Scalar(s), out);
  };
  const Element zero(d);
  for_each_tuple(d, 3, [&](const Tuple& t) {
    report.add_checked();
    Element sum(d);
    term(t[0], t[1], t[2], sum);
    term(t[1], t[2], t[0], sum);
    term(t[2], t[0], t[1], sum);
    if (!sum.is_zero()) report.record_failure(t, sum, zero);
  });
  return report;
}

CheckReport check_nambu_identity(const HomSuperAlgebra& alg, CheckOptions options) {
  const auto& b = alg.bracket();
  const auto& space = alg.space();
  const std::size_t n = alg.arity();
  const std::size_t d = alg.dim();
  CheckReport report(identity::kNambu, space, options);
  const std::size_t ycount = tuple_count(d, n);

  std::vector<const SparseVec*> args(n);
  std::vector<SparseVec> dcol(d);
  std::vector<SparseVec> lcol(d);
  std::vector<SparseVec> units(d);
  for (std::size_t j = 0; j < d; ++j) units[j] = unit(j);
  Element lhs(d);
  Element rhs(d);

  for_each_tuple(d, n - 1, [&](const Tuple& x) {
    const Parity px = space.degree_of(x);
    Tuple xy = x;
    xy.push_back(0);
    bool d_zero = true;
    for (std::size_t y = 0; y < d; ++y) {
      xy.back() = y;
      dcol[y] = sparse(b.at(xy));
      if (!dcol[y].empty()) d_zero = false;
      Element col(d);
      for (std::size_t m = 0; m + 1 < n; ++m) args[m] = &alg.twist(m).sparse_column(x[m]);
      args[n - 1] = &units[y];
      b.accumulate(args, Scalar(1), col);
      lcol[y] = sparse(col);
    }
    for (std::size_t fy = 0; fy < ycount; ++fy) {
      const bool by_nonzero = b.nonzero_flat(fy);
      if (!by_nonzero && d_zero) continue;
      const Tuple y = tuple_at(fy, d, n);
      lhs.clear();
      if (by_nonzero) {
        const Element& by = b.at_flat(fy);
        for (std::size_t s = 0; s < d; ++s) {
          if (by[s].is_zero()) continue;
          for (const auto& t : lcol[s]) lhs[t.index].add_product(t.coeff, by[s]);
        }
      }
      rhs.clear();
      Parity prefix;
      for (std::size_t i = 0; i < n; ++i) {
        if (!dcol[y[i]].empty()) {
          for (std::size_t k = 0; k < n; ++k) {
            if (k < i) args[k] = &alg.twist(k).sparse_column(y[k]);
            else if (k == i) args[k] = &dcol[y[i]];
            else args[k] = &alg.twist(k - 1).sparse_column(y[k]);
          }
          b.accumulate(args, Scalar((px * prefix).odd() ? -1 : 1), rhs);
        }
        prefix += space.parity(y[i]);
      }
      if (!(lhs == rhs)) {
        Tuple xy_full = x;
        xy_full.insert(xy_full.end(), y.begin(), y.end());
        report.record_failure(xy_full, lhs, rhs);
      }
    }
    report.add_checked(ycount);
  });
  return report;
}

CheckReport check_multiplicative(const HomSuperAlgebra& alg, CheckOptions options) {
  const auto& alpha = alg.alpha();
  const auto& b = alg.bracket();
  CheckReport report(identity::kMultiplicative, alg.space(), options);
  std::vector<const SparseVec*> args(alg.arity());
  for_each_tuple(alg.dim(), alg.arity(), [&](const Tuple& t) {
    report.add_checked();
    const Element lhs = alpha.apply(b.at(t));
    Element rhs(alg.dim());
    for (std::size_t k = 0; k < t.size(); ++k) args[k] = &alpha.sparse_column(t[k]);
    b.accumulate(args, Scalar(1), rhs);
    if (!(lhs == rhs)) report.record_failure(t, lhs, rhs);
  });
  return report;
}

CheckReport check_grading(const NaryBracket& b, CheckOptions options) {
  const auto& space = b.space();
  CheckReport report(identity::kGrading, space, options);
  for (auto f : b.support()) {
    const Tuple t = tuple_at(f, b.dim(), b.arity());
    const Parity want = space.degree_of(t);
    const Element& v = b.at_flat(f);
    Element graded = v;
    for (std::size_t i = 0; i < graded.dim(); ++i) {
      if (space.parity(i) != want) graded[i] = Scalar();
    }
    if (!(graded == v)) report.record_failure(t, v, graded);
  }
  report.add_checked(b.size());
  return report;
}

CheckReport check_grading(const HomSuperAlgebra& alg, CheckOptions options) {
  return check_grading(alg.bracket(), options);
}

GradedLinearMap adjoint_map(const HomSuperAlgebra& alg, std::span<const Element> xs) {
  if (xs.size() + 1 != alg.arity())
    throw InputError("adjoint map needs " + std::to_string(alg.arity() - 1) + " arguments");
  Parity p;
  for (const auto& x : xs) {
    auto px = x.parity(alg.space());
    if (!px) throw InputError("adjoint map needs homogeneous arguments");
    p += *px;
  }
  std::vector<Element> args(xs.begin(), xs.end());
  args.emplace_back(alg.dim());
  std::vector<Element> images;
  for (std::size_t y = 0; y < alg.dim(); ++y) {
    args.back() = Element::basis(alg.dim(), y);
    images.push_back(alg.bracket().evaluate(args));
  }
  return GradedLinearMap(alg.space(), p, images);
}

Verification check_identities(const HomSuperAlgebra& alg, const std::vector<std::string>& names,
                              CheckOptions options) {
  std::vector<std::string> wanted;
  for (const auto& n : names) {
    if (n == "all") {
      wanted.insert(wanted.end(), {identity::kGrading, identity::kSuperSkew});
      if (alg.arity() == 2) wanted.emplace_back(identity::kHomJacobi);
      wanted.emplace_back(identity::kNambu);
      if (alg.multiplicative_flag()) wanted.emplace_back(identity::kMultiplicative);
    } else {
      wanted.push_back(n);
    }
  }
  Verification v{"identities", {}, {}};
  std::vector<std::string> done;
  for (const auto& n : wanted) {
    if (std::find(done.begin(), done.end(), n) != done.end()) continue;
    done.push_back(n);
    if (n == identity::kGrading) v.checks.push_back(check_grading(alg, options));
    else if (n == identity::kSuperSkew) v.checks.push_back(check_super_skew(alg, options));
    else if (n == identity::kHomJacobi) v.checks.push_back(check_hom_jacobi(alg, options));
    else if (n == identity::kNambu) v.checks.push_back(check_nambu_identity(alg, options));
    else if (n == identity::kMultiplicative) v.checks.push_back(check_multiplicative(alg, options));
    else throw InputError("unknown identity '" + n + "'");
  }
  return v;
}

}  // namespace homnambu
