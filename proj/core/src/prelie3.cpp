#include "homnambu/prelie3.hpp"

#include "homnambu/axioms.hpp"
#include "homnambu/errors.hpp"
#include "homnambu/tuples.hpp"

namespace homnambu {

namespace {

int par(const SuperSpace& s, std::size_t i) { return s.parity(i).value(); }

CheckReport first_pair_skew(const NaryBracket& p, CheckOptions options) {
  CheckReport report("d1", p.space(), options);
  const auto& s = p.space();
  for_each_tuple(p.dim(), 3, [&](const Tuple& t) {
    report.add_checked();
    const Element lhs = p.at(t);
    const Element rhs = Scalar(-1) * sign_of(par(s, t[0]) * par(s, t[1])) * p.at(Tuple{t[1], t[0], t[2]});
    if (!(lhs == rhs)) report.record_failure(t, lhs, rhs);
  });
  return report;
}

NaryBracket cyclic_sum(const NaryBracket& p) {
  const auto& s = p.space();
  NaryBracket out(s, 3);
  for_each_tuple(p.dim(), 3, [&](const Tuple& t) {
    const int x = par(s, t[0]), y = par(s, t[1]), z = par(s, t[2]);
    Element v = p.at(t);
    v.add_scaled(p.at(Tuple{t[1], t[2], t[0]}), sign_of(x * (y + z)));
    v.add_scaled(p.at(Tuple{t[2], t[0], t[1]}), sign_of(z * (x + y)));
    if (!v.is_zero()) out.set(t, std::move(v));
  });
  return out;
}

// Evaluates products on basis 5-tuples with shared precomputation.
class FiveTupleEvaluator {
 public:
  FiveTupleEvaluator(const TriProduct& t) : p_(t.product()), a_(t.twist()), c_(cyclic_sum(t.product())) {
    const std::size_t d = p_.dim();
    units_.resize(d);
    for (std::size_t i = 0; i < d; ++i) units_[i] = SparseVec{{i, Scalar(1)}};
    inner_.resize(p_.size());
    comm_.resize(c_.size());
    for (std::size_t f = 0; f < p_.size(); ++f) inner_[f] = sparse(p_.at_flat(f));
    for (std::size_t f = 0; f < c_.size(); ++f) comm_[f] = sparse(c_.at_flat(f));
  }

  const SparseVec& alpha(std::size_t i) const { return a_.sparse_column(i); }
  const SparseVec& inner(std::size_t i, std::size_t j, std::size_t k) const { return inner_[flat(i, j, k)]; }
  const SparseVec& comm(std::size_t i, std::size_t j, std::size_t k) const { return comm_[flat(i, j, k)]; }

  void add(const SparseVec& a, const SparseVec& b, const SparseVec& c, const Scalar& w, Element& out) const {
    const SparseVec* args[] = {&a, &b, &c};
    p_.accumulate(args, w, out);
  }

 private:
  std::size_t flat(std::size_t i, std::size_t j, std::size_t k) const { return (i * p_.dim() + j) * p_.dim() + k; }

  const NaryBracket& p_;
  const GradedLinearMap& a_;
  NaryBracket c_;
  std::vector<SparseVec> units_;
  std::vector<SparseVec> inner_;
  std::vector<SparseVec> comm_;
};

void require_ternary(const HomSuperAlgebra& alg3) {
  if (alg3.arity() != 3) throw PreconditionFailed("a ternary algebra is required");
}

void require_three_hom_lie(const HomSuperAlgebra& alg3) {
  require_ternary(alg3);
  alg3.alpha();
  if (!check_super_skew(alg3, CheckOptions{1}).passed())
    throw PreconditionFailed("ternary algebra is not super-skew");
  if (!check_nambu_identity(alg3, CheckOptions{1}).passed())
    throw PreconditionFailed("ternary algebra fails the Nambu identity");
}

void require_rb0(const HomSuperAlgebra& alg3, const RotaBaxterOperator& r) {
  if (!r.weight().is_zero()) throw PreconditionFailed("a weight-0 Rota-Baxter operator is required");
  if (!check_rb_nary(r, alg3, CheckOptions{1}).passed())
    throw PreconditionFailed("operator is not a weight-0 Rota-Baxter operator of the ternary algebra");
}

}  // namespace

TriProduct::TriProduct(NaryBracket product, GradedLinearMap twist)
    : product_(std::move(product)), twist_(std::move(twist)) {
  if (product_.arity() != 3) throw InputError("a ternary product needs arity 3");
  if (twist_.parity() != kEven) throw InputError("the twist must be even");
  if (!(twist_.space() == product_.space())) throw InputError("twist acts on a different space");
}

Verification check_3_pre_lie(const TriProduct& t, CheckOptions options) {
  const auto& s = t.space();
  const std::size_t d = s.dim();
  Verification v{"3_hom_pre_lie", {}, {}};
  v.checks.push_back(first_pair_skew(t.product(), options));

  const FiveTupleEvaluator ev(t);
  CheckReport d2("d2", s, options);
  CheckReport d3("d3", s, options);
  for_each_tuple(d, 5, [&](const Tuple& x) {
    const int p1 = par(s, x[0]), p2 = par(s, x[1]), p3 = par(s, x[2]), p4 = par(s, x[3]);
    const auto& a1 = ev.alpha(x[0]);
    const auto& a2 = ev.alpha(x[1]);
    const auto& a3 = ev.alpha(x[2]);
    const auto& a4 = ev.alpha(x[3]);
    const auto& a5 = ev.alpha(x[4]);

    Element first(d);  // {α1, α2, {3,4,5}}
    ev.add(a1, a2, ev.inner(x[2], x[3], x[4]), 1, first);
    Element c123(d);  // {C(1,2,3), α4, α5}
    ev.add(ev.comm(x[0], x[1], x[2]), a4, a5, 1, c123);

    d2.add_checked();
    Element rhs2 = c123;
    ev.add(a3, ev.comm(x[0], x[1], x[3]), a5, sign_of(p3 * (p1 + p2)), rhs2);
    ev.add(a3, a4, ev.inner(x[0], x[1], x[4]), sign_of((p1 + p2) * (p3 + p4)), rhs2);
    if (!(first == rhs2)) d2.record_failure(x, first, rhs2);

    d3.add_checked();
    Element rhs3 = first;
    ev.add(a2, a3, ev.inner(x[0], x[3], x[4]), sign_of(p1 * (p2 + p3)), rhs3);
    ev.add(a3, a1, ev.inner(x[1], x[3], x[4]), sign_of(p3 * (p1 + p2)), rhs3);
    if (!(c123 == rhs3)) d3.record_failure(x, c123, rhs3);
  });
  v.checks.push_back(std::move(d2));
  v.checks.push_back(std::move(d3));
  return v;
}

HomSuperAlgebra supercommutator3(const TriProduct& t) {
  if (!first_pair_skew(t.product(), CheckOptions{1}).passed())
    throw PreconditionFailed("product is not super-skew in its first two arguments");
  return HomSuperAlgebra::with_alpha(cyclic_sum(t.product()), t.twist());
}

SubAdjacent sub_adjacent(const TriProduct& t, CheckOptions options) {
  if (!check_3_pre_lie(t, CheckOptions{1}).passed())
    throw PreconditionFailed("product is not a 3-Hom-pre-Lie superalgebra");
  HomSuperAlgebra alg = supercommutator3(t);
  Verification v{"3_hom_lie", {}, {}};
  v.checks.push_back(check_super_skew(alg, options));
  v.checks.push_back(check_nambu_identity(alg, options));
  return SubAdjacent{std::move(alg), std::move(v)};
}

Verification check_corollary_identities(const TriProduct& t, CheckOptions options) {
  const auto& s = t.space();
  const std::size_t d = s.dim();
  const FiveTupleEvaluator ev(t);
  CheckReport first("commutator_alternating_sum", s, options);
  CheckReport second("pairwise_nested_sum", s, options);
  const Element zero(d);
  for_each_tuple(d, 5, [&](const Tuple& x) {
    const int p1 = par(s, x[0]), p2 = par(s, x[1]), p3 = par(s, x[2]), p4 = par(s, x[3]);
    const auto& a1 = ev.alpha(x[0]);
    const auto& a2 = ev.alpha(x[1]);
    const auto& a3 = ev.alpha(x[2]);
    const auto& a4 = ev.alpha(x[3]);
    const auto& a5 = ev.alpha(x[4]);

    first.add_checked();
    Element e1(d);
    ev.add(ev.comm(x[0], x[1], x[2]), a4, a5, 1, e1);
    ev.add(ev.comm(x[0], x[1], x[3]), a3, a5, -sign_of(p3 * p4), e1);
    ev.add(ev.comm(x[0], x[2], x[3]), a2, a5, sign_of(p2 * (p3 + p4)), e1);
    ev.add(ev.comm(x[1], x[2], x[3]), a1, a5, -sign_of(p1 * (p2 + p3 + p4)), e1);
    if (!e1.is_zero()) first.record_failure(x, e1, zero);

    second.add_checked();
    Element e2(d);
    ev.add(a1, a2, ev.inner(x[2], x[3], x[4]), 1, e2);
    ev.add(a3, a4, ev.inner(x[0], x[1], x[4]), sign_of((p1 + p2) * (p3 + p4)), e2);
    ev.add(a2, a4, ev.inner(x[2], x[0], x[4]), sign_of(p1 * (p2 + p3 + p4) + p3 * p4), e2);
    ev.add(a3, a1, ev.inner(x[1], x[3], x[4]), sign_of(p3 * (p1 + p2)), e2);
    ev.add(a2, a3, ev.inner(x[0], x[3], x[4]), sign_of(p1 * (p2 + p3)), e2);
    ev.add(a1, a4, ev.inner(x[1], x[2], x[4]), sign_of(p4 * (p2 + p3)), e2);
    if (!e2.is_zero()) second.record_failure(x, e2, zero);
  });
  Verification v{"3_hom_pre_lie_corollary", {}, {}};
  v.checks.push_back(std::move(first));
  v.checks.push_back(std::move(second));
  return v;
}

TriProduct rb_induced_prelie(const HomSuperAlgebra& alg3, const RotaBaxterOperator& r) {
  require_three_hom_lie(alg3);
  require_rb0(alg3, r);
  const auto& R = r.map();
  const auto& b = alg3.bracket();
  const std::size_t d = alg3.dim();
  NaryBracket out(alg3.space(), 3);
  for_each_tuple(d, 3, [&](const Tuple& t) {
    const SparseVec z{{t[2], Scalar(1)}};
    const SparseVec* args[] = {&R.sparse_column(t[0]), &R.sparse_column(t[1]), &z};
    Element v(d);
    b.accumulate(args, Scalar(1), v);
    if (!v.is_zero()) out.set(t, std::move(v));
  });
  return TriProduct(std::move(out), alg3.alpha());
}

CheckReport check_rb_morphism(const TriProduct& t, const GradedLinearMap& r, const HomSuperAlgebra& alg3,
                              CheckOptions options) {
  require_ternary(alg3);
  const NaryBracket c = cyclic_sum(t.product());
  CheckReport report("rota_baxter_morphism", alg3.space(), options);
  for_each_tuple(alg3.dim(), 3, [&](const Tuple& x) {
    report.add_checked();
    const Element lhs = r.apply(c.at(x));
    Element rhs(alg3.dim());
    const SparseVec* args[] = {&r.sparse_column(x[0]), &r.sparse_column(x[1]), &r.sparse_column(x[2])};
    alg3.bracket().accumulate(args, Scalar(1), rhs);
    if (!(lhs == rhs)) report.record_failure(x, lhs, rhs);
  });
  return report;
}

TriProduct rb_image_prelie(const HomSuperAlgebra& alg3, const RotaBaxterOperator& r) {
  const GradedLinearMap inv = map_inverse(r.map());
  require_three_hom_lie(alg3);
  require_rb0(alg3, r);
  const auto& R = r.map();
  const auto& b = alg3.bracket();
  const std::size_t d = alg3.dim();
  NaryBracket out(alg3.space(), 3);
  for_each_tuple(d, 3, [&](const Tuple& t) {
    const SparseVec x{{t[0], Scalar(1)}};
    const SparseVec y{{t[1], Scalar(1)}};
    const SparseVec* args[] = {&x, &y, &inv.sparse_column(t[2])};
    Element v(d);
    b.accumulate(args, Scalar(1), v);
    Element rv = R.apply(v);
    if (!rv.is_zero()) out.set(t, std::move(rv));
  });
  return TriProduct(std::move(out), alg3.alpha());
}

CheckReport check_compatibility(const TriProduct& t, const HomSuperAlgebra& alg3, CheckOptions options) {
  require_ternary(alg3);
  if (!(t.space() == alg3.space())) throw InputError("product and algebra live on different spaces");
  const NaryBracket c = cyclic_sum(t.product());
  CheckReport report("compatibility", alg3.space(), options);
  for_each_tuple(alg3.dim(), 3, [&](const Tuple& x) {
    report.add_checked();
    if (!(c.at(x) == alg3.bracket().at(x))) report.record_failure(x, c.at(x), alg3.bracket().at(x));
  });
  return report;
}

}  // namespace homnambu
