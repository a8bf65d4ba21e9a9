#include <doctest.h>

#include "fixtures.hpp"
#include "homnambu/cochains.hpp"
#include "homnambu/errors.hpp"
#include "homnambu/iterated.hpp"
#include "homnambu/rotabaxter.hpp"
#include "homnambu/tuples.hpp"

using namespace homnambu;

namespace {

// Rota-Baxter identity by direct bitmask enumeration of the subsets.
bool rb_oracle(const GradedLinearMap& r, const Scalar& lambda, const HomSuperAlgebra& a) {
  const std::size_t n = a.arity(), d = a.dim();
  bool ok = true;
  for_each_tuple(d, n, [&](const Tuple& t) {
    std::vector<Element> xs, rxs;
    for (auto i : t) {
      xs.push_back(Element::basis(d, i));
      rxs.push_back(r.apply(xs.back()));
    }
    const Element lhs = a.bracket().evaluate(rxs);
    Element inner(d);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<Element> args;
      int size = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const bool in = (mask >> i) & 1u;
        size += in;
        args.push_back(in ? xs[i] : rxs[i]);
      }
      inner.add_scaled(a.bracket().evaluate(args), lambda.pow(size - 1));
    }
    if (!(lhs == r.apply(inner))) ok = false;
  });
  return ok;
}

std::vector<std::pair<const char*, ParamMap>> binary_entries() {
  return {{"g1_0_2", {{"a", 2}}},   {"g2_1_1", {{"a", 2}}},     {"g3_1_1", {{"a", 2}}},
          {"g4_1_1", {{"a", 2}}},   {"g5_1_1", {{"a", 2}}},     {"osp12", {{"lambda", 2}}},
          {"L1", {{"a", 2}, {"b", 3}}}, {"L2", {{"a", 2}, {"b", 2}, {"c", 3}}}};
}

}  // namespace

TEST_CASE("subset expansion ordering") {
  const auto t3 = rb_subset_expansion(3);
  REQUIRE(t3.size() == 7);
  CHECK(t3[0].in_subset == std::vector<bool>{true, false, false});
  CHECK(t3[1].in_subset == std::vector<bool>{false, true, false});
  CHECK(t3[2].in_subset == std::vector<bool>{false, false, true});
  CHECK(t3[3].in_subset == std::vector<bool>{true, true, false});
  CHECK(t3[6].in_subset == std::vector<bool>{true, true, true});
  CHECK(t3[6].lambda_power == 2);
  CHECK(rb_subset_expansion(5).size() == 31);
  CHECK(rb_subset_expansion(1).size() == 1);
  CHECK_THROWS_AS(rb_subset_expansion(0), InputError);
  CHECK_THROWS_AS(rb_subset_expansion(21), InputError);
}

TEST_CASE("identity is a weight -1 operator on every binary entry") {
  for (const auto& [name, params] : binary_entries()) {
    CAPTURE(name);
    const auto a = fx::alg(name, params);
    const auto v = check_rb_binary(RotaBaxterOperator(GradedLinearMap::identity(a.space()), Scalar(-1)), a);
    CHECK(v.passed());
    CHECK(v.name == "rota_baxter_weight_-1");
  }
}

TEST_CASE("verdicts agree with the bitmask oracle") {
  for (const auto& [name, params] : binary_entries()) {
    const auto a = fx::alg(name, params);
    const auto& s = a.space();
    std::vector<GradedLinearMap> maps{GradedLinearMap::identity(s), GradedLinearMap::zero(s)};
    std::vector<Scalar> diag;
    for (std::size_t i = 0; i < s.dim(); ++i) diag.emplace_back(static_cast<long>(i + 1), 2);
    maps.push_back(GradedLinearMap::diagonal(s, diag));
    diag.assign(s.dim(), Scalar());
    diag[0] = Scalar(1);
    maps.push_back(GradedLinearMap::diagonal(s, diag));
    for (const auto& m : maps)
      for (const Scalar& w : {Scalar(0), Scalar(1), Scalar(-1), Scalar(2)}) {
        CAPTURE(name);
        CAPTURE(w);
        const auto v = check_rb_binary(RotaBaxterOperator(m, w), a);
        CHECK(v.check("rota_baxter").passed() == rb_oracle(m, w, a));
      }
  }
}

TEST_CASE("the halving operator on the odd-square entry") {
  const auto d = fx::doc("g5_1_1", {{"a", 2}});
  const auto& op = d.find_operator("rb_half");
  CHECK(check_rb_binary(RotaBaxterOperator(op.map, op.weight), d.algebra).passed());
  const auto eq = check_inverse_derivation_equiv(op.map, d.algebra);
  CHECK(eq.rota_baxter.passed());
  CHECK(eq.derivation.passed());
  CHECK(eq.agree());
  const auto id = GradedLinearMap::identity(d.algebra.space());
  const auto eq_id = check_inverse_derivation_equiv(id, d.algebra);
  CHECK_FALSE(eq_id.rota_baxter.passed());
  CHECK_FALSE(eq_id.derivation.passed());
  CHECK(eq_id.agree());
  CHECK_THROWS_AS(check_inverse_derivation_equiv(GradedLinearMap::diagonal(d.algebra.space(), {1, 0}), d.algebra),
                  SingularMap);
}

TEST_CASE("operators must commute with every twist") {
  const auto a = fx::alg("osp12", {{"lambda", 2}});
  const auto& s = a.space();
  const GradedLinearMap swap(s, kEven,
                             std::vector<Element>{fx::basis(s, "Y"), fx::basis(s, "X"), Element(5), Element(5), Element(5)});
  const auto v = check_rb_binary(RotaBaxterOperator(swap, Scalar(0)), a);
  CHECK_FALSE(v.check("commutes_with_twist").passed());
}

TEST_CASE("seven-term ternary expansion matches the subset sum") {
  const auto g3 = fx::alg("g3_1_1", {{"a", 2}});
  const auto osp = fx::alg("osp12", {{"lambda", 2}});
  for (const auto* base : {&g3, &osp}) {
    const auto t = iterated_bracket(*base, 3);
    std::vector<Scalar> diag;
    for (std::size_t i = 0; i < base->dim(); ++i) diag.emplace_back(static_cast<long>(i) - 1);
    const auto r = GradedLinearMap::diagonal(base->space(), diag);
    for (const Scalar& w : {Scalar(0), Scalar(1), Scalar(-1), Scalar(2)}) {
      const auto v = check_rb_nary(RotaBaxterOperator(r, w), t);
      CHECK(v.check("ternary_expansion_agrees").passed());
      CHECK(v.check("rota_baxter").passed() == rb_oracle(r, w, t));
    }
  }
  const auto four = iterated_bracket(g3, 4);
  const auto v4 = check_rb_nary(RotaBaxterOperator(GradedLinearMap::identity(g3.space()), Scalar(-1)), four);
  CHECK_THROWS_AS(v4.check("ternary_expansion_agrees"), std::out_of_range);
}

TEST_CASE("binary RB(0) operators stay RB(0) on iterated brackets") {
  const auto d = fx::doc("g5_1_1", {{"a", 2}});
  const auto& op = d.find_operator("rb_half");
  for (std::size_t n : {3u, 4u}) CHECK(check_rb_nary(RotaBaxterOperator(op.map, 0), iterated_bracket(d.algebra, n)).passed());
}

TEST_CASE("kernel condition and RB on the induced algebra agree") {
  for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 3}, {2, 5}}) {
    const auto d = fx::doc("L1", {{"a", a}, {"b", b}});
    const auto& s = d.algebra.space();
    for (const auto& r : {GradedLinearMap::zero(s), GradedLinearMap::identity(s), d.find_operator("proj_e1").map}) {
      CAPTURE(r.format());
      const auto k = check_phi_rb_kernel_condition(r, d.cochains.front(), d.algebra, 3);
      CHECK(k.agree());
    }
    const auto id = check_phi_rb_kernel_condition(GradedLinearMap::identity(s), d.cochains.front(), d.algebra, 3);
    CHECK_FALSE(id.kernel_condition.passed());
    CHECK(id.notes.size() == 1);
    const auto proj = check_phi_rb_kernel_condition(d.find_operator("proj_e1").map, d.cochains.front(), d.algebra, 3);
    CHECK(proj.kernel_condition.passed());
    CHECK(proj.nary_rota_baxter.passed());
    CHECK(proj.notes.empty());
  }
}

TEST_CASE("kernel condition with a cochain that fails the induction conditions") {
  const auto d = fx::doc("L1", {{"a", 1}, {"b", 3}});
  const auto& s = d.algebra.space();
  const auto bad = SuperCochain::from_generators(s, 1, {{fx::tup(s, {"e1"}), Scalar(1)}, {fx::tup(s, {"e2"}), Scalar(3)}});
  const auto k = check_phi_rb_kernel_condition(d.find_operator("proj_e1").map, bad, d.algebra, 3);
  CHECK(k.notes.size() == 1);
}

TEST_CASE("argument errors") {
  const auto a = fx::alg("g5_1_1", {{"a", 2}});
  const auto& s = a.space();
  CHECK_THROWS_AS(RotaBaxterOperator(GradedLinearMap::zero(s, kOdd), 0), InputError);
  CHECK_THROWS_AS(check_rb_binary(RotaBaxterOperator(GradedLinearMap::identity(s), 0), iterated_bracket(a, 3)),
                  PreconditionFailed);
  const auto other = fx::space({{"x", 0}, {"y", 1}});
  CHECK_THROWS_AS(check_rb_nary(RotaBaxterOperator(GradedLinearMap::identity(other), 0), a), InputError);
  CHECK_THROWS_AS(check_phi_rb_kernel_condition(GradedLinearMap::identity(s), SuperCochain(s, 1), iterated_bracket(a, 3), 3),
                  PreconditionFailed);
}
