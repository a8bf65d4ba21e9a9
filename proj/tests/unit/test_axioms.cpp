#include <doctest.h>

#include "fixtures.hpp"
#include "homnambu/axioms.hpp"
#include "homnambu/errors.hpp"
#include "homnambu/tuples.hpp"

using namespace homnambu;

namespace {

// Direct evaluation of the Nambu identity on basis tuples with no table tricks.
std::size_t nambu_failures_oracle(const HomSuperAlgebra& a) {
  const auto& s = a.space();
  const std::size_t n = a.arity(), d = a.dim();
  std::size_t failures = 0;
  auto e = [&](std::size_t i) { return Element::basis(d, i); };
  for_each_tuple(d, n - 1, [&](const Tuple& x) {
    int px = 0;
    for (auto i : x) px += s.parity(i).value();
    for_each_tuple(d, n, [&](const Tuple& y) {
      std::vector<Element> inner;
      for (auto i : y) inner.push_back(e(i));
      std::vector<Element> outer;
      for (std::size_t m = 0; m + 1 < n; ++m) outer.push_back(a.twist(m).apply(e(x[m])));
      outer.push_back(a.bracket().evaluate(inner));
      const Element lhs = a.bracket().evaluate(outer);
      Element rhs(d);
      int py = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Element> xy;
        for (auto k : x) xy.push_back(e(k));
        xy.push_back(e(y[i]));
        std::vector<Element> args;
        for (std::size_t k = 0; k < n; ++k) {
          if (k < i) args.push_back(a.twist(k).apply(e(y[k])));
          else if (k == i) args.push_back(a.bracket().evaluate(xy));
          else args.push_back(a.twist(k - 1).apply(e(y[k])));
        }
        Element term = a.bracket().evaluate(args);
        if ((px * py) & 1) term *= Scalar(-1);
        rhs += term;
        py += s.parity(y[i]).value();
      }
      if (!(lhs == rhs)) ++failures;
    });
  });
  return failures;
}

const SuperSpace T = fx::space({{"a", 0}, {"b", 1}, {"c", 1}});

HomSuperAlgebra ternary_sample(bool distinct_twists) {
  const auto b = NaryBracket::from_generators(T, 3,
                                              {{fx::tup(T, {"a", "b", "c"}), fx::vec(T, {{"a", 1}})},
                                               {fx::tup(T, {"a", "b", "b"}), fx::vec(T, {{"a", 2}})},
                                               {fx::tup(T, {"b", "c", "c"}), fx::vec(T, {{"b", -1}, {"c", 3}})}});
  const auto t1 = GradedLinearMap::diagonal(T, {1, 2, Scalar(1, 2)});
  const auto t2 = distinct_twists ? GradedLinearMap::diagonal(T, {-1, 1, 1}) : t1;
  return HomSuperAlgebra(b, {t1, t2});
}

}  // namespace

TEST_CASE("the classification entries satisfy their declared identities") {
  for (const auto& [name, params] : std::vector<std::pair<const char*, ParamMap>>{
           {"g1_0_2", {{"a", 3}}}, {"g2_1_1", {{"a", -2}}}, {"g3_1_1", {{"a", Scalar(1, 2)}}},
           {"g4_1_1", {{"a", 5}}}, {"g5_1_1", {{"a", -3}}}, {"osp12", {{"lambda", 3}}}}) {
    CAPTURE(name);
    const auto v = check_identities(fx::alg(name, params), {"all"});
    CHECK(v.passed());
    CHECK(v.checks.size() == 5);
  }
}

TEST_CASE("osp(1,2) with the identity twist fails super-Hom-Jacobi") {
  const auto a = fx::alg("osp12", {{"lambda", 2}});
  const auto plain = a.with_twists({GradedLinearMap::identity(a.space())});
  const auto r = check_hom_jacobi(plain);
  CHECK_FALSE(r.passed());
  CHECK(r.failures() >= 1);
  REQUIRE_FALSE(r.counterexamples().empty());
  CHECK(r.tuples_checked() == 125);
  CHECK(check_hom_jacobi(fx::alg("osp12", {{"lambda", 1}}).with_twists({GradedLinearMap::identity(a.space())}))
            .passed());
}

TEST_CASE("the three-dimensional example with phi breaks Hom-Jacobi exactly on the (e2,e3,e3) cycle") {
  const auto a = fx::alg("L1", {{"a", 2}, {"b", 3}});
  const auto r = check_hom_jacobi(a);
  CHECK(r.failures() == 3);
  REQUIRE(r.counterexamples().size() == 3);
  const auto& ce = r.counterexamples().front();
  CHECK(ce.tuple == fx::tup(a.space(), {"e2", "e3", "e3"}));
  CHECK(ce.lhs == fx::vec(a.space(), {{"e1", -4}}));
  CHECK(ce.rhs.is_zero());
  CHECK(check_super_skew(a).passed());
  CHECK(check_multiplicative(a).passed());
}

TEST_CASE("counterexamples are capped but the failure count is exact") {
  const auto a = fx::alg("L2", {{"a", 1}, {"b", 2}, {"c", 3}});
  const auto full = check_hom_jacobi(a);
  const auto capped = check_hom_jacobi(a, CheckOptions{2});
  CHECK(full.failures() == 6);
  CHECK(capped.failures() == 6);
  CHECK(capped.counterexamples().size() == 2);
  CHECK(capped.counterexamples()[0].tuple == full.counterexamples()[0].tuple);
  CHECK(capped.counterexamples()[0].tuple < capped.counterexamples()[1].tuple);
}

TEST_CASE("Nambu checker agrees with a direct evaluation oracle") {
  for (bool distinct : {false, true}) {
    CAPTURE(distinct);
    const auto a = ternary_sample(distinct);
    const auto r = check_nambu_identity(a);
    CHECK(r.failures() == nambu_failures_oracle(a));
    CHECK(r.tuples_checked() == 27 * 9);
  }
  const auto osp = fx::alg("osp12", {{"lambda", 2}});
  CHECK(check_nambu_identity(osp).failures() == nambu_failures_oracle(osp));
  const auto l1 = fx::alg("L1", {{"a", 2}, {"b", 3}});
  CHECK(check_nambu_identity(l1).failures() == nambu_failures_oracle(l1));
  CHECK(nambu_failures_oracle(l1) > 0);
}

TEST_CASE("grading violations are caught") {
  NaryBracket b(T, 2);
  b.set(fx::tup(T, {"a", "b"}), fx::vec(T, {{"a", 1}}));
  const auto r = check_grading(b);
  CHECK(r.failures() == 1);
  CHECK(r.counterexamples().front().rhs.is_zero());
}

TEST_CASE("super-skew violations are caught once per pair") {
  NaryBracket b(T, 2);
  b.set(fx::tup(T, {"a", "b"}), fx::vec(T, {{"b", 1}}));
  CHECK(check_super_skew(b).failures() == 1);
  b.set(fx::tup(T, {"b", "a"}), fx::vec(T, {{"b", -1}}));
  CHECK(check_super_skew(b).passed());
  b.set(fx::tup(T, {"a", "a"}), fx::vec(T, {{"a", 1}}));
  CHECK(check_super_skew(b).failures() == 1);
}

TEST_CASE("multiplicativity failures") {
  const auto a = fx::alg("g3_1_1", {{"a", 2}});
  const auto bad = a.with_twists({GradedLinearMap::diagonal(a.space(), {3, 1})});
  CHECK_FALSE(check_multiplicative(bad).passed());
  CHECK_THROWS_AS(check_multiplicative(ternary_sample(true)), PreconditionFailed);
}

TEST_CASE("Hom-Jacobi needs a binary bracket") {
  CHECK_THROWS_AS(check_hom_jacobi(ternary_sample(false)), PreconditionFailed);
}

TEST_CASE("adjoint maps") {
  const auto a = fx::alg("g3_1_1", {{"a", 2}});
  const auto& s = a.space();
  const std::vector<Element> x{fx::basis(s, "e0")};
  const auto ad = adjoint_map(a, x);
  CHECK(ad.parity() == kEven);
  CHECK(ad == GradedLinearMap::diagonal(s, {0, 1}));
  const std::vector<Element> mixed{fx::vec(s, {{"e0", 1}, {"e1", 1}})};
  CHECK_THROWS_AS(adjoint_map(a, mixed), InputError);
  CHECK_THROWS_AS(adjoint_map(a, std::vector<Element>{}), InputError);
}

TEST_CASE("identity selection") {
  const auto a = fx::alg("g3_1_1", {{"a", 2}});
  const auto v = check_identities(a, {"nambu", "nambu", "grading"});
  CHECK(v.checks.size() == 2);
  CHECK(v.check("grading").passed());
  CHECK_THROWS_AS(v.check("hom_jacobi"), std::out_of_range);
  CHECK_THROWS_AS(check_identities(a, {"jacobi"}), InputError);
  const auto tern = check_identities(ternary_sample(true), {"all"});
  for (const auto& c : tern.checks) {
    CHECK(c.identity() != "hom_jacobi");
    CHECK(c.identity() != "multiplicative");
  }
}
