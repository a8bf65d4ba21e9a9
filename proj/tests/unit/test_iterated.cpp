#include <doctest.h>

#include "fixtures.hpp"
#include "homnambu/axioms.hpp"
#include "homnambu/derivations.hpp"
#include "homnambu/errors.hpp"
#include "homnambu/iterated.hpp"
#include "homnambu/tuples.hpp"

using namespace homnambu;

namespace {

std::vector<std::pair<const char*, ParamMap>> hom_lie_samples() {
  return {{"g1_0_2", {{"a", 2}}}, {"g2_1_1", {{"a", -3}}},        {"g3_1_1", {{"a", 2}}},
          {"g4_1_1", {{"a", 3}}}, {"g5_1_1", {{"a", Scalar(1, 2)}}}, {"osp12", {{"lambda", 2}}}};
}

}  // namespace

TEST_CASE("iterated tables match the recursion oracle") {
  for (const auto& [name, params] : hom_lie_samples()) {
    const auto a = fx::alg(name, params);
    for (std::size_t n = 2; n <= 5; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      const auto it = iterated_bracket(a, n);
      CHECK(it.arity() == n);
      CHECK(it.alpha() == map_power(a.alpha(), static_cast<unsigned>(n - 1)));
      for_each_tuple(a.dim(), n, [&](const Tuple& t) {
        std::vector<Element> xs;
        for (auto i : t) xs.push_back(Element::basis(a.dim(), i));
        CHECK(it.bracket().at(t) == fx::iterated_value(a, xs));
      });
    }
  }
}

TEST_CASE("iterated brackets are Nambu and multiplicative but not super-skew") {
  for (const auto& [name, params] : hom_lie_samples()) {
    const auto a = fx::alg(name, params);
    for (std::size_t n = 3; n <= 4; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      const auto it = iterated_bracket(a, n);
      CHECK(check_nambu_identity(it).passed());
      CHECK(check_multiplicative(it).passed());
      CHECK(check_grading(it).passed());
    }
  }
  // [e0,e1,e0] = [e1, e0] = -e1 while [e0,e0,e1] = 0.
  const auto g3 = fx::alg("g3_1_1", {{"a", 2}});
  CHECK_FALSE(check_super_skew(iterated_bracket(g3, 3)).passed());
}

TEST_CASE("closed form on the first solvable entry") {
  const auto g3 = fx::alg("g3_1_1", {{"a", 7}});
  const auto& s = g3.space();
  for (std::size_t n = 3; n <= 6; ++n) {
    Tuple t(n, s.index_of("e0"));
    t[0] = s.index_of("e1");
    const auto v = iterated_bracket(g3, n).bracket().at(t);
    CHECK(v == fx::vec(s, {{"e1", (n - 1) % 2 ? -1 : 1}}));
  }
}

TEST_CASE("the adjoint expansion holds on Hom-Lie bases") {
  for (const auto& [name, params] : hom_lie_samples()) {
    CAPTURE(name);
    const auto a = fx::alg(name, params);
    for (std::size_t n = 3; n <= 4; ++n) {
      const auto r = check_ad2_expansion_exhaustive(a, n);
      CHECK(r.passed());
      CHECK(r.notes().empty());
      CHECK(r.tuples_checked() == a.dim() * tuple_count(a.dim(), n));
    }
  }
  const auto osp = fx::alg("osp12", {{"lambda", 3}});
  const auto& s = osp.space();
  const Element x = fx::vec(s, {{"F", 2}, {"G", -1}});
  CHECK(check_ad2_expansion(osp, x, fx::tup(s, {"G", "X", "F"}), 3).passed());
}

TEST_CASE("the adjoint expansion carries a note when Hom-Jacobi fails") {
  const auto l2 = fx::alg("L2", {{"a", 2}, {"b", 2}, {"c", 3}});
  const auto r = check_ad2_expansion_exhaustive(l2, 3);
  REQUIRE(r.notes().size() == 1);
  CHECK(r.notes().front().find("super-Hom-Jacobi") != std::string::npos);
}

TEST_CASE("adjoint expansion argument errors") {
  const auto g3 = fx::alg("g3_1_1", {{"a", 2}});
  const auto& s = g3.space();
  CHECK_THROWS_AS(check_ad2_expansion(g3, fx::vec(s, {{"e0", 1}, {"e1", 1}}), Tuple{0, 0, 0}, 3), InputError);
  CHECK_THROWS_AS(check_ad2_expansion(g3, fx::basis(s, "e0"), Tuple{0, 0}, 3), InputError);
  CHECK_THROWS_AS(check_ad2_expansion(g3, fx::basis(s, "e0"), Tuple{0, 0, 5}, 3), InputError);
  CHECK_THROWS_AS(check_ad2_expansion(g3, Element(5), Tuple{0, 0, 0}, 3), InputError);
}

TEST_CASE("preconditions of the iterated construction") {
  const auto g3 = fx::alg("g3_1_1", {{"a", 2}});
  CHECK_THROWS_AS(iterated_bracket(g3, 1), InputError);
  CHECK_THROWS_AS(iterated_bracket(iterated_bracket(g3, 3), 4), PreconditionFailed);
  const auto broken = g3.with_twists({GradedLinearMap::diagonal(g3.space(), {2, 1})});
  CHECK_THROWS_AS(iterated_bracket(broken, 3), PreconditionFailed);
  CHECK(iterated_bracket(g3, 2).bracket() == g3.bracket());
}

TEST_CASE("derivations transfer to iterated brackets") {
  const auto g5 = fx::doc("g5_1_1", {{"a", 2}});
  const auto g3 = fx::doc("g3_1_1", {{"a", 2}});
  for (std::size_t n = 3; n <= 5; ++n) {
    for (const auto* d : {&g5, &g3}) {
      const auto& op = d->operators.front();
      const auto v = iterated_transfer_derivation({op.map, op.power}, d->algebra, n);
      CHECK(v.passed());
      CHECK_FALSE(v.notes.empty());
    }
  }
  CHECK_THROWS_AS(
      iterated_transfer_derivation({GradedLinearMap::identity(g5.algebra.space()), 0}, g5.algebra, 3),
      PreconditionFailed);
}

TEST_CASE("quasi-derivation chains give generalized derivations of the iterated bracket") {
  const auto g5 = fx::alg("g5_1_1", {{"a", 2}});
  const auto& s = g5.space();
  const auto id = GradedLinearMap::identity(s);
  CHECK(iterated_generalized_tuple({id, Scalar(2) * id, Scalar(4) * id}, 0, g5, 3).passed());
  const auto d = GradedLinearMap::diagonal(s, {2, 1});
  CHECK(iterated_generalized_tuple({d, d, d, d}, 0, g5, 4).passed());
  CHECK_THROWS_AS(iterated_generalized_tuple({id, id, id}, 0, g5, 3), PreconditionFailed);
  CHECK_THROWS_AS(iterated_generalized_tuple({d, d}, 0, g5, 3), InputError);
}

TEST_CASE("the twist note is explicit about both readings") {
  const std::string note = kIteratedTwistNote;
  CHECK(note.find("alpha^(n-1)") != std::string::npos);
  CHECK(note.find("alpha^(n-2)") != std::string::npos);
}
