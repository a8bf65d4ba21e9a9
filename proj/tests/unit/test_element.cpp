#include <doctest.h>

#include "fixtures.hpp"
#include "homnambu/errors.hpp"

using namespace homnambu;

TEST_CASE("element arithmetic") {
  const auto s = fx::space({{"e0", 0}, {"e1", 1}, {"e2", 1}});
  const Element x = fx::vec(s, {{"e0", 3}, {"e2", Scalar(-1, 2)}});
  const Element y = fx::vec(s, {{"e0", 1}, {"e1", 1}});
  CHECK((x + y) == fx::vec(s, {{"e0", 4}, {"e1", 1}, {"e2", Scalar(-1, 2)}}));
  CHECK((x - x).is_zero());
  CHECK((Scalar(2) * x) == fx::vec(s, {{"e0", 6}, {"e2", -1}}));
  CHECK(-x == fx::vec(s, {{"e0", -3}, {"e2", Scalar(1, 2)}}));
  Element z = x;
  z.add_scaled(y, Scalar(-3));
  CHECK(z == fx::vec(s, {{"e1", -3}, {"e2", Scalar(-1, 2)}}));
  z.clear();
  CHECK(z.is_zero());
  CHECK(x.support() == std::vector<std::size_t>{0, 2});
}

TEST_CASE("parity of elements") {
  const auto s = fx::space({{"e0", 0}, {"e1", 1}, {"e2", 1}});
  CHECK(Element(3).parity(s) == kEven);
  CHECK(fx::vec(s, {{"e1", 1}, {"e2", 5}}).parity(s) == kOdd);
  CHECK(fx::vec(s, {{"e0", 1}}).parity(s) == kEven);
  CHECK_FALSE(fx::vec(s, {{"e0", 1}, {"e1", 1}}).parity(s).has_value());
}

TEST_CASE("formatting") {
  const auto s = fx::space({{"e0", 0}, {"e1", 1}, {"e2", 1}});
  CHECK(Element(3).format(s) == "0");
  CHECK(fx::vec(s, {{"e0", 3}, {"e2", Scalar(-1, 2)}}).format(s) == "3*e0 - 1/2*e2");
  CHECK(fx::vec(s, {{"e1", -1}}).format(s) == "-e1");
  CHECK(fx::vec(s, {{"e0", 1}, {"e1", 1}}).format(s) == "e0 + e1");
}

TEST_CASE("sparse view keeps only nonzero coordinates") {
  const auto s = fx::space({{"e0", 0}, {"e1", 1}, {"e2", 1}});
  const auto v = sparse(fx::vec(s, {{"e2", 4}}));
  REQUIRE(v.size() == 1);
  CHECK(v[0].index == 2);
  CHECK(v[0].coeff == Scalar(4));
}

TEST_CASE("dimension mismatches are input errors") {
  Element a(2);
  CHECK_THROWS_AS(a += Element(3), InputError);
  CHECK_THROWS_AS(a -= Element(3), InputError);
  CHECK_THROWS_AS(a.add_scaled(Element(1), Scalar(1)), InputError);
  CHECK_THROWS_AS(Element::basis(2, 2), InputError);
}
