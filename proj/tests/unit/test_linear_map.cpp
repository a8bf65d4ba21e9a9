#include <doctest.h>

#include "fixtures.hpp"
#include "homnambu/errors.hpp"

using namespace homnambu;

namespace {

const SuperSpace S = fx::space({{"e0", 0}, {"e1", 1}, {"e2", 1}});

// Odd map e0 -> e1, e1 -> e0, e2 -> 0.
GradedLinearMap odd_swap() {
  return GradedLinearMap(S, kOdd, std::vector<Element>{fx::basis(S, "e1"), fx::basis(S, "e0"), Element(3)});
}

}  // namespace

TEST_CASE("columns are images of basis vectors") {
  const auto f = odd_swap();
  CHECK(f.apply(fx::basis(S, "e0")) == fx::basis(S, "e1"));
  CHECK(f.column(1) == fx::basis(S, "e0"));
  CHECK(f.entry(1, 0) == Scalar(1));
  CHECK(f.sparse_column(2).empty());
  CHECK(f.format() == "e0 -> e1, e1 -> e0, e2 -> 0");
}

TEST_CASE("declared parity is enforced on every column") {
  CHECK_THROWS_AS(GradedLinearMap(S, kEven, std::vector<Element>{fx::basis(S, "e1"), Element(3), Element(3)}),
                  InputError);
  CHECK_THROWS_AS(GradedLinearMap(S, kOdd, std::vector<Element>{fx::basis(S, "e0"), Element(3), Element(3)}),
                  InputError);
  CHECK_THROWS_AS(GradedLinearMap(S, kEven, Matrix(2, 2)), InputError);
  CHECK_THROWS_AS(GradedLinearMap(S, kEven, std::vector<Element>{Element(3)}), InputError);
  CHECK_NOTHROW(GradedLinearMap::zero(S, kOdd));
}

TEST_CASE("composition, powers and inverse") {
  const auto d = GradedLinearMap::diagonal(S, {2, Scalar(1, 3), -1});
  CHECK(map_power(d, 0).is_identity());
  CHECK(map_power(d, 3) == GradedLinearMap::diagonal(S, {8, Scalar(1, 27), -1}));
  CHECK(map_compose(d, map_inverse(d)).is_identity());
  const auto sq = map_compose(odd_swap(), odd_swap());
  CHECK(sq.parity() == kEven);
  CHECK(sq == GradedLinearMap::diagonal(S, {1, 1, 0}));
  CHECK_THROWS_AS(map_inverse(odd_swap()), SingularMap);
}

TEST_CASE("linear combinations") {
  const auto id = GradedLinearMap::identity(S);
  const auto d = GradedLinearMap::diagonal(S, {2, 3, 4});
  CHECK((d - id) == GradedLinearMap::diagonal(S, {1, 2, 3}));
  CHECK((Scalar(2) * id + d) == GradedLinearMap::diagonal(S, {4, 5, 6}));
  CHECK((id - id).is_zero());
  CHECK_THROWS_AS(id + odd_swap(), InputError);
}

TEST_CASE("supercommutator of maps") {
  const auto f = odd_swap();
  // Two odd maps anticommute in the bracket: [f, f] = 2 f∘f.
  CHECK(supercommutator_maps(f, f) == Scalar(2) * map_compose(f, f));
  const auto d = GradedLinearMap::diagonal(S, {1, 2, 3});
  CHECK(supercommutator_maps(d, d).is_zero());
  CHECK(supercommutator_maps(d, f) == map_compose(d, f) - map_compose(f, d));
}

TEST_CASE("maps on different spaces do not mix") {
  const auto other = fx::space({{"a", 0}, {"b", 1}, {"c", 1}});
  CHECK_THROWS_AS(map_compose(GradedLinearMap::identity(S), GradedLinearMap::identity(other)), InputError);
  CHECK_THROWS_AS(GradedLinearMap::identity(S).apply(Element(2)), InputError);
  CHECK_THROWS_AS(GradedLinearMap::diagonal(S, {1, 2}), InputError);
}
