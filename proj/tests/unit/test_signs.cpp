#include <doctest.h>

#include <numeric>

#include "fixtures.hpp"
#include "homnambu/errors.hpp"
#include "homnambu/signs.hpp"
#include "homnambu/tuples.hpp"

using namespace homnambu;

namespace {

std::vector<Parity> to_parities(const std::vector<int>& p) {
  std::vector<Parity> out;
  for (int v : p) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("adjacent swap sign against the inversion oracle") {
  for_each_tuple(2, 4, [](const Tuple& t) {
    const std::vector<int> p(t.begin(), t.end());
    const auto ps = to_parities(p);
    for (std::size_t i = 1; i < p.size(); ++i) {
      std::vector<std::size_t> perm(p.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::swap(perm[i - 1], perm[i]);
      CAPTURE(i);
      CHECK(koszul_adjacent_sign(ps, i) == fx::super_skew_sign(p, perm));
    }
  });
}

TEST_CASE("gamma is the Koszul sign of moving two arguments to the back") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for_each_tuple(2, n, [n](const Tuple& t) {
      const std::vector<int> p(t.begin(), t.end());
      const auto ps = to_parities(p);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
          std::vector<std::size_t> perm;
          for (std::size_t m = 0; m < n; ++m)
            if (m != i - 1 && m != j - 1) perm.push_back(m);
          perm.push_back(i - 1);
          perm.push_back(j - 1);
          CAPTURE(n);
          CAPTURE(i);
          CAPTURE(j);
          CHECK(gamma_sign(ps, i, j) == fx::koszul_sign(p, perm));
        }
    });
  }
}

TEST_CASE("gamma on a hand-worked case") {
  // Parities odd, odd, even, odd. Pair (1,2) is even in total, so it slides past the tail freely.
  const auto ps = to_parities({1, 1, 0, 1});
  CHECK(gamma_sign(ps, 1, 2) == 1);
  CHECK(gamma_sign(ps, 1, 4) == -1);
  CHECK(gamma_sign(ps, 2, 3) == -1);
}

TEST_CASE("prefix degree") {
  const auto ps = to_parities({1, 0, 1, 1});
  CHECK(prefix_degree(ps, 0) == kEven);
  CHECK(prefix_degree(ps, 1) == kOdd);
  CHECK(prefix_degree(ps, 3) == kEven);
  CHECK(prefix_degree(ps, 4) == kOdd);
  CHECK_THROWS_AS(prefix_degree(ps, 5), InputError);
}

TEST_CASE("sign helpers reject bad positions") {
  const auto ps = to_parities({1, 0, 1});
  CHECK_THROWS_AS(koszul_adjacent_sign(ps, 0), InputError);
  CHECK_THROWS_AS(koszul_adjacent_sign(ps, 3), InputError);
  CHECK_THROWS_AS(gamma_sign(ps, 2, 2), InputError);
  CHECK_THROWS_AS(gamma_sign(ps, 0, 1), InputError);
  CHECK_THROWS_AS(gamma_sign(ps, 2, 4), InputError);
}
