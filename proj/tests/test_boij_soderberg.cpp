#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"

#include "boij_soderberg.hpp"

using namespace syzlab;

TEST_CASE("smallest pure table") {
  auto t = pure_table(1, 2);
  CHECK(t.betti == std::vector<BigRat>{1, 3, 2});
  CHECK(t.degree(0) == 1);
  CHECK(t.degree(1) == 3);
  CHECK_THROWS_AS(pure_table(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(pure_table(3, 2), std::invalid_argument);
}

TEST_CASE("pure tables have positive strictly defined Betti numbers") {
  for (int r = 1; r <= 8; ++r)
    for (int i = 1; i <= r; ++i) {
      auto t = pure_table(i, r);
      REQUIRE(t.betti.size() == static_cast<std::size_t>(r + 1));
      CHECK(t.betti[0] == 1);
      for (const auto& v : t.betti) CHECK(v > 0);
    }
}

TEST_CASE("synthesized tables satisfy the staircase shape") {
  std::vector<BigRat> x(6, BigRat(1, 3));
  auto t = synthesize(x, 6);
  CHECK(t.staircase());
  CHECK(t.r == 6);
}

TEST_CASE("decompose inverts synthesize exactly") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<BigRat> x;
    for (int i = 0; i < 9; ++i)
      x.emplace_back(static_cast<std::int64_t>(gen() % 20),
                     static_cast<std::int64_t>(gen() % 7 + 1));
    CHECK(decompose(synthesize(x, 9)).coefficients == x);
  }
}

TEST_CASE("tables outside the cone are rejected") {
  auto t = synthesize(std::vector<BigRat>(4, BigRat(1)), 4);
  t.row1[1] += 1;  // perturb off the cone
  CHECK_THROWS_WITH_AS(decompose(t), doctest::Contains("not in the pure cone"),
                       std::invalid_argument);
}

TEST_CASE("two-row CSV round trips") {
  auto t = synthesize({BigRat(1, 2), BigRat(0), BigRat(7, 3)}, 3);
  auto back = TwoRowTable::from_csv(t.to_csv());
  REQUIRE(back.has_value());
  CHECK(back->row1 == t.row1);
  CHECK(back->row2 == t.row2);
  CHECK_FALSE(TwoRowTable::from_csv("garbage").has_value());
}

TEST_CASE("profile sampling is deterministic per seed") {
  auto a = sample_profiles(60, 40, 99, SampleDistribution::Exponential1, {0.0, 1.0});
  auto b = sample_profiles(60, 40, 99, SampleDistribution::Exponential1, {0.0, 1.0});
  CHECK(a.to_csv() == b.to_csv());
  auto c = sample_profiles(60, 40, 100, SampleDistribution::Exponential1, {0.0, 1.0});
  CHECK(a.to_csv() != c.to_csv());
}

TEST_CASE("profile medians approach the Gaussian reference at large r") {
  for (auto dist : {SampleDistribution::Uniform01, SampleDistribution::Beta22}) {
    auto st = sample_profiles(400, 200, 20260823ull, dist, {1.0});
    CHECK(st.points[0].gauss_ref == doctest::Approx(std::exp(-0.5)));
    CHECK(st.points[0].abs_err_median < 0.1);
    CHECK(st.points[0].p10 <= st.points[0].median_rho);
    CHECK(st.points[0].median_rho <= st.points[0].p90);
  }
}
