#include <cmath>

#include "doctest.h"

#include "koszul_engine.hpp"
#include "predictors.hpp"

using namespace syzlab;

TEST_CASE("guaranteed non-vanishing intervals") {
  auto [lo1, hi1] = veronese_range(2, 0, 3, 2);
  CHECK(lo1 == 7);
  CHECK(hi1 == 7);
  auto [lo2, hi2] = veronese_range(2, 0, 4, 2);
  CHECK(lo2 == 10);
  CHECK(hi2 == 12);
  CHECK_THROWS_AS(veronese_range(2, 3, 3, 2), std::invalid_argument);
}

TEST_CASE("exact curve formula matches small engine values") {
  EngineOptions rational;
  rational.field = FieldChoice::rationals();
  CHECK(curve_kp1(0, 3, 1) == 3);
  CHECK(curve_kp1(0, 3, 2) == 2);
  for (int d = 3; d <= 5; ++d)
    for (int p = 1; p <= d; ++p)
      CHECK(curve_kp1(0, d, p) == kpq_dim(RingContext{1, 0, d}, p, 1, rational));
  CHECK_THROWS_AS(curve_kp1(2, 4, 1), std::invalid_argument);  // d < 2g+1
}

TEST_CASE("normalized curve values approach the Gaussian") {
  CHECK(curve_gaussian_normalized(0, 300, 0.0) ==
        doctest::Approx(1.0).epsilon(0.01));
  CHECK(curve_gaussian_normalized(0, 2000, 1.0) ==
        doctest::Approx(std::exp(-0.5)).epsilon(0.05));
}

TEST_CASE("N_p thresholds by family") {
  CHECK(np_thresholds(NpFamily::Curve, {.g = 3, .d = 9}, 2).verdict == NpVerdict::Holds);
  CHECK(np_thresholds(NpFamily::Curve, {.g = 3, .d = 8}, 2).verdict == NpVerdict::Unknown);
  CHECK(np_thresholds(NpFamily::Veronese, {.n = 2, .d = 3}, 3).verdict == NpVerdict::Holds);
  CHECK(np_thresholds(NpFamily::Veronese, {.n = 2, .d = 3}, 7).verdict == NpVerdict::Fails);
  CHECK(np_thresholds(NpFamily::Veronese, {.n = 2, .d = 3}, 5).verdict == NpVerdict::Unknown);
  CHECK(np_thresholds(NpFamily::Adjoint, {.n = 2, .d = 5}, 2).verdict == NpVerdict::Holds);
  CHECK(np_thresholds(NpFamily::Abelian, {.n = 2, .d = 5}, 2).verdict == NpVerdict::Holds);
}

TEST_CASE("easy support rows") {
  auto s = easy_support(1, 1, -1, 3);
  CHECK(s.at(0, 0).verdict == Verdict::NONZERO);
  CHECK(s.at(1, 0).verdict == Verdict::NONZERO);
  CHECK(s.at(2, 0).verdict == Verdict::ZERO);
  // top weight: r(K - B) empty makes the whole row vanish
  CHECK(s.at(0, 2).verdict == Verdict::ZERO);
  CHECK(s.at(2, 2).verdict == Verdict::ZERO);
}

TEST_CASE("curve support with gonality") {
  auto s = curve_support(4, 3, 14);  // d >= 4g-3: certified
  std::int64_t r_d = 14 - 4;        // nonspecial: d - g
  CHECK(s.at(1, 1).verdict == Verdict::NONZERO);
  CHECK(s.at(static_cast<int>(r_d) - 3, 1).verdict == Verdict::NONZERO);
  CHECK(s.at(static_cast<int>(r_d) - 2, 1).verdict == Verdict::ZERO);
  CHECK_THROWS_AS(curve_support(4, 9, 14), std::invalid_argument);  // gonality too big
}

TEST_CASE("duality pairing") {
  auto [p2, b2] = curve_duality_pair(3, 0, 9, 2);
  CHECK(b2 == 2 * 3 - 2);
  CHECK(p2 == (9 - 3) - 1 - 2);  // r_d - 1 - p with r_d = d - g
}

TEST_CASE("veronese prediction marks conjectural zeroes") {
  auto s = predict_veronese(2, 0, 6);  // d >= b+n+2 proxy holds
  auto [lo, hi] = veronese_range(2, 0, 6, 1);
  CHECK(s.at(static_cast<int>(lo), 1).verdict == Verdict::NONZERO);
  CHECK_FALSE(s.at(static_cast<int>(lo), 1).conjectural);
  CHECK(s.at(static_cast<int>(lo) - 1, 1).verdict == Verdict::ZERO);
  CHECK(s.at(static_cast<int>(lo) - 1, 1).conjectural);
  CHECK_FALSE(s.render().empty());
}

TEST_CASE("counterexample watch fires only outside the guaranteed range") {
  BettiTable t;
  t.n = 2;
  t.b = 0;
  t.d = 3;
  t.set(7, 2, 1);  // inside the range: quiet
  CHECK(counterexample_watch(t).empty());
  t.set(3, 2, 1);  // strictly outside: fires
  auto hits = counterexample_watch(t);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].p == 3);
  CHECK(hits[0].q == 2);
}

TEST_CASE("engine tables are nonzero across the guaranteed range") {
  EngineOptions gf;
  gf.jobs = 4;
  // largest instances that eliminate comfortably; (2,b,5) middle terms
  // reach ~9e5 dimensions and are excluded by scale
  for (auto [n, b, d_max] : {std::array<int, 3>{1, 0, 6}, {1, 1, 6}, {2, 0, 4}, {2, 1, 4}}) {
    for (int d = 3; d <= d_max; ++d) {
      auto t = betti_table(RingContext{n, b, d}, gf);
      REQUIRE(t.complete);
      CHECK(counterexample_watch(t).empty());
      for (int q = 1; q <= n; ++q) {
        if (d < b + q + 1) continue;
        auto [lo, hi] = veronese_range(n, b, d, q);
        for (std::int64_t p = lo; p <= hi; ++p)
          CHECK_MESSAGE(t.at(static_cast<int>(p), q) > 0,
                        "(n,b,d,p,q)=(" << n << "," << b << "," << d << "," << p
                                        << "," << q << ")");
      }
      if (d >= b + n + 2) {
        // easy rows: weight 0 survives through r(O(b)), top weight is empty
        std::int64_t r_B = binomial_i64(n + b, n) - 1;
        for (int p = 0; p <= t.max_p(); ++p) {
          CHECK((t.at(p, 0) > 0) == (p <= r_B));
          CHECK(t.at(p, n + 1) == 0);
        }
      }
    }
  }
}

TEST_CASE("curve formula is integral across its domain") {
  for (int g = 0; g <= 10; ++g)
    for (int d = 2 * g + 1; d <= 200; d += 7)
      for (int p = 1; p <= d - 2 * g; p += 3)
        CHECK_NOTHROW(curve_kp1(g, d, p));  // throws logic_error if non-integral
}

TEST_CASE("asymptotic window") {
  auto w = asymptotic_window(2, 1, 100, 5, 1.0, 1.0);
  REQUIRE(w.has_value());
  CHECK(w->first == 1);          // C1 * d^{q-1} with q = 1
  CHECK(w->second == 100 - 5);   // r_d - C2 * d^{n-1}
  CHECK_FALSE(asymptotic_window(2, 1, 4, 5, 1.0, 1.0).has_value());
}
