#include <array>

#include "doctest.h"

#include "certificates.hpp"
#include "predictors.hpp"

using namespace syzlab;

TEST_CASE("default target is reduced of the right degree") {
  auto t = default_target(2, 0, 3, 2);
  CHECK(t.to_string() == "x0^2*x1^2*x2^2");
  CHECK(t.degree() == 2 * 3 + 0);
  CHECK(t.reduced(3));
  CHECK_THROWS_AS(default_target(2, 1, 3, 3), std::invalid_argument);  // q > n
  CHECK_THROWS_AS(default_target(2, 2, 3, 1), std::invalid_argument);  // d < b+q+1
}

TEST_CASE("top-degree certificate for the cubic Veronese surface") {
  RingContext ctx{2, 0, 3};
  auto cert = build_certificate(default_target(2, 0, 3, 2), 0, ctx, 2);
  CHECK(cert.p() == 7);
  auto rep = verify_certificate(cert);
  CHECK(rep.is_cycle);
  CHECK(rep.is_combinatorially_nonbounding);
  CHECK(rep.valid());
  CHECK(rep.linalg_ran);
  CHECK(rep.linalg_nonbounding);
  CHECK(rep.linalg_field == "Q");  // small enough for exact rationals
}

TEST_CASE("certificate index matches the range lower endpoint") {
  for (auto [n, b, d, q] : {std::array<int, 4>{2, 0, 4, 2}, {2, 1, 4, 2}, {3, 0, 3, 2}}) {
    RingContext ctx{n, b, d};
    auto cert = build_certificate(default_target(n, b, d, q), 0, ctx, q);
    auto [lo, hi] = veronese_range(n, b, d, q);
    CHECK(cert.p() == lo);
    CertificateVerifyOptions fast;
    fast.run_linalg = false;
    CHECK(verify_certificate(cert, fast).valid());
  }
}

TEST_CASE("extra annihilators certify past the lower endpoint") {
  RingContext ctx{2, 0, 4};
  auto base = default_target(2, 0, 4, 2);
  auto [lo, hi] = veronese_range(2, 0, 4, 2);
  for (int extra = 1; lo + extra <= hi; ++extra) {
    auto cert = build_certificate(base, extra, ctx, 2);
    CHECK(cert.p() == lo + extra);
    CertificateVerifyOptions fast;
    fast.run_linalg = false;
    CHECK(verify_certificate(cert, fast).valid());
  }
  CHECK_THROWS_AS(build_certificate(base, static_cast<int>(hi - lo) + 1, ctx, 2),
                  std::invalid_argument);
}

TEST_CASE("tampered wedge is rejected") {
  RingContext ctx{2, 0, 3};
  auto cert = build_certificate(default_target(2, 0, 3, 2), 0, ctx, 2);
  cert.wedge.pop_back();
  cert.target = Monomial({0, 2, 2});  // degree drops: no longer qd+b
  CertificateVerifyOptions fast;
  fast.run_linalg = false;
  CHECK_FALSE(verify_certificate(cert, fast).valid());
}

TEST_CASE("certificate JSON round trips") {
  RingContext ctx{2, 0, 4};
  auto cert = build_certificate(default_target(2, 0, 4, 2), 1, ctx, 2);
  auto back = Certificate::from_json(cert.to_json());
  REQUIRE(back.has_value());
  CHECK(back->target == cert.target);
  CHECK(back->wedge == cert.wedge);
  CHECK(back->q == cert.q);
  CHECK(back->ctx.n == cert.ctx.n);
  CHECK_FALSE(Certificate::from_json("{}").has_value());
}

TEST_CASE("family lower bound counts wedge completions") {
  RingContext ctx{2, 0, 3};
  auto t = default_target(2, 0, 3, 2);
  CHECK(family_lower_bound(t, 7, ctx, 2) == 1);  // divisors exactly fill the wedge
  CHECK(family_lower_bound(t, 6, ctx, 2) == 0);  // below the divisor count
  CHECK(family_lower_bound(t, 8, ctx, 2) == 0);  // above the annihilator count
}
