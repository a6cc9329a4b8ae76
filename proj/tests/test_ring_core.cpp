#include "doctest.h"
#include "ring_core.hpp"

using namespace syzlab;

TEST_CASE("reduced dimensions match enumeration and are symmetric") {
  for (int n = 1; n <= 3; ++n)
    for (int d = 2; d <= 4; ++d) {
      RingContext ctx{n, 0, d};
      int top = ctx.top_degree();
      for (int e = -1; e <= top + 1; ++e) {
        CHECK(reduced_dim(ctx, e) ==
              static_cast<std::int64_t>(reduced_basis(ctx, e).size()));
        if (e >= 0 && e <= top) CHECK(reduced_dim(ctx, e) == reduced_dim(ctx, top - e));
      }
    }
}

TEST_CASE("known dimensions for n=2, d=3") {
  RingContext ctx{2, 0, 3};
  CHECK(reduced_dim(ctx, 0) == 1);
  CHECK(reduced_dim(ctx, 3) == 7);   // 10 cubics minus the three cubes
  CHECK(reduced_dim(ctx, 6) == 1);   // top degree
  CHECK(reduced_dim(ctx, 7) == 0);
}

TEST_CASE("reduced multiplication truncates at exponent d") {
  RingContext ctx{1, 0, 3};
  Monomial a({2, 1});
  Monomial b({1, 1});
  CHECK_FALSE(mul_reduced(a, b, ctx).has_value());  // x0^3 appears
  auto ok = mul_reduced(Monomial({1, 1}), Monomial({1, 1}), ctx);
  REQUIRE(ok.has_value());
  CHECK(ok->exponents() == std::vector<std::uint16_t>{2, 2});
}

TEST_CASE("divisors and annihilators of the canonical target") {
  RingContext ctx{2, 0, 3};
  Monomial t({2, 2, 2});  // top-degree monomial, q = 2 default target
  auto div = divisors_reduced(t, 3, ctx);
  auto ann = annihilators_reduced(t, 3, ctx);
  CHECK(div.size() == 7);
  CHECK(ann.size() == 7);
  // every degree-3 divisor annihilates the top monomial
  for (const auto& m : div) CHECK_FALSE(mul_reduced(m, t, ctx).has_value());
}

TEST_CASE("monomial text form round trips") {
  Monomial m({0, 2, 1, 0});
  CHECK(m.to_string() == "x1^2*x2");
  auto back = Monomial::parse(m.to_string(), 4);
  REQUIRE(back.has_value());
  CHECK(*back == m);
  CHECK(Monomial({0, 0}).to_string() == "1");
  CHECK(Monomial::parse("1", 2) == Monomial({0, 0}));
  CHECK_FALSE(Monomial::parse("x5", 2).has_value());
  CHECK_FALSE(Monomial::parse("garbage", 2).has_value());
}

TEST_CASE("full basis sizes are binomials") {
  CHECK(static_cast<std::int64_t>(full_basis(2, 3).size()) == binomial_i64(5, 2));
  CHECK(binomial_i64(6, 3) == 20);
  CHECK(binomial_i64(3, 5) == 0);
}
