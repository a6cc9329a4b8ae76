#include <array>
#include <map>

#include "doctest.h"
#include "koszul_engine.hpp"

using namespace syzlab;

namespace {

EngineOptions rational_opts() {
  EngineOptions o;
  o.field = FieldChoice::rationals();
  return o;
}

}  // namespace

TEST_CASE("wedge dimensions and colex ranks") {
  CHECK(wedge_dim(5, 2) == 10);
  CHECK(wedge_dim(5, 0) == 1);
  CHECK(wedge_dim(5, 6) == 0);
  CHECK(wedge_dim(5, -1) == 0);
  CHECK(wedge_colex_rank({0, 1, 2}) == 0);
  CHECK(wedge_colex_rank({0, 1, 3}) == 1);
  CHECK(wedge_colex_rank({1, 2, 3}) == 3);
}

TEST_CASE("composite of consecutive differentials vanishes") {
  RingContext ctx{2, 0, 3};
  auto d2 = build_differential(ctx, 2, 1);
  auto d1 = build_differential(ctx, 1, 2);
  // multiply sparsely and check every entry cancels
  std::map<std::pair<std::int32_t, std::int32_t>, std::int64_t> product;
  std::multimap<std::int32_t, Triplet> d1_by_col;
  for (const auto& t : d1.entries) d1_by_col.insert({t.col, t});
  for (const auto& a : d2.entries) {
    auto [lo, hi] = d1_by_col.equal_range(a.row);
    for (auto it = lo; it != hi; ++it)
      product[{it->second.row, a.col}] += it->second.value * a.value;
  }
  for (const auto& [key, v] : product) CHECK(v == 0);
}

TEST_CASE("degree-3 rational normal curve table over the rationals") {
  auto t = betti_table(RingContext{1, 1, 3}, rational_opts());
  CHECK(t.at(0, 0) == 2);
  CHECK(t.at(1, 0) == 3);
  CHECK(t.at(2, 1) == 1);
  std::int64_t total = 0;
  for (const auto& [key, v] : t.entries) total += v;
  CHECK(total == 6);  // nothing else is nonzero
  CHECK(t.complete);
}

TEST_CASE("engine agrees with the independent dense oracle") {
  for (auto [n, b, d, p, q] : {std::array<int, 5>{1, 0, 3, 1, 1},
                               {1, 0, 3, 2, 1},
                               {1, 1, 3, 1, 0},
                               {2, 0, 3, 1, 1},
                               {2, 1, 2, 2, 1}}) {
    RingContext ctx{n, b, d};
    CHECK(kpq_dim(ctx, p, q, rational_opts()) == brute_kpq(ctx, p, q));
  }
}

TEST_CASE("modular and rational values agree on small instances") {
  EngineOptions gf;
  gf.field = FieldChoice::gf(32003);
  for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {3, 1}, {1, 0}}) {
    RingContext ctx{1, 0, 4};
    CHECK(kpq_dim(ctx, p, q, gf) == kpq_dim(ctx, p, q, rational_opts()));
  }
}

TEST_CASE("Euler characteristic identity on engine output") {
  for (auto [n, b, d] : {std::array<int, 3>{1, 1, 3}, {1, 0, 4}, {2, 0, 3}}) {
    auto t = betti_table(RingContext{n, b, d}, rational_opts());
    auto rep = hilbert_check(t);
    CHECK_MESSAGE(rep.pass, rep.detail);
  }
}

TEST_CASE("reindexing shifts the twist by -d") {
  EngineOptions gf;
  CHECK(reindex_check(RingContext{1, 1, 3}, 1, 0, gf));
  CHECK(reindex_check(RingContext{1, 0, 3}, 2, 1, gf));
  CHECK(reindex_check(RingContext{2, 0, 3}, 7, 2, gf));
}

TEST_CASE("strand budget raises BudgetError") {
  EngineOptions tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(kpq_dim(RingContext{2, 0, 3}, 3, 1, tiny), BudgetError);
  // a full table under a tiny budget is partial, not an error
  auto t = betti_table(RingContext{2, 0, 3}, tiny);
  CHECK_FALSE(t.complete);
}

TEST_CASE("multi-prime cell values agree on a clean instance") {
  auto r = kpq_multi_prime(RingContext{1, 0, 3}, 1, 1, {101, 32003});
  CHECK(r.best == 3);
  CHECK(r.agree);
}
