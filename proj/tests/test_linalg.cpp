#include "doctest.h"
#include "exact_linalg.hpp"

using namespace syzlab;

namespace {

SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows) {
  SparseMatrix m;
  m.n_rows = static_cast<std::int64_t>(rows.size());
  m.n_cols = rows.empty() ? 0 : static_cast<std::int64_t>(rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c] != 0)
        m.add(static_cast<std::int32_t>(r), static_cast<std::int32_t>(c), rows[r][c]);
  return m;
}

}  // namespace

TEST_CASE("rank agrees over Q and GF(p) on a generic matrix") {
  auto m = from_dense({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});  // rank 2
  CHECK(rank(m, FieldChoice::rationals()) == 2);
  CHECK(rank(m, FieldChoice::gf(32003)) == 2);
}

TEST_CASE("rank can genuinely drop modulo a bad prime") {
  auto m = from_dense({{1, 0}, {0, 5}});
  CHECK(rank(m, FieldChoice::rationals()) == 2);
  CHECK(rank(m, FieldChoice::gf(5)) == 1);
  auto mp = rank_multi_prime(m, {3, 5, 7});
  CHECK(mp.max_rank == 2);
  CHECK_FALSE(mp.agree);
}

TEST_CASE("in_image produces a checkable rational witness") {
  auto m = from_dense({{1, 1, 0}, {0, 2, 0}, {0, 0, 0}});
  auto r = in_image(m, {3, 4, 0}, FieldChoice::rationals());
  REQUIRE(r.in_image);
  REQUIRE(r.witness.size() == 3);
  // recombine the columns and compare
  CHECK(r.witness[0] * 1 + r.witness[1] * 1 == 3);
  CHECK(r.witness[1] * 2 == 4);
  CHECK_FALSE(in_image(m, {0, 0, 1}, FieldChoice::rationals()).in_image);
}

TEST_CASE("zero vector is always in the image") {
  auto m = from_dense({{1}, {1}});
  CHECK(in_image(m, {0, 0}, FieldChoice::gf(32003)).in_image);
}

TEST_CASE("rational entry budget aborts with BudgetError") {
  // dense 30x30 with distinct entries, budget far too small
  std::vector<std::vector<std::int64_t>> rows(30, std::vector<std::int64_t>(30));
  std::int64_t v = 1;
  for (auto& r : rows)
    for (auto& x : r) x = (v = (v * 17 + 3) % 1000 + 1);
  LinalgOptions tight;
  tight.rational_entry_budget = 10;
  CHECK_THROWS_AS(rank(from_dense(rows), FieldChoice::rationals(), tight), BudgetError);
  // modular elimination ignores the rational budget
  CHECK_NOTHROW(rank(from_dense(rows), FieldChoice::gf(32003), tight));
}

TEST_CASE("triplet text format round trips") {
  auto m = from_dense({{0, -1}, {2, 0}});
  auto back = SparseMatrix::parse(m.dump());
  REQUIRE(back.has_value());
  CHECK(back->n_rows == 2);
  CHECK(back->n_cols == 2);
  CHECK(back->dump() == m.dump());
  CHECK_FALSE(SparseMatrix::parse("not a matrix").has_value());
}
