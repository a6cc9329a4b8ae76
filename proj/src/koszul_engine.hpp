#pragma once

// Builds the three-term Artinian-reduced Koszul strand computing one
// K_{p,q}(n,b;d) and evaluates single cells and full Betti tables.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "betti_table.hpp"
#include "exact_linalg.hpp"
#include "ring_core.hpp"

namespace syzlab {

struct EngineOptions {
  FieldChoice field = FieldChoice::gf(32003);
  // Refuse strands whose estimated nonzero count middle_dim * (p+1)
  // exceeds this cap.
  std::int64_t budget = 50'000'000;
  LinalgOptions linalg;
  int jobs = 1;  // worker threads for betti_table
};

// Λ^{p+1} Sbar_d (x) Sbar_{(q-1)d+b}  --d_in-->  Λ^p Sbar_d (x) Sbar_{qd+b}
//   --d_out-->  Λ^{p-1} Sbar_d (x) Sbar_{(q+1)d+b}
struct KoszulStrand {
  RingContext ctx;
  int p = 0;
  int q = 0;
  std::int64_t dim_left = 0;
  std::int64_t dim_middle = 0;
  std::int64_t dim_right = 0;
  SparseMatrix d_in;   // left -> middle
  SparseMatrix d_out;  // middle -> right
};

// Dimension of Λ^p of a D-dimensional space; zero outside [0, D].
std::int64_t wedge_dim(std::int64_t D, int p);

// Colex rank of a strictly increasing index tuple; the basis order for
// wedge factors throughout the engine.
std::int64_t wedge_colex_rank(const std::vector<int>& indices);

// The differential Λ^p (x) Sbar_{qd+b} -> Λ^{p-1} (x) Sbar_{(q+1)d+b},
// entries +-1 by the alternating-sum rule, terms dropped when the reduced
// product vanishes. Tensor index layout: wedge_rank * |target basis| + t.
SparseMatrix build_differential(const RingContext& ctx, int p, int q);

KoszulStrand build_strand(const RingContext& ctx, int p, int q,
                          const EngineOptions& opts = {});

// dim(middle) - rank(d_out) - rank(d_in).
std::int64_t kpq_dim(const RingContext& ctx, int p, int q,
                     const EngineOptions& opts = {});

// All cells p in [0, dim Sbar_d], q in [0, n+1]. Shares differential ranks
// between adjacent cells. Cells whose strand exceeds the budget are left
// uncomputed and the table is marked incomplete.
BettiTable betti_table(const RingContext& ctx, const EngineOptions& opts = {});

struct HilbertReport {
  bool pass = false;
  std::string detail;
};

// Euler-characteristic identity for the resolution:
//   sum_{p,q} (-1)^p k_{p,q} t^{p+q} = (1-t)^{h0(d)} * sum_m h0(b+md) t^m
// as polynomials truncated past the table support.
HilbertReport hilbert_check(const BettiTable& t);

// K_{p,q}(n,b;d) = K_{p,q+1}(n,b-d;d).
bool reindex_check(const RingContext& ctx, int p, int q,
                   const EngineOptions& opts = {});

// Independent dense-rational oracle; shares no elimination code with
// kpq_dim. reduced=false computes over the untruncated ring instead (only
// viable for tiny instances).
std::int64_t brute_kpq(const RingContext& ctx, int p, int q, bool reduced = true);

// Per-prime cell values; ranks mod p only drop, so the smallest k_{p,q}
// across primes is the best rational estimate.
struct MultiPrimeKpq {
  std::vector<std::uint32_t> primes;
  std::vector<std::int64_t> values;
  std::int64_t best = 0;
  bool agree = true;
};
MultiPrimeKpq kpq_multi_prime(const RingContext& ctx, int p, int q,
                              const std::vector<std::uint32_t>& primes,
                              const EngineOptions& opts = {});

}  // namespace syzlab
