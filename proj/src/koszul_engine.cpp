#include "koszul_engine.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

namespace syzlab {

std::int64_t wedge_dim(std::int64_t D, int p) {
  if (p < 0 || p > D) return 0;
  return binomial_i64(D, p);
}

std::int64_t wedge_colex_rank(const std::vector<int>& indices) {
  std::int64_t rank = 0;
  for (std::size_t j = 0; j < indices.size(); ++j)
    rank += binomial_i64(indices[j], static_cast<std::int64_t>(j) + 1);
  return rank;
}

namespace {

// Advances a strictly increasing index tuple to its colex successor in
// [0, D). Returns false after the last combination.
bool next_colex(std::vector<int>& idx, int D) {
  const int p = static_cast<int>(idx.size());
  for (int j = 0; j < p; ++j) {
    int limit = (j + 1 < p) ? idx[static_cast<std::size_t>(j) + 1] : D;
    if (idx[static_cast<std::size_t>(j)] + 1 < limit) {
      ++idx[static_cast<std::size_t>(j)];
      for (int k = 0; k < j; ++k) idx[static_cast<std::size_t>(k)] = k;
      return true;
    }
  }
  return false;
}

std::size_t basis_index(const std::vector<Monomial>& basis, const Monomial& m) {
  auto it = std::lower_bound(basis.begin(), basis.end(), m);
  return static_cast<std::size_t>(it - basis.begin());
}

std::int64_t term_dim(const RingContext& ctx, std::int64_t D, int p, int q) {
  return wedge_dim(D, p) * reduced_dim(ctx, q * ctx.d + ctx.b);
}

}  // namespace

SparseMatrix build_differential(const RingContext& ctx, int p, int q) {
  const auto basis_d = reduced_basis(ctx, ctx.d);
  const int D = static_cast<int>(basis_d.size());
  const auto src_t = reduced_basis(ctx, q * ctx.d + ctx.b);
  const auto dst_t = reduced_basis(ctx, (q + 1) * ctx.d + ctx.b);

  SparseMatrix m;
  m.n_cols = wedge_dim(D, p) * static_cast<std::int64_t>(src_t.size());
  m.n_rows = wedge_dim(D, p - 1) * static_cast<std::int64_t>(dst_t.size());
  if (m.n_cols == 0 || m.n_rows == 0) return m;

  std::vector<int> wedge(static_cast<std::size_t>(p));
  for (int j = 0; j < p; ++j) wedge[static_cast<std::size_t>(j)] = j;
  std::int64_t wedge_rank = 0;
  std::vector<int> sub(static_cast<std::size_t>(p - 1));
  do {
    for (std::size_t ti = 0; ti < src_t.size(); ++ti) {
      const std::int64_t col = wedge_rank * static_cast<std::int64_t>(src_t.size()) +
                               static_cast<std::int64_t>(ti);
      for (int j = 0; j < p; ++j) {
        auto prod = mul_reduced(basis_d[static_cast<std::size_t>(wedge[static_cast<std::size_t>(j)])],
                                src_t[ti], ctx);
        if (!prod) continue;
        for (int k = 0, s = 0; k < p; ++k)
          if (k != j) sub[static_cast<std::size_t>(s++)] = wedge[static_cast<std::size_t>(k)];
        const std::int64_t row =
            wedge_colex_rank(sub) * static_cast<std::int64_t>(dst_t.size()) +
            static_cast<std::int64_t>(basis_index(dst_t, *prod));
        m.add(static_cast<std::int32_t>(row), static_cast<std::int32_t>(col),
              j % 2 == 0 ? 1 : -1);
      }
    }
    ++wedge_rank;
  } while (next_colex(wedge, D));
  return m;
}

KoszulStrand build_strand(const RingContext& ctx, int p, int q, const EngineOptions& opts) {
  const std::int64_t D = reduced_dim(ctx, ctx.d);
  KoszulStrand s;
  s.ctx = ctx;
  s.p = p;
  s.q = q;
  s.dim_left = term_dim(ctx, D, p + 1, q - 1);
  s.dim_middle = term_dim(ctx, D, p, q);
  s.dim_right = term_dim(ctx, D, p - 1, q + 1);
  const std::int64_t estimated = s.dim_middle * (p + 1);
  if (estimated > opts.budget)
    throw BudgetError("strand (p=" + std::to_string(p) + ",q=" + std::to_string(q) +
                      ") estimated nonzeros " + std::to_string(estimated) +
                      " exceed budget " + std::to_string(opts.budget));
  s.d_in = build_differential(ctx, p + 1, q - 1);
  s.d_out = build_differential(ctx, p, q);
  return s;
}

std::int64_t kpq_dim(const RingContext& ctx, int p, int q, const EngineOptions& opts) {
  if (p < 0) return 0;
  auto s = build_strand(ctx, p, q, opts);
  if (s.dim_middle == 0) return 0;
  std::int64_t k = s.dim_middle - rank(s.d_out, opts.field, opts.linalg) -
                   rank(s.d_in, opts.field, opts.linalg);
  if (k < 0)
    throw std::logic_error("negative cohomology dimension: strand is not a complex");
  return k;
}

BettiTable betti_table(const RingContext& ctx, const EngineOptions& opts) {
  const std::int64_t D = reduced_dim(ctx, ctx.d);
  const int pmax = static_cast<int>(D);
  const int qmax = ctx.n + 1;

  BettiTable t;
  t.n = ctx.n;
  t.b = ctx.b;
  t.d = ctx.d;
  t.field_tag = opts.field.tag();
  t.method_tag = "engine";

  // Differential ranks are shared between adjacent cells: the strand of
  // (p,q) uses delta_{p,q} and delta_{p+1,q-1}.
  std::map<std::pair<int, int>, std::int64_t> rank_of;
  std::vector<std::pair<int, int>> to_compute;
  auto cell_in_budget = [&](int p, int q) {
    return term_dim(ctx, D, p, q) * (p + 1) <= opts.budget &&
           term_dim(ctx, D, p + 1, q - 1) * (p + 2) <= opts.budget;
  };
  for (int q = 0; q <= qmax; ++q) {
    for (int p = 0; p <= pmax; ++p) {
      if (!cell_in_budget(p, q)) continue;
      for (auto [dp, dq] : {std::pair{p, q}, std::pair{p + 1, q - 1}}) {
        if (rank_of.count({dp, dq})) continue;
        if (term_dim(ctx, D, dp, dq) == 0 || term_dim(ctx, D, dp - 1, dq + 1) == 0)
          rank_of[{dp, dq}] = 0;
        else {
          rank_of[{dp, dq}] = -1;
          to_compute.emplace_back(dp, dq);
        }
      }
    }
  }

  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= to_compute.size()) return;
      auto [dp, dq] = to_compute[i];
      auto m = build_differential(ctx, dp, dq);
      std::int64_t r = rank(m, opts.field, opts.linalg);
      std::lock_guard<std::mutex> lock(mu);
      rank_of[{dp, dq}] = r;
    }
  };
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || to_compute.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (int q = 0; q <= qmax; ++q) {
    for (int p = 0; p <= pmax; ++p) {
      if (!cell_in_budget(p, q)) {
        t.complete = false;
        continue;
      }
      std::int64_t middle = term_dim(ctx, D, p, q);
      if (middle == 0) {
        t.set(p, q, 0);
        continue;
      }
      std::int64_t k = middle - rank_of[{p, q}] - rank_of[{p + 1, q - 1}];
      if (k < 0) throw std::logic_error("negative cohomology dimension in table");
      t.set(p, q, k);
    }
  }
  return t;
}

HilbertReport hilbert_check(const BettiTable& t) {
  HilbertReport rep;
  if (!t.complete) {
    rep.detail = "table incomplete; identity not checkable";
    return rep;
  }
  const RingContext ctx{t.n, t.b, t.d};
  const int N = t.max_p() + t.max_q();
  auto h0 = [&](int e) -> BigInt {
    if (e < 0) return 0;
    BigInt num = 1;
    for (int i = 1; i <= ctx.n; ++i) num *= e + i;
    for (int i = 1; i <= ctx.n; ++i) num /= i;
    return num;
  };
  std::vector<BigInt> lhs(static_cast<std::size_t>(N + 1), BigInt(0));
  for (const auto& [key, v] : t.entries) {
    auto [p, q] = key;
    if (p + q > N) continue;
    lhs[static_cast<std::size_t>(p + q)] += (p % 2 == 0 ? BigInt(v) : BigInt(-v));
  }
  // (1 - t)^{h0(d)} truncated.
  const BigInt vars = h0(ctx.d);
  std::vector<BigInt> pow1mt(static_cast<std::size_t>(N + 1), BigInt(0));
  BigInt coeff = 1;
  for (int j = 0; j <= N; ++j) {
    pow1mt[static_cast<std::size_t>(j)] = (j % 2 == 0) ? coeff : -coeff;
    coeff = coeff * (vars - j) / (j + 1);
  }
  std::vector<BigInt> rhs(static_cast<std::size_t>(N + 1), BigInt(0));
  for (int m = 0; m <= N; ++m) {
    BigInt hm = h0(ctx.b + m * ctx.d);
    if (hm == 0) continue;
    for (int j = 0; m + j <= N; ++j)
      rhs[static_cast<std::size_t>(m + j)] += hm * pow1mt[static_cast<std::size_t>(j)];
  }
  for (int i = 0; i <= N; ++i) {
    if (lhs[static_cast<std::size_t>(i)] != rhs[static_cast<std::size_t>(i)]) {
      std::ostringstream os;
      os << "coefficient mismatch at degree " << i << ": resolution side "
         << lhs[static_cast<std::size_t>(i)] << ", Hilbert side "
         << rhs[static_cast<std::size_t>(i)];
      rep.detail = os.str();
      return rep;
    }
  }
  rep.pass = true;
  rep.detail = "identity holds through degree " + std::to_string(N);
  return rep;
}

bool reindex_check(const RingContext& ctx, int p, int q, const EngineOptions& opts) {
  RingContext shifted{ctx.n, ctx.b - ctx.d, ctx.d};
  return kpq_dim(ctx, p, q, opts) == kpq_dim(shifted, p, q + 1, opts);
}

namespace {

// Dense rational row reduction, deliberately separate from the sparse
// elimination path.
std::int64_t dense_rank(std::vector<std::vector<BigRat>> a) {
  if (a.empty() || a[0].empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::int64_t rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      BigRat f = a[i][col] / a[row][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

struct BruteBases {
  std::vector<Monomial> wedge_factors;  // degree-d basis
  std::vector<Monomial> src;            // degree qd+b
  std::vector<Monomial> dst;            // degree (q+1)d+b
};

// Lex enumeration of index tuples; intentionally a different ordering
// scheme from the engine's colex layout.
void all_combinations(int D, int p, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == p) {
    out.push_back(cur);
    return;
  }
  int start = cur.empty() ? 0 : cur.back() + 1;
  for (int i = start; i < D; ++i) {
    cur.push_back(i);
    all_combinations(D, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<BigRat>> brute_differential(const RingContext& ctx, int p, int q,
                                                    bool reduced) {
  auto basis = [&](int e) {
    return reduced ? reduced_basis(ctx, e) : full_basis(ctx.n, e);
  };
  BruteBases b;
  b.wedge_factors = basis(ctx.d);
  b.src = basis(q * ctx.d + ctx.b);
  b.dst = basis((q + 1) * ctx.d + ctx.b);
  const int D = static_cast<int>(b.wedge_factors.size());

  std::vector<std::vector<int>> wedges;
  if (p >= 0 && p <= D) {
    std::vector<int> cur;
    all_combinations(D, p, cur, wedges);
  }
  const std::size_t cols = wedges.size() * b.src.size();
  std::vector<std::vector<int>> sub_wedges;
  {
    std::vector<int> cur;
    if (p - 1 >= 0 && p - 1 <= D) all_combinations(D, p - 1, cur, sub_wedges);
  }
  auto sub_index = [&](const std::vector<int>& w) {
    auto it = std::lower_bound(sub_wedges.begin(), sub_wedges.end(), w);
    return static_cast<std::size_t>(it - sub_wedges.begin());
  };
  const std::size_t rows = sub_wedges.size() * b.dst.size();
  std::vector<std::vector<BigRat>> m(rows, std::vector<BigRat>(cols, BigRat(0)));
  if (rows == 0 || cols == 0) return m;

  for (std::size_t wi = 0; wi < wedges.size(); ++wi) {
    for (std::size_t ti = 0; ti < b.src.size(); ++ti) {
      std::size_t col = wi * b.src.size() + ti;
      for (int j = 0; j < p; ++j) {
        const Monomial& factor =
            b.wedge_factors[static_cast<std::size_t>(wedges[wi][static_cast<std::size_t>(j)])];
        std::optional<Monomial> prod;
        if (reduced) {
          prod = mul_reduced(factor, b.src[ti], ctx);
        } else {
          std::vector<std::uint16_t> e = factor.exponents();
          for (std::size_t v = 0; v < e.size(); ++v)
            e[v] = static_cast<std::uint16_t>(e[v] + b.src[ti].exponent(static_cast<int>(v)));
          prod = Monomial(e);
        }
        if (!prod) continue;
        std::vector<int> sub;
        for (int k = 0; k < p; ++k)
          if (k != j) sub.push_back(wedges[wi][static_cast<std::size_t>(k)]);
        std::size_t row = sub_index(sub) * b.dst.size() + basis_index(b.dst, *prod);
        m[row][col] += (j % 2 == 0) ? 1 : -1;
      }
    }
  }
  return m;
}

}  // namespace

std::int64_t brute_kpq(const RingContext& ctx, int p, int q, bool reduced) {
  if (p < 0) return 0;
  auto basis = [&](int e) {
    return reduced ? reduced_dim(ctx, e)
                   : binomial_i64(std::max(0, e) + ctx.n, ctx.n) * (e >= 0 ? 1 : 0);
  };
  const std::int64_t D = basis(ctx.d);
  const std::int64_t middle = wedge_dim(D, p) * basis(q * ctx.d + ctx.b);
  if (middle == 0) return 0;
  if (middle > 5000) throw BudgetError("brute-force oracle limited to middle dimension 5000");
  auto d_out = brute_differential(ctx, p, q, reduced);
  auto d_in = brute_differential(ctx, p + 1, q - 1, reduced);
  std::int64_t k = middle - dense_rank(std::move(d_out)) - dense_rank(std::move(d_in));
  if (k < 0) throw std::logic_error("brute-force oracle produced negative dimension");
  return k;
}

MultiPrimeKpq kpq_multi_prime(const RingContext& ctx, int p, int q,
                              const std::vector<std::uint32_t>& primes,
                              const EngineOptions& opts) {
  auto s = build_strand(ctx, p, q, opts);
  MultiPrimeKpq out;
  out.primes = primes;
  if (s.dim_middle == 0) {
    out.values.assign(primes.size(), 0);
    return out;
  }
  auto r_out = rank_multi_prime(s.d_out, primes, opts.linalg);
  auto r_in = rank_multi_prime(s.d_in, primes, opts.linalg);
  for (std::size_t i = 0; i < primes.size(); ++i)
    out.values.push_back(s.dim_middle - r_out.ranks[i] - r_in.ranks[i]);
  out.best = s.dim_middle - r_out.max_rank - r_in.max_rank;
  out.agree = r_out.agree && r_in.agree;
  return out;
}

}  // namespace syzlab
