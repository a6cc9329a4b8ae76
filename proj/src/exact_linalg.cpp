#include "exact_linalg.hpp"

#include <algorithm>
#include <sstream>

namespace syzlab {

std::string SparseMatrix::dump() const {
  std::ostringstream os;
  os << n_rows << ' ' << n_cols << ' ' << entries.size() << '\n';
  for (const auto& t : entries) os << t.row << ' ' << t.col << ' ' << t.value << '\n';
  return os.str();
}

std::optional<SparseMatrix> SparseMatrix::parse(const std::string& text) {
  std::istringstream is(text);
  SparseMatrix m;
  std::size_t nnz = 0;
  if (!(is >> m.n_rows >> m.n_cols >> nnz)) return std::nullopt;
  m.entries.reserve(nnz);
  for (std::size_t i = 0; i < nnz; ++i) {
    Triplet t;
    if (!(is >> t.row >> t.col >> t.value)) return std::nullopt;
    if (t.row < 0 || t.row >= m.n_rows || t.col < 0 || t.col >= m.n_cols || t.value == 0)
      return std::nullopt;
    m.entries.push_back(t);
  }
  return m;
}

namespace {

// Field operations over GF(p), p an odd prime < 2^31.
struct GfpOps {
  using Elem = std::uint64_t;
  std::uint64_t p;

  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return static_cast<Elem>(r);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const { return a * b % p; }
  Elem sub_mul(Elem a, Elem c, Elem b) const {  // a - c*b
    Elem t = mul(c, b);
    return a >= t ? a - t : a + p - t;
  }
  Elem inv(Elem a) const {  // extended Euclid
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
      std::int64_t q = r / newr;
      std::int64_t tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<Elem>(t);
  }
  bool is_zero(Elem a) const { return a == 0; }
};

struct RatOps {
  using Elem = BigRat;

  Elem from_int(std::int64_t v) const { return BigRat(v); }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem sub_mul(const Elem& a, const Elem& c, const Elem& b) const { return a - c * b; }
  Elem inv(const Elem& a) const { return 1 / a; }
  bool is_zero(const Elem& a) const { return a == 0; }
};

template <typename Ops>
struct SparseVec {
  // Sorted by index; values nonzero.
  std::vector<std::pair<std::int32_t, typename Ops::Elem>> terms;

  bool empty() const { return terms.empty(); }
  std::int32_t lead() const { return terms.front().first; }
};

// Incremental echelon form: vectors are streamed in a fixed order and
// reduced against the pivots accumulated so far. Pivot choice is forced
// (leading index of the incoming vector), so the result is deterministic
// and independent of any parallel schedule upstream.
template <typename Ops>
class Echelon {
 public:
  Echelon(const Ops& ops, std::int64_t dim, std::size_t entry_budget)
      : ops_(ops), pivot_at_(static_cast<std::size_t>(dim), -1), budget_(entry_budget) {}

  // Reduces vec in place against the current pivots.
  void reduce(SparseVec<Ops>& vec, SparseVec<Ops>* comb = nullptr) const {
    while (!vec.empty()) {
      std::int32_t l = vec.lead();
      std::int32_t pi = pivot_at_[static_cast<std::size_t>(l)];
      if (pi < 0) return;
      auto c = vec.terms.front().second;  // pivot lead is 1
      axpy_neg(vec, c, pivots_[static_cast<std::size_t>(pi)]);
      if (comb) axpy_neg(*comb, c, pivot_combs_[static_cast<std::size_t>(pi)]);
    }
  }

  // Returns true (and rank grows) when vec was nonzero after reduction.
  bool insert(SparseVec<Ops> vec, SparseVec<Ops> comb = {}) {
    const bool track = !comb.terms.empty();
    reduce(vec, track ? &comb : nullptr);
    if (vec.empty()) return false;
    auto lead_inv = ops_.inv(vec.terms.front().second);
    for (auto& [i, val] : vec.terms) val = ops_.mul(val, lead_inv);
    if (track)
      for (auto& [i, val] : comb.terms) val = ops_.mul(val, lead_inv);
    entry_count_ += vec.terms.size() + comb.terms.size();
    if (entry_count_ > budget_)
      throw BudgetError("elimination exceeded entry budget (" +
                        std::to_string(budget_) + "); retry modularly");
    pivot_at_[static_cast<std::size_t>(vec.lead())] = static_cast<std::int32_t>(pivots_.size());
    pivots_.push_back(std::move(vec));
    pivot_combs_.push_back(std::move(comb));
    return true;
  }

  std::int64_t rank() const { return static_cast<std::int64_t>(pivots_.size()); }

 private:
  // vec -= c * other
  void axpy_neg(SparseVec<Ops>& vec, const typename Ops::Elem& c,
                const SparseVec<Ops>& other) const {
    std::vector<std::pair<std::int32_t, typename Ops::Elem>> out;
    out.reserve(vec.terms.size() + other.terms.size());
    std::size_t i = 0, j = 0;
    while (i < vec.terms.size() || j < other.terms.size()) {
      if (j == other.terms.size() ||
          (i < vec.terms.size() && vec.terms[i].first < other.terms[j].first)) {
        out.push_back(vec.terms[i++]);
      } else if (i == vec.terms.size() || other.terms[j].first < vec.terms[i].first) {
        out.emplace_back(other.terms[j].first, ops_.neg(ops_.mul(c, other.terms[j].second)));
        ++j;
      } else {
        auto val = ops_.sub_mul(vec.terms[i].second, c, other.terms[j].second);
        if (!ops_.is_zero(val)) out.emplace_back(vec.terms[i].first, std::move(val));
        ++i;
        ++j;
      }
    }
    vec.terms = std::move(out);
  }

  Ops ops_;
  std::vector<SparseVec<Ops>> pivots_;
  std::vector<SparseVec<Ops>> pivot_combs_;
  std::vector<std::int32_t> pivot_at_;
  std::size_t entry_count_ = 0;
  std::size_t budget_;
};

// Columns of m as sparse vectors, sorted within each column by row.
template <typename Ops>
std::vector<SparseVec<Ops>> columns_of(const SparseMatrix& m, const Ops& ops,
                                       bool transpose) {
  std::vector<SparseVec<Ops>> cols(static_cast<std::size_t>(transpose ? m.n_rows : m.n_cols));
  std::vector<Triplet> sorted = m.entries;
  if (transpose)
    std::sort(sorted.begin(), sorted.end(), [](const Triplet& a, const Triplet& b) {
      return std::tie(a.row, a.col) < std::tie(b.row, b.col);
    });
  else
    std::sort(sorted.begin(), sorted.end(), [](const Triplet& a, const Triplet& b) {
      return std::tie(a.col, a.row) < std::tie(b.col, b.row);
    });
  for (const auto& t : sorted) {
    auto val = ops.from_int(t.value);
    if (ops.is_zero(val)) continue;  // entries divisible by p vanish
    auto idx = static_cast<std::size_t>(transpose ? t.row : t.col);
    cols[idx].terms.emplace_back(transpose ? t.col : t.row, val);
  }
  return cols;
}

template <typename Ops>
std::int64_t rank_impl(const SparseMatrix& m, const Ops& ops, std::size_t budget) {
  // Stream the long side; pivots then live in the short coordinate space.
  const bool transpose = m.n_rows > m.n_cols;
  const std::int64_t dim = transpose ? m.n_cols : m.n_rows;
  Echelon<Ops> ech(ops, dim, budget);
  for (auto& col : columns_of(m, ops, transpose)) ech.insert(std::move(col));
  return ech.rank();
}

template <typename Ops>
ImageResult in_image_impl(const SparseMatrix& m, const std::vector<std::int64_t>& v,
                          const Ops& ops, std::size_t budget) {
  Echelon<Ops> ech(ops, m.n_rows, budget);
  auto cols = columns_of(m, ops, /*transpose=*/false);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    SparseVec<Ops> comb;
    comb.terms.emplace_back(static_cast<std::int32_t>(j), ops.from_int(1));
    ech.insert(std::move(cols[j]), std::move(comb));
  }
  SparseVec<Ops> rhs;
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto val = ops.from_int(v[i]);
    if (!ops.is_zero(val)) rhs.terms.emplace_back(static_cast<std::int32_t>(i), val);
  }
  SparseVec<Ops> t;  // accumulates the pivot pre-images applied to rhs
  t.terms.emplace_back(static_cast<std::int32_t>(m.n_cols), ops.from_int(1));  // sentinel
  ech.reduce(rhs, &t);
  ImageResult res;
  res.in_image = rhs.empty();
  if (res.in_image) {
    res.witness.assign(static_cast<std::size_t>(m.n_cols), BigRat(0));
    for (auto& [idx, val] : t.terms) {
      if (idx == m.n_cols) continue;  // sentinel
      // Each pivot j carries its pre-image u_j with M u_j = pivot. The
      // reduction computed 0 = v - M (sum c_j u_j); t holds -sum c_j u_j,
      // so the witness is -t.
      if constexpr (std::is_same_v<Ops, RatOps>) {
        res.witness[static_cast<std::size_t>(idx)] = -val;
      } else {
        res.witness[static_cast<std::size_t>(idx)] = -BigRat(static_cast<std::int64_t>(val));
      }
    }
  }
  return res;
}

}  // namespace

std::int64_t rank(const SparseMatrix& m, const FieldChoice& f, const LinalgOptions& opts) {
  if (m.n_rows == 0 || m.n_cols == 0 || m.entries.empty()) return 0;
  if (f.is_rational()) return rank_impl(m, RatOps{}, opts.rational_entry_budget);
  return rank_impl(m, GfpOps{f.modulus}, static_cast<std::size_t>(-1));
}

ImageResult in_image(const SparseMatrix& m, const std::vector<std::int64_t>& v,
                     const FieldChoice& f, const LinalgOptions& opts) {
  ImageResult res;
  if (f.is_rational())
    res = in_image_impl(m, v, RatOps{}, opts.rational_entry_budget);
  else
    res = in_image_impl(m, v, GfpOps{f.modulus}, static_cast<std::size_t>(-1));
  return res;
}

MultiPrimeRank rank_multi_prime(const SparseMatrix& m,
                                const std::vector<std::uint32_t>& primes,
                                const LinalgOptions& opts) {
  MultiPrimeRank out;
  out.primes = primes;
  for (auto p : primes) out.ranks.push_back(rank(m, FieldChoice::gf(p), opts));
  for (auto r : out.ranks) out.max_rank = std::max(out.max_rank, r);
  for (auto r : out.ranks) out.agree = out.agree && r == out.ranks.front();
  return out;
}

}  // namespace syzlab
