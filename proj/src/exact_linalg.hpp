#pragma once

// Exact sparse linear algebra over prime fields and over the rationals:
// rank, image membership with witness.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace syzlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Raised when an exact-rational elimination exceeds the configured entry
// budget, or a strand exceeds the size cap. Callers may retry modularly.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// modulus == 0 selects exact rationals.
struct FieldChoice {
  std::uint32_t modulus = 32003;

  static FieldChoice gf(std::uint32_t p) { return FieldChoice{p}; }
  static FieldChoice rationals() { return FieldChoice{0}; }
  bool is_rational() const { return modulus == 0; }
  std::string tag() const { return is_rational() ? "Q" : "GF(" + std::to_string(modulus) + ")"; }
};

struct Triplet {
  std::int32_t row = 0;
  std::int32_t col = 0;
  std::int64_t value = 0;  // nonzero integer; differentials only ever use +-1
};

struct SparseMatrix {
  std::int64_t n_rows = 0;
  std::int64_t n_cols = 0;
  std::vector<Triplet> entries;

  void add(std::int32_t r, std::int32_t c, std::int64_t v) {
    entries.push_back({r, c, v});
  }
  std::size_t nnz() const { return entries.size(); }

  // Textual triplet format: `rows cols nnz` header then `r c value` lines.
  std::string dump() const;
  static std::optional<SparseMatrix> parse(const std::string& text);
};

struct LinalgOptions {
  // Abort exact-rational eliminations once the pivot structure holds more
  // than this many nonzero entries.
  std::size_t rational_entry_budget = 2'000'000;
};

// Exact rank over the chosen field. Deterministic: columns are streamed in
// index order and reduced against earlier pivots (lowest leading row wins).
std::int64_t rank(const SparseMatrix& m, const FieldChoice& f,
                  const LinalgOptions& opts = {});

struct ImageResult {
  bool in_image = false;
  // Combination of columns reproducing v, present when in_image and the
  // field is rational. Over GF(p) the witness entries are residues.
  std::vector<BigRat> witness;
};

// Solvability of M x = v over the chosen field.
ImageResult in_image(const SparseMatrix& m, const std::vector<std::int64_t>& v,
                     const FieldChoice& f, const LinalgOptions& opts = {});

struct MultiPrimeRank {
  std::vector<std::uint32_t> primes;
  std::vector<std::int64_t> ranks;
  std::int64_t max_rank = 0;
  bool agree = true;
};

// Rank at several primes; ranks mod p can only drop, so the maximum is the
// best available estimate of the rational rank.
MultiPrimeRank rank_multi_prime(const SparseMatrix& m,
                                const std::vector<std::uint32_t>& primes,
                                const LinalgOptions& opts = {});

}  // namespace syzlab
