#pragma once

// Two-row Boij-Soderberg machinery: pure tables, exact decomposition and
// synthesis, and Gaussian-profile statistics of random tables.

#include <cstdint>
#include <string>
#include <vector>

#include "betti_table.hpp"
#include "bigmath.hpp"

namespace syzlab {

// Pure two-row table with jump index i: q=1 entries at p < i, q=2 entries
// at p >= i. Degree sequence a_p = p+1 for p < i, p+2 for p >= i; Betti
// numbers fixed by the Herzog-Kuhl proportionality, normalized beta_0 = 1.
struct PureTable {
  int i = 1;
  int r = 1;
  std::vector<BigRat> betti;  // beta_0 .. beta_r, all positive

  std::int64_t degree(int p) const { return p < i ? p + 1 : p + 2; }
  std::string to_json() const;
};

// Requires 1 <= i <= r.
PureTable pure_table(int i, int r);

struct BSDecomposition {
  std::vector<BigRat> coefficients;  // x_1 .. x_r
  std::string to_json() const;
};

// Two-row table from nonnegative coefficients: k_{p,q} = sum_i x_i k_{p,q}(Pi_i).
// Entries are exact rationals.
struct TwoRowTable {
  int r = 0;
  std::vector<BigRat> row1;  // k_{p,1}, p = 0..r
  std::vector<BigRat> row2;  // k_{p,2}, p = 0..r

  bool staircase() const;  // row1 support initial segment, row2 final
  std::string to_csv() const;
  static std::optional<TwoRowTable> from_csv(const std::string& text);
};

TwoRowTable synthesize(const std::vector<BigRat>& x, int r);

// Greedy peeling at the smallest-p weight-2 corner. Exact; throws
// std::invalid_argument ("not in the pure cone") when peeling stalls with
// a nonzero remainder.
BSDecomposition decompose(const TwoRowTable& t);

// Restriction of an integer Betti table to rows q = 1, 2.
TwoRowTable two_row_restriction(const BettiTable& t);

enum class SampleDistribution { Uniform01, Exponential1, Beta22 };

struct ProfilePoint {
  double a = 0;
  double median_rho = 0;
  double p10 = 0;
  double p90 = 0;
  double gauss_ref = 0;        // exp(-a^2/2)
  double abs_err_median = 0;   // median |rho(a) - gauss_ref|
};

struct SampleStatistics {
  int r = 0;
  int n_samples = 0;
  std::uint64_t seed = 0;
  std::string distribution;
  std::vector<ProfilePoint> points;

  std::string to_csv() const;  // a,median_rho,p10,p90,gauss_ref,abs_err_median
};

// Draws N coefficient vectors, forms the random tables, and summarizes the
// self-normalized profile rho(a) = k_{p(a),1}(x) / k_{p(0),1}(x) at
// p(a) = round(r/2 + a*sqrt(r)/2). Deterministic per (seed, sample index).
SampleStatistics sample_profiles(int r, int n_samples, std::uint64_t seed,
                                 SampleDistribution dist,
                                 const std::vector<double>& a_grid);

}  // namespace syzlab
