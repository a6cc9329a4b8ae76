#pragma once

// Closed-form evaluators for the non-vanishing theorems, thresholds and
// Betti-number formulas, used standalone and as engine cross-checks.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "betti_table.hpp"
#include "bigmath.hpp"

namespace syzlab {

enum class Verdict { NONZERO, ZERO, UNKNOWN };

struct CellPrediction {
  Verdict verdict = Verdict::UNKNOWN;
  bool conjectural = false;  // verdict rests on a conjecture, not a theorem
  std::string citation;
};

struct SupportPrediction {
  int p_max = 0;
  int q_max = 0;
  std::map<std::pair<int, int>, CellPrediction> cells;

  const CellPrediction& at(int p, int q) const;
  void set(int p, int q, Verdict v, bool conj, const std::string& cite);
  std::string render() const;  // annotated diagram with per-cell tags
  std::string to_json() const;
};

struct CurveParams {
  int g = 0;                 // genus
  int d = 0;                 // degree of the embedding line bundle
  std::optional<int> gon;    // gonality
  std::optional<int> b;      // twist degree
};

// Rows q = 0 and q = n+1 from the easy support statements; q >= n+2 zero.
// r_B and r_KminusB are r(B) and r(K_X - B); pass -1 for empty series.
SupportPrediction easy_support(int n, std::int64_t r_B, std::int64_t r_KminusB,
                               std::int64_t r_d);

// The guaranteed non-vanishing interval [p_min, p_max] for K_{p,q}(n,b;d).
// Requires d >= b+q+1, 0 <= q <= n, b >= 0.
std::pair<std::int64_t, std::int64_t> veronese_range(int n, int b, int d, int q);

// Non-vanishing interval for a projectively Cohen-Macaulay X of degree
// degX and regularity c. Requires 1 <= q <= n-1 and d >= b+q+c+1.
std::pair<std::int64_t, std::int64_t> cm_range(std::int64_t degX, int n, int c, int b,
                                               int d, int q, std::int64_t r_d);

enum class NpFamily { Curve, Veronese, Adjoint, Abelian };
enum class NpVerdict { Holds, Fails, Unknown };

struct NpParams {
  int g = 0;  // curve family
  int n = 0;  // veronese/adjoint/abelian families
  int d = 0;
};

struct NpResult {
  NpVerdict verdict = NpVerdict::Unknown;
  std::string citation;
};

NpResult np_thresholds(NpFamily family, const NpParams& params, int k);

// k_{p,1} of a genus-g degree-d curve embedding, valid for d >= 2g+1 and
// 1 <= p <= d-2g. Exact; throws std::logic_error if the closed form fails
// to produce an integer.
BigInt curve_kp1(int g, int d, int p);

// (1/2^{r_d}) sqrt(2*pi/r_d) * k_{p_d,1} at p_d = round(r_d/2 + a*sqrt(r_d)/2);
// converges to exp(-a^2/2) as d grows.
double curve_gaussian_normalized(int g, int d, double a);

enum class CurveTwist { StructureSheaf, Canonical };

// Full support map of a genus-g gonality-gon curve of degree d. Certified
// when d >= 4g-3; below that only the easy-support consequences are
// asserted and the rest is UNKNOWN.
SupportPrediction curve_support(int g, int gon, int d,
                                CurveTwist twist = CurveTwist::StructureSheaf);

// Serre-duality partner of k_{p,1}(C, O(b); L_d): (p', b') with
// p' = r_d - 1 - p and b' = 2g - 2 - b.
std::pair<std::int64_t, std::int64_t> curve_duality_pair(int g, int b, int d, int p);

// [C1*d^{q-1}, r_d - C2*d^{n-1}]; nullopt when the window is empty.
std::optional<std::pair<std::int64_t, std::int64_t>> asymptotic_window(
    int n, int q, std::int64_t r_d, int d, double C1, double C2);

// Combined Veronese support map over p in [0, r_d], q in [0, n+1]:
// easy rows (under the d >= b+n+2 largeness proxy), the guaranteed
// non-vanishing ranges, and conjectural zeroes outside them.
SupportPrediction predict_veronese(int n, int b, int d);

struct CounterexampleCandidate {
  int p = 0;
  int q = 0;
  std::int64_t value = 0;
  std::int64_t range_lo = 0;
  std::int64_t range_hi = 0;
};

// Engine cells that are NONZERO strictly outside the guaranteed range,
// i.e. candidates against the conjectured exact support. Never silent:
// callers must surface a nonempty result prominently.
std::vector<CounterexampleCandidate> counterexample_watch(const BettiTable& t);

}  // namespace syzlab
