#include "predictors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "json.hpp"

namespace syzlab {

namespace {

const CellPrediction kUnknown{Verdict::UNKNOWN, false, ""};

std::int64_t pow_i64(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

const CellPrediction& SupportPrediction::at(int p, int q) const {
  auto it = cells.find({p, q});
  return it == cells.end() ? kUnknown : it->second;
}

void SupportPrediction::set(int p, int q, Verdict v, bool conj, const std::string& cite) {
  p_max = std::max(p_max, p);
  q_max = std::max(q_max, q);
  cells[{p, q}] = CellPrediction{v, conj, cite};
}

std::string SupportPrediction::render() const {
  std::ostringstream os;
  os << "q\\p";
  for (int p = 0; p <= p_max; ++p) os << '\t' << p;
  os << '\n';
  for (int q = 0; q <= q_max; ++q) {
    os << q;
    for (int p = 0; p <= p_max; ++p) {
      const auto& c = at(p, q);
      os << '\t';
      switch (c.verdict) {
        case Verdict::NONZERO: os << (c.conjectural ? "N?" : "N"); break;
        case Verdict::ZERO: os << (c.conjectural ? "0?" : "-"); break;
        case Verdict::UNKNOWN: os << "?"; break;
      }
    }
    os << '\n';
  }
  os << "\ncitations:\n";
  std::map<std::string, std::vector<std::pair<int, int>>> by_cite;
  for (const auto& [key, c] : cells)
    if (!c.citation.empty()) by_cite[c.citation].push_back(key);
  for (const auto& [cite, keys] : by_cite) {
    os << "  " << cite << ": ";
    os << keys.size() << " cell" << (keys.size() == 1 ? "" : "s") << '\n';
  }
  return os.str();
}

std::string SupportPrediction::to_json() const {
  nlohmann::json j;
  j["p_max"] = p_max;
  j["q_max"] = q_max;
  j["cells"] = nlohmann::json::array();
  for (const auto& [key, c] : cells) {
    const char* v = c.verdict == Verdict::NONZERO ? "NONZERO"
                    : c.verdict == Verdict::ZERO  ? "ZERO"
                                                  : "UNKNOWN";
    j["cells"].push_back({{"p", key.first},
                          {"q", key.second},
                          {"verdict", v},
                          {"conjectural", c.conjectural},
                          {"citation", c.citation}});
  }
  return j.dump(2);
}

SupportPrediction easy_support(int n, std::int64_t r_B, std::int64_t r_KminusB,
                               std::int64_t r_d) {
  SupportPrediction sp;
  sp.p_max = static_cast<int>(r_d);
  sp.q_max = n + 1;
  for (std::int64_t p = 0; p <= r_d; ++p) {
    bool q0 = p <= r_B;
    sp.set(static_cast<int>(p), 0, q0 ? Verdict::NONZERO : Verdict::ZERO, false,
           "easy support, weight 0");
    bool qtop = r_d - n - r_KminusB <= p && p <= r_d - n;
    sp.set(static_cast<int>(p), n + 1, qtop ? Verdict::NONZERO : Verdict::ZERO, false,
           "easy support, top weight");
  }
  return sp;
}

std::pair<std::int64_t, std::int64_t> veronese_range(int n, int b, int d, int q) {
  if (b < 0 || q < 0 || q > n || d < b + q + 1)
    throw std::invalid_argument("veronese_range requires b >= 0, 0 <= q <= n, d >= b+q+1");
  std::int64_t lo = binomial_i64(q + d, q) - binomial_i64(d - b - 1, q) - q;
  std::int64_t hi = binomial_i64(n + d, n) - binomial_i64(d + n - q, n - q) +
                    binomial_i64(n + b, q + b) - q - 1;
  return {lo, hi};
}

std::pair<std::int64_t, std::int64_t> cm_range(std::int64_t degX, int n, int c, int b,
                                               int d, int q, std::int64_t r_d) {
  if (q < 1 || q > n - 1)
    throw std::invalid_argument("cm_range requires 1 <= q <= n-1");
  if (d < b + q + c + 1)
    throw std::invalid_argument("cm_range requires d >= b+q+c+1");
  std::int64_t rp = r_d - degX * (n + 1);
  std::int64_t lo = degX * (q + b + 1) * binomial_i64(d + q - 1, q - 1);
  std::int64_t hi = rp - degX * (d - q - b) * binomial_i64(d + n - q - 1, n - q - 1);
  return {lo, hi};
}

NpResult np_thresholds(NpFamily family, const NpParams& params, int k) {
  switch (family) {
    case NpFamily::Curve:
      if (params.d >= 2 * params.g + 1 + k)
        return {NpVerdict::Holds, "curve threshold d >= 2g+1+k"};
      return {NpVerdict::Unknown, "below curve threshold"};
    case NpFamily::Veronese:
      if (k >= 3 * params.d - 2)
        return {NpVerdict::Fails, "Veronese failure k >= 3d-2"};
      if (params.d >= k) return {NpVerdict::Holds, "Veronese threshold d >= k"};
      return {NpVerdict::Unknown,
              "between thresholds; conjectured to hold (proved for the plane)"};
    case NpFamily::Adjoint:
      if (params.d >= params.n + 1 + k)
        return {NpVerdict::Holds, "adjoint threshold d >= n+1+k"};
      return {NpVerdict::Unknown, "below adjoint threshold"};
    case NpFamily::Abelian:
      if (params.d >= k + 3) return {NpVerdict::Holds, "abelian threshold d >= k+3"};
      return {NpVerdict::Unknown, "below abelian threshold"};
  }
  return {};
}

BigInt curve_kp1(int g, int d, int p) {
  if (d < 2 * g + 1) throw std::invalid_argument("curve_kp1 requires d >= 2g+1");
  if (p < 1 || p > d - 2 * g)
    throw std::invalid_argument("curve_kp1 requires 1 <= p <= d-2g");
  const std::int64_t r = d - g;
  BigRat val = BigRat(big_binomial(r, p)) *
               (BigRat(-static_cast<std::int64_t>(p) * d, r) + BigRat(r + 1) -
                BigRat(d + 1 - g, p + 1));
  if (boost::multiprecision::denominator(val) != 1)
    throw std::logic_error("curve k_{p,1} formula produced a non-integer");
  return boost::multiprecision::numerator(val);
}

double curve_gaussian_normalized(int g, int d, double a) {
  const std::int64_t r = d - g;
  const auto p = static_cast<std::int64_t>(std::llround(r / 2.0 + a * std::sqrt(static_cast<double>(r)) / 2.0));
  if (p < 1 || p > d - 2 * g)
    throw std::invalid_argument("normalized point falls outside the formula domain");
  using BigFloat = boost::multiprecision::cpp_bin_float_100;
  BigFloat k(curve_kp1(g, d, static_cast<int>(p)));
  BigFloat two_r = boost::multiprecision::pow(BigFloat(2), static_cast<unsigned>(r));
  double ratio = static_cast<double>(k / two_r);
  return ratio * std::sqrt(2.0 * M_PI / static_cast<double>(r));
}

SupportPrediction curve_support(int g, int gon, int d, CurveTwist twist) {
  const int max_gon = (g + 3) / 2 + ((g + 3) % 2 != 0);
  if (gon < 1 || gon > max_gon || (g == 0 && gon != 1) || (g >= 1 && gon < 2))
    throw std::invalid_argument("gonality inconsistent with genus");
  if (d < 2 * g + 1) throw std::invalid_argument("curve_support requires d >= 2g+1");
  const std::int64_t r_d = d - g;
  const bool certified = d >= 4 * g - 3;  // Rathmann regime

  SupportPrediction sp;
  sp.p_max = static_cast<int>(r_d);
  sp.q_max = 2;
  const std::int64_t r_B = twist == CurveTwist::StructureSheaf ? 0 : g - 1;
  const std::int64_t r_KmB = twist == CurveTwist::StructureSheaf ? g - 1 : 0;
  for (std::int64_t p = 0; p <= r_d; ++p) {
    sp.set(static_cast<int>(p), 0, p <= r_B ? Verdict::NONZERO : Verdict::ZERO, false,
           "easy support, weight 0");
    bool q2 = r_d - 1 - r_KmB <= p && p <= r_d - 1;
    sp.set(static_cast<int>(p), 2, q2 ? Verdict::NONZERO : Verdict::ZERO, false,
           "easy support, weight 2");
  }
  // q = 1: gonality reads off the support end for d >= 4g-3; below that
  // only the sandwich forced by the other rows is certain.
  std::int64_t lo, hi;
  if (twist == CurveTwist::StructureSheaf) {
    lo = 1;
    hi = r_d - gon;
  } else {
    lo = gon - 1;
    hi = r_d - 2;
  }
  const std::int64_t safe_lo = r_B + 1;
  const std::int64_t safe_hi = r_d - 2 - r_KmB;
  for (std::int64_t p = 0; p <= r_d; ++p) {
    if (certified) {
      bool nz = lo <= p && p <= hi;
      sp.set(static_cast<int>(p), 1, nz ? Verdict::NONZERO : Verdict::ZERO, false,
             "gonality support (effective regime)");
    } else if (safe_lo <= p && p <= safe_hi) {
      sp.set(static_cast<int>(p), 1, Verdict::NONZERO, false, "easy support sandwich");
    } else {
      sp.set(static_cast<int>(p), 1, Verdict::UNKNOWN, false, "below effective threshold");
    }
  }
  return sp;
}

std::pair<std::int64_t, std::int64_t> curve_duality_pair(int g, int b, int d, int p) {
  const std::int64_t r_d = d - g;
  return {r_d - 1 - p, 2 * static_cast<std::int64_t>(g) - 2 - b};
}

std::optional<std::pair<std::int64_t, std::int64_t>> asymptotic_window(
    int n, int q, std::int64_t r_d, int d, double C1, double C2) {
  auto lo = static_cast<std::int64_t>(std::ceil(C1 * static_cast<double>(pow_i64(d, q - 1))));
  auto hi = r_d - static_cast<std::int64_t>(
                      std::ceil(C2 * static_cast<double>(pow_i64(d, n - 1))));
  lo = std::max<std::int64_t>(lo, 0);
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

SupportPrediction predict_veronese(int n, int b, int d) {
  if (b < 0) throw std::invalid_argument("predict_veronese requires b >= 0");
  const std::int64_t r_d = binomial_i64(n + d, n) - 1;
  const std::int64_t r_B = binomial_i64(n + b, n) - 1;
  // K - B = O(-n-1-b) has no sections for b >= -n.
  const std::int64_t r_KmB = -1;
  const bool d_large = d >= b + n + 2;  // explicit proxy for the d >> 0 hypotheses

  SupportPrediction sp;
  sp.p_max = static_cast<int>(r_d);
  sp.q_max = n + 1;
  for (std::int64_t p = 0; p <= r_d; ++p) {
    if (d_large) {
      sp.set(static_cast<int>(p), 0, p <= r_B ? Verdict::NONZERO : Verdict::ZERO, false,
             "easy support, weight 0 (d-large proxy d >= b+n+2)");
      bool qtop = r_d - n - r_KmB <= p && p <= r_d - n;
      sp.set(static_cast<int>(p), n + 1, qtop ? Verdict::NONZERO : Verdict::ZERO, false,
             "easy support, top weight (d-large proxy d >= b+n+2)");
    } else {
      sp.set(static_cast<int>(p), 0, p <= r_B ? Verdict::NONZERO : Verdict::UNKNOWN,
             false, "weight 0 below d-large proxy");
      sp.set(static_cast<int>(p), n + 1, Verdict::UNKNOWN, false,
             "top weight below d-large proxy");
    }
  }
  for (int q = 1; q <= n; ++q) {
    if (d < b + q + 1) {
      for (std::int64_t p = 0; p <= r_d; ++p)
        sp.set(static_cast<int>(p), q, Verdict::UNKNOWN, false,
               "d below non-vanishing hypothesis");
      continue;
    }
    auto [lo, hi] = veronese_range(n, b, d, q);
    for (std::int64_t p = 0; p <= r_d; ++p) {
      if (lo <= p && p <= hi) {
        sp.set(static_cast<int>(p), q, Verdict::NONZERO, false,
               "Veronese non-vanishing range");
      } else if (q == n && d_large) {
        sp.set(static_cast<int>(p), q, Verdict::ZERO, false,
               "extremal weight, range is exact for large d");
      } else {
        sp.set(static_cast<int>(p), q, Verdict::ZERO, true,
               "conjectured vanishing outside the range");
      }
    }
  }
  return sp;
}

std::vector<CounterexampleCandidate> counterexample_watch(const BettiTable& t) {
  std::vector<CounterexampleCandidate> out;
  for (const auto& [key, v] : t.entries) {
    auto [p, q] = key;
    if (q < 1 || q > t.n || v == 0) continue;
    if (t.b < 0 || t.d < t.b + q + 1) continue;
    auto [lo, hi] = veronese_range(t.n, t.b, t.d, q);
    if (p < lo || p > hi) out.push_back({p, q, v, lo, hi});
  }
  return out;
}

}  // namespace syzlab
