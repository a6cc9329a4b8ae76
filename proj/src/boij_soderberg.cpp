#include "boij_soderberg.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace syzlab {

PureTable pure_table(int i, int r) {
  if (i < 1 || i > r) throw std::invalid_argument("pure_table requires 1 <= i <= r");
  PureTable t;
  t.i = i;
  t.r = r;
  // Herzog-Kuhl proportionality: beta_p ~ prod_{j != p} 1/|a_j - a_p|,
  // scaled so beta_0 = 1.
  auto prod_gaps = [&](int p) {
    BigInt prod = 1;
    for (int j = 0; j <= r; ++j) {
      if (j == p) continue;
      std::int64_t gap = t.degree(j) - t.degree(p);
      prod *= gap < 0 ? -gap : gap;
    }
    return prod;
  };
  const BigInt scale = prod_gaps(0);
  for (int p = 0; p <= r; ++p) t.betti.emplace_back(BigRat(scale, prod_gaps(p)));
  return t;
}

std::string PureTable::to_json() const {
  nlohmann::json j;
  j["i"] = i;
  j["r"] = r;
  j["degrees"] = nlohmann::json::array();
  j["betti"] = nlohmann::json::array();
  for (int p = 0; p <= r; ++p) {
    j["degrees"].push_back(degree(p));
    j["betti"].push_back(betti[static_cast<std::size_t>(p)].str());
  }
  return j.dump(2);
}

std::string BSDecomposition::to_json() const {
  nlohmann::json j;
  j["coefficients"] = nlohmann::json::array();
  for (const auto& x : coefficients) j["coefficients"].push_back(x.str());
  return j.dump(2);
}

bool TwoRowTable::staircase() const {
  bool seen_zero = false;
  for (const auto& v : row1) {
    if (v == 0) seen_zero = true;
    else if (seen_zero) return false;
  }
  bool seen_nonzero = false;
  for (const auto& v : row2) {
    if (v != 0) seen_nonzero = true;
    else if (seen_nonzero) return false;
  }
  return true;
}

std::string TwoRowTable::to_csv() const {
  std::ostringstream os;
  os << "p,q,value\n";
  for (int p = 0; p <= r; ++p)
    if (row1[static_cast<std::size_t>(p)] != 0)
      os << p << ",1," << row1[static_cast<std::size_t>(p)].str() << '\n';
  for (int p = 0; p <= r; ++p)
    if (row2[static_cast<std::size_t>(p)] != 0)
      os << p << ",2," << row2[static_cast<std::size_t>(p)].str() << '\n';
  return os.str();
}

std::optional<TwoRowTable> TwoRowTable::from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::tuple<int, int, BigRat>> cells;
  int max_p = 0;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (first && line.rfind("p,q,", 0) == 0) {
      first = false;
      continue;
    }
    first = false;
    std::istringstream ls(line);
    std::string pf, qf, vf;
    if (!std::getline(ls, pf, ',') || !std::getline(ls, qf, ',') ||
        !std::getline(ls, vf, ','))
      return std::nullopt;
    try {
      int p = std::stoi(pf);
      int q = std::stoi(qf);
      BigRat v(vf);
      if (p < 0 || (q != 1 && q != 2)) return std::nullopt;
      if (v != 0) {
        cells.emplace_back(p, q, v);
        max_p = std::max(max_p, p);
      }
    } catch (...) {
      return std::nullopt;
    }
  }
  TwoRowTable t;
  t.r = max_p;
  t.row1.assign(static_cast<std::size_t>(max_p) + 1, BigRat(0));
  t.row2.assign(static_cast<std::size_t>(max_p) + 1, BigRat(0));
  for (auto& [p, q, v] : cells)
    (q == 1 ? t.row1 : t.row2)[static_cast<std::size_t>(p)] += v;
  return t;
}

TwoRowTable synthesize(const std::vector<BigRat>& x, int r) {
  if (static_cast<int>(x.size()) != r)
    throw std::invalid_argument("coefficient vector must have length r");
  for (const auto& xi : x)
    if (xi < 0) throw std::invalid_argument("coefficients must be nonnegative");
  TwoRowTable t;
  t.r = r;
  t.row1.assign(static_cast<std::size_t>(r) + 1, BigRat(0));
  t.row2.assign(static_cast<std::size_t>(r) + 1, BigRat(0));
  for (int i = 1; i <= r; ++i) {
    const auto& xi = x[static_cast<std::size_t>(i - 1)];
    if (xi == 0) continue;
    auto pi = pure_table(i, r);
    for (int p = 0; p <= r; ++p) {
      auto& cell = p < i ? t.row1[static_cast<std::size_t>(p)]
                         : t.row2[static_cast<std::size_t>(p)];
      cell += xi * pi.betti[static_cast<std::size_t>(p)];
    }
  }
  return t;
}

BSDecomposition decompose(const TwoRowTable& t) {
  const int r = t.r;
  if (!t.staircase())
    throw std::invalid_argument("not in the pure cone: staircase property fails");
  auto row1 = t.row1;
  auto row2 = t.row2;
  BSDecomposition out;
  out.coefficients.assign(static_cast<std::size_t>(r), BigRat(0));
  for (int step = 0; step <= r; ++step) {
    int corner = -1;
    for (int p = 0; p <= r; ++p)
      if (row2[static_cast<std::size_t>(p)] != 0) {
        corner = p;
        break;
      }
    if (corner < 0) break;
    if (corner < 1)
      throw std::invalid_argument("not in the pure cone: weight-2 entry at p = 0");
    auto pi = pure_table(corner, r);
    // Maximal multiple keeping every entry nonnegative.
    BigRat x(-1);
    for (int p = 0; p <= r; ++p) {
      const auto& cell = p < corner ? row1[static_cast<std::size_t>(p)]
                                    : row2[static_cast<std::size_t>(p)];
      BigRat ratio = cell / pi.betti[static_cast<std::size_t>(p)];
      if (x < 0 || ratio < x) x = ratio;
    }
    if (x <= 0)
      throw std::invalid_argument("not in the pure cone: peeling stalled");
    for (int p = 0; p <= r; ++p) {
      auto& cell = p < corner ? row1[static_cast<std::size_t>(p)]
                              : row2[static_cast<std::size_t>(p)];
      cell -= x * pi.betti[static_cast<std::size_t>(p)];
    }
    if (row2[static_cast<std::size_t>(corner)] != 0)
      throw std::invalid_argument("not in the pure cone: corner did not clear");
    out.coefficients[static_cast<std::size_t>(corner - 1)] += x;
  }
  for (int p = 0; p <= r; ++p)
    if (row1[static_cast<std::size_t>(p)] != 0 || row2[static_cast<std::size_t>(p)] != 0)
      throw std::invalid_argument("not in the pure cone: nonzero remainder");
  return out;
}

TwoRowTable two_row_restriction(const BettiTable& t) {
  int max_p = 0;
  for (const auto& [key, v] : t.entries)
    if (key.second == 1 || key.second == 2) max_p = std::max(max_p, key.first);
  TwoRowTable out;
  out.r = max_p;
  out.row1.assign(static_cast<std::size_t>(max_p) + 1, BigRat(0));
  out.row2.assign(static_cast<std::size_t>(max_p) + 1, BigRat(0));
  for (const auto& [key, v] : t.entries) {
    if (key.second == 1) out.row1[static_cast<std::size_t>(key.first)] = v;
    if (key.second == 2) out.row2[static_cast<std::size_t>(key.first)] = v;
  }
  return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Deterministic across platforms: raw 53-bit mantissa draws, no
// implementation-defined distribution adapters.
struct SampleRng {
  std::mt19937_64 gen;
  explicit SampleRng(std::uint64_t seed, std::uint64_t index)
      : gen(splitmix64(seed ^ splitmix64(index))) {}
  double uniform01() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
  double draw(SampleDistribution d) {
    switch (d) {
      case SampleDistribution::Uniform01:
        return uniform01();
      case SampleDistribution::Exponential1:
        return -std::log1p(-uniform01());
      case SampleDistribution::Beta22: {
        // Gamma(2)/(Gamma(2)+Gamma(2)) with Gamma(2) = Exp + Exp.
        double g1 = -std::log1p(-uniform01()) - std::log1p(-uniform01());
        double g2 = -std::log1p(-uniform01()) - std::log1p(-uniform01());
        return g1 / (g1 + g2);
      }
    }
    return 0;
  }
};

double quantile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  if (v.empty()) return 0;
  auto idx = static_cast<std::size_t>(q * static_cast<double>(v.size() - 1) + 0.5);
  return v[std::min(idx, v.size() - 1)];
}

}  // namespace

SampleStatistics sample_profiles(int r, int n_samples, std::uint64_t seed,
                                 SampleDistribution dist,
                                 const std::vector<double>& a_grid) {
  if (r < 4 || n_samples < 1)
    throw std::invalid_argument("sample_profiles requires r >= 4, N >= 1");

  std::vector<int> p_of_a;
  for (double a : a_grid) {
    auto p = static_cast<int>(std::llround(r / 2.0 + a * std::sqrt(static_cast<double>(r)) / 2.0));
    p_of_a.push_back(std::clamp(p, 0, r));
  }
  const int p0 = std::clamp(static_cast<int>(std::llround(r / 2.0)), 0, r);
  std::vector<int> all_p = p_of_a;
  all_p.push_back(p0);

  // log beta_p(Pi_i) under the global beta_0 = 1 normalization; weights are
  // exponentials shifted by a common maximum so ratios survive in doubles.
  auto degree = [](int i, int p) { return p < i ? p + 1 : p + 2; };
  auto log_beta = [&](int i, int p) {
    double acc = 0;
    for (int j = 0; j <= r; ++j) {
      if (j != 0) acc += std::log(std::abs(static_cast<double>(degree(i, j) - degree(i, 0))));
      if (j != p) acc -= std::log(std::abs(static_cast<double>(degree(i, j) - degree(i, p))));
    }
    return acc;
  };
  std::map<int, std::vector<double>> log_w;  // p -> log beta for i = 1..r
  double max_log = -1e300;
  for (int p : all_p) {
    if (log_w.count(p)) continue;
    auto& v = log_w[p];
    v.assign(static_cast<std::size_t>(r) + 1, -1e300);
    for (int i = p + 1; i <= r; ++i) {  // only i > p contributes to row 1
      v[static_cast<std::size_t>(i)] = log_beta(i, p);
      max_log = std::max(max_log, v[static_cast<std::size_t>(i)]);
    }
  }
  std::map<int, std::vector<double>> w;
  for (auto& [p, lv] : log_w) {
    auto& v = w[p];
    v.assign(lv.size(), 0);
    for (std::size_t i = 0; i < lv.size(); ++i)
      v[i] = lv[i] < -1e299 ? 0 : std::exp(lv[i] - max_log);
  }

  std::vector<std::vector<double>> rho(a_grid.size());
  std::vector<double> x(static_cast<std::size_t>(r));
  for (int s = 0; s < n_samples; ++s) {
    SampleRng rng(seed, static_cast<std::uint64_t>(s));
    for (int i = 0; i < r; ++i) x[static_cast<std::size_t>(i)] = rng.draw(dist);
    auto k_row1 = [&](int p) {
      double acc = 0;
      const auto& wp = w.at(p);
      for (int i = p + 1; i <= r; ++i)
        acc += x[static_cast<std::size_t>(i - 1)] * wp[static_cast<std::size_t>(i)];
      return acc;
    };
    double k0 = k_row1(p0);
    for (std::size_t ai = 0; ai < a_grid.size(); ++ai)
      rho[ai].push_back(k0 > 0 ? k_row1(p_of_a[ai]) / k0 : 0);
  }

  SampleStatistics st;
  st.r = r;
  st.n_samples = n_samples;
  st.seed = seed;
  st.distribution = dist == SampleDistribution::Uniform01      ? "uniform"
                    : dist == SampleDistribution::Exponential1 ? "exponential"
                                                               : "beta22";
  for (std::size_t ai = 0; ai < a_grid.size(); ++ai) {
    ProfilePoint pt;
    pt.a = a_grid[ai];
    pt.gauss_ref = std::exp(-a_grid[ai] * a_grid[ai] / 2.0);
    pt.median_rho = quantile(rho[ai], 0.5);
    pt.p10 = quantile(rho[ai], 0.1);
    pt.p90 = quantile(rho[ai], 0.9);
    std::vector<double> err;
    for (double v : rho[ai]) err.push_back(std::abs(v - pt.gauss_ref));
    pt.abs_err_median = quantile(err, 0.5);
    st.points.push_back(pt);
  }
  return st;
}

std::string SampleStatistics::to_csv() const {
  std::ostringstream os;
  os << "a,median_rho,p10,p90,gauss_ref,abs_err_median\n";
  os.precision(12);
  for (const auto& pt : points)
    os << pt.a << ',' << pt.median_rho << ',' << pt.p10 << ',' << pt.p90 << ','
       << pt.gauss_ref << ',' << pt.abs_err_median << '\n';
  return os.str();
}

}  // namespace syzlab
