#include "selftest.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "boij_soderberg.hpp"
#include "certificates.hpp"
#include "koszul_engine.hpp"
#include "predictors.hpp"

namespace syzlab {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  std::ostringstream detail;
  bool pass = true;

  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      pass = false;
      detail << what << ": got " << got << ", want " << want << "; ";
    }
  }
  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail << what << "; ";
    }
  }
};

CriterionResult finish(const std::string& name, Check& c, Clock::time_point start) {
  CriterionResult r;
  r.name = name;
  r.pass = c.pass;
  r.detail = c.pass ? "ok" : c.detail.str();
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

EngineOptions engine_opts(const SelftestOptions& o, FieldChoice f) {
  EngineOptions e;
  e.field = f;
  e.jobs = o.jobs;
  return e;
}

CriterionResult criterion_reference_tables(const SelftestOptions& o) {
  auto start = Clock::now();
  Check c;
  auto opts = engine_opts(o, FieldChoice::rationals());
  auto t113 = betti_table(RingContext{1, 1, 3}, opts);
  c.equal(t113.at(0, 0), 2, "k_{0,0}(1,1;3)");
  c.equal(t113.at(1, 0), 3, "k_{1,0}(1,1;3)");
  c.equal(t113.at(2, 1), 1, "k_{2,1}(1,1;3)");
  std::int64_t others = 0;
  for (const auto& [key, v] : t113.entries)
    if (key != std::pair{0, 0} && key != std::pair{1, 0} && key != std::pair{2, 1})
      others += v;
  c.equal(others, 0, "extra nonzero entries in (1,1;3)");
  auto t103 = betti_table(RingContext{1, 0, 3}, opts);
  c.equal(t103.at(1, 1), 3, "k_{1,1}(1,0;3)");
  c.equal(t103.at(2, 1), 2, "k_{2,1}(1,0;3)");
  return finish("1 reference tables exact", c, start);
}

CriterionResult criterion_curve_formula(const SelftestOptions& o) {
  auto start = Clock::now();
  Check c;
  auto opts = engine_opts(o, FieldChoice::rationals());
  for (int d = 3; d <= 6; ++d) {
    for (int p = 1; p <= d; ++p) {
      BigInt formula = curve_kp1(0, d, p);
      std::int64_t engine = kpq_dim(RingContext{1, 0, d}, p, 1, opts);
      c.equal(BigInt(engine), formula,
              "k_{" + std::to_string(p) + ",1}(1,0;" + std::to_string(d) + ")");
    }
  }
  return finish("2 curve formula equivalence g=0", c, start);
}

CriterionResult criterion_ottaviani_paoletti(const SelftestOptions& o) {
  auto start = Clock::now();
  Check c;
  auto opts = engine_opts(o, FieldChoice::gf(32003));
  for (int p = 0; p < 7; ++p)
    c.equal(kpq_dim(RingContext{2, 0, 3}, p, 2, opts), 0,
            "k_{" + std::to_string(p) + ",2}(2,0;3)");
  c.equal(kpq_dim(RingContext{2, 0, 3}, 7, 2, opts), 1, "k_{7,2}(2,0;3)");

  auto cert = build_certificate(default_target(2, 0, 4, 2), 0, RingContext{2, 0, 4}, 2);
  c.equal(cert.p(), 10, "certificate index for (2,0;4)");
  auto rep = verify_certificate(cert);
  c.require(rep.valid(), "certificate (2,0;4) q=2 invalid");
  c.require(family_lower_bound(cert.target, 10, cert.ctx, 2) >= 1,
            "certified lower bound k_{10,2}(2,0;4) >= 1");
  if (o.include_slow) {
    for (int p = 0; p < 10; ++p)
      c.equal(kpq_dim(RingContext{2, 0, 4}, p, 2, opts), 0,
              "k_{" + std::to_string(p) + ",2}(2,0;4)");
    c.require(kpq_dim(RingContext{2, 0, 4}, 10, 2, opts) >= 1, "k_{10,2}(2,0;4) >= 1");
  } else {
    c.detail << "(slow half skipped) ";
  }
  return finish("3 Ottaviani-Paoletti support", c, start);
}

CriterionResult criterion_endpoints() {
  auto start = Clock::now();
  Check c;
  for (int n = 1; n <= 4; ++n)
    for (int q = 0; q <= n; ++q)
      for (int b = 0; b <= 3; ++b)
        for (int d = std::max(2, b + q + 1); d <= 8; ++d) {
          RingContext ctx{n, b, d};
          auto T = default_target(n, b, d, q);
          auto [lo, hi] = veronese_range(n, b, d, q);
          auto D = static_cast<std::int64_t>(divisors_reduced(T, d, ctx).size());
          auto A = static_cast<std::int64_t>(annihilators_reduced(T, d, ctx).size());
          std::string tag = "(n=" + std::to_string(n) + ",q=" + std::to_string(q) +
                            ",b=" + std::to_string(b) + ",d=" + std::to_string(d) + ")";
          c.equal(D, lo, "divisor count vs lower endpoint " + tag);
          c.equal(A, hi, "annihilator count vs upper endpoint " + tag);
        }
  return finish("4 non-vanishing endpoints, combinatorial", c, start);
}

CriterionResult criterion_certificate_sweep() {
  auto start = Clock::now();
  Check c;
  CertificateVerifyOptions combinatorial;
  combinatorial.run_linalg = false;
  for (int n = 1; n <= 3; ++n)
    for (int q = 0; q <= n; ++q)
      for (int b = 0; b <= 2; ++b)
        for (int d = std::max(2, b + q + 1); d <= 6; ++d) {
          RingContext ctx{n, b, d};
          auto cert = build_certificate(default_target(n, b, d, q), 0, ctx, q);
          auto rep = verify_certificate(cert, combinatorial);
          c.require(rep.valid(), "certificate invalid at (n=" + std::to_string(n) +
                                     ",q=" + std::to_string(q) + ",b=" + std::to_string(b) +
                                     ",d=" + std::to_string(d) + ")");
        }
  // Three instances cross-confirmed by the rational boundary check.
  const std::vector<std::array<int, 4>> picks = {{1, 1, 0, 5}, {2, 1, 0, 3}, {2, 2, 0, 3}};
  for (auto [n, q, b, d] : picks) {
    RingContext ctx{n, b, d};
    auto cert = build_certificate(default_target(n, b, d, q), 0, ctx, q);
    CertificateVerifyOptions vo;
    vo.rational_dim_cap = vo.linalg_dim_cap;  // force the rational field
    auto rep = verify_certificate(cert, vo);
    c.require(rep.linalg_ran && rep.linalg_field == "Q",
              "rational cross-check did not run at n=" + std::to_string(n));
    c.require(rep.linalg_nonbounding,
              "cocycle unexpectedly a boundary at n=" + std::to_string(n));
  }
  return finish("5 certificate validity sweep", c, start);
}

CriterionResult criterion_hilbert(const SelftestOptions& o) {
  auto start = Clock::now();
  Check c;
  auto rational = engine_opts(o, FieldChoice::rationals());
  auto modular = engine_opts(o, FieldChoice::gf(32003));
  std::vector<std::pair<RingContext, EngineOptions>> cases = {
      {{1, 1, 3}, rational}, {{1, 0, 3}, rational}, {{2, 0, 3}, modular}};
  if (o.include_slow) cases.push_back({{2, 0, 4}, modular});
  for (auto& [ctx, opts] : cases) {
    auto t = betti_table(ctx, opts);
    auto rep = hilbert_check(t);
    c.require(rep.pass, "hilbert_check failed for (" + std::to_string(ctx.n) + "," +
                            std::to_string(ctx.b) + "," + std::to_string(ctx.d) +
                            "): " + rep.detail);
  }
  return finish("6 Hilbert identity", c, start);
}

CriterionResult criterion_reindex(const SelftestOptions& o) {
  auto start = Clock::now();
  Check c;
  auto opts = engine_opts(o, FieldChoice::gf(32003));
  // 20 cells across the instances of criteria 1-3.
  const std::vector<std::array<int, 5>> cells = {
      {1, 1, 3, 0, 0}, {1, 1, 3, 1, 0}, {1, 1, 3, 2, 1}, {1, 1, 3, 1, 1},
      {1, 0, 3, 1, 1}, {1, 0, 3, 2, 1}, {1, 0, 3, 0, 0}, {1, 0, 3, 2, 2},
      {2, 0, 3, 7, 2}, {2, 0, 3, 5, 2}, {2, 0, 3, 3, 1}, {2, 0, 3, 6, 1},
      {2, 0, 3, 0, 0}, {2, 0, 3, 4, 3}, {1, 0, 4, 2, 1}, {1, 0, 4, 3, 1},
      {1, 0, 5, 2, 1}, {2, 0, 4, 10, 2}, {2, 0, 4, 11, 2}, {2, 0, 4, 12, 3}};
  for (auto [n, b, d, p, q] : cells)
    c.require(reindex_check(RingContext{n, b, d}, p, q, opts),
              "reindex mismatch at (" + std::to_string(n) + "," + std::to_string(b) + "," +
                  std::to_string(d) + ",p=" + std::to_string(p) + ",q=" + std::to_string(q) + ")");
  return finish("7 reindex identity", c, start);
}

CriterionResult criterion_gaussian() {
  auto start = Clock::now();
  Check c;
  for (int g : {0, 2}) {
    for (double a : {0.0, 1.0}) {
      const double ref = std::exp(-a * a / 2);
      const double tol = a == 0.0 ? 0.02 : 0.03;
      double e75 = std::abs(curve_gaussian_normalized(g, 75, a) - ref);
      double e150 = std::abs(curve_gaussian_normalized(g, 150, a) - ref);
      double e300 = std::abs(curve_gaussian_normalized(g, 300, a) - ref);
      std::string tag = "g=" + std::to_string(g) + ",a=" + std::to_string(a);
      std::ostringstream err;
      err.precision(4);
      err << e75 << " -> " << e150 << " -> " << e300;
      c.require(e300 < tol, "error at d=300 (" + tag + ") is " + err.str() +
                                ", tolerance " + std::to_string(tol));
      c.require(e150 < e75 && e300 < e150,
                "error not decreasing for " + tag + ": " + err.str());
    }
  }
  return finish("8 Gaussian limit, formula level", c, start);
}

CriterionResult criterion_bs_roundtrip() {
  auto start = Clock::now();
  Check c;
  auto p12 = pure_table(1, 2);
  c.require(p12.betti == std::vector<BigRat>{1, 3, 2}, "pure_table(1,2) != (1,3,2)");
  std::mt19937_64 gen(424242);
  const int r = 12;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<BigRat> x;
    for (int i = 0; i < r; ++i) {
      auto num = static_cast<std::int64_t>(gen() % 30);  // zeros included
      auto den = static_cast<std::int64_t>(gen() % 9 + 1);
      x.emplace_back(num, den);
    }
    auto dec = decompose(synthesize(x, r));
    c.require(dec.coefficients == x, "round trip failed at trial " + std::to_string(trial));
    if (!c.pass) break;
  }
  return finish("9 Boij-Soderberg round trip", c, start);
}

CriterionResult criterion_profiles() {
  auto start = Clock::now();
  Check c;
  // Tolerances frozen against the calibration run with this seed.
  auto st = sample_profiles(400, 500, 20260823ull, SampleDistribution::Uniform01,
                            {0.5, 1.0});
  std::ostringstream got;
  got.precision(4);
  got << "median errors: a=0.5: " << st.points[0].abs_err_median
      << ", a=1: " << st.points[1].abs_err_median;
  c.require(st.points[0].abs_err_median < 0.1, "rho(0.5) off; " + got.str());
  c.require(st.points[1].abs_err_median < 0.1, "rho(1) off; " + got.str());
  return finish("10 random-profile statistics (seed 20260823)", c, start);
}

CriterionResult criterion_watch_trigger(const SelftestOptions& o) {
  auto start = Clock::now();
  Check c;
  auto t = betti_table(RingContext{2, 0, 3}, engine_opts(o, FieldChoice::gf(32003)));
  c.require(counterexample_watch(t).empty(), "clean table raised a candidate");
  auto corrupted = t;
  corrupted.set(3, 2, 1);  // inside the conjectured vanishing region
  auto hits = counterexample_watch(corrupted);
  c.require(!hits.empty(), "corrupted table did not trigger the watch");
  return finish("11 counterexample watch trigger", c, start);
}

}  // namespace

std::vector<CriterionResult> run_selftest(const SelftestOptions& opts) {
  std::vector<CriterionResult> out;
  out.push_back(criterion_reference_tables(opts));
  out.push_back(criterion_curve_formula(opts));
  out.push_back(criterion_ottaviani_paoletti(opts));
  out.push_back(criterion_endpoints());
  out.push_back(criterion_certificate_sweep());
  out.push_back(criterion_hilbert(opts));
  out.push_back(criterion_reindex(opts));
  out.push_back(criterion_gaussian());
  out.push_back(criterion_bs_roundtrip());
  out.push_back(criterion_profiles());
  out.push_back(criterion_watch_trigger(opts));
  return out;
}

}  // namespace syzlab
