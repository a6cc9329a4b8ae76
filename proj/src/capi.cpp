#include "syzlab.h"

#include <cstring>
#include <exception>
#include <sstream>
#include <string>

#include "json.hpp"

#include "boij_soderberg.hpp"
#include "certificates.hpp"
#include "koszul_engine.hpp"
#include "predictors.hpp"
#include "selftest.hpp"

using nlohmann::json;
using namespace syzlab;

struct syz_options {
  EngineOptions engine;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

EngineOptions engine_of(const syz_options* o) {
  return o ? o->engine : EngineOptions{};
}

// Maps the exception taxonomy onto the status enum shared with CLI exit
// codes.
template <typename Fn>
syz_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SYZ_OK;
  } catch (const BudgetError& e) {
    g_last_error = e.what();
    return SYZ_ERR_BUDGET;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return SYZ_ERR_USAGE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SYZ_ERR_INTERNAL;
  }
}

RingContext make_ctx(int n, int b, int d) {
  RingContext ctx{n, b, d};
  if (!ctx.valid()) throw std::invalid_argument("need n >= 1 and d >= 2");
  return ctx;
}

syz_format checked_format(syz_format f) {
  if (f != SYZ_FORMAT_DIAGRAM && f != SYZ_FORMAT_CSV && f != SYZ_FORMAT_JSON)
    throw std::invalid_argument("unknown output format");
  return f;
}

std::string support_out(const SupportPrediction& s, syz_format f) {
  if (checked_format(f) == SYZ_FORMAT_JSON) return s.to_json();
  if (f == SYZ_FORMAT_CSV) throw std::invalid_argument("support maps have no CSV form");
  return s.render();
}

Monomial parse_target(const char* target, int n, int b, int d, int q) {
  if (!target) return default_target(n, b, d, q);
  auto m = Monomial::parse(target, n + 1);
  if (!m) throw std::invalid_argument("unparsable target monomial");
  return *m;
}

std::vector<BigRat> parse_rationals(const char* text, int r) {
  if (!text) throw std::invalid_argument("missing coefficient list");
  std::vector<BigRat> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.emplace_back(BigRat(item));
    } catch (...) {
      throw std::invalid_argument("unparsable rational: " + item);
    }
    if (out.back() < 0) throw std::invalid_argument("negative coefficient: " + item);
  }
  if (static_cast<int>(out.size()) != r)
    throw std::invalid_argument("expected " + std::to_string(r) + " coefficients, got " +
                                std::to_string(out.size()));
  return out;
}

}  // namespace

extern "C" {

const char* syz_version(void) { return "1.0.0"; }

const char* syz_error_message(void) { return g_last_error.c_str(); }

void syz_string_free(char* s) { std::free(s); }

syz_options* syz_options_new(void) { return new syz_options{}; }

void syz_options_free(syz_options* o) { delete o; }

void syz_options_set_field(syz_options* o, uint32_t modulus) {
  o->engine.field = modulus == 0 ? FieldChoice::rationals() : FieldChoice::gf(modulus);
}

void syz_options_set_budget(syz_options* o, int64_t budget) {
  o->engine.budget = budget;
}

void syz_options_set_jobs(syz_options* o, int jobs) {
  o->engine.jobs = jobs < 1 ? 1 : jobs;
}

syz_status syz_kpq(const syz_options* o, int n, int b, int d, int p, int q,
                   int64_t* out) {
  return guarded([&] { *out = kpq_dim(make_ctx(n, b, d), p, q, engine_of(o)); });
}

syz_status syz_kpq_multi_prime(const syz_options* o, int n, int b, int d, int p,
                               int q, const uint32_t* primes, size_t n_primes,
                               char** json_out) {
  return guarded([&] {
    if (!primes || n_primes == 0) throw std::invalid_argument("empty prime list");
    auto r = kpq_multi_prime(make_ctx(n, b, d), p, q,
                             std::vector<std::uint32_t>(primes, primes + n_primes),
                             engine_of(o));
    json j;
    j["primes"] = r.primes;
    j["values"] = r.values;
    j["best"] = r.best;
    j["agree"] = r.agree;
    *json_out = dup_string(j.dump());
  });
}

syz_status syz_betti_table(const syz_options* o, int n, int b, int d,
                           syz_format format, char** out) {
  return guarded([&] {
    checked_format(format);
    auto t = betti_table(make_ctx(n, b, d), engine_of(o));
    *out = dup_string(format == SYZ_FORMAT_JSON  ? t.to_json()
                      : format == SYZ_FORMAT_CSV ? t.to_csv()
                                                 : t.render_diagram());
  });
}

syz_status syz_hilbert_check(const syz_options* o, int n, int b, int d,
                             int* pass, char** detail_out) {
  return guarded([&] {
    auto rep = hilbert_check(betti_table(make_ctx(n, b, d), engine_of(o)));
    *pass = rep.pass ? 1 : 0;
    if (detail_out) *detail_out = dup_string(rep.detail);
  });
}

syz_status syz_reindex_check(const syz_options* o, int n, int b, int d, int p,
                             int q, int* pass) {
  return guarded([&] {
    *pass = reindex_check(make_ctx(n, b, d), p, q, engine_of(o)) ? 1 : 0;
  });
}

syz_status syz_brute_kpq(int n, int b, int d, int p, int q, int reduced,
                         int64_t* out) {
  return guarded([&] { *out = brute_kpq(make_ctx(n, b, d), p, q, reduced != 0); });
}

syz_status syz_reduced_dim(int n, int d, int e, int64_t* out) {
  return guarded([&] { *out = reduced_dim(make_ctx(n, 0, d), e); });
}

namespace {

BettiTable table_from_cells(int n, int b, int d, const char* cells_json,
                            const std::string& field_tag) {
  if (!cells_json) throw std::invalid_argument("missing cell list");
  json j = json::parse(cells_json, nullptr, false);
  if (!j.is_array()) throw std::invalid_argument("cell list must be a JSON array");
  BettiTable t;
  t.n = n;
  t.b = b;
  t.d = d;
  t.field_tag = field_tag;
  for (const auto& c : j) {
    int p = c.at("p").get<int>();
    int q = c.at("q").get<int>();
    if (c.value("computed", true))
      t.set(p, q, c.at("value").get<std::int64_t>());
    else {
      t.complete = false;
      t.computed[{p, q}] = false;  // renders as "?"
    }
  }
  return t;
}

}  // namespace

syz_status syz_table_render(int n, int b, int d, const char* field_tag,
                            const char* cells_json, syz_format format,
                            char** out) {
  return guarded([&] {
    checked_format(format);
    auto t = table_from_cells(n, b, d, cells_json, field_tag ? field_tag : "");
    *out = dup_string(format == SYZ_FORMAT_JSON  ? t.to_json()
                      : format == SYZ_FORMAT_CSV ? t.to_csv()
                                                 : t.render_diagram());
  });
}

syz_status syz_table_watch(int n, int b, int d, const char* cells_json,
                           char** json_out) {
  return guarded([&] {
    auto hits = counterexample_watch(table_from_cells(n, b, d, cells_json, ""));
    json j = json::array();
    for (const auto& h : hits)
      j.push_back({{"p", h.p},
                   {"q", h.q},
                   {"value", h.value},
                   {"range_lo", h.range_lo},
                   {"range_hi", h.range_hi}});
    *json_out = dup_string(j.dump());
  });
}

syz_status syz_certificate_build(int n, int b, int d, int q, const char* target,
                                 int extra, char** json_out) {
  return guarded([&] {
    auto ctx = make_ctx(n, b, d);
    auto cert = build_certificate(parse_target(target, n, b, d, q), extra, ctx, q);
    *json_out = dup_string(cert.to_json());
  });
}

syz_status syz_certificate_verify(const char* certificate_json, int run_linalg,
                                  char** report_json_out) {
  return guarded([&] {
    if (!certificate_json) throw std::invalid_argument("missing certificate");
    auto cert = Certificate::from_json(certificate_json);
    if (!cert) throw std::invalid_argument("unparsable certificate JSON");
    CertificateVerifyOptions vo;
    vo.run_linalg = run_linalg != 0;
    auto rep = verify_certificate(*cert, vo);
    json j;
    j["is_cycle"] = rep.is_cycle;
    j["is_combinatorially_nonbounding"] = rep.is_combinatorially_nonbounding;
    j["valid"] = rep.valid();
    j["linalg_ran"] = rep.linalg_ran;
    j["linalg_nonbounding"] = rep.linalg_nonbounding;
    j["linalg_field"] = rep.linalg_field;
    *report_json_out = dup_string(j.dump());
  });
}

syz_status syz_family_lower_bound(int n, int b, int d, int q, int p,
                                  const char* target, char** decimal_out) {
  return guarded([&] {
    auto ctx = make_ctx(n, b, d);
    auto bound = family_lower_bound(parse_target(target, n, b, d, q), p, ctx, q);
    *decimal_out = dup_string(bound.str());
  });
}

syz_status syz_veronese_range(int n, int b, int d, int q, int64_t* lo,
                              int64_t* hi) {
  return guarded([&] { std::tie(*lo, *hi) = veronese_range(n, b, d, q); });
}

syz_status syz_cm_range(int64_t deg_x, int n, int c, int b, int d, int q,
                        int64_t r_d, int64_t* lo, int64_t* hi) {
  return guarded([&] { std::tie(*lo, *hi) = cm_range(deg_x, n, c, b, d, q, r_d); });
}

syz_status syz_np_threshold(int family, int g, int n, int d, int k,
                            char** json_out) {
  return guarded([&] {
    if (family < 0 || family > 3) throw std::invalid_argument("unknown family");
    NpParams params;
    params.g = g;
    params.n = n;
    params.d = d;
    auto r = np_thresholds(static_cast<NpFamily>(family), params, k);
    json j;
    j["verdict"] = r.verdict == NpVerdict::Holds   ? "holds"
                   : r.verdict == NpVerdict::Fails ? "fails"
                                                   : "unknown";
    j["citation"] = r.citation;
    *json_out = dup_string(j.dump());
  });
}

syz_status syz_curve_kp1(int g, int d, int p, char** decimal_out) {
  return guarded([&] { *decimal_out = dup_string(curve_kp1(g, d, p).str()); });
}

syz_status syz_curve_gaussian(int g, int d, double a, double* out) {
  return guarded([&] { *out = curve_gaussian_normalized(g, d, a); });
}

syz_status syz_curve_support(int g, int gon, int d, int twist,
                             syz_format format, char** out) {
  return guarded([&] {
    if (twist != 0 && twist != 1) throw std::invalid_argument("unknown twist");
    auto s = curve_support(g, gon, d,
                           twist ? CurveTwist::Canonical : CurveTwist::StructureSheaf);
    *out = dup_string(support_out(s, format));
  });
}

syz_status syz_curve_duality(int g, int b, int d, int p, int64_t* p_dual,
                             int64_t* b_dual) {
  return guarded([&] { std::tie(*p_dual, *b_dual) = curve_duality_pair(g, b, d, p); });
}

syz_status syz_easy_support(int n, int64_t r_b, int64_t r_k_minus_b,
                            int64_t r_d, syz_format format, char** out) {
  return guarded([&] {
    *out = dup_string(support_out(easy_support(n, r_b, r_k_minus_b, r_d), format));
  });
}

syz_status syz_asymptotic_window(int n, int q, int64_t r_d, int d, double c1,
                                 double c2, int* nonempty, int64_t* lo,
                                 int64_t* hi) {
  return guarded([&] {
    auto w = asymptotic_window(n, q, r_d, d, c1, c2);
    *nonempty = w.has_value() ? 1 : 0;
    if (w) std::tie(*lo, *hi) = *w;
  });
}

syz_status syz_predict_veronese(int n, int b, int d, syz_format format,
                                char** out) {
  return guarded([&] {
    *out = dup_string(support_out(predict_veronese(n, b, d), format));
  });
}

syz_status syz_counterexample_watch(const syz_options* o, int n, int b, int d,
                                    char** json_out) {
  return guarded([&] {
    auto hits = counterexample_watch(betti_table(make_ctx(n, b, d), engine_of(o)));
    json j = json::array();
    for (const auto& h : hits) {
      j.push_back({{"p", h.p},
                   {"q", h.q},
                   {"value", h.value},
                   {"range_lo", h.range_lo},
                   {"range_hi", h.range_hi}});
    }
    *json_out = dup_string(j.dump());
  });
}

syz_status syz_bs_pure(int i, int r, char** json_out) {
  return guarded([&] { *json_out = dup_string(pure_table(i, r).to_json()); });
}

syz_status syz_bs_synthesize(const char* coefficients, int r, char** csv_out) {
  return guarded([&] {
    *csv_out = dup_string(synthesize(parse_rationals(coefficients, r), r).to_csv());
  });
}

syz_status syz_bs_decompose(const char* table_csv, char** json_out) {
  return guarded([&] {
    if (!table_csv) throw std::invalid_argument("missing table CSV");
    auto t = TwoRowTable::from_csv(table_csv);
    if (!t) throw std::invalid_argument("unparsable two-row table CSV");
    *json_out = dup_string(decompose(*t).to_json());
  });
}

syz_status syz_bs_sample(int r, int n_samples, uint64_t seed, int dist,
                         const double* a_grid, size_t n_a, char** csv_out) {
  return guarded([&] {
    if (dist < 0 || dist > 2) throw std::invalid_argument("unknown distribution");
    if (!a_grid || n_a == 0) throw std::invalid_argument("empty a grid");
    auto st = sample_profiles(r, n_samples, seed, static_cast<SampleDistribution>(dist),
                              std::vector<double>(a_grid, a_grid + n_a));
    *csv_out = dup_string(st.to_csv());
  });
}

syz_status syz_selftest(int include_slow, int jobs, int* all_pass,
                        char** report_out) {
  return guarded([&] {
    SelftestOptions so;
    so.include_slow = include_slow != 0;
    so.jobs = jobs < 1 ? 1 : jobs;
    auto results = run_selftest(so);
    bool all = true;
    std::ostringstream out;
    for (const auto& r : results) {
      all = all && r.pass;
      out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
      out.setf(std::ios::fixed);
      out.precision(2);
      out << " (" << r.seconds << "s)";
      if (!r.pass) out << " " << r.detail;
      out << "\n";
    }
    *all_pass = all ? 1 : 0;
    *report_out = dup_string(out.str());
  });
}

}  // extern "C"
