// Command-line surface over the C API: single cells, full tables with a
// persistent per-cell cache, certificates, predictions, closed-form
// formulas, Boij-Soderberg tools, the brute-force oracle and the
// acceptance suite.
//
// Exit codes: 0 success, 1 failed check (selftest, oracle disagreement
// reported as requested), 2 usage error, 3 budget cut with partial
// results, 4 internal inconsistency.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "syzlab.h"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

// Keyed to the elimination and differential conventions; bump on any
// change that can alter a cached value.
constexpr const char* kEngineVersion = "1";

[[noreturn]] void die(int code, const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(code);
}

void check(syz_status st) {
  if (st != SYZ_OK) die(static_cast<int>(st), syz_error_message());
}

std::string take(char* s) {
  std::string out = s ? s : "";
  syz_string_free(s);
  return out;
}

struct GlobalFlags {
  std::string field = "32003";  // prime modulus or "Q"
  std::string primes;
  std::string cache_dir;
  std::int64_t budget = 50'000'000;
  std::string format = "diagram";
  std::uint64_t seed = 0;
  int jobs = 1;

  std::uint32_t modulus() const {
    if (field == "Q" || field == "q") return 0;
    try {
      unsigned long v = std::stoul(field);
      if (v < 2 || v > 0xffffffffUL) throw std::out_of_range("");
      return static_cast<std::uint32_t>(v);
    } catch (...) {
      die(kExitUsage, "--field expects a prime modulus or Q");
    }
  }

  std::string field_tag() const {
    auto m = modulus();
    return m == 0 ? "Q" : "GF(" + std::to_string(m) + ")";
  }

  syz_format fmt() const {
    if (format == "diagram") return SYZ_FORMAT_DIAGRAM;
    if (format == "csv") return SYZ_FORMAT_CSV;
    if (format == "json") return SYZ_FORMAT_JSON;
    die(kExitUsage, "--format expects diagram, csv or json");
  }

  std::vector<std::uint32_t> prime_list() const {
    std::vector<std::uint32_t> out;
    std::istringstream in(primes);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
      } catch (...) {
        die(kExitUsage, "--primes expects a comma-separated list of primes");
      }
    }
    return out;
  }
};

struct OptionsHandle {
  syz_options* o;
  explicit OptionsHandle(const GlobalFlags& g) : o(syz_options_new()) {
    syz_options_set_field(o, g.modulus());
    syz_options_set_budget(o, g.budget);
    syz_options_set_jobs(o, g.jobs);
  }
  ~OptionsHandle() { syz_options_free(o); }
};

// One file per cell, filename = FNV-1a of the key string. Records carry
// the full key so hash collisions and stale versions are detected, not
// trusted.
class CellCache {
 public:
  explicit CellCache(std::string dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }

  std::string key(int n, int b, int d, int p, int q, const std::string& field) const {
    std::ostringstream k;
    k << "kpq:v" << kEngineVersion << ":" << n << ":" << b << ":" << d << ":" << p
      << ":" << q << ":" << field;
    return k.str();
  }

  std::optional<std::int64_t> get(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_of(key));
    if (!in) return std::nullopt;
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded() || j.value("key", "") != key || !j.contains("value")) {
      std::cerr << "warning: ignoring corrupt cache record for " << key << "\n";
      return std::nullopt;
    }
    return j["value"].get<std::int64_t>();
  }

  void put(const std::string& key, std::int64_t value, double wall_seconds) const {
    if (!enabled()) return;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    json j;
    j["key"] = key;
    j["value"] = value;
    j["wall_seconds"] = wall_seconds;
    j["written_at"] = static_cast<std::int64_t>(std::time(nullptr));
    auto target = path_of(key);
    auto tmp = target + ".tmp." + std::to_string(::getpid());
    {
      std::ofstream out(tmp);
      out << j.dump();
    }
    fs::rename(tmp, target, ec);
    if (ec) fs::remove(tmp, ec);
  }

 private:
  std::string path_of(const std::string& key) const {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) {
      h ^= c;
      h *= 1099511628211ull;
    }
    std::ostringstream name;
    name << std::hex << h << ".json";
    return (fs::path(dir_) / name.str()).string();
  }

  std::string dir_;
};

struct Cell {
  int p, q;
  std::int64_t value = 0;
  bool computed = false;
  bool over_budget = false;
};

json cells_to_json(const std::vector<Cell>& cells) {
  json j = json::array();
  for (const auto& c : cells)
    j.push_back({{"p", c.p}, {"q", c.q}, {"value", c.value}, {"computed", c.computed}});
  return j;
}

// Per-cell jobs over the worker pool; cached cells are served without
// recomputation, so an interrupted run resumes where it stopped.
std::vector<Cell> compute_table_cells(const GlobalFlags& g, const CellCache& cache,
                                      int n, int b, int d, bool* budget_cut) {
  std::int64_t r_d = 0;
  check(syz_reduced_dim(n, d, d, &r_d));
  std::vector<Cell> cells;
  for (int q = 0; q <= n + 1; ++q)
    for (int p = 0; p <= static_cast<int>(r_d); ++p) cells.push_back({p, q});

  std::atomic<std::size_t> next{0};
  std::mutex cache_mu;
  auto worker = [&] {
    OptionsHandle opts(g);
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      Cell& c = cells[i];
      auto key = cache.key(n, b, d, c.p, c.q, g.field_tag());
      {
        std::lock_guard lock(cache_mu);
        if (auto hit = cache.get(key)) {
          c.value = *hit;
          c.computed = true;
          continue;
        }
      }
      auto t0 = std::chrono::steady_clock::now();
      std::int64_t v = 0;
      syz_status st = syz_kpq(opts.o, n, b, d, c.p, c.q, &v);
      if (st == SYZ_ERR_BUDGET) {
        c.over_budget = true;
        continue;
      }
      if (st != SYZ_OK) die(static_cast<int>(st), syz_error_message());
      c.value = v;
      c.computed = true;
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::lock_guard lock(cache_mu);
      cache.put(key, v, secs);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < g.jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  *budget_cut = false;
  for (const auto& c : cells) *budget_cut = *budget_cut || c.over_budget;
  return cells;
}

int cmd_kpq(const GlobalFlags& g, int n, int b, int d, int p, int q) {
  if (!g.primes.empty()) {
    auto primes = g.prime_list();
    OptionsHandle opts(g);
    char* out = nullptr;
    check(syz_kpq_multi_prime(opts.o, n, b, d, p, q, primes.data(), primes.size(), &out));
    std::cout << take(out) << "\n";
    return 0;
  }
  CellCache cache(g.cache_dir);
  auto key = cache.key(n, b, d, p, q, g.field_tag());
  if (auto hit = cache.get(key)) {
    std::cout << *hit << "\n";
    return 0;
  }
  OptionsHandle opts(g);
  std::int64_t v = 0;
  auto t0 = std::chrono::steady_clock::now();
  check(syz_kpq(opts.o, n, b, d, p, q, &v));
  cache.put(key, v, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  std::cout << v << "\n";
  return 0;
}

int cmd_table(const GlobalFlags& g, int n, int b, int d, bool run_check) {
  CellCache cache(g.cache_dir);
  bool budget_cut = false;
  auto cells = compute_table_cells(g, cache, n, b, d, &budget_cut);
  auto cells_json = cells_to_json(cells).dump();

  char* rendered = nullptr;
  check(syz_table_render(n, b, d, g.field_tag().c_str(), cells_json.c_str(), g.fmt(),
                         &rendered));
  std::cout << take(rendered);

  char* watch = nullptr;
  check(syz_table_watch(n, b, d, cells_json.c_str(), &watch));
  auto hits = json::parse(take(watch));
  for (const auto& h : hits)
    std::cerr << "POSSIBLE COUNTEREXAMPLE: k_{" << h["p"] << "," << h["q"]
              << "} = " << h["value"] << " outside guaranteed range ["
              << h["range_lo"] << ", " << h["range_hi"] << "]\n";

  if (run_check && !budget_cut) {
    OptionsHandle opts(g);
    int pass = 0;
    char* detail = nullptr;
    check(syz_hilbert_check(opts.o, n, b, d, &pass, &detail));
    auto text = take(detail);
    if (!pass) die(kExitInternal, "Euler characteristic check failed: " + text);
    std::cerr << "Euler characteristic check passed\n";
  }
  if (budget_cut) {
    std::cerr << "note: some cells exceeded the budget and are shown as ?\n";
    return kExitBudget;
  }
  return 0;
}

int cmd_certify(const GlobalFlags& g, int n, int b, int d, int q,
                const std::string& target, int extra, const std::string& out_file,
                const std::string& verify_file, bool no_linalg) {
  std::string cert_json;
  if (!verify_file.empty()) {
    std::ifstream in(verify_file);
    if (!in) die(kExitUsage, "cannot read " + verify_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    cert_json = buf.str();
  } else {
    char* built = nullptr;
    check(syz_certificate_build(n, b, d, q, target.empty() ? nullptr : target.c_str(),
                                extra, &built));
    cert_json = take(built);
  }
  char* report = nullptr;
  check(syz_certificate_verify(cert_json.c_str(), no_linalg ? 0 : 1, &report));
  auto rep = json::parse(take(report));
  if (!out_file.empty()) {
    std::ofstream out(out_file);
    out << cert_json << "\n";
  } else if (verify_file.empty()) {
    std::cout << cert_json << "\n";
  }
  std::cerr << "certificate " << (rep["valid"].get<bool>() ? "valid" : "INVALID");
  if (rep["linalg_ran"].get<bool>())
    std::cerr << "; cross-checked over " << rep["linalg_field"].get<std::string>()
              << (rep["linalg_nonbounding"].get<bool>() ? ": not a boundary" : ": BOUNDARY");
  std::cerr << "\n";
  return rep["valid"].get<bool>() ? 0 : kExitCheckFailed;
}

int cmd_oracle(const GlobalFlags& g, int n, int b, int d, int p, int q, bool full) {
  std::int64_t brute = 0;
  check(syz_brute_kpq(n, b, d, p, q, full ? 0 : 1, &brute));
  std::cout << "oracle: " << brute << "\n";
  if (full) return 0;  // untruncated values have no engine counterpart
  OptionsHandle opts(g);
  std::int64_t engine = 0;
  check(syz_kpq(opts.o, n, b, d, p, q, &engine));
  std::cout << "engine: " << engine << "\n";
  if (engine != brute) die(kExitInternal, "engine disagrees with the oracle");
  std::cout << "agree\n";
  return 0;
}

int cmd_selftest(const GlobalFlags& g, bool skip_slow) {
  int all_pass = 0;
  char* report = nullptr;
  check(syz_selftest(skip_slow ? 0 : 1, g.jobs, &all_pass, &report));
  std::cout << take(report);
  return all_pass ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Koszul cohomology workbench for Veronese embeddings"};
  app.require_subcommand(1);

  GlobalFlags g;
  if (const char* env = std::getenv("SYZLAB_CACHE")) g.cache_dir = env;
  app.add_option("--field", g.field, "coefficient field: a prime modulus or Q");
  app.add_option("--primes", g.primes, "comma-separated primes for multi-prime runs");
  app.add_option("--cache-dir", g.cache_dir, "cell cache directory (env SYZLAB_CACHE)");
  app.add_option("--budget", g.budget, "strand size budget");
  app.add_option("--format", g.format, "output format: diagram, csv or json");
  app.add_option("--seed", g.seed, "sampler seed");
  app.add_option("--jobs", g.jobs, "worker threads");

  int n = 1, b = 0, d = 2, p = 0, q = 0;

  auto* kpq = app.add_subcommand("kpq", "one Betti number K_{p,q}(n,b;d)");
  kpq->add_option("-n", n)->required();
  kpq->add_option("-b", b)->required();
  kpq->add_option("-d", d)->required();
  kpq->add_option("-p", p)->required();
  kpq->add_option("-q", q)->required();

  bool table_check = false;
  auto* table = app.add_subcommand("table", "full Betti diagram");
  table->add_option("-n", n)->required();
  table->add_option("-b", b)->required();
  table->add_option("-d", d)->required();
  table->add_flag("--check", table_check, "verify the Euler characteristic identity");

  std::string target, cert_out, cert_verify;
  int extra = 0;
  bool no_linalg = false;
  auto* certify = app.add_subcommand("certify", "build or re-check a nonvanishing certificate");
  certify->add_option("-n", n);
  certify->add_option("-b", b);
  certify->add_option("-d", d);
  certify->add_option("-q", q);
  certify->add_option("--target", target, "target monomial (default z_1^{d-1}..z_q^{d-1} z_0^{b+q})");
  certify->add_option("--extra", extra, "extra non-divisor annihilators in the wedge");
  certify->add_option("-o,--out", cert_out, "write the certificate JSON here");
  certify->add_option("--verify", cert_verify, "re-check an existing certificate file");
  certify->add_flag("--no-linalg", no_linalg, "skip the boundary cross-check");

  auto* predict = app.add_subcommand("predict", "support prediction with citations");
  predict->add_option("-n", n)->required();
  predict->add_option("-b", b)->required();
  predict->add_option("-d", d)->required();

  // range: closed-form intervals and property thresholds
  auto* range = app.add_subcommand("range", "closed-form ranges and N_p thresholds");
  range->require_subcommand(1);
  auto* r_ver = range->add_subcommand("veronese", "guaranteed non-vanishing interval");
  r_ver->add_option("-n", n)->required();
  r_ver->add_option("-b", b)->required();
  r_ver->add_option("-d", d)->required();
  r_ver->add_option("-q", q)->required();
  std::int64_t degx = 0, r_d_in = 0;
  int creg = 0;
  auto* r_cm = range->add_subcommand("cm", "interval for a projectively Cohen-Macaulay X");
  r_cm->add_option("--degx", degx)->required();
  r_cm->add_option("-n", n)->required();
  r_cm->add_option("-c", creg, "regularity")->required();
  r_cm->add_option("-b", b)->required();
  r_cm->add_option("-d", d)->required();
  r_cm->add_option("-q", q)->required();
  r_cm->add_option("--rd", r_d_in, "r(dL)")->required();
  std::string family = "curve";
  int genus = 0, k_prop = 0;
  auto* r_np = range->add_subcommand("np", "property N_k thresholds");
  r_np->add_option("--family", family, "curve, veronese, adjoint or abelian")->required();
  r_np->add_option("-g", genus);
  r_np->add_option("-n", n);
  r_np->add_option("-d", d)->required();
  r_np->add_option("-k", k_prop)->required();

  // curve: genus-g closed forms
  auto* curve = app.add_subcommand("curve", "curve-case formulas and support");
  curve->require_subcommand(1);
  auto* c_kp1 = curve->add_subcommand("kp1", "exact k_{p,1} of a degree-d curve");
  c_kp1->add_option("-g", genus)->required();
  c_kp1->add_option("-d", d)->required();
  c_kp1->add_option("-p", p)->required();
  double a_val = 0;
  auto* c_gauss = curve->add_subcommand("gaussian", "normalized profile value at offset a");
  c_gauss->add_option("-g", genus)->required();
  c_gauss->add_option("-d", d)->required();
  c_gauss->add_option("-a", a_val)->required();
  int gon = 2;
  bool canonical = false;
  auto* c_sup = curve->add_subcommand("support", "full support map of a gonality-gon curve");
  c_sup->add_option("-g", genus)->required();
  c_sup->add_option("--gon", gon)->required();
  c_sup->add_option("-d", d)->required();
  c_sup->add_flag("--canonical", canonical, "twist by the canonical bundle");
  auto* c_dual = curve->add_subcommand("duality", "Serre-duality partner cell");
  c_dual->add_option("-g", genus)->required();
  c_dual->add_option("-b", b)->required();
  c_dual->add_option("-d", d)->required();
  c_dual->add_option("-p", p)->required();

  // bs: two-row Boij-Soderberg tools
  auto* bs = app.add_subcommand("bs", "two-row Boij-Soderberg tools");
  bs->require_subcommand(1);
  int bs_i = 1, bs_r = 1, bs_n = 100;
  auto* bs_pure = bs->add_subcommand("pure", "pure two-row table with jump index i");
  bs_pure->add_option("-i", bs_i)->required();
  bs_pure->add_option("-r", bs_r)->required();
  std::string coeffs;
  auto* bs_syn = bs->add_subcommand("synthesize", "table from nonnegative coefficients");
  bs_syn->add_option("-r", bs_r)->required();
  bs_syn->add_option("--coeffs", coeffs, "comma-separated rationals x_1..x_r")->required();
  std::string bs_file;
  auto* bs_dec = bs->add_subcommand("decompose", "greedy exact pure decomposition");
  bs_dec->add_option("--file", bs_file, "two-row table CSV (default stdin)");
  std::string dist = "uniform", a_grid_text = "0,0.5,1,1.5,2";
  auto* bs_sample = bs->add_subcommand("sample", "random-table profile statistics");
  bs_sample->add_option("-r", bs_r)->required();
  bs_sample->add_option("-N", bs_n, "number of samples")->required();
  bs_sample->add_option("--dist", dist, "uniform, exponential or beta");
  bs_sample->add_option("--a-grid", a_grid_text, "comma-separated offsets");

  auto* oracle = app.add_subcommand("oracle", "dense-rational brute-force cross-check");
  oracle->add_option("-n", n)->required();
  oracle->add_option("-b", b)->required();
  oracle->add_option("-d", d)->required();
  oracle->add_option("-p", p)->required();
  oracle->add_option("-q", q)->required();
  bool full_ring = false;
  oracle->add_flag("--full", full_ring, "untruncated ring instead of the Artinian reduction");

  bool skip_slow = false;
  auto* selftest = app.add_subcommand("selftest", "acceptance suite");
  selftest->add_flag("--skip-slow", skip_slow, "skip the slowest criterion halves");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (kpq->parsed()) return cmd_kpq(g, n, b, d, p, q);
  if (table->parsed()) return cmd_table(g, n, b, d, table_check);
  if (certify->parsed())
    return cmd_certify(g, n, b, d, q, target, extra, cert_out, cert_verify, no_linalg);
  if (predict->parsed()) {
    char* out = nullptr;
    check(syz_predict_veronese(n, b, d, g.fmt(), &out));
    std::cout << take(out);
    return 0;
  }
  if (r_ver->parsed()) {
    std::int64_t lo = 0, hi = 0;
    check(syz_veronese_range(n, b, d, q, &lo, &hi));
    std::cout << "[" << lo << ", " << hi << "]\n";
    return 0;
  }
  if (r_cm->parsed()) {
    std::int64_t lo = 0, hi = 0;
    check(syz_cm_range(degx, n, creg, b, d, q, r_d_in, &lo, &hi));
    std::cout << "[" << lo << ", " << hi << "]\n";
    return 0;
  }
  if (r_np->parsed()) {
    int fam = family == "curve"      ? 0
              : family == "veronese" ? 1
              : family == "adjoint"  ? 2
              : family == "abelian"  ? 3
                                     : -1;
    if (fam < 0) die(kExitUsage, "--family expects curve, veronese, adjoint or abelian");
    char* out = nullptr;
    check(syz_np_threshold(fam, genus, n, d, k_prop, &out));
    std::cout << take(out) << "\n";
    return 0;
  }
  if (c_kp1->parsed()) {
    char* out = nullptr;
    check(syz_curve_kp1(genus, d, p, &out));
    std::cout << take(out) << "\n";
    return 0;
  }
  if (c_gauss->parsed()) {
    double v = 0;
    check(syz_curve_gaussian(genus, d, a_val, &v));
    std::printf("%.12g\n", v);
    return 0;
  }
  if (c_sup->parsed()) {
    char* out = nullptr;
    check(syz_curve_support(genus, gon, d, canonical ? 1 : 0, g.fmt(), &out));
    std::cout << take(out);
    return 0;
  }
  if (c_dual->parsed()) {
    std::int64_t pd = 0, bd = 0;
    check(syz_curve_duality(genus, b, d, p, &pd, &bd));
    std::cout << "(p', b') = (" << pd << ", " << bd << ")\n";
    return 0;
  }
  if (bs_pure->parsed()) {
    char* out = nullptr;
    check(syz_bs_pure(bs_i, bs_r, &out));
    std::cout << take(out) << "\n";
    return 0;
  }
  if (bs_syn->parsed()) {
    char* out = nullptr;
    check(syz_bs_synthesize(coeffs.c_str(), bs_r, &out));
    std::cout << take(out);
    return 0;
  }
  if (bs_dec->parsed()) {
    std::string csv;
    if (bs_file.empty()) {
      std::ostringstream buf;
      buf << std::cin.rdbuf();
      csv = buf.str();
    } else {
      std::ifstream in(bs_file);
      if (!in) die(kExitUsage, "cannot read " + bs_file);
      std::ostringstream buf;
      buf << in.rdbuf();
      csv = buf.str();
    }
    char* out = nullptr;
    check(syz_bs_decompose(csv.c_str(), &out));
    std::cout << take(out) << "\n";
    return 0;
  }
  if (bs_sample->parsed()) {
    int dist_id = dist == "uniform"       ? 0
                  : dist == "exponential" ? 1
                  : dist == "beta"        ? 2
                                          : -1;
    if (dist_id < 0) die(kExitUsage, "--dist expects uniform, exponential or beta");
    std::vector<double> grid;
    std::istringstream in(a_grid_text);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        grid.push_back(std::stod(item));
      } catch (...) {
        die(kExitUsage, "--a-grid expects comma-separated numbers");
      }
    }
    char* out = nullptr;
    check(syz_bs_sample(bs_r, bs_n, g.seed, dist_id, grid.data(), grid.size(), &out));
    std::cout << take(out);
    return 0;
  }
  if (oracle->parsed()) return cmd_oracle(g, n, b, d, p, q, full_ring);
  if (selftest->parsed()) return cmd_selftest(g, skip_slow);

  return kExitUsage;
}
