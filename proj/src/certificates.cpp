#include "certificates.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "bigmath.hpp"
#include "json.hpp"
#include "koszul_engine.hpp"

namespace syzlab {

Monomial default_target(int n, int b, int d, int q) {
  if (b < 0 || q < 0 || q > n || d < b + q + 1)
    throw std::invalid_argument("default_target requires b >= 0, 0 <= q <= n, d >= b+q+1");
  std::vector<std::uint16_t> exps(static_cast<std::size_t>(n + 1), 0);
  exps[0] = static_cast<std::uint16_t>(b + q);
  for (int i = 1; i <= q; ++i) exps[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(d - 1);
  return Monomial(std::move(exps));
}

Certificate build_certificate(const Monomial& T, int extra, const RingContext& ctx, int q) {
  if (extra < 0) throw std::invalid_argument("extra must be nonnegative");
  auto divisors = divisors_reduced(T, ctx.d, ctx);
  auto annihilators = annihilators_reduced(T, ctx.d, ctx);
  std::vector<Monomial> spare;  // annihilators that are not divisors, basis order
  std::set_difference(annihilators.begin(), annihilators.end(), divisors.begin(),
                      divisors.end(), std::back_inserter(spare));
  if (static_cast<std::size_t>(extra) > spare.size())
    throw std::invalid_argument("not enough annihilators: requested " +
                                std::to_string(extra) + " extra, only " +
                                std::to_string(spare.size()) + " available");
  Certificate c;
  c.ctx = ctx;
  c.q = q;
  c.target = T;
  c.wedge = divisors;
  c.wedge.insert(c.wedge.end(), spare.begin(), spare.begin() + extra);
  std::sort(c.wedge.begin(), c.wedge.end());
  return c;
}

namespace {

bool well_formed(const Certificate& c) {
  if (!c.target.reduced(c.ctx.d)) return false;
  if (c.target.degree() != c.q * c.ctx.d + c.ctx.b) return false;
  std::set<Monomial> seen;
  for (const auto& m : c.wedge) {
    if (m.degree() != c.ctx.d || !m.reduced(c.ctx.d)) return false;
    if (!seen.insert(m).second) return false;
  }
  return true;
}

}  // namespace

CertificateReport verify_certificate(const Certificate& c,
                                     const CertificateVerifyOptions& opts) {
  CertificateReport rep;
  if (!well_formed(c)) return rep;

  rep.is_cycle = true;
  for (const auto& m : c.wedge)
    if (mul_reduced(m, c.target, c.ctx)) rep.is_cycle = false;

  auto divisors = divisors_reduced(c.target, c.ctx.d, c.ctx);
  std::vector<Monomial> wedge_sorted = c.wedge;
  std::sort(wedge_sorted.begin(), wedge_sorted.end());
  bool contains_all = std::includes(wedge_sorted.begin(), wedge_sorted.end(),
                                    divisors.begin(), divisors.end());
  rep.is_combinatorially_nonbounding = rep.is_cycle && contains_all;

  if (!opts.run_linalg || !rep.valid()) return rep;

  const int p = c.p();
  const auto basis_d = reduced_basis(c.ctx, c.ctx.d);
  const auto middle_t = reduced_basis(c.ctx, c.q * c.ctx.d + c.ctx.b);
  const std::int64_t middle =
      wedge_dim(static_cast<std::int64_t>(basis_d.size()), p) *
      static_cast<std::int64_t>(middle_t.size());
  if (middle == 0 || middle > opts.linalg_dim_cap) return rep;

  std::vector<int> indices;
  for (const auto& m : wedge_sorted) {
    auto it = std::lower_bound(basis_d.begin(), basis_d.end(), m);
    if (it == basis_d.end() || *it != m) return rep;
    indices.push_back(static_cast<int>(it - basis_d.begin()));
  }
  auto tit = std::lower_bound(middle_t.begin(), middle_t.end(), c.target);
  if (tit == middle_t.end() || *tit != c.target) return rep;

  std::vector<std::int64_t> v(static_cast<std::size_t>(middle), 0);
  const std::int64_t vi = wedge_colex_rank(indices) *
                              static_cast<std::int64_t>(middle_t.size()) +
                          (tit - middle_t.begin());
  v[static_cast<std::size_t>(vi)] = 1;

  auto d_in = build_differential(c.ctx, p + 1, c.q - 1);
  FieldChoice f = middle <= opts.rational_dim_cap ? FieldChoice::rationals()
                                                  : FieldChoice::gf(32003);
  rep.linalg_ran = true;
  rep.linalg_field = f.tag();
  rep.linalg_nonbounding = !in_image(d_in, v, f, opts.linalg).in_image;
  return rep;
}

BigInt family_lower_bound(const Monomial& T, int p, const RingContext& ctx, int q) {
  const auto D = static_cast<std::int64_t>(divisors_reduced(T, ctx.d, ctx).size());
  const auto A = static_cast<std::int64_t>(annihilators_reduced(T, ctx.d, ctx).size());
  if (p < D || p > A) return 0;
  return big_binomial(A - D, p - D);
}

std::string Certificate::to_json() const {
  CertificateVerifyOptions vo;
  vo.run_linalg = false;
  auto rep = verify_certificate(*this, vo);
  nlohmann::json j;
  j["n"] = ctx.n;
  j["b"] = ctx.b;
  j["d"] = ctx.d;
  j["q"] = q;
  j["p"] = p();
  j["target"] = target.to_string();
  j["wedge"] = nlohmann::json::array();
  for (const auto& m : wedge) j["wedge"].push_back(m.to_string());
  j["flags"] = {{"is_cycle", rep.is_cycle},
                {"is_combinatorially_nonbounding", rep.is_combinatorially_nonbounding}};
  return j.dump(2);
}

std::optional<Certificate> Certificate::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) return std::nullopt;
  try {
    Certificate c;
    c.ctx = RingContext{j.at("n").get<int>(), j.at("b").get<int>(), j.at("d").get<int>()};
    c.q = j.at("q").get<int>();
    const int vars = c.ctx.n + 1;
    auto t = Monomial::parse(j.at("target").get<std::string>(), vars);
    if (!t) return std::nullopt;
    c.target = *t;
    for (const auto& w : j.at("wedge")) {
      auto m = Monomial::parse(w.get<std::string>(), vars);
      if (!m) return std::nullopt;
      c.wedge.push_back(*m);
    }
    return c;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

}  // namespace syzlab
