#include "ring_core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace syzlab {

int Monomial::degree() const {
  int deg = 0;
  for (auto e : exps_) deg += e;
  return deg;
}

bool Monomial::reduced(int d) const {
  for (auto e : exps_)
    if (e >= d) return false;
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() != other.exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i);
    if (exps_[i] > 1) {
      out += '^';
      out += std::to_string(exps_[i]);
    }
  }
  return out.empty() ? "1" : out;
}

std::optional<Monomial> Monomial::parse(const std::string& text, int num_vars) {
  std::vector<std::uint16_t> exps(static_cast<std::size_t>(num_vars), 0);
  if (text == "1") return Monomial(exps);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != 'x') return std::nullopt;
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) return std::nullopt;
    int var = std::stoi(text.substr(start, pos - start));
    if (var < 0 || var >= num_vars) return std::nullopt;
    long exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) return std::nullopt;
      exp = std::stol(text.substr(start, pos - start));
      if (exp < 0 || exp > 0xffff) return std::nullopt;
    }
    exps[static_cast<std::size_t>(var)] =
        static_cast<std::uint16_t>(exps[static_cast<std::size_t>(var)] + exp);
    if (pos < text.size()) {
      if (text[pos] != '*') return std::nullopt;
      ++pos;
      if (pos == text.size()) return std::nullopt;
    }
  }
  return Monomial(exps);
}

std::optional<Monomial> mul_reduced(const Monomial& m1, const Monomial& m2,
                                    const RingContext& ctx) {
  std::vector<std::uint16_t> out(m1.exponents());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint16_t>(out[i] + m2.exponent(static_cast<int>(i)));
    if (out[i] >= ctx.d) return std::nullopt;
  }
  return Monomial(std::move(out));
}

namespace {

// Enumerates exponent vectors of the given total degree with per-variable
// caps, in lexicographic order (variable 0 most significant, descending
// from cap would be reverse-lex; we emit ascending lex).
void enumerate_capped(const std::vector<int>& caps, int degree,
                      std::vector<std::uint16_t>& cur, std::size_t var,
                      std::vector<Monomial>& out) {
  if (var + 1 == cur.size()) {
    if (degree <= caps[var]) {
      cur[var] = static_cast<std::uint16_t>(degree);
      out.emplace_back(cur);
    }
    return;
  }
  int hi = std::min(caps[var], degree);
  for (int e = 0; e <= hi; ++e) {
    cur[var] = static_cast<std::uint16_t>(e);
    enumerate_capped(caps, degree - e, cur, var + 1, out);
  }
}

std::vector<Monomial> enumerate(const std::vector<int>& caps, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::vector<std::uint16_t> cur(caps.size(), 0);
  enumerate_capped(caps, degree, cur, 0, out);
  return out;
}

}  // namespace

std::vector<Monomial> reduced_basis(const RingContext& ctx, int e) {
  std::vector<int> caps(static_cast<std::size_t>(ctx.n + 1), ctx.d - 1);
  return enumerate(caps, e);
}

std::vector<Monomial> full_basis(int n, int e) {
  std::vector<int> caps(static_cast<std::size_t>(n + 1), e < 0 ? 0 : e);
  return enumerate(caps, e);
}

std::int64_t binomial_i64(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::int64_t reduced_dim(const RingContext& ctx, int e) {
  if (e < 0) return 0;
  std::int64_t total = 0;
  for (int j = 0; j <= ctx.n + 1 && e - j * ctx.d >= 0; ++j) {
    std::int64_t term =
        binomial_i64(ctx.n + 1, j) * binomial_i64(e - j * ctx.d + ctx.n, ctx.n);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

std::vector<Monomial> divisors_reduced(const Monomial& T, int e, const RingContext& ctx) {
  std::vector<int> caps;
  caps.reserve(T.exponents().size());
  for (auto a : T.exponents()) caps.push_back(std::min<int>(a, ctx.d - 1));
  return enumerate(caps, e);
}

std::vector<Monomial> annihilators_reduced(const Monomial& T, int e, const RingContext& ctx) {
  std::vector<Monomial> out;
  for (auto& m : reduced_basis(ctx, e))
    if (!mul_reduced(m, T, ctx)) out.push_back(m);
  return out;
}

}  // namespace syzlab
