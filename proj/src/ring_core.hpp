#pragma once

// Bounded-exponent monomial algebra: graded bases and dimensions of the
// truncated ring Sbar = S/(z_0^d, ..., z_n^d), divisor and annihilator
// enumeration.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace syzlab {

// Exponent vector in n+1 variables. The all-zero vector is the unit
// monomial; the zero *element* of Sbar is represented out-of-band as an
// empty std::optional, never as a Monomial.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint16_t> exps) : exps_(std::move(exps)) {}

  int num_vars() const { return static_cast<int>(exps_.size()); }
  std::uint16_t exponent(int v) const { return exps_[static_cast<std::size_t>(v)]; }
  const std::vector<std::uint16_t>& exponents() const { return exps_; }

  int degree() const;

  // Every exponent <= d-1.
  bool reduced(int d) const;

  bool divides(const Monomial& other) const;

  // Text form `x0^a0*x1^a1*...` with zero exponents omitted; the unit
  // monomial renders as "1".
  std::string to_string() const;
  // Parses the text form above. num_vars fixes the variable count; returns
  // nullopt on malformed input or an out-of-range variable index.
  static std::optional<Monomial> parse(const std::string& text, int num_vars);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  // Lexicographic on exponent vectors, variable 0 most significant. This is
  // the basis order used everywhere; matrix layouts depend on it.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

 private:
  std::vector<std::uint16_t> exps_;
};

// (n, b, d): ambient dimension, twist degree, embedding degree. d is also
// the truncation exponent of Sbar.
struct RingContext {
  int n = 1;
  int b = 0;
  int d = 2;

  bool valid() const { return n >= 1 && d >= 2; }
  // Top nonzero graded degree of Sbar.
  int top_degree() const { return (n + 1) * (d - 1); }
};

// Exponent-wise sum, or nullopt when some exponent reaches d.
std::optional<Monomial> mul_reduced(const Monomial& m1, const Monomial& m2,
                                    const RingContext& ctx);

// All degree-e monomials with every exponent <= d-1, sorted lexicographically
// on exponent vectors. Empty when e < 0 or e > (n+1)(d-1).
std::vector<Monomial> reduced_basis(const RingContext& ctx, int e);

// dim Sbar_e by inclusion-exclusion; equals reduced_basis(ctx, e).size().
std::int64_t reduced_dim(const RingContext& ctx, int e);

// All reduced degree-e monomials dividing T. Requires T reduced.
std::vector<Monomial> divisors_reduced(const Monomial& T, int e, const RingContext& ctx);

// All reduced degree-e monomials m with mul_reduced(m, T) == Zero.
std::vector<Monomial> annihilators_reduced(const Monomial& T, int e, const RingContext& ctx);

// Untruncated companions, used by the brute-force oracle.
std::vector<Monomial> full_basis(int n, int e);
std::int64_t binomial_i64(std::int64_t n, std::int64_t k);

}  // namespace syzlab
