#pragma once

// Explicit monomial cocycles certifying K_{p,q}(n,b;d) != 0. The
// combinatorial verdict is field-independent; an optional linear-algebra
// cross-check confirms the cocycle is not a boundary.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exact_linalg.hpp"
#include "ring_core.hpp"

namespace syzlab {

// A wedge-of-monomials (x) target-monomial cocycle. |wedge| is the
// homological index p being certified; target degree is qd+b.
struct Certificate {
  RingContext ctx;
  int q = 0;
  Monomial target;
  std::vector<Monomial> wedge;

  int p() const { return static_cast<int>(wedge.size()); }
  std::string to_json() const;
  static std::optional<Certificate> from_json(const std::string& text);
};

struct CertificateReport {
  bool is_cycle = false;
  bool is_combinatorially_nonbounding = false;
  // Linear-algebra cross-check (advisory): set when the strand fit the
  // budget.
  bool linalg_ran = false;
  bool linalg_nonbounding = false;
  std::string linalg_field;

  bool valid() const { return is_cycle && is_combinatorially_nonbounding; }
};

// z_1^{d-1} ... z_q^{d-1} z_0^{b+q}; reduced because b+q <= d-1.
// Requires d >= b+q+1, 0 <= q <= n, b >= 0.
Monomial default_target(int n, int b, int d, int q);

// Wedge = all reduced degree-d divisors of T plus the first `extra`
// non-divisor annihilators in basis order. Throws std::invalid_argument
// when not enough annihilators exist.
Certificate build_certificate(const Monomial& T, int extra, const RingContext& ctx, int q);

struct CertificateVerifyOptions {
  bool run_linalg = true;
  // Rational cross-check below this middle-term dimension, GF(32003) above,
  // skipped entirely past linalg_dim_cap.
  std::int64_t rational_dim_cap = 3000;
  std::int64_t linalg_dim_cap = 200'000;
  LinalgOptions linalg;
};

CertificateReport verify_certificate(const Certificate& c,
                                     const CertificateVerifyOptions& opts = {});

// C(A - D, p - D) with D = #divisors, A = #annihilators of T in degree d;
// a certified lower bound for k_{p,q}. Zero when p < D or p > A.
BigInt family_lower_bound(const Monomial& T, int p, const RingContext& ctx, int q);

}  // namespace syzlab
