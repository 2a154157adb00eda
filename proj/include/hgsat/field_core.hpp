#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "hgsat/modular.hpp"

namespace hgsat {

/// Immutable per-prime context: F_p tables plus the Teichmuller lift of the
/// primitive root in Z/p^N. Shared read-only across workers.
///
/// Characters are exponents of omega, the Teichmuller character: the value
/// of omega^k at x is omega(g)^(k * dlog x). The quadratic character is
/// omega^((p-1)/2), A4 = omega^((p-1)/4), psi6 = omega^((p-1)/6).
class PrimeCtx {
 public:
  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t primitive_root() const noexcept { return g_; }
  int precision() const noexcept { return precision_; }
  const Modulus& modulus() const noexcept { return modulus_; }
  std::uint64_t group_order() const noexcept { return p_ - 1; }

  std::uint64_t reduce(std::int64_t x) const noexcept {
    const auto p = static_cast<std::int64_t>(p_);
    const std::int64_t r = x % p;
    return static_cast<std::uint64_t>(r < 0 ? r + p : r);
  }
  /// Index of x base g; kNoLog at 0.
  std::uint32_t dlog(std::uint64_t x) const noexcept { return dlog_[x % p_]; }
  int legendre(std::uint64_t x) const noexcept { return legendre_[x % p_]; }
  /// omega(g)^e mod p^N, e taken mod p-1.
  std::uint64_t omega_power(std::uint64_t e) const noexcept { return omega_powers_[e % (p_ - 1)]; }
  /// omega(x) mod p^N via the dlog table; 0 at x = 0.
  std::uint64_t omega(std::uint64_t x) const noexcept {
    const std::uint32_t d = dlog(x);
    return d == kNoLog ? 0 : omega_powers_[d];
  }
  /// omega^k(x) mod p^N for a character exponent k (any integer); 0 at x = 0.
  std::uint64_t character(std::int64_t k, std::uint64_t x) const noexcept;

  std::uint64_t mul_mod_p(std::uint64_t a, std::uint64_t b) const noexcept { return a * b % p_; }
  std::uint64_t inv_mod_p(std::uint64_t a) const;

  /// Largest p with p^N below the word limit at precision N.
  static std::uint64_t max_prime_for_precision(int precision) noexcept;

  friend PrimeCtx make_prime_ctx(std::uint64_t p, int precision);

 private:
  PrimeCtx(std::uint64_t p, int precision, std::uint64_t modulus);

  std::uint64_t p_;
  std::uint64_t g_ = 0;
  int precision_;
  Modulus modulus_;
  std::vector<std::uint32_t> dlog_;
  std::vector<std::int8_t> legendre_;
  std::vector<std::uint64_t> omega_powers_;
};

/// Builds the tables for p at p-adic working precision N (>= 2).
/// Throws NotPrime, PrimeTooSmall, BadPrecision or PrecisionOverflow.
PrimeCtx make_prime_ctx(std::uint64_t p, int precision = 3);

/// Smallest primitive root mod a prime p.
std::uint64_t smallest_primitive_root(std::uint64_t p);

/// Exponent e with (omega^k)(x) = zeta_{p-1}^e, or nullopt at x = 0.
std::optional<std::uint64_t> char_exponent(const PrimeCtx& ctx, std::uint64_t k, std::uint64_t x);

/// a_p(lambda) of the Legendre curve y^2 = x(x-1)(x-lambda).
std::int64_t trace_frobenius(const PrimeCtx& ctx, std::uint64_t lambda);

/// Element re + im*i of Z[i].
struct CyclotomicInt4 {
  std::int64_t re = 0;
  std::int64_t im = 0;

  std::int64_t norm() const noexcept { return re * re + im * im; }
  CyclotomicInt4 conj() const noexcept { return {re, -im}; }
  friend CyclotomicInt4 operator+(CyclotomicInt4 a, CyclotomicInt4 b) noexcept {
    return {a.re + b.re, a.im + b.im};
  }
  friend CyclotomicInt4 operator*(CyclotomicInt4 a, CyclotomicInt4 b) noexcept {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(CyclotomicInt4, CyclotomicInt4) = default;

  /// i^e.
  static CyclotomicInt4 unit(std::int64_t e) noexcept;
};

/// J(phi*A4, conj A4) in Z[i] with A4(g) = i. With `swap_order_four` the
/// other order-4 character (A4(g) = -i) plays the role of A4.
CyclotomicInt4 jacobi_sum_order4(const PrimeCtx& ctx, bool swap_order_four = false);

/// The amount subtracted from the tilde functions at lambda = -1:
/// 2 * A4(-1) * Re J(phi*A4, conj A4) for p = 1 mod 4, else 0.
std::int64_t correction_term(const PrimeCtx& ctx);

/// A4(-1) = (-1)^((p-1)/4); only meaningful for p = 1 mod 4.
int order_four_at_minus_one(const PrimeCtx& ctx);

// Floating-point character sums. Verification only; never feed these into
// exact results. omega(g) is sent to exp(2 pi i / (p-1)).
std::complex<double> char_value_float(const PrimeCtx& ctx, std::int64_t k, std::uint64_t x);
std::complex<double> gauss_sum_float(const PrimeCtx& ctx, std::int64_t k);

}  // namespace hgsat
