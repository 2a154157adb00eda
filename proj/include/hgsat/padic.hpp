#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "hgsat/field_core.hpp"
#include "hgsat/modular.hpp"

namespace hgsat {

/// An element of Z/p^N, i.e. a p-adic integer truncated at precision N.
/// Arithmetic between residues of different (p, N) throws PrecisionMismatch.
class ResidueMod {
 public:
  ResidueMod(std::uint64_t p, int precision, std::int64_t value);
  ResidueMod(const PrimeCtx& ctx, std::int64_t value) : ResidueMod(ctx.p(), ctx.precision(), value) {}
  /// Wraps an already reduced word.
  static ResidueMod from_word(const PrimeCtx& ctx, std::uint64_t word);

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t p() const noexcept { return p_; }
  int precision() const noexcept { return precision_; }
  std::uint64_t modulus() const noexcept { return mod_.value(); }

  bool is_unit() const noexcept { return value_ % p_ != 0; }
  /// p-adic valuation of the residue, capped at the precision.
  int valuation() const noexcept;
  ResidueMod inverse() const;
  ResidueMod pow(std::uint64_t e) const;
  /// Image under Z/p^N -> Z/p^M for M <= N.
  ResidueMod reduce_to(int precision) const;
  /// Exact division by p^k of a residue divisible by p^k; the result is
  /// known mod p^(N-k).
  ResidueMod divide_by_p_power(int k) const;

  ResidueMod& operator+=(const ResidueMod& o);
  ResidueMod& operator-=(const ResidueMod& o);
  ResidueMod& operator*=(const ResidueMod& o);
  friend ResidueMod operator+(ResidueMod a, const ResidueMod& b) { return a += b; }
  friend ResidueMod operator-(ResidueMod a, const ResidueMod& b) { return a -= b; }
  friend ResidueMod operator*(ResidueMod a, const ResidueMod& b) { return a *= b; }
  ResidueMod operator-() const;
  friend bool operator==(const ResidueMod& a, const ResidueMod& b) noexcept {
    return a.p_ == b.p_ && a.precision_ == b.precision_ && a.value_ == b.value_;
  }

 private:
  void check_compatible(const ResidueMod& o) const;

  std::uint64_t value_;
  std::uint64_t p_;
  int precision_;
  Modulus mod_;
};

/// Exact rational num/den, den > 0, in lowest terms.
class RationalParam {
 public:
  RationalParam(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  /// Membership in Q cap Z_p.
  bool is_padic(std::uint64_t p) const noexcept { return den_ % static_cast<std::int64_t>(p) != 0; }

  friend RationalParam operator+(const RationalParam& a, const RationalParam& b);
  friend RationalParam operator-(const RationalParam& a, const RationalParam& b);
  RationalParam operator-() const { return {-num_, den_}; }
  friend bool operator==(const RationalParam&, const RationalParam&) = default;
  friend std::strong_ordering operator<=>(const RationalParam& a, const RationalParam& b);

  std::string to_string() const;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// Fractional part <x> in [0, 1).
RationalParam frac_bracket(const RationalParam& x);
/// Greatest integer <= x.
std::int64_t floor_bracket(const RationalParam& x);

/// The integer in [0, p^N) congruent to x; throws ParameterNotPadic if p | den.
std::uint64_t integer_representative(const PrimeCtx& ctx, const RationalParam& x);

/// omega(t) = t^(p^(N-1)) mod p^N; 0 at t = 0.
ResidueMod teichmuller(const PrimeCtx& ctx, std::uint64_t t);

/// Morita Gamma_p(n) = (-1)^n prod_{0<j<n, p does not divide j} j mod p^N,
/// Gamma_p(0) = 1. Naive O(n) product.
ResidueMod gamma_p_integer(const PrimeCtx& ctx, std::uint64_t n);

/// Gamma_p(x) mod p^N at a rational x in Z_p, via its integer
/// representative. O(p^N); reference path only.
ResidueMod gamma_p_naive(const PrimeCtx& ctx, const RationalParam& x);

}  // namespace hgsat
