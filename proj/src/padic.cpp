#include "hgsat/padic.hpp"

#include <numeric>

#include "hgsat/error.hpp"

namespace hgsat {

namespace {

Modulus modulus_for(std::uint64_t p, int precision) {
  if (precision < 1) throw Error(ErrorKind::BadPrecision, "precision must be >= 1");
  const auto m = checked_pow(p, static_cast<unsigned>(precision));
  if (!m) throw Error(ErrorKind::PrecisionOverflow, "p^N exceeds the word limit");
  return Modulus(*m);
}

}  // namespace

ResidueMod::ResidueMod(std::uint64_t p, int precision, std::int64_t value)
    : value_(0), p_(p), precision_(precision), mod_(modulus_for(p, precision)) {
  value_ = mod_.reduce(value);
}

ResidueMod ResidueMod::from_word(const PrimeCtx& ctx, std::uint64_t word) {
  ResidueMod r(ctx, 0);
  r.value_ = word % r.mod_.value();
  return r;
}

int ResidueMod::valuation() const noexcept {
  if (value_ == 0) return precision_;
  int v = 0;
  std::uint64_t x = value_;
  while (x % p_ == 0) {
    x /= p_;
    ++v;
  }
  return v;
}

ResidueMod ResidueMod::inverse() const {
  const auto inv = mod_.inverse(value_);
  if (!inv) throw Error(ErrorKind::InvalidArgument, "residue is not a unit");
  ResidueMod r = *this;
  r.value_ = *inv;
  return r;
}

ResidueMod ResidueMod::pow(std::uint64_t e) const {
  ResidueMod r = *this;
  r.value_ = mod_.pow(value_, e);
  return r;
}

ResidueMod ResidueMod::reduce_to(int precision) const {
  if (precision > precision_ || precision < 1) {
    throw Error(ErrorKind::PrecisionMismatch, "cannot reduce to a higher precision");
  }
  return ResidueMod(p_, precision, static_cast<std::int64_t>(value_));
}

ResidueMod ResidueMod::divide_by_p_power(int k) const {
  if (k == 0) return *this;
  if (k >= precision_) {
    throw Error(ErrorKind::PrecisionExhausted, "division by p^k leaves no digits");
  }
  if (valuation() < k) {
    throw Error(ErrorKind::PrecisionExhausted, "residue is not divisible by p^k");
  }
  std::uint64_t x = value_;
  for (int i = 0; i < k; ++i) x /= p_;
  return ResidueMod(p_, precision_ - k, static_cast<std::int64_t>(x));
}

void ResidueMod::check_compatible(const ResidueMod& o) const {
  if (p_ != o.p_ || precision_ != o.precision_) {
    throw Error(ErrorKind::PrecisionMismatch, "mixing residues of different (p, N)");
  }
}

ResidueMod& ResidueMod::operator+=(const ResidueMod& o) {
  check_compatible(o);
  value_ = mod_.add(value_, o.value_);
  return *this;
}

ResidueMod& ResidueMod::operator-=(const ResidueMod& o) {
  check_compatible(o);
  value_ = mod_.sub(value_, o.value_);
  return *this;
}

ResidueMod& ResidueMod::operator*=(const ResidueMod& o) {
  check_compatible(o);
  value_ = mod_.mul(value_, o.value_);
  return *this;
}

ResidueMod ResidueMod::operator-() const {
  ResidueMod r = *this;
  r.value_ = mod_.neg(value_);
  return r;
}

RationalParam::RationalParam(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

RationalParam operator+(const RationalParam& a, const RationalParam& b) {
  const std::int64_t l = std::lcm(a.den_, b.den_);
  return {a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l};
}

RationalParam operator-(const RationalParam& a, const RationalParam& b) { return a + (-b); }

std::strong_ordering operator<=>(const RationalParam& a, const RationalParam& b) {
  return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

std::string RationalParam::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::int64_t floor_bracket(const RationalParam& x) {
  const std::int64_t q = x.num() / x.den();
  return (x.num() % x.den() != 0 && x.num() < 0) ? q - 1 : q;
}

RationalParam frac_bracket(const RationalParam& x) {
  return {x.num() - floor_bracket(x) * x.den(), x.den()};
}

std::uint64_t integer_representative(const PrimeCtx& ctx, const RationalParam& x) {
  if (!x.is_padic(ctx.p())) {
    throw Error(ErrorKind::ParameterNotPadic, x.to_string() + " has denominator divisible by p");
  }
  const Modulus& mod = ctx.modulus();
  const std::uint64_t den_inv = *mod.inverse(static_cast<std::uint64_t>(x.den()) % mod.value());
  return mod.mul(mod.reduce(x.num()), den_inv);
}

ResidueMod teichmuller(const PrimeCtx& ctx, std::uint64_t t) {
  t %= ctx.p();
  if (t == 0) return ResidueMod(ctx, 0);
  const std::uint64_t e = *checked_pow(ctx.p(), static_cast<unsigned>(ctx.precision() - 1));
  return ResidueMod::from_word(ctx, ctx.modulus().pow(t, e));
}

ResidueMod gamma_p_integer(const PrimeCtx& ctx, std::uint64_t n) {
  const Modulus& mod = ctx.modulus();
  const std::uint64_t p = ctx.p();
  std::uint64_t prod = 1;
  for (std::uint64_t j = 1; j < n; ++j) {
    if (j % p != 0) prod = mod.mul(prod, j % mod.value());
  }
  if (n % 2 == 1) prod = mod.neg(prod);
  return ResidueMod::from_word(ctx, prod);
}

ResidueMod gamma_p_naive(const PrimeCtx& ctx, const RationalParam& x) {
  return gamma_p_integer(ctx, integer_representative(ctx, x));
}

}  // namespace hgsat
