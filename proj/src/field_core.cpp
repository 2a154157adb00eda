#include "hgsat/field_core.hpp"

#include <cmath>
#include <numbers>

#include "hgsat/error.hpp"

namespace hgsat {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t pow_mod_small(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::uint64_t checked_modulus(std::uint64_t p, int precision) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p < 5) {
    throw Error(ErrorKind::PrimeTooSmall,
                "p = " + std::to_string(p) + ": parameter denominators 12 must be units");
  }
  if (precision < 2) {
    throw Error(ErrorKind::BadPrecision, "precision must be >= 2, got " + std::to_string(precision));
  }
  if (p >= (std::uint64_t{1} << 31)) {
    throw Error(ErrorKind::PrecisionOverflow, "p too large for table construction");
  }
  const auto m = checked_pow(p, static_cast<unsigned>(precision));
  if (!m) {
    throw Error(ErrorKind::PrecisionOverflow,
                "p^N exceeds the 62-bit word limit (p = " + std::to_string(p) +
                    ", N = " + std::to_string(precision) + ")");
  }
  return *m;
}

}  // namespace

std::uint64_t smallest_primitive_root(std::uint64_t p) {
  const auto factors = prime_factors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors) {
      if (pow_mod_small(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;  // p = 2
}

PrimeCtx::PrimeCtx(std::uint64_t p, int precision, std::uint64_t modulus)
    : p_(p), precision_(precision), modulus_(modulus) {}

PrimeCtx make_prime_ctx(std::uint64_t p, int precision) {
  PrimeCtx ctx(p, precision, checked_modulus(p, precision));
  ctx.g_ = smallest_primitive_root(p);

  ctx.dlog_.assign(p, PrimeCtx::kNoLog);
  ctx.legendre_.assign(p, 0);
  std::uint64_t x = 1;
  for (std::uint64_t k = 0; k < p - 1; ++k) {
    ctx.dlog_[x] = static_cast<std::uint32_t>(k);
    ctx.legendre_[x] = (k % 2 == 0) ? 1 : -1;
    x = x * ctx.g_ % p;
  }

  // omega(g) = g^(p^(N-1)) mod p^N.
  const Modulus& mod = ctx.modulus_;
  const std::uint64_t lift_exp = *checked_pow(p, static_cast<unsigned>(precision - 1));
  const std::uint64_t omega_g = mod.pow(ctx.g_, lift_exp);
  ctx.omega_powers_.resize(p - 1);
  std::uint64_t w = 1;
  for (std::uint64_t k = 0; k < p - 1; ++k) {
    ctx.omega_powers_[k] = w;
    w = mod.mul(w, omega_g);
  }
  return ctx;
}

std::uint64_t PrimeCtx::character(std::int64_t k, std::uint64_t x) const noexcept {
  const std::uint32_t d = dlog(x);
  if (d == kNoLog) return 0;
  const auto n = static_cast<std::int64_t>(p_ - 1);
  std::int64_t kk = k % n;
  if (kk < 0) kk += n;
  const auto e = static_cast<std::uint64_t>(kk) * d % (p_ - 1);
  return omega_powers_[e];
}

std::uint64_t PrimeCtx::inv_mod_p(std::uint64_t a) const {
  const std::uint32_t d = dlog(a);
  if (d == kNoLog) throw Error(ErrorKind::InvalidArgument, "inverse of 0 in F_p");
  return pow_mod_small(a % p_, p_ - 2, p_);
}

std::uint64_t PrimeCtx::max_prime_for_precision(int precision) noexcept {
  if (precision < 1) return 0;
  const double bound = std::pow(static_cast<double>(Modulus::kMax), 1.0 / precision);
  auto p = static_cast<std::uint64_t>(bound) + 2;
  while (p > 2 && (!checked_pow(p, static_cast<unsigned>(precision)).has_value())) --p;
  return p;
}

std::optional<std::uint64_t> char_exponent(const PrimeCtx& ctx, std::uint64_t k, std::uint64_t x) {
  if (k >= ctx.group_order()) {
    throw Error(ErrorKind::InvalidArgument, "character exponent out of range");
  }
  const std::uint32_t d = ctx.dlog(x);
  if (d == PrimeCtx::kNoLog) return std::nullopt;
  return k * d % ctx.group_order();
}

std::int64_t trace_frobenius(const PrimeCtx& ctx, std::uint64_t lambda) {
  const std::uint64_t p = ctx.p();
  lambda %= p;
  if (lambda == 0 || lambda == 1) {
    throw Error(ErrorKind::SingularLambda, "lambda = " + std::to_string(lambda) + " gives a singular curve");
  }
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t f = x * ((x + p - 1) % p) % p * ((x + p - lambda) % p) % p;
    sum += ctx.legendre(f);
  }
  return -sum;
}

CyclotomicInt4 CyclotomicInt4::unit(std::int64_t e) noexcept {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

CyclotomicInt4 jacobi_sum_order4(const PrimeCtx& ctx, bool swap_order_four) {
  const std::uint64_t p = ctx.p();
  if (p % 4 != 1) {
    throw Error(ErrorKind::NoOrderFourCharacter, "p = " + std::to_string(p) + " is 3 mod 4");
  }
  // phi*A4 = A4^3 and conj A4 = A4^-1 as powers of i; swapping negates both.
  const std::int64_t sign = swap_order_four ? -1 : 1;
  CyclotomicInt4 sum;
  for (std::uint64_t x = 2; x < p; ++x) {
    const std::int64_t e = sign * (3 * static_cast<std::int64_t>(ctx.dlog(x)) -
                                   static_cast<std::int64_t>(ctx.dlog(p + 1 - x)));
    sum = sum + CyclotomicInt4::unit(e);
  }
  return sum;
}

int order_four_at_minus_one(const PrimeCtx& ctx) {
  return ((ctx.p() - 1) / 4) % 2 == 0 ? 1 : -1;
}

std::int64_t correction_term(const PrimeCtx& ctx) {
  if (ctx.p() % 4 == 3) return 0;
  return 2 * order_four_at_minus_one(ctx) * jacobi_sum_order4(ctx).re;
}

std::complex<double> char_value_float(const PrimeCtx& ctx, std::int64_t k, std::uint64_t x) {
  const std::uint32_t d = ctx.dlog(x);
  if (d == PrimeCtx::kNoLog) return {0.0, 0.0};
  const auto n = static_cast<std::int64_t>(ctx.group_order());
  const std::int64_t e = ((k % n) * static_cast<std::int64_t>(d) % n + n) % n;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(n));
}

std::complex<double> gauss_sum_float(const PrimeCtx& ctx, std::int64_t k) {
  const std::uint64_t p = ctx.p();
  std::complex<double> sum{0.0, 0.0};
  for (std::uint64_t x = 1; x < p; ++x) {
    const auto zeta = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(x) / static_cast<double>(p));
    sum += char_value_float(ctx, k, x) * zeta;
  }
  return sum;
}

}  // namespace hgsat
