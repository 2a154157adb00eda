#include "hgsat/modular.hpp"

#include "hgsat/error.hpp"

namespace hgsat {

Modulus::Modulus(std::uint64_t m) : m_(m), mu_(0), narrow_(m < (std::uint64_t{1} << 32)) {
  if (m < 2 || m >= kMax) {
    throw Error(ErrorKind::PrecisionOverflow, "modulus out of range: " + std::to_string(m));
  }
  mu_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / m);
}

std::uint64_t Modulus::pow(std::uint64_t base, std::uint64_t exp) const noexcept {
  std::uint64_t result = 1 % m_;
  base %= m_;
  while (exp) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

std::optional<std::uint64_t> Modulus::inverse(std::uint64_t a) const noexcept {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m_), new_r = static_cast<std::int64_t>(a % m_);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) return std::nullopt;
  return reduce(t);
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) noexcept {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > Modulus::kMax / base) return std::nullopt;
    r *= base;
  }
  return r;
}

}  // namespace hgsat
