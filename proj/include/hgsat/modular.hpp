#pragma once

#include <cstdint>
#include <optional>

namespace hgsat {

/// Arithmetic in Z/mZ on fixed-width words. Moduli below 2^32 multiply in
/// 64 bits; larger ones (up to 2^62) go through a 128-bit product.
class Modulus {
 public:
  static constexpr std::uint64_t kMax = std::uint64_t{1} << 62;

  explicit Modulus(std::uint64_t m);

  std::uint64_t value() const noexcept { return m_; }

  std::uint64_t reduce(std::int64_t a) const noexcept {
    const auto m = static_cast<std::int64_t>(m_);
    std::int64_t r = a % m;
    return static_cast<std::uint64_t>(r < 0 ? r + m : r);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= m_ ? s - m_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + m_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : m_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    if (narrow_) {
      // Barrett: q underestimates a*b/m by at most one.
      const std::uint64_t x = a * b;
      const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * mu_) >> 64);
      std::uint64_t r = x - q * m_;
      return r >= m_ ? r - m_ : r;
    }
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m_);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const noexcept;

  /// Inverse of a unit; nullopt when gcd(a, m) != 1.
  std::optional<std::uint64_t> inverse(std::uint64_t a) const noexcept;

 private:
  std::uint64_t m_;
  std::uint64_t mu_;  // floor(2^64 / m), used when narrow_
  bool narrow_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Exact integer power, nullopt on overflow past Modulus::kMax.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) noexcept;

}  // namespace hgsat
