#include <doctest.h>

#include <cmath>

#include "hgsat/error.hpp"
#include "hgsat/field_core.hpp"
#include "support/oracle.hpp"

using namespace hgsat;

namespace {

std::vector<std::uint64_t> primes(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = lo; p <= hi; ++p) {
    if (oracle::is_prime(p)) out.push_back(p);
  }
  return out;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("p = 7 tables") {
  const auto ctx = make_prime_ctx(7);
  CHECK(ctx.primitive_root() == 3);
  CHECK(ctx.dlog(2) == 2);
  CHECK(ctx.legendre(2) == 1);
  CHECK(ctx.legendre(3) == -1);
  CHECK(ctx.legendre(0) == 0);
  CHECK(ctx.dlog(0) == PrimeCtx::kNoLog);
  CHECK(*char_exponent(ctx, 3, 2) == 0);
  CHECK(*char_exponent(ctx, 0, 5) == 0);
  CHECK_FALSE(char_exponent(ctx, 3, 0).has_value());
}

TEST_CASE("p = 13: phi(-2) = -1") {
  const auto ctx = make_prime_ctx(13);
  CHECK(ctx.legendre(11) == -1);
}

TEST_CASE("context errors") {
  CHECK(kind_of([] { make_prime_ctx(9); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { make_prime_ctx(8); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { make_prime_ctx(3); }) == ErrorKind::PrimeTooSmall);
  CHECK(kind_of([] { make_prime_ctx(7, 1); }) == ErrorKind::BadPrecision);
  CHECK(kind_of([] { make_prime_ctx(1000003, 4); }) == ErrorKind::PrecisionOverflow);
}

TEST_CASE("primitive root, dlog and legendre against brute force") {
  for (std::uint64_t p : primes(5, 400)) {
    const auto ctx = make_prime_ctx(p, 2);
    CHECK(ctx.primitive_root() == oracle::smallest_primitive_root(p));
    std::uint64_t x = 1;
    for (std::uint64_t k = 0; k + 1 < p; ++k, x = x * ctx.primitive_root() % p) CHECK(ctx.dlog(x) == k);
    for (std::uint64_t y = 0; y < p; ++y) CHECK(ctx.legendre(y) == oracle::legendre(y, p));
  }
}

TEST_CASE("teichmuller powers") {
  for (std::uint64_t p : primes(5, 60)) {
    for (int n : {2, 3, 4}) {
      const auto ctx = make_prime_ctx(p, n);
      for (std::uint64_t x = 0; x < p; ++x) {
        CHECK(ctx.omega(x) == oracle::teichmuller(x, p, static_cast<unsigned>(n)));
      }
      for (std::int64_t k : {-7, -1, 0, 1, 2, 5}) {
        for (std::uint64_t x = 1; x < p; ++x) {
          CHECK(ctx.character(k, x) == oracle::omega_pow(x, k, p, static_cast<unsigned>(n)));
        }
        CHECK(ctx.character(k, 0) == 0);
      }
    }
  }
}

TEST_CASE("trace_frobenius") {
  const auto c7 = make_prime_ctx(7);
  CHECK(trace_frobenius(c7, 3) == 4);
  CHECK(trace_frobenius(c7, 2) == 0);
  CHECK(trace_frobenius(make_prime_ctx(5), 4) == -2);
  CHECK(kind_of([&] { trace_frobenius(c7, 0); }) == ErrorKind::SingularLambda);
  CHECK(kind_of([&] { trace_frobenius(c7, 8); }) == ErrorKind::SingularLambda);

  for (std::uint64_t p : primes(5, 80)) {
    const auto ctx = make_prime_ctx(p, 2);
    for (std::uint64_t l = 2; l < p; ++l) CHECK(trace_frobenius(ctx, l) == oracle::point_count_trace(p, l));
  }
  for (std::uint64_t p : primes(100, 700)) {
    const auto ctx = make_prime_ctx(p, 2);
    const double bound = 2 * std::sqrt(static_cast<double>(p));
    for (std::uint64_t l = 2; l < p; ++l) CHECK(std::abs(static_cast<double>(trace_frobenius(ctx, l))) <= bound);
  }
}

TEST_CASE("Jacobi sum of order-four characters") {
  const auto c5 = make_prime_ctx(5);
  CHECK(jacobi_sum_order4(c5) == CyclotomicInt4{-1, 2});
  CHECK(jacobi_sum_order4(c5, true) == CyclotomicInt4{-1, -2});
  CHECK(jacobi_sum_order4(make_prime_ctx(13)).norm() == 13);
  CHECK(kind_of([] { jacobi_sum_order4(make_prime_ctx(7)); }) == ErrorKind::NoOrderFourCharacter);

  for (std::uint64_t p : primes(5, 300)) {
    if (p % 4 != 1) continue;
    CHECK(jacobi_sum_order4(make_prime_ctx(p, 2)).norm() == static_cast<std::int64_t>(p));
  }
}

TEST_CASE("correction term calibration") {
  CHECK(correction_term(make_prime_ctx(7)) == 0);
  CHECK(correction_term(make_prime_ctx(5)) == 2);
  for (std::uint64_t p : primes(5, 199)) {
    const auto ctx = make_prime_ctx(p, 2);
    // tilde(-1) = 0 - correction must be a_p(-1)
    CHECK(-correction_term(ctx) == oracle::point_count_trace(p, p - 1));
  }
}

TEST_CASE("correction term against the Gauss-sum expression, doubled") {
  // 2 A4(-1) Re(g(phi A4) g(conj A4) / g(phi)), A4 = omega^((p-1)/4).
  for (std::uint64_t p : primes(5, 100)) {
    if (p % 4 != 1) continue;
    const auto q = static_cast<std::int64_t>(p - 1) / 4;
    const auto ratio = oracle::gauss_sum(p, 3 * q) * oracle::gauss_sum(p, -q) / oracle::gauss_sum(p, 2 * q);
    const int a4_minus_one = q % 2 == 0 ? 1 : -1;
    const double expected = 2.0 * a4_minus_one * ratio.real();
    CHECK(static_cast<double>(correction_term(make_prime_ctx(p, 2))) == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("Gauss sums in floating point") {
  const auto c5 = make_prime_ctx(5);
  CHECK(std::norm(gauss_sum_float(c5, 2)) == doctest::Approx(5.0).epsilon(1e-6));
  const auto g0 = gauss_sum_float(make_prime_ctx(7), 0);
  CHECK(g0.real() == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(std::abs(g0.imag()) < 1e-9);
  CHECK(std::norm(gauss_sum_float(make_prime_ctx(13), 4)) == doctest::Approx(13.0).epsilon(1e-6));

  for (std::uint64_t p : primes(5, 100)) {
    const auto ctx = make_prime_ctx(p, 2);
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(p - 1); ++k) {
      const auto g = gauss_sum_float(ctx, k);
      CHECK(std::abs(g - oracle::gauss_sum(p, k)) < 1e-8 * static_cast<double>(p));
      if (k != 0) CHECK(std::norm(g) == doctest::Approx(static_cast<double>(p)).epsilon(1e-6));
    }
  }
}

TEST_CASE("orthogonality of characters") {
  for (std::uint64_t p : primes(5, 200)) {
    const auto ctx = make_prime_ctx(p, 2);
    const std::uint64_t n = p - 1;
    // Sum over characters at fixed x: the multiset {k dlog x mod n} is uniform
    // over a subgroup, and that subgroup is trivial only at x = 1.
    for (std::uint64_t x = 1; x < p; ++x) {
      std::vector<std::uint64_t> counts(n, 0);
      for (std::uint64_t k = 0; k < n; ++k) ++counts[*char_exponent(ctx, k, x)];
      const std::uint64_t d = std::gcd<std::uint64_t>(ctx.dlog(x), n);  // gcd(0, n) = n
      for (std::uint64_t e = 0; e < n; ++e) CHECK(counts[e] == (e % d == 0 ? d : 0));
    }
    // Sum over x at a fixed character, in floating point.
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(n); ++k) {
      std::complex<double> s{0, 0};
      for (std::uint64_t x = 0; x < p; ++x) s += char_value_float(ctx, k, x);
      CHECK(std::abs(s - (k == 0 ? static_cast<double>(n) : 0.0)) < 1e-8 * static_cast<double>(p));
    }
  }
}

TEST_CASE("Davenport-Hasse for n = 2") {
  // g(psi) g(phi psi) = -g(psi^2) psi(1/4) g(eps) g(phi)
  for (std::uint64_t p : primes(5, 100)) {
    const auto ctx = make_prime_ctx(p, 2);
    const auto n = static_cast<std::int64_t>(p - 1);
    const std::uint64_t quarter = oracle::invmod(4, p);
    for (std::int64_t k = 0; k < n; ++k) {
      const auto lhs = gauss_sum_float(ctx, k) * gauss_sum_float(ctx, k + n / 2);
      const auto rhs = -gauss_sum_float(ctx, 2 * k) * char_value_float(ctx, k, quarter) * gauss_sum_float(ctx, 0) *
                       gauss_sum_float(ctx, n / 2);
      CHECK(std::abs(lhs - rhs) <= 1e-6 * std::abs(lhs));
    }
  }
}
