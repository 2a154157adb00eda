#include <doctest.h>

#include <cmath>

#include "hgsat/error.hpp"
#include "hgsat/hecke.hpp"
#include "support/oracle.hpp"

using namespace hgsat;

namespace {

struct Fixture {
  PrimeCtx ctx;
  GammaTable table;
  FamilyEvaluator ev;
  explicit Fixture(std::uint64_t p, int n = 2) : ctx(make_prime_ctx(p, n)), table(build_gamma_table(ctx)), ev(ctx, table) {}
};

// (a^(k-1) - b^(k-1)) / (a - b) expanded: sum_j (-1)^j C(k-2-j, j) p^j s^(k-2-2j).
BigInt pk_closed(unsigned k, std::int64_t s, std::uint64_t p) {
  BigInt total = 0;
  const unsigned d = k - 2;
  for (unsigned j = 0; 2 * j <= d; ++j) {
    BigInt c = 1;
    for (unsigned i = 0; i < j; ++i) c = c * (d - j - i) / (i + 1);
    BigInt term = c * boost::multiprecision::pow(BigInt(p), j) * boost::multiprecision::pow(BigInt(s), d - 2 * j);
    total += j % 2 ? -term : term;
  }
  return total;
}

}  // namespace

TEST_CASE("P_k polynomials") {
  CHECK(pk_poly(4, 0, 7) == -7);
  CHECK(pk_poly(4, 3, 7) == 2);
  CHECK(pk_poly(6, 1, 2) == -1);
  for (unsigned k = 4; k <= 16; k += 2) {
    for (std::int64_t s = -20; s <= 20; s += 3) CHECK(pk_poly(k, s, 13) == pk_closed(k, s, 13));
  }
  CHECK_THROWS_AS(pk_poly(5, 1, 7), Error);
  CHECK_THROWS_AS(pk_poly(2, 1, 7), Error);
}

TEST_CASE("eta products") {
  const auto c8 = eta_product_coeffs(eta_level8_weight4(), 5);
  const std::vector<BigInt> want{0, 1, 0, -4, 0, -2};
  CHECK(c8 == want);
  const auto c4 = eta_product_coeffs(eta_level4_weight6(), 3);
  CHECK(c4[0] == 0);
  CHECK(c4[1] == 1);
  CHECK_THROWS_AS(eta_product_coeffs({{{1, 1}}}, 5), Error);

  const auto big8 = eta_product_coeffs(eta_level8_weight4(), 300);
  const auto ref8 = oracle::eta_product({{2, 4}, {4, 4}}, 300);
  const auto big4 = eta_product_coeffs(eta_level4_weight6(), 300);
  const auto ref4 = oracle::eta_product({{2, 12}}, 300);
  for (std::size_t n = 0; n <= 300; ++n) {
    CHECK(big8[n] == ref8[n]);
    CHECK(big4[n] == ref4[n]);
  }
}

TEST_CASE("eta products with negative exponents") {
  // eta(t)^-1 eta(t)^25 = eta(t)^24 = Delta: q - 24 q^2 + 252 q^3 - 1472 q^4
  const auto c = eta_product_coeffs({{{1, -1}, {1, 25}}}, 4);
  const std::vector<BigInt> want{0, 1, -24, 252, -1472};
  CHECK(c == want);
}

TEST_CASE("trace examples") {
  Fixture f5(5);
  CHECK(trace_level4(f5.ev, 4) == 0);
  CHECK(trace_level8(f5.ev, 4) == -2);
  Fixture f7(7);
  CHECK(trace_level4(f7.ev, 6) == eta_product_coeffs(eta_level4_weight6(), 7)[7]);
}

TEST_CASE("traces against eigenforms and dimension zero, p <= 199") {
  const auto eta4 = oracle::eta_product({{2, 12}}, 200);
  const auto eta8 = oracle::eta_product({{2, 4}, {4, 4}}, 200);
  for (std::uint64_t p = 5; p < 200; ++p) {
    if (!oracle::is_prime(p)) continue;
    Fixture f(p);
    CHECK(trace_level4(f.ev, 4) == 0);
    CHECK(trace_level4(f.ev, 6) == eta4[p]);
    CHECK(trace_level8(f.ev, 4) == eta8[p]);
    for (unsigned k : {4u, 6u, 8u}) {
      for (unsigned level : {4u, 8u}) {
        CHECK(trace(f.ev, {p, k, level}) == trace_via_frobenius(f.ctx, {p, k, level}));
      }
    }
    const double bound6 = 2 * std::pow(static_cast<double>(p), 2.5);
    CHECK(std::abs(trace_level4(f.ev, 6).convert_to<double>()) <= bound6);
  }
}

TEST_CASE("literal level-8 range adds the singular l = -1 term") {
  for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull, 31ull}) {
    Fixture f(p);
    for (unsigned k : {4u, 6u}) {
      TraceQuery lit{p, k, 8, true};
      const BigInt extra = pk_poly(k, f.ev.value(tilde_family_for(p), 1), p);
      CHECK(trace(f.ev, lit) == trace_level8(f.ev, k) - extra);
      CHECK(trace_via_frobenius(f.ctx, lit) == trace(f.ev, lit));
    }
  }
}

TEST_CASE("trace argument errors") {
  Fixture f(7);
  CHECK_THROWS_AS(trace(f.ev, {7, 5, 4}), Error);
  CHECK_THROWS_AS(trace(f.ev, {7, 4, 12}), Error);
  CHECK_THROWS_AS(trace(f.ev, {11, 4, 4}), Error);
}
