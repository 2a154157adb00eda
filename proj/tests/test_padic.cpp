#include <doctest.h>

#include "hgsat/error.hpp"
#include "hgsat/padic.hpp"
#include "support/oracle.hpp"

using namespace hgsat;

TEST_CASE("fractional part and floor") {
  CHECK(frac_bracket({5, 12}) == RationalParam(5, 12));
  CHECK(frac_bracket({-1, 3}) == RationalParam(2, 3));
  CHECK(frac_bracket({7, 3}) == RationalParam(1, 3));
  CHECK(frac_bracket({3, 1}) == RationalParam(0, 1));
  CHECK(floor_bracket({-1, 3}) == -1);
  CHECK(floor_bracket({7, 3}) == 2);
  CHECK(floor_bracket({-6, 3}) == -2);
  CHECK(floor_bracket({0, 5}) == 0);
}

TEST_CASE("rational params normalize and compare") {
  CHECK(RationalParam(2, -4) == RationalParam(-1, 2));
  CHECK(RationalParam(1, 3) + RationalParam(1, 6) == RationalParam(1, 2));
  CHECK(RationalParam(1, 3) - RationalParam(1, 2) == RationalParam(-1, 6));
  CHECK(RationalParam(5, 12) < RationalParam(11, 12));
  CHECK(RationalParam(-1, 2) < RationalParam(0, 1));
  CHECK(RationalParam(7, 12).to_string() == "7/12");
  CHECK_FALSE(RationalParam(1, 10).is_padic(5));
  CHECK(RationalParam(1, 12).is_padic(5));
  CHECK_THROWS_AS(RationalParam(1, 0), Error);
}

TEST_CASE("residue arithmetic") {
  const ResidueMod a(5, 2, 7), b(5, 2, -3);
  CHECK((a + b).value() == 4);
  CHECK((a - b).value() == 10);
  CHECK((a * b).value() == 4);  // -21 mod 25
  CHECK((-a).value() == 18);
  CHECK(a.inverse().value() * 7 % 25 == 1);
  CHECK(a.pow(4).value() == 1);
  CHECK(ResidueMod(5, 2, 10).valuation() == 1);
  CHECK(ResidueMod(5, 2, 0).valuation() == 2);
  CHECK(ResidueMod(5, 3, 50).divide_by_p_power(2).value() == 2);
  CHECK(ResidueMod(5, 3, 50).divide_by_p_power(2).precision() == 1);
  CHECK(ResidueMod(5, 3, 124).reduce_to(2).value() == 24);
  CHECK_THROWS_AS(ResidueMod(5, 2, 5).inverse(), Error);
  CHECK_THROWS_AS(a + ResidueMod(5, 3, 1), Error);
  CHECK_THROWS_AS(a + ResidueMod(7, 2, 1), Error);
  CHECK_THROWS_AS(ResidueMod(5, 3, 7).divide_by_p_power(1), Error);
}

TEST_CASE("teichmuller") {
  const auto ctx = make_prime_ctx(5, 2);
  CHECK(teichmuller(ctx, 2).value() == 7);
  CHECK(teichmuller(ctx, 1).value() == 1);
  CHECK(teichmuller(ctx, 0).value() == 0);
  CHECK(teichmuller(ctx, 2).pow(2).value() == 24);

  for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull, 101ull}) {
    for (int n : {2, 3}) {
      const auto c = make_prime_ctx(p, n);
      for (std::uint64_t t = 1; t < p; ++t) {
        const auto w = teichmuller(c, t);
        CHECK(w.value() == oracle::teichmuller(t, p, static_cast<unsigned>(n)));
        CHECK(w.value() % p == t);
        CHECK(w.pow(p - 1).value() == 1);
      }
    }
  }
}

TEST_CASE("gamma at integers") {
  const auto ctx = make_prime_ctx(5, 2);
  CHECK(gamma_p_integer(ctx, 3).value() == 23);  // -2
  CHECK(gamma_p_integer(ctx, 0).value() == 1);
  CHECK(gamma_p_integer(ctx, 6).value() == 24);
  CHECK(gamma_p_integer(ctx, 1).value() == 24);  // -1

  for (std::uint64_t p : {5ull, 7ull, 13ull}) {
    const auto c = make_prime_ctx(p, 3);
    const auto m = c.modulus().value();
    const auto ref = oracle::gamma_integers(p, m, 3 * p * p);
    for (std::uint64_t n = 0; n < ref.size(); n += 7) CHECK(gamma_p_integer(c, n).value() == ref[n]);
  }
}

TEST_CASE("gamma on rationals via representatives") {
  const auto ctx = make_prime_ctx(7, 2);
  const std::uint64_t m = 49;
  const auto ref = oracle::gamma_integers(7, m, m);
  for (std::int64_t num = 0; num < 12; ++num) {
    const RationalParam x(num, 12);
    const std::uint64_t rep = integer_representative(ctx, x);
    CHECK(rep == oracle::mulmod(static_cast<std::uint64_t>(num), oracle::invmod(12, m), m));
    CHECK(gamma_p_naive(ctx, x).value() == ref[rep]);
  }
  CHECK_THROWS_AS(integer_representative(ctx, RationalParam(1, 7)), Error);
}

TEST_CASE("gamma is 1-Lipschitz") {
  // x = y mod p^k implies Gamma_p(x) = Gamma_p(y) mod p^k.
  const std::uint64_t p = 5;
  const auto c = make_prime_ctx(p, 3);
  const auto ref = oracle::gamma_integers(p, 125, 125 * 4);
  for (std::uint64_t x = 0; x < 125; ++x) {
    for (std::uint64_t shift : {25ull, 125ull, 250ull}) {
      const std::uint64_t pk = shift % 125 == 0 ? 125 : 25;
      CHECK(ref[x] % pk == ref[x + shift] % pk);
    }
    CHECK(gamma_p_integer(c, x + 125).value() == gamma_p_integer(c, x).value());
  }
}
