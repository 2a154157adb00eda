#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hgsat/error.hpp"
#include "hgsat/gamma_kernels.hpp"
#include "hgsat/gamma_table.hpp"
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

}  // namespace

TEST_CASE("table entries are Gamma_p at the integer representatives") {
  for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
    for (int n : {2, 3}) {
      const auto ctx = make_prime_ctx(p, n);
      const auto table = build_gamma_table(ctx);
      const std::uint64_t m = ctx.modulus().value();
      const auto ref = oracle::gamma_integers(p, m, m);
      const std::uint64_t res = 12 * (p - 1);
      REQUIRE(table.size() == res);
      for (std::uint64_t k = 0; k < res; ++k) {
        const std::uint64_t rep = oracle::mulmod(k, oracle::invmod(res % m, m), m);
        CHECK(table.word(k) == ref[rep]);
      }
    }
  }
  CHECK(build_gamma_table(make_prime_ctx(5, 2)).word(0) == 1);
}

TEST_CASE("serial, parallel and naive builds agree") {
  for (std::uint64_t p : {5ull, 7ull, 13ull, 31ull}) {
    const auto ctx = make_prime_ctx(p, 3);
    const auto naive = build_gamma_table(ctx, 12, TableBuild::Naive);
    const auto serial = build_gamma_table(ctx, 12, TableBuild::Serial);
    CHECK(serial.words() == naive.words());
    for (int threads : {1, 2, 3, 7}) {
      CHECK(build_gamma_table(ctx, 12, TableBuild::Parallel, threads).words() == serial.words());
    }
  }
}

TEST_CASE("parallel gamma kernel matches serial on arbitrary point sets") {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {5ull, 11ull, 101ull}) {
    const Modulus mod(p * p * p);
    std::vector<std::uint64_t> pts(500);
    for (auto& x : pts) x = rng() % mod.value();
    pts.push_back(0);
    pts.push_back(pts.front());  // duplicate
    const auto serial = kernels::gamma_at_points_serial(p, mod, pts);
    for (int threads : {1, 2, 4, 16}) CHECK(kernels::gamma_at_points_omp(p, mod, pts, threads) == serial);
    const auto ref = oracle::gamma_integers(p, mod.value(), mod.value());
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(serial[i] == ref[pts[i]]);
  }
  const Modulus small(25);
  CHECK(kernels::gamma_at_points_omp(5, small, std::vector<std::uint64_t>{}, 2).empty());
}

TEST_CASE("value lookup and representability") {
  const auto ctx = make_prime_ctx(7, 2);
  const auto table = build_gamma_table(ctx);
  CHECK(table.value(RationalParam(1, 1)).value() == 48);
  CHECK(table.value(RationalParam(0, 1)).value() == 1);
  CHECK(table.index_of(RationalParam(5, 12)) == std::optional<std::uint64_t>(30));
  CHECK_FALSE(table.index_of(RationalParam(1, 5)).has_value());
  CHECK_THROWS_AS(table.value(RationalParam(1, 5)), Error);
  CHECK_THROWS_AS(table.value(RationalParam(3, 2)), Error);
}

TEST_CASE("reflection formula on every entry") {
  for (std::uint64_t p : primes(5, 100)) {
    const auto ctx = make_prime_ctx(p, 2);
    const auto table = build_gamma_table(ctx);
    const auto& mod = ctx.modulus();
    const std::uint64_t res = table.resolution();
    for (std::uint64_t k = 1; k < res; ++k) {
      const RationalParam x(static_cast<std::int64_t>(k), static_cast<std::int64_t>(res));
      const std::uint64_t prod = mod.mul(table.value(x).value(), table.value(RationalParam(1, 1) - x).value());
      std::uint64_t x0 = integer_representative(ctx, x) % p;
      if (x0 == 0) x0 = p;
      CHECK(prod == (x0 % 2 ? mod.neg(1) : 1));
    }
  }
}

TEST_CASE("Gamma_p(1/2)^2 = (-1)^((p+1)/2)") {
  for (std::uint64_t p : primes(5, 200)) {
    const auto ctx = make_prime_ctx(p, 2);
    const auto half = build_gamma_table(ctx).value(RationalParam(1, 2));
    const auto sq = (half * half).value();
    CHECK(sq == ((p + 1) / 2 % 2 ? ctx.modulus().neg(1) : 1));
  }
}

TEST_CASE("functional equation at integers") {
  for (std::uint64_t p : primes(5, 60)) {
    const Modulus mod(p * p * p);
    const std::uint64_t limit = p * p;
    std::vector<std::uint64_t> pts(limit + 1);
    std::iota(pts.begin(), pts.end(), 0);
    const auto g = kernels::gamma_at_points_omp(p, mod, pts, 2);
    for (std::uint64_t n = 0; n < limit; ++n) {
      const std::uint64_t f = n % p ? n : 1;
      CHECK(g[n + 1] == mod.neg(mod.mul(f, g[n])));
    }
  }
}

TEST_CASE("multiplication formula") {
  CHECK(product_formula_check(make_prime_ctx(7, 2), build_gamma_table(make_prime_ctx(7, 2)), 3, RationalParam(0, 1)));
  {
    const auto ctx = make_prime_ctx(11, 2);
    CHECK(product_formula_check(ctx, build_gamma_table(ctx), 2, RationalParam(1, 10)));
  }
  {
    const auto ctx = make_prime_ctx(13, 2);
    CHECK(product_formula_check(ctx, build_gamma_table(ctx), 2, RationalParam(10, 12)));
  }
  for (std::uint64_t p : primes(5, 100)) {
    const auto ctx = make_prime_ctx(p, 2);
    const auto table = build_gamma_table(ctx);
    const auto pm1 = static_cast<std::int64_t>(p - 1);
    for (std::uint64_t n : {2u, 3u, 4u, 6u, 12u}) {
      for (std::int64_t r = 0; r <= pm1; ++r) CHECK(product_formula_check(ctx, table, n, RationalParam(r, pm1)));
    }
  }
}

TEST_CASE("t-fold product lemma") {
  {
    const auto ctx = make_prime_ctx(13, 2);
    CHECK(t_fold_product_check(ctx, build_gamma_table(ctx), 12, 1));
  }
  {
    const auto ctx = make_prime_ctx(7, 2);
    CHECK(t_fold_product_check(ctx, build_gamma_table(ctx), 2, 0));
  }
  {
    const auto ctx = make_prime_ctx(11, 2);
    CHECK(t_fold_product_check(ctx, build_gamma_table(ctx), 3, 5));
  }
  for (std::uint64_t p : primes(5, 100)) {
    const auto ctx = make_prime_ctx(p, 3);
    const auto table = build_gamma_table(ctx);
    for (std::uint64_t t : {2u, 3u, 4u, 6u, 12u}) {
      for (std::uint64_t j = 0; j + 1 < p; ++j) CHECK(t_fold_product_check(ctx, table, t, j));
    }
  }
}

TEST_CASE("table and context must match") {
  const auto ctx = make_prime_ctx(7, 2);
  CHECK_THROWS_AS(GammaTable(7, 2, 72, std::vector<std::uint64_t>(10)), Error);
  CHECK_THROWS_AS(build_gamma_table(ctx, 7), Error);
}
