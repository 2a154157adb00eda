#include "hgsat/hecke.hpp"

#include "hgsat/error.hpp"
#include "hgsat/sweep_kernels.hpp"

namespace hgsat {

namespace {

void check_weight(unsigned k) {
  if (k < 4 || k % 2 != 0) {
    throw Error(ErrorKind::BadWeight, "weight must be even and >= 4, got " + std::to_string(k));
  }
}

void check_level(unsigned level) {
  if (level != 4 && level != 8) {
    throw Error(ErrorKind::InvalidArgument, "level must be 4 or 8, got " + std::to_string(level));
  }
}

// value_at(l) for l in F_p, evaluated once per l.
template <typename ValueAt>
BigInt assemble(const TraceQuery& q, ValueAt&& value_at) {
  const std::uint64_t p = q.p;
  const unsigned k = q.k;
  const unsigned level = q.level;
  const std::uint64_t last = level == 8 && !q.include_singular_square ? p - 2 : p - 1;
  BigInt sum = 0;
  for (std::uint64_t l = 2; l <= last; ++l) {
    const std::uint64_t arg = level == 4 ? l : l * l % p;
    sum += pk_poly(k, BigInt(value_at(arg)), p);
  }
  return BigInt(level == 4 ? -3 : -4) - sum;
}

}  // namespace

BigInt pk_poly(unsigned k, const BigInt& s, std::uint64_t p) {
  check_weight(k);
  // u_1 = 1, u_2 = s, u_{j+1} = s u_j - p u_{j-1}; P_k = u_{k-1}.
  BigInt prev = 1;
  BigInt cur = s;
  for (unsigned j = 2; j < k - 1; ++j) {
    BigInt next = s * cur - BigInt(p) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt trace(const FamilyEvaluator& ev, const TraceQuery& q, int threads) {
  check_weight(q.k);
  check_level(q.level);
  if (q.p != ev.ctx().p()) throw Error(ErrorKind::InvalidArgument, "trace query is for a different prime");
  const Family f = tilde_family_for(q.p);
  const auto sweep = kernels::family_sweep_omp(ev, f, threads);
  return assemble(q, [&](std::uint64_t l) { return sweep.values[l]; });
}

BigInt trace_level4(const FamilyEvaluator& ev, unsigned k, int threads) {
  return trace(ev, {ev.ctx().p(), k, 4}, threads);
}

BigInt trace_level8(const FamilyEvaluator& ev, unsigned k, int threads) {
  return trace(ev, {ev.ctx().p(), k, 8}, threads);
}

BigInt trace_via_frobenius(const PrimeCtx& ctx, const TraceQuery& q) {
  check_weight(q.k);
  check_level(q.level);
  if (q.p != ctx.p()) throw Error(ErrorKind::InvalidArgument, "trace query is for a different prime");
  return assemble(q, [&](std::uint64_t l) -> std::int64_t {
    if (l == 1) return 1;
    return trace_frobenius(ctx, l);
  });
}

std::vector<BigInt> eta_product_coeffs(const EtaProductSpec& spec, std::size_t n_max) {
  if (n_max < 1) throw Error(ErrorKind::InvalidArgument, "n_max must be >= 1");
  std::int64_t weighted = 0;
  for (const auto& f : spec.factors) {
    if (f.scale == 0) throw Error(ErrorKind::InvalidArgument, "eta scale must be positive");
    weighted += static_cast<std::int64_t>(f.scale) * f.exponent;
  }
  if (weighted % 24 != 0 || weighted < 0) {
    throw Error(ErrorKind::NonIntegralLeadingPower,
                "leading q-power " + std::to_string(weighted) + "/24 is not a nonnegative integer");
  }
  const auto lead = static_cast<std::size_t>(weighted / 24);

  std::vector<BigInt> series(n_max + 1, 0);
  if (lead > n_max) return series;
  // Truncated product prod_n (1 - q^(scale n))^exponent up to q^(n_max - lead).
  const std::size_t len = n_max - lead + 1;
  std::vector<BigInt> poly(len, 0);
  poly[0] = 1;
  for (const auto& f : spec.factors) {
    for (std::size_t step = f.scale; step < len; step += f.scale) {
      const int reps = f.exponent < 0 ? -f.exponent : f.exponent;
      for (int r = 0; r < reps; ++r) {
        if (f.exponent > 0) {
          for (std::size_t i = len; i-- > step;) poly[i] -= poly[i - step];
        } else {
          for (std::size_t i = step; i < len; ++i) poly[i] += poly[i - step];
        }
      }
    }
  }
  for (std::size_t i = 0; i < len; ++i) series[i + lead] = poly[i];
  return series;
}

EtaProductSpec eta_level4_weight6() { return {{{2, 12}}}; }

EtaProductSpec eta_level8_weight4() { return {{{2, 4}, {4, 4}}}; }

}  // namespace hgsat
