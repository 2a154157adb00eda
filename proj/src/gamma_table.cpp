#include "hgsat/gamma_table.hpp"

#include "hgsat/error.hpp"
#include "hgsat/gamma_kernels.hpp"

namespace hgsat {

GammaTable::GammaTable(std::uint64_t p, int precision, std::uint64_t resolution,
                       std::vector<std::uint64_t> values)
    : p_(p), precision_(precision), resolution_(resolution), values_(std::move(values)) {
  if (values_.size() != resolution_) {
    throw Error(ErrorKind::InvalidArgument, "gamma table size does not match its resolution");
  }
}

std::optional<std::uint64_t> GammaTable::index_of(const RationalParam& x) const {
  const RationalParam f = frac_bracket(x);
  const auto den = static_cast<std::uint64_t>(f.den());
  if (resolution_ % den != 0) return std::nullopt;
  return static_cast<std::uint64_t>(f.num()) * (resolution_ / den);
}

ResidueMod GammaTable::value(const RationalParam& x) const {
  if (x == RationalParam(1)) return ResidueMod(p_, precision_, -1);
  if (x < RationalParam(0) || x > RationalParam(1)) {
    throw Error(ErrorKind::ArgumentNotRepresentable, x.to_string() + " lies outside [0, 1]");
  }
  const auto idx = index_of(x);
  if (!idx) {
    throw Error(ErrorKind::ArgumentNotRepresentable,
                x.to_string() + " is not on the grid 1/" + std::to_string(resolution_));
  }
  return ResidueMod(p_, precision_, static_cast<std::int64_t>(values_[*idx]));
}

GammaTable build_gamma_table(const PrimeCtx& ctx, std::uint64_t denominator_multiplier, TableBuild mode,
                             int threads) {
  if (denominator_multiplier == 0 || denominator_multiplier % ctx.p() == 0) {
    throw Error(ErrorKind::InvalidArgument, "table denominator must be a unit mod p");
  }
  const std::uint64_t resolution = denominator_multiplier * ctx.group_order();
  const Modulus& mod = ctx.modulus();

  // Representative of k/R is k * R^{-1} mod p^N.
  const std::uint64_t r_inv = *mod.inverse(resolution % mod.value());
  std::vector<std::uint64_t> points(resolution);
  std::uint64_t rep = 0;
  for (std::uint64_t k = 0; k < resolution; ++k) {
    points[k] = rep;
    rep = mod.add(rep, r_inv);
  }

  std::vector<std::uint64_t> values;
  switch (mode) {
    case TableBuild::Parallel:
      values = kernels::gamma_at_points_omp(ctx.p(), mod, points, threads);
      break;
    case TableBuild::Serial:
      values = kernels::gamma_at_points_serial(ctx.p(), mod, points);
      break;
    case TableBuild::Naive:
      values.resize(resolution);
      for (std::uint64_t k = 0; k < resolution; ++k) values[k] = gamma_p_integer(ctx, points[k]).value();
      break;
  }
  return GammaTable(ctx.p(), ctx.precision(), resolution, std::move(values));
}

bool product_formula_check(const PrimeCtx& ctx, const GammaTable& table, std::uint64_t n,
                           const RationalParam& x) {
  const auto pm1 = static_cast<std::int64_t>(ctx.group_order());
  if (n == 0 || n % ctx.p() == 0) {
    throw Error(ErrorKind::ArgumentNotRepresentable, "n must be a positive unit mod p");
  }
  if (pm1 % x.den() != 0 || x < RationalParam(0) || x > RationalParam(1)) {
    throw Error(ErrorKind::InvalidArgument, "x must be r/(p-1) with 0 <= r <= p-1");
  }
  const std::int64_t r = x.num() * (pm1 / x.den());
  const auto nn = static_cast<std::int64_t>(n);

  ResidueMod lhs(ctx, 1);
  for (std::int64_t h = 0; h < nn; ++h) {
    lhs *= table.value(RationalParam(r + h * pm1, nn * pm1));
  }
  // (1 - x)(1 - p) = r - (p - 1), an integer.
  ResidueMod rhs = ResidueMod::from_word(ctx, ctx.character(r - pm1, n % ctx.p()));
  rhs *= table.value(x);
  for (std::int64_t h = 1; h < nn; ++h) rhs *= table.value(RationalParam(h, nn));
  return lhs == rhs;
}

bool t_fold_product_check(const PrimeCtx& ctx, const GammaTable& table, std::uint64_t t, std::uint64_t j) {
  const auto pm1 = static_cast<std::int64_t>(ctx.group_order());
  if (t == 0 || t % ctx.p() == 0) {
    throw Error(ErrorKind::ArgumentNotRepresentable, "t must be a positive unit mod p");
  }
  if (j >= ctx.group_order()) throw Error(ErrorKind::InvalidArgument, "j must lie in [0, p-2]");
  const auto tt = static_cast<std::int64_t>(t);
  const auto jj = static_cast<std::int64_t>(j);
  const std::uint64_t t_mod_p = t % ctx.p();

  ResidueMod base(ctx, 1);
  for (std::int64_t h = 1; h < tt; ++h) base *= table.value(frac_bracket(RationalParam(h, tt)));

  for (const std::int64_t sign : {1, -1}) {
    ResidueMod lhs = ResidueMod::from_word(ctx, ctx.character(sign * tt * jj, t_mod_p));
    lhs *= table.value(frac_bracket(RationalParam(sign * tt * jj, pm1)));
    lhs *= base;
    ResidueMod rhs(ctx, 1);
    for (std::int64_t h = 0; h < tt; ++h) {
      rhs *= table.value(frac_bracket(RationalParam(h, tt) + RationalParam(sign * jj, pm1)));
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace hgsat
