#include "hgsat/hypergeo.hpp"

#include <algorithm>
#include <cmath>

#include "hgsat/error.hpp"

namespace hgsat {

namespace {

const std::vector<RationalParam>& upper_2g2() {
  static const std::vector<RationalParam> v{{2, 3}, {2, 3}};
  return v;
}
const std::vector<RationalParam>& lower_2g2() {
  static const std::vector<RationalParam> v{{5, 12}, {11, 12}};
  return v;
}
const std::vector<RationalParam>& upper_6g6() {
  static const std::vector<RationalParam> v{{1, 3}, {1, 3}, {2, 3}, {2, 3}, {0, 1}, {0, 1}};
  return v;
}
const std::vector<RationalParam>& lower_6g6() {
  static const std::vector<RationalParam> v{{1, 12}, {1, 4}, {5, 12}, {7, 12}, {3, 4}, {11, 12}};
  return v;
}

std::uint64_t table_index(const GammaTable& table, const RationalParam& x) {
  const auto idx = table.index_of(x);
  if (!idx) {
    throw Error(ErrorKind::ArgumentNotRepresentable,
                "parameter " + x.to_string() + " is off the gamma table grid");
  }
  return *idx;
}

}  // namespace

NGnPlan::NGnPlan(const PrimeCtx& ctx, const GammaTable& table, std::vector<RationalParam> upper,
                 std::vector<RationalParam> lower)
    : ctx_(&ctx), upper_(std::move(upper)), lower_(std::move(lower)) {
  if (upper_.empty() || upper_.size() != lower_.size()) {
    throw Error(ErrorKind::InvalidArgument, "nGn needs n >= 1 upper and n lower parameters");
  }
  if (table.p() != ctx.p() || table.precision() != ctx.precision()) {
    throw Error(ErrorKind::PrecisionMismatch, "gamma table built for a different (p, N)");
  }
  for (const auto* row : {&upper_, &lower_}) {
    for (const auto& a : *row) {
      if (!a.is_padic(ctx.p())) {
        throw Error(ErrorKind::ParameterNotPadic, a.to_string() + " is not in Z_p");
      }
    }
  }

  const Modulus& mod = ctx.modulus();
  const std::uint64_t pm1 = ctx.group_order();
  const std::uint64_t res = table.resolution();
  const std::uint64_t step = res / pm1;  // grid units per 1/(p-1)
  const std::size_t n = upper_.size();

  // Grid indices of <a_k> and <-b_k> and the inverse of their Gamma product.
  std::vector<std::uint64_t> ia(n), ib(n);
  std::uint64_t norm = 1;
  for (std::size_t k = 0; k < n; ++k) {
    ia[k] = table_index(table, upper_[k]);
    ib[k] = table_index(table, -lower_[k]);
    norm = mod.mul(norm, mod.mul(table.word(ia[k]), table.word(ib[k])));
  }
  const std::uint64_t norm_inv = *mod.inverse(norm);
  // -1/(p-1).
  const std::uint64_t lead = mod.neg(*mod.inverse(pm1 % mod.value()));

  std::vector<std::uint64_t> gamma(pm1);
  exponents_.resize(pm1);
  for (std::uint64_t j = 0; j < pm1; ++j) {
    const std::uint64_t x = j * step;  // j/(p-1) on the grid
    int e = 0;
    std::uint64_t g = 1;
    for (std::size_t k = 0; k < n; ++k) {
      // -floor(<a> - x) is 1 exactly when x > <a>; -floor(<-b> + x) is -1
      // exactly when <-b> + x >= 1.
      if (x > ia[k]) ++e;
      if (ib[k] + x >= res) --e;
      const std::uint64_t i_up = (ia[k] + res - x) % res;
      const std::uint64_t i_lo = (ib[k] + x) % res;
      g = mod.mul(g, mod.mul(table.word(i_up), table.word(i_lo)));
    }
    exponents_[j] = e;
    gamma[j] = g;
  }

  const int min_e = *std::min_element(exponents_.begin(), exponents_.end());
  shift_ = static_cast<unsigned>(std::max(0, -min_e));

  coeff_.assign(pm1, 0);
  const int precision = ctx.precision();
  for (std::uint64_t j = 0; j < pm1; ++j) {
    const int scaled_e = exponents_[j] + static_cast<int>(shift_);
    if (scaled_e >= precision) continue;  // vanishes mod p^N
    std::uint64_t c = mod.mul(lead, mod.mul(gamma[j], norm_inv));
    c = mod.mul(c, mod.pow(ctx.p(), static_cast<std::uint64_t>(scaled_e)));
    // (-1)^(jn) from the summand, (-1)^e from (-p)^e.
    const bool negate = ((j * n) % 2 == 1) != (((exponents_[j] % 2) + 2) % 2 == 1);
    coeff_[j] = negate ? mod.neg(c) : c;
  }
}

int NGnPlan::min_exponent() const noexcept {
  return *std::min_element(exponents_.begin(), exponents_.end());
}

NGnSum NGnPlan::evaluate(std::uint64_t t) const {
  const PrimeCtx& ctx = *ctx_;
  t %= ctx.p();
  if (t == 0) return {ResidueMod(ctx, 0), shift_};

  const Modulus& mod = ctx.modulus();
  const std::uint64_t pm1 = ctx.group_order();
  // omega-bar^j(t) = omega(g)^(-j dlog t).
  const std::uint64_t d = ctx.dlog(t);
  const std::uint64_t stride = (pm1 - d) % pm1;
  std::uint64_t idx = 0;
  std::uint64_t sum = 0;
  for (std::uint64_t j = 0; j < pm1; ++j) {
    sum = mod.add(sum, mod.mul(coeff_[j], ctx.omega_power(idx)));
    idx += stride;
    if (idx >= pm1) idx -= pm1;
  }
  return {ResidueMod::from_word(ctx, sum), shift_};
}

NGnSum eval_nGn(const PrimeCtx& ctx, const GammaTable& table, const GnSpec& spec) {
  return NGnPlan(ctx, table, spec.upper, spec.lower).evaluate(spec.argument);
}

ResidueMod scale_by_p_power(const NGnSum& sum, int k) {
  const int net = k - static_cast<int>(sum.denominator_power);
  if (net >= 0) {
    ResidueMod pp(sum.scaled.p(), sum.scaled.precision(), static_cast<std::int64_t>(sum.scaled.p()));
    return sum.scaled * pp.pow(static_cast<std::uint64_t>(net));
  }
  return sum.scaled.divide_by_p_power(-net);
}

std::string_view family_tag(Family f) noexcept {
  switch (f) {
    case Family::G2: return "2g2";
    case Family::G6: return "6g6";
    case Family::G2Tilde: return "2g2t";
    case Family::G6Tilde: return "6g6t";
    case Family::Ap: return "ap";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view tag) noexcept {
  for (Family f : {Family::G2, Family::G6, Family::G2Tilde, Family::G6Tilde, Family::Ap}) {
    if (family_tag(f) == tag) return f;
  }
  return std::nullopt;
}

Family tilde_family_for(std::uint64_t p) noexcept {
  return p % 3 == 1 ? Family::G2Tilde : Family::G6Tilde;
}

std::uint64_t argument_2g2(const PrimeCtx& ctx, std::uint64_t lambda) {
  const std::uint64_t p = ctx.p();
  lambda %= p;
  const std::uint64_t s = (lambda + 1) % p;
  if (s == 0) return 0;
  const std::uint64_t s2 = s * s % p;
  return 4 * lambda % p * ctx.inv_mod_p(s2) % p;
}

std::uint64_t argument_6g6(const PrimeCtx& ctx, std::uint64_t lambda) {
  const std::uint64_t u = argument_2g2(ctx, lambda);
  return u * u % ctx.p() * u % ctx.p();
}

GnSpec spec_2g2(const PrimeCtx& ctx, std::uint64_t lambda) {
  return {upper_2g2(), lower_2g2(), argument_2g2(ctx, lambda)};
}

GnSpec spec_6g6(const PrimeCtx& ctx, std::uint64_t lambda) {
  return {upper_6g6(), lower_6g6(), argument_6g6(ctx, lambda)};
}

FamilyEvaluator::FamilyEvaluator(const PrimeCtx& ctx, const GammaTable& table)
    : ctx_(&ctx),
      table_(&table),
      correction_(correction_term(ctx)),
      hasse_bound_(2.0 * std::sqrt(static_cast<double>(ctx.p()))) {
  if (ctx.p() % 6 == 1) plan2_.emplace(ctx, table, upper_2g2(), lower_2g2());
  plan6_.emplace(ctx, table, upper_6g6(), lower_6g6());
}

bool FamilyEvaluator::supports(Family f) const noexcept {
  switch (f) {
    case Family::G2:
    case Family::G2Tilde: return ctx_->p() % 6 == 1;
    case Family::G6:
    case Family::G6Tilde: return ctx_->p() % 3 == 2;
    case Family::Ap: return true;
  }
  return false;
}

void FamilyEvaluator::require(Family f) const {
  if (supports(f)) return;
  const std::string p = std::to_string(ctx_->p());
  if (f == Family::G2 || f == Family::G2Tilde) {
    throw Error(ErrorKind::WrongResidueClass, "2G2 requires p = 1 (mod 3); p = " + p);
  }
  throw Error(ErrorKind::WrongResidueClass, "6G6 identity requires p = 2 (mod 3); p = " + p);
}

const NGnPlan& FamilyEvaluator::plan_2g2() const {
  require(Family::G2);
  return *plan2_;
}

const NGnPlan& FamilyEvaluator::plan_6g6() const { return *plan6_; }

GnValue FamilyEvaluator::g2(std::uint64_t lambda, bool cubic_correction) const {
  require(Family::G2);
  const PrimeCtx& ctx = *ctx_;
  const Modulus& mod = ctx.modulus();
  const std::uint64_t p = ctx.p();
  lambda %= p;
  const int phi = ctx.legendre(lambda + 1);
  if (phi == 0) return {ResidueMod(ctx, 0), hasse_bound_};

  const std::uint64_t t = argument_2g2(ctx, lambda);
  ResidueMod v = scale_by_p_power(plan2_->evaluate(t), 1);
  const std::int64_t sixth = static_cast<std::int64_t>(ctx.group_order() / 6);
  std::uint64_t pre = ctx.character(sixth, 2);  // psi6(2)
  if (cubic_correction && t != 0) pre = mod.mul(pre, ctx.character(-2 * sixth, 4 * t % p));
  if (phi < 0) pre = mod.neg(pre);
  ResidueMod factor(v.p(), v.precision(), static_cast<std::int64_t>(pre % v.modulus()));
  return {v * factor, hasse_bound_};
}

GnValue FamilyEvaluator::g6(std::uint64_t lambda) const {
  const PrimeCtx& ctx = *ctx_;
  lambda %= ctx.p();
  std::optional<double> bound;
  if (ctx.p() % 3 == 2) bound = hasse_bound_;
  const int phi = ctx.legendre(lambda + 1);
  if (phi == 0) return {ResidueMod(ctx, 0), bound};
  ResidueMod v = scale_by_p_power(plan6_->evaluate(argument_6g6(ctx, lambda)), 0);
  return {phi < 0 ? -v : v, bound};
}

GnValue FamilyEvaluator::tilde(GnValue plain, std::uint64_t lambda) const {
  if ((lambda + 1) % ctx_->p() != 0) return plain;
  return {ResidueMod(plain.residue.p(), plain.residue.precision(), -correction_), plain.claimed_bound};
}

GnValue FamilyEvaluator::residue(Family f, std::uint64_t lambda) const {
  switch (f) {
    case Family::G2: return g2(lambda, true);
    case Family::G6: return g6(lambda);
    case Family::G2Tilde: return tilde(g2(lambda, true), lambda);
    case Family::G6Tilde: return tilde(g6(lambda), lambda);
    case Family::Ap: {
      const std::int64_t a = trace_frobenius(*ctx_, lambda);
      return {ResidueMod(*ctx_, a), hasse_bound_};
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family");
}

GnValue FamilyEvaluator::residue_2g2_literal(std::uint64_t lambda) const { return g2(lambda, false); }

std::int64_t FamilyEvaluator::value(Family f, std::uint64_t lambda) const {
  if (f == Family::Ap) return trace_frobenius(*ctx_, lambda);
  require(f);
  return lift_signed(residue(f, lambda));
}

GnValue eval_2G2(const PrimeCtx& ctx, const GammaTable& table, std::uint64_t lambda) {
  return FamilyEvaluator(ctx, table).residue(Family::G2, lambda);
}

GnValue eval_2G2_literal(const PrimeCtx& ctx, const GammaTable& table, std::uint64_t lambda) {
  return FamilyEvaluator(ctx, table).residue_2g2_literal(lambda);
}

GnValue eval_6G6(const PrimeCtx& ctx, const GammaTable& table, std::uint64_t lambda) {
  return FamilyEvaluator(ctx, table).residue(Family::G6, lambda);
}

GnValue eval_2G2_tilde(const PrimeCtx& ctx, const GammaTable& table, std::uint64_t lambda) {
  return FamilyEvaluator(ctx, table).residue(Family::G2Tilde, lambda);
}

GnValue eval_6G6_tilde(const PrimeCtx& ctx, const GammaTable& table, std::uint64_t lambda) {
  return FamilyEvaluator(ctx, table).residue(Family::G6Tilde, lambda);
}

std::int64_t lift_signed(const GnValue& v) {
  if (!v.claimed_bound) {
    throw Error(ErrorKind::InvalidArgument, "no bound available to lift the residue");
  }
  const auto bound = static_cast<std::uint64_t>(std::floor(*v.claimed_bound));
  const std::uint64_t m = v.residue.modulus();
  if (m <= 2 * bound + 1) {
    throw Error(ErrorKind::PrecisionExhausted, "p^N too small to lift a value bounded by " +
                                                   std::to_string(bound));
  }
  const std::uint64_t r = v.residue.value();
  if (r <= bound) return static_cast<std::int64_t>(r);
  if (m - r <= bound) return -static_cast<std::int64_t>(m - r);
  throw Error(ErrorKind::NoRepresentative,
              "residue " + std::to_string(r) + " mod " + std::to_string(m) + " has no lift with |x| <= " +
                  std::to_string(bound));
}

}  // namespace hgsat
