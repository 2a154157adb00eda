#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hgsat/field_core.hpp"
#include "hgsat/gamma_table.hpp"
#include "hgsat/padic.hpp"

namespace hgsat {

/// An nGn instance: upper parameters a_k, lower parameters b_k, argument t.
struct GnSpec {
  std::vector<RationalParam> upper;
  std::vector<RationalParam> lower;
  std::uint64_t argument = 0;
};

/// Value of an nGn sum as scaled / p^denominator_power, with `scaled`
/// known mod p^N. The sum itself can have negative valuation: each
/// parameter pair contributes a (-p)-exponent in {-1, 0, 1}.
struct NGnSum {
  ResidueMod scaled;
  unsigned denominator_power = 0;
};

/// A residue together with the bound that pins down its integer value.
struct GnValue {
  ResidueMod residue;
  std::optional<double> claimed_bound;
};

/// Per-parameter-set precomputation of the j-sum. Everything except the
/// omega-bar^j(t) factor is independent of t, so a sweep over arguments
/// costs one multiply-add per (t, j).
///
/// The plan keeps a pointer to ctx; ctx must outlive it.
class NGnPlan {
 public:
  NGnPlan(const PrimeCtx& ctx, const GammaTable& table, std::vector<RationalParam> upper,
          std::vector<RationalParam> lower);

  NGnSum evaluate(std::uint64_t t) const;

  std::size_t degree() const noexcept { return upper_.size(); }
  unsigned denominator_power() const noexcept { return shift_; }
  /// Total (-p)-exponent of the j-th summand.
  const std::vector<int>& exponents() const noexcept { return exponents_; }
  int min_exponent() const noexcept;

 private:
  const PrimeCtx* ctx_;
  std::vector<RationalParam> upper_;
  std::vector<RationalParam> lower_;
  std::vector<std::uint64_t> coeff_;
  std::vector<int> exponents_;
  unsigned shift_ = 0;
};

/// The full nGn sum at spec.argument.
NGnSum eval_nGn(const PrimeCtx& ctx, const GammaTable& table, const GnSpec& spec);

/// value * p^k as a residue. Negative net powers divide exactly and lose
/// that many digits of precision.
ResidueMod scale_by_p_power(const NGnSum& sum, int k);

enum class Family { G2, G6, G2Tilde, G6Tilde, Ap };

std::string_view family_tag(Family f) noexcept;
std::optional<Family> parse_family(std::string_view tag) noexcept;
/// The tilde family used by the trace formulas at p: G2Tilde for
/// p = 1 mod 3, G6Tilde for p = 2 mod 3.
Family tilde_family_for(std::uint64_t p) noexcept;

/// Arguments of the two families: 4l/(1+l)^2 and 2^6 l^3/(1+l)^6 in F_p.
std::uint64_t argument_2g2(const PrimeCtx& ctx, std::uint64_t lambda);
std::uint64_t argument_6g6(const PrimeCtx& ctx, std::uint64_t lambda);

GnSpec spec_2g2(const PrimeCtx& ctx, std::uint64_t lambda);
GnSpec spec_6g6(const PrimeCtx& ctx, std::uint64_t lambda);

/// Evaluates every family at one prime with plans built once.
/// References to ctx and table are kept; both must outlive the evaluator.
///
/// G2 is p psi6(2) conj-psi3(4t) phi(1+l) 2G2[2/3,2/3; 5/12,11/12 | t],
/// t = 4l/(1+l)^2. Without the cubic factor conj-psi3(4t) the sum differs
/// from phi(-2) a_p(l) by the cube root of unity psi3(4t); G2Literal
/// exposes that uncorrected transcription.
class FamilyEvaluator {
 public:
  FamilyEvaluator(const PrimeCtx& ctx, const GammaTable& table);

  const PrimeCtx& ctx() const noexcept { return *ctx_; }
  const GammaTable& table() const noexcept { return *table_; }

  bool supports(Family f) const noexcept;
  /// Throws WrongResidueClass naming the violated hypothesis.
  void require(Family f) const;

  GnValue residue(Family f, std::uint64_t lambda) const;
  GnValue residue_2g2_literal(std::uint64_t lambda) const;
  /// Exact integer value; Ap is the point-count trace (lambda != 0, 1).
  std::int64_t value(Family f, std::uint64_t lambda) const;

  std::int64_t correction() const noexcept { return correction_; }
  const NGnPlan& plan_2g2() const;
  const NGnPlan& plan_6g6() const;

 private:
  GnValue g2(std::uint64_t lambda, bool cubic_correction) const;
  GnValue g6(std::uint64_t lambda) const;
  GnValue tilde(GnValue plain, std::uint64_t lambda) const;

  const PrimeCtx* ctx_;
  const GammaTable* table_;
  std::optional<NGnPlan> plan2_;
  std::optional<NGnPlan> plan6_;
  std::int64_t correction_;
  double hasse_bound_;
};

GnValue eval_2G2(const PrimeCtx& ctx, const GammaTable& table, std::uint64_t lambda);
GnValue eval_2G2_literal(const PrimeCtx& ctx, const GammaTable& table, std::uint64_t lambda);
GnValue eval_6G6(const PrimeCtx& ctx, const GammaTable& table, std::uint64_t lambda);
GnValue eval_2G2_tilde(const PrimeCtx& ctx, const GammaTable& table, std::uint64_t lambda);
GnValue eval_6G6_tilde(const PrimeCtx& ctx, const GammaTable& table, std::uint64_t lambda);

/// The unique integer x = residue with |x| <= claimed_bound.
/// Throws NoRepresentative when none exists and PrecisionExhausted when
/// p^N is too small to separate candidates.
std::int64_t lift_signed(const GnValue& v);

}  // namespace hgsat
