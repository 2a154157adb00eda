#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hgsat/field_core.hpp"
#include "hgsat/padic.hpp"

namespace hgsat {

/// Gamma_p at every fraction k / R in [0, 1), R = d * (p - 1), mod p^N.
///
/// Gamma_p is 1-Lipschitz, so each entry is Gamma_p of the integer
/// representative of k/R in [0, p^N). With the default d = 12 the table
/// holds every argument <a - j/(p-1)> for parameters with denominator
/// dividing 12, and every (x + h)/n with x = r/(p-1), n | 12.
class GammaTable {
 public:
  GammaTable(std::uint64_t p, int precision, std::uint64_t resolution, std::vector<std::uint64_t> values);

  std::uint64_t p() const noexcept { return p_; }
  int precision() const noexcept { return precision_; }
  std::uint64_t resolution() const noexcept { return resolution_; }
  std::uint64_t size() const noexcept { return values_.size(); }

  /// Gamma_p(k / R) as a word mod p^N.
  std::uint64_t word(std::uint64_t k) const noexcept { return values_[k]; }
  /// Table index of <x>, or nullopt if R * <x> is not an integer.
  std::optional<std::uint64_t> index_of(const RationalParam& x) const;
  /// Gamma_p(x) for x in [0, 1]; x = 1 gives Gamma_p(1) = -1.
  /// Throws ArgumentNotRepresentable outside the table's grid.
  ResidueMod value(const RationalParam& x) const;

  const std::vector<std::uint64_t>& words() const noexcept { return values_; }

 private:
  std::uint64_t p_;
  int precision_;
  std::uint64_t resolution_;
  std::vector<std::uint64_t> values_;
};

enum class TableBuild { Parallel, Serial, Naive };

/// Builds the table at resolution d * (p - 1). Parallel and Serial sweep the
/// Morita product once over [0, p^N); Naive multiplies each entry from
/// scratch and is only usable for small p^N.
GammaTable build_gamma_table(const PrimeCtx& ctx, std::uint64_t denominator_multiplier = 12,
                             TableBuild mode = TableBuild::Parallel, int threads = 0);

/// Multiplication formula: prod_{h<n} Gamma_p((x+h)/n) against
/// omega(n^((1-x)(1-p))) Gamma_p(x) prod_{0<h<n} Gamma_p(h/n), for
/// x = r/(p-1), 0 <= r <= p-1. Throws ArgumentNotRepresentable when an
/// argument falls outside the table.
bool product_formula_check(const PrimeCtx& ctx, const GammaTable& table, std::uint64_t n,
                           const RationalParam& x);

/// Both identities of the t-fold product lemma at 0 <= j <= p-2:
///   omega(t^(tj)) Gamma_p(<tj/(p-1)>) prod_{0<h<t} Gamma_p(<h/t>)
///     = prod_{h<t} Gamma_p(<h/t + j/(p-1)>)
/// and the same with j -> -j.
bool t_fold_product_check(const PrimeCtx& ctx, const GammaTable& table, std::uint64_t t, std::uint64_t j);

}  // namespace hgsat
