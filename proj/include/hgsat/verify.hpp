#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hgsat/hypergeo.hpp"

namespace hgsat::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

enum class Suite { Identities, Gamma, Gauss, Moments, Traces, All };

std::optional<Suite> parse_suite(std::string_view name) noexcept;
std::string_view suite_name(Suite s) noexcept;

// Per-prime checks. Each returns one result summarizing every case tried.

/// 2G2 = phi(-2) a_p (p = 1 mod 3) or 6G6 = phi(-1) a_p (p = 2 mod 3) for
/// all lambda outside {0, 1, -1}, plus the special values at 1 and -1.
std::vector<CheckResult> check_identities(const FamilyEvaluator& ev);
/// tilde(-1) = a_p(-1).
CheckResult check_tilde_calibration(const FamilyEvaluator& ev);

/// Reflection on every table entry, the functional equation for n < p^2,
/// Teichmuller lifts, the multiplication formula and the t-fold product
/// lemma for n, t in {2, 3, 4, 6, 12}.
std::vector<CheckResult> check_gamma(const PrimeCtx& ctx, const GammaTable& table);

/// Character orthogonality (exact), |g(chi)|^2 = p and Davenport-Hasse for
/// n = 2 (floating point, relative tolerance `tol`).
std::vector<CheckResult> check_gauss(const PrimeCtx& ctx, double tol = 1e-6);

/// sum_l G(l)^m against its decomposition through point counts, m <= m_max.
CheckResult check_moment_decomposition(const FamilyEvaluator& ev, unsigned m_max = 6, int threads = 0);

/// Level-4 weight-4 trace vanishes; level-4 weight-6 and level-8 weight-4
/// traces match the eta-product eigenforms, the point-count route and the
/// Deligne bound.
std::vector<CheckResult> check_traces(const FamilyEvaluator& ev, int threads = 0);

/// Runs a suite over every prime in [pmin, pmax] with p >= 5.
std::vector<CheckResult> run_suite(Suite suite, std::uint64_t pmin, std::uint64_t pmax, int precision = 3,
                                   int threads = 0);

}  // namespace hgsat::verify
