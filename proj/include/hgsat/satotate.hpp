#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hgsat/bigint.hpp"
#include "hgsat/hypergeo.hpp"

namespace hgsat {

struct MomentReport {
  std::uint64_t p = 0;
  unsigned m = 0;
  Family family = Family::G2;
  BigInt sum;
  double normalized = 0.0;  // sum / p^(m/2 + 1)
  double expected = 0.0;    // Catalan(m/2) for even m, 0 for odd m
};

struct Bin {
  double left = 0.0;
  double right = 0.0;
  std::uint64_t count = 0;
};

struct DistributionReport {
  std::uint64_t p = 0;
  Family family = Family::G2;
  std::vector<Bin> bins;
  double ks_distance = 0.0;
  std::uint64_t sample_size = 0;
};

BigInt catalan(unsigned n);

/// Mass of the semicircle law (1/2pi) sqrt(4 - t^2) on [-2, t].
double semicircle_cdf(double t) noexcept;
double semicircle_density(double t) noexcept;

/// sup |F_emp - semicircle_cdf| over the exact empirical CDF, both one-sided
/// limits at every sample point.
double ks_distance_semicircle(std::span<const double> samples);

/// Moment m of a list of family values at p.
MomentReport moment_from_values(std::uint64_t p, Family f, unsigned m, std::span<const std::int64_t> values);

/// Exact sum of family^m over lambda in F_p (G families) or lambda != 0, 1 (Ap).
MomentReport moment_sum(const FamilyEvaluator& ev, Family f, unsigned m, int threads = 0);
/// Moments 1..m_max from a single sweep.
std::vector<MomentReport> moment_sums(const FamilyEvaluator& ev, Family f, unsigned m_max, int threads = 0);

/// p^(-1/2) * value for every value in the sweep.
std::vector<double> normalized_samples(std::uint64_t p, std::span<const std::int64_t> values);

DistributionReport distribution_from_values(std::uint64_t p, Family f, std::span<const std::int64_t> values,
                                            unsigned bins);
DistributionReport distribution_report(const FamilyEvaluator& ev, Family f, unsigned bins, int threads = 0);

}  // namespace hgsat
