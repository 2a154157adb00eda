#include "hgsat/satotate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hgsat/error.hpp"
#include "hgsat/sweep_kernels.hpp"

namespace hgsat {

BigInt catalan(unsigned n) {
  // C_{k+1} = C_k * 2(2k+1) / (k+2), exact at every step.
  BigInt c = 1;
  for (unsigned k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

double semicircle_cdf(double t) noexcept {
  if (t <= -2.0) return 0.0;
  if (t >= 2.0) return 1.0;
  return 0.5 + t * std::sqrt(4.0 - t * t) / (4.0 * std::numbers::pi) + std::asin(t / 2.0) / std::numbers::pi;
}

double semicircle_density(double t) noexcept {
  if (t <= -2.0 || t >= 2.0) return 0.0;
  return std::sqrt(4.0 - t * t) / (2.0 * std::numbers::pi);
}

double ks_distance_semicircle(std::span<const double> samples) {
  if (samples.empty()) throw Error(ErrorKind::InvalidArgument, "no samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double f = semicircle_cdf(sorted[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    d = std::max(d, std::abs(f - static_cast<double>(j) / n));
    i = j;
  }
  return d;
}

MomentReport moment_from_values(std::uint64_t p, Family f, unsigned m, std::span<const std::int64_t> values) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "moment order must be >= 1");
  MomentReport r;
  r.p = p;
  r.m = m;
  r.family = f;
  for (std::int64_t v : values) r.sum += boost::multiprecision::pow(BigInt(v), m);
  r.normalized = r.sum.convert_to<double>() / std::pow(static_cast<double>(p), m / 2.0 + 1.0);
  r.expected = (m % 2 == 0) ? catalan(m / 2).convert_to<double>() : 0.0;
  return r;
}

MomentReport moment_sum(const FamilyEvaluator& ev, Family f, unsigned m, int threads) {
  const auto sweep = kernels::family_sweep_omp(ev, f, threads);
  return moment_from_values(ev.ctx().p(), f, m, sweep.values);
}

std::vector<MomentReport> moment_sums(const FamilyEvaluator& ev, Family f, unsigned m_max, int threads) {
  const auto sweep = kernels::family_sweep_omp(ev, f, threads);
  std::vector<MomentReport> out;
  for (unsigned m = 1; m <= m_max; ++m) out.push_back(moment_from_values(ev.ctx().p(), f, m, sweep.values));
  return out;
}

std::vector<double> normalized_samples(std::uint64_t p, std::span<const std::int64_t> values) {
  const double scale = 1.0 / std::sqrt(static_cast<double>(p));
  std::vector<double> out;
  out.reserve(values.size());
  for (std::int64_t v : values) out.push_back(static_cast<double>(v) * scale);
  return out;
}

DistributionReport distribution_from_values(std::uint64_t p, Family f, std::span<const std::int64_t> values,
                                            unsigned bins) {
  if (bins == 0) throw Error(ErrorKind::InvalidArgument, "bins must be >= 1");
  DistributionReport r;
  r.p = p;
  r.family = f;
  r.sample_size = values.size();
  const auto samples = normalized_samples(p, values);
  const double width = 4.0 / bins;
  r.bins.resize(bins);
  for (unsigned b = 0; b < bins; ++b) {
    r.bins[b].left = -2.0 + b * width;
    r.bins[b].right = (b + 1 == bins) ? 2.0 : -2.0 + (b + 1) * width;
  }
  for (double s : samples) {
    auto b = static_cast<std::int64_t>(std::floor((s + 2.0) / width));
    b = std::clamp<std::int64_t>(b, 0, bins - 1);
    ++r.bins[static_cast<std::size_t>(b)].count;
  }
  r.ks_distance = ks_distance_semicircle(samples);
  return r;
}

DistributionReport distribution_report(const FamilyEvaluator& ev, Family f, unsigned bins, int threads) {
  const auto sweep = kernels::family_sweep_omp(ev, f, threads);
  return distribution_from_values(ev.ctx().p(), f, sweep.values, bins);
}

}  // namespace hgsat
