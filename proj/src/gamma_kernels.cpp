#include "hgsat/gamma_kernels.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

namespace hgsat::kernels {

namespace {

struct SortedPoints {
  std::vector<std::uint64_t> order;  // indices into points, by increasing point
  std::uint64_t limit = 0;           // max point + 1
};

SortedPoints sort_points(std::span<const std::uint64_t> points) {
  SortedPoints s;
  s.order.resize(points.size());
  std::iota(s.order.begin(), s.order.end(), std::uint64_t{0});
  std::sort(s.order.begin(), s.order.end(),
            [&](std::uint64_t a, std::uint64_t b) { return points[a] < points[b]; });
  s.limit = points.empty() ? 0 : points[s.order.back()] + 1;
  return s;
}

// Sweeps n over [lo, hi) starting from prod = prod_{0<j<lo, p!|j} j and
// writes Gamma_p(n) for the sorted points in [first, last).
void sweep_block(std::uint64_t p, const Modulus& mod, std::span<const std::uint64_t> points,
                 const std::vector<std::uint64_t>& order, std::size_t first, std::size_t last,
                 std::uint64_t lo, std::uint64_t prod, std::vector<std::uint64_t>& out) {
  std::uint64_t n = lo;
  std::uint64_t n_mod_p = lo % p;
  const std::uint64_t m = mod.value();
  for (std::size_t i = first; i < last; ++i) {
    const std::uint64_t target = points[order[i]];
    for (; n < target; ++n) {
      if (n_mod_p != 0 && n != 0) prod = mod.mul(prod, n % m);
      if (++n_mod_p == p) n_mod_p = 0;
    }
    out[order[i]] = (target & 1) ? mod.neg(prod) : prod;
  }
}

std::uint64_t block_product(std::uint64_t p, const Modulus& mod, std::uint64_t lo, std::uint64_t hi) {
  std::uint64_t prod = 1;
  std::uint64_t n_mod_p = lo % p;
  const std::uint64_t m = mod.value();
  for (std::uint64_t n = lo; n < hi; ++n) {
    if (n_mod_p != 0 && n != 0) prod = mod.mul(prod, n % m);
    if (++n_mod_p == p) n_mod_p = 0;
  }
  return prod;
}

}  // namespace

std::vector<std::uint64_t> gamma_at_points_serial(std::uint64_t p, const Modulus& mod,
                                                  std::span<const std::uint64_t> points) {
  std::vector<std::uint64_t> out(points.size());
  const SortedPoints s = sort_points(points);
  sweep_block(p, mod, points, s.order, 0, s.order.size(), 0, 1 % mod.value(), out);
  return out;
}

std::vector<std::uint64_t> gamma_at_points_omp(std::uint64_t p, const Modulus& mod,
                                               std::span<const std::uint64_t> points, int threads) {
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
  // The block scan costs a second pass; one worker gains nothing from it.
  if (nthreads <= 1) return gamma_at_points_serial(p, mod, points);
  std::vector<std::uint64_t> out(points.size());
  if (points.empty()) return out;
  const SortedPoints s = sort_points(points);
  const auto nblocks = static_cast<std::uint64_t>(std::max(1, nthreads));
  const std::uint64_t width = (s.limit + nblocks - 1) / nblocks;

  std::vector<std::uint64_t> bounds(nblocks + 1);
  for (std::uint64_t b = 0; b <= nblocks; ++b) bounds[b] = std::min(s.limit, b * width);

  std::vector<std::uint64_t> partial(nblocks, 1);
#pragma omp parallel for num_threads(nthreads) schedule(static)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
    partial[b] = block_product(p, mod, bounds[b], bounds[b + 1]);
  }

  std::vector<std::uint64_t> prefix(nblocks);
  std::uint64_t acc = 1 % mod.value();
  for (std::uint64_t b = 0; b < nblocks; ++b) {
    prefix[b] = acc;
    acc = mod.mul(acc, partial[b]);
  }

  // Sorted-point range owned by each block.
  std::vector<std::size_t> first(nblocks + 1);
  for (std::uint64_t b = 0; b <= nblocks; ++b) {
    first[b] = static_cast<std::size_t>(
        std::lower_bound(s.order.begin(), s.order.end(), bounds[b],
                         [&](std::uint64_t idx, std::uint64_t v) { return points[idx] < v; }) -
        s.order.begin());
  }
  first[nblocks] = s.order.size();

#pragma omp parallel for num_threads(nthreads) schedule(static)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
    sweep_block(p, mod, points, s.order, first[b], first[b + 1], bounds[b], prefix[b], out);
  }
  return out;
}

}  // namespace hgsat::kernels
