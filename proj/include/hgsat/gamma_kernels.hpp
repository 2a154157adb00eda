#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hgsat/modular.hpp"

namespace hgsat::kernels {

// Gamma_p(n) mod m at every n in `points` (any order, duplicates allowed),
// by one increasing sweep of the Morita product over [0, max(points)].
// Cost is linear in max(points), i.e. Theta(p^N) for table builds.

/// Single-threaded reference sweep.
std::vector<std::uint64_t> gamma_at_points_serial(std::uint64_t p, const Modulus& mod,
                                                  std::span<const std::uint64_t> points);

/// OpenMP version: block partial products, an exclusive scan over blocks,
/// then an independent sweep per block. threads <= 0 uses the OpenMP default.
std::vector<std::uint64_t> gamma_at_points_omp(std::uint64_t p, const Modulus& mod,
                                               std::span<const std::uint64_t> points, int threads = 0);

}  // namespace hgsat::kernels
