#pragma once

#include <cstdint>
#include <vector>

#include "hgsat/hypergeo.hpp"

namespace hgsat::kernels {

/// Exact family values over the family's lambda range: all of F_p for the
/// G families, 2..p-1 for Ap. values[i] belongs to lambda = first_lambda + i.
struct FamilySweep {
  std::uint64_t first_lambda = 0;
  std::vector<std::int64_t> values;
};

FamilySweep family_sweep_serial(const FamilyEvaluator& ev, Family f);

/// Same result as the serial sweep for every thread count; lambdas are
/// split statically and each slot is written once.
FamilySweep family_sweep_omp(const FamilyEvaluator& ev, Family f, int threads = 0);

}  // namespace hgsat::kernels
