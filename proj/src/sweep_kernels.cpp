#include "hgsat/sweep_kernels.hpp"

#include <exception>

#include <omp.h>

namespace hgsat::kernels {

namespace {

FamilySweep empty_sweep(const FamilyEvaluator& ev, Family f) {
  ev.require(f);
  FamilySweep s;
  const std::uint64_t p = ev.ctx().p();
  s.first_lambda = (f == Family::Ap) ? 2 : 0;
  s.values.resize(p - s.first_lambda);
  return s;
}

}  // namespace

FamilySweep family_sweep_serial(const FamilyEvaluator& ev, Family f) {
  FamilySweep s = empty_sweep(ev, f);
  for (std::size_t i = 0; i < s.values.size(); ++i) s.values[i] = ev.value(f, s.first_lambda + i);
  return s;
}

FamilySweep family_sweep_omp(const FamilyEvaluator& ev, Family f, int threads) {
  FamilySweep s = empty_sweep(ev, f);
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
  const auto n = static_cast<std::int64_t>(s.values.size());
  std::exception_ptr failure;
#pragma omp parallel for num_threads(nthreads) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      s.values[i] = ev.value(f, s.first_lambda + static_cast<std::uint64_t>(i));
    } catch (...) {
#pragma omp critical(hgsat_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return s;
}

}  // namespace hgsat::kernels
