#pragma once

#include <cstdint>
#include <vector>

#include "hgsat/bigint.hpp"
#include "hgsat/hypergeo.hpp"

namespace hgsat {

/// P_k(s, p) = (a^(k-1) - b^(k-1)) / (a - b) where a + b = s, ab = p.
/// k must be even and >= 4 (BadWeight otherwise).
BigInt pk_poly(unsigned k, const BigInt& s, std::uint64_t p);

struct TraceQuery {
  std::uint64_t p = 0;
  unsigned k = 4;
  unsigned level = 4;
  /// Level 8 only: also sum the l = -1 term, where l^2 = 1 is a singular
  /// fiber. That term adds P_k(1, p) and breaks agreement with the eigenform.
  bool include_singular_square = false;
};

/// Tr_k(Gamma0(4), p) = -3 - sum_{l=2}^{p-1} P_k(tilde(l), p), where tilde is
/// 2G2-tilde for p = 1 mod 3 and 6G6-tilde for p = 2 mod 3.
BigInt trace_level4(const FamilyEvaluator& ev, unsigned k, int threads = 0);
/// Tr_k(Gamma0(8), p) = -4 - sum_{l=2}^{p-2} P_k(tilde(l^2), p), i.e. over
/// the l with l^2 outside {0, 1}.
BigInt trace_level8(const FamilyEvaluator& ev, unsigned k, int threads = 0);
BigInt trace(const FamilyEvaluator& ev, const TraceQuery& q, int threads = 0);

/// Same sums with the point-count traces a_p(l) in place of the tilde
/// values. a_p(1) is read as the character sum -sum_x phi(x (x-1)^2) = 1.
BigInt trace_via_frobenius(const PrimeCtx& ctx, const TraceQuery& q);

struct EtaFactor {
  unsigned scale = 1;
  int exponent = 0;
};

/// prod eta(scale * tau)^exponent.
struct EtaProductSpec {
  std::vector<EtaFactor> factors;
};

/// q-expansion coefficients c_0..c_{n_max}. Throws NonIntegralLeadingPower
/// unless sum scale*exponent / 24 is an integer.
std::vector<BigInt> eta_product_coeffs(const EtaProductSpec& spec, std::size_t n_max);

/// eta(2t)^12, spanning S_6(Gamma0(4)).
EtaProductSpec eta_level4_weight6();
/// eta(2t)^4 eta(4t)^4, spanning S_4(Gamma0(8)).
EtaProductSpec eta_level8_weight4();

}  // namespace hgsat
