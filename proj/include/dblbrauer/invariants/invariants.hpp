#pragma once

#include <cstdint>

#include "dblbrauer/polycore/field.hpp"

namespace dblbrauer {

struct CoverInvariants {
  std::int64_t p = 0, d = 0;
  std::int64_t h01 = 0, h20 = 0, b2 = 0, genus = 0;
};

inline std::int64_t choose2(std::int64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

inline std::int64_t exact_half(std::int64_t v, const char* what) {
  if (v % 2) throw domain_error(std::string("non-integral ") + what);
  return v / 2;
}

// p-cyclic cover of P^2 branched along a smooth curve of degree pd.
inline CoverInvariants hodge_invariants(std::int64_t p, std::int64_t d) {
  if (p < 2 || !is_prime(std::uint64_t(p))) throw domain_error("p must be prime");
  if (d < 1) throw domain_error("d must be positive");
  std::int64_t s1 = 0, s2 = 0;
  for (std::int64_t j = 1; j < p; ++j) {
    s1 += j;
    s2 += j * j;
  }
  CoverInvariants c;
  c.p = p;
  c.d = d;
  c.h01 = 0;
  c.h20 = exact_half(2 * (p - 1) - 3 * d * s1 + d * d * s2, "h20");
  c.genus = choose2(p * d - 1);
  c.b2 = 1 + (p - 1) * (1 + 2 * c.genus);
  return c;
}

inline std::int64_t brauer_p_rank(std::int64_t p, std::int64_t d, std::int64_t rho) {
  const CoverInvariants c = hodge_invariants(p, d);
  if (rho < 1 || rho > c.b2) throw domain_error("Picard rank out of range [1, b2]");
  return (p - 1) * (1 + 2 * c.genus) + 1 - rho;
}

// Double plane branched in degree 2d: (Pic C / Z L)[2] against Pic X / pullbacks.
struct TwoTorsionBudget {
  std::int64_t source = 0, kernel = 0, image = 0;
};

inline TwoTorsionBudget two_torsion_budget(std::int64_t d, std::int64_t rho) {
  if (d < 1) throw domain_error("d must be positive");
  if (rho < 1) throw domain_error("Picard rank must be at least 1");
  const std::int64_t g = choose2(2 * d - 1);
  TwoTorsionBudget b{2 * g + 1, rho - 1, 2 + 2 * g - rho};
  if (b.image < 0) throw domain_error("Picard rank too large for this degree");
  if (b.source != b.kernel + b.image) throw domain_error("2-torsion budget does not balance");
  return b;
}

}  // namespace dblbrauer
