#include "parhiggs/dimensions.hpp"

#include "parhiggs/errors.hpp"

namespace parhiggs {

ModuliDimensions moduli_dimensions(int n, int g, int d) {
  if (n < 1 || g < 0 || d < 0) throw InvalidInput("moduli_dimensions needs n >= 1, g >= 0, d >= 0");
  if (2 * g - 2 + d <= 0) throw InvalidInput("moduli_dimensions needs 2g - 2 + d > 0");
  const long long nn = n;
  const long long dim_g = nn * nn - 1;
  // Full flags: each point contributes the full flag variety G/P_p of dimension n(n-1)/2.
  const long long flag_variety = nn * (nn - 1) / 2;
  // Eigenvalue data of a residue on a full flag: dim L_p = n - 1.
  const long long levi_center = nn - 1;

  ModuliDimensions out;
  out.dim_N = (g - 1) * dim_g + d * flag_variety;
  out.dim_SP0 = 2 * out.dim_N;
  out.dim_P0 = dim_g * (2 * g - 2 + d);
  out.dim_BB_spar = (g - 1) * dim_g + d * flag_variety;
  out.sum_dim_L = d * levi_center;
  return out;
}

}  // namespace parhiggs
