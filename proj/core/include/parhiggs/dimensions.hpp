#pragma once

namespace parhiggs {

struct ModuliDimensions {
  long long dim_N = 0;         // parabolic bundles of rank n, full flags
  long long dim_P0 = 0;        // parabolic Higgs bundles
  long long dim_SP0 = 0;       // strongly parabolic Higgs bundles
  long long dim_BB_spar = 0;   // stratum of the strongly parabolic nilpotent cone
  long long sum_dim_L = 0;     // sum over points of dim L_p
};

// Closed-form dimensions for SL(n) with full flags at d punctures on genus g. Requires 2g - 2 + d > 0.
ModuliDimensions moduli_dimensions(int n, int g, int d);

}  // namespace parhiggs
