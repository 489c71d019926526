#pragma once

#include <span>
#include <vector>

#include "parhiggs/rational_function.hpp"

namespace parhiggs {

struct PointResidue {
  GaussianRational point;
  GaussianRational residue;
};

// Target line bundle K(poles) ⊗ O(infinity_twist) for the form f·dz. In the affine frame
// f = P / prod(z - p) over p in poles with deg P <= |poles| - 2 + infinity_twist.
struct TwistedCanonical {
  std::vector<GaussianRational> poles;
  int infinity_twist = 0;
};

// The unique f·dz in H^0(target) with the given residues.
// Throws NoSolution or NonUnique; InvalidInput if a residue point is not a pole.
RationalFunction section_with_residues(const TwistedCanonical& target,
                                       std::span<const PointResidue> residues);

// Lagrange interpolation: the polynomial of degree < n through n points.
Polynomial interpolate(std::span<const GaussianRational> xs, std::span<const GaussianRational> ys);

}  // namespace parhiggs
