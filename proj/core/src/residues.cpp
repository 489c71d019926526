#include "parhiggs/residues.hpp"

#include <algorithm>

#include "parhiggs/errors.hpp"
#include "parhiggs/linear_algebra.hpp"

namespace parhiggs {

RationalFunction section_with_residues(const TwistedCanonical& target, std::span<const PointResidue> residues) {
  const auto& poles = target.poles;
  Polynomial den = Polynomial::from_roots(poles);
  int bound = static_cast<int>(poles.size()) - 2 + target.infinity_twist;
  if (bound < 0) {
    for (const auto& r : residues) {
      if (!r.residue.is_zero()) throw NoSolution("target line bundle has no sections");
    }
    return {};
  }
  std::size_t unknowns = static_cast<std::size_t>(bound) + 1;
  Matrix m;
  Vector rhs;
  for (const auto& r : residues) {
    auto it = std::find(poles.begin(), poles.end(), r.point);
    if (it == poles.end()) throw InvalidInput("residue prescribed away from the pole set at " + to_string(r.point));
    // Res_p(P/den) = P(p) / den'(p)
    GaussianRational scale = den.derivative()(r.point);
    Vector row(unknowns);
    GaussianRational power(1);
    for (std::size_t k = 0; k < unknowns; ++k) {
      row[k] = power;
      power *= r.point;
    }
    m.append_row(row);
    rhs.push_back(r.residue * scale);
  }
  if (residues.empty()) {
    if (unknowns > 0) throw NonUnique("no residue conditions");
    return {};
  }
  auto sol = solve(m, rhs);
  if (!sol) throw NoSolution("residue conditions are inconsistent with the degree bound");
  if (!sol->kernel.empty()) {
    throw NonUnique("residue conditions leave " + std::to_string(sol->kernel.size()) + " free parameters");
  }
  return RationalFunction(Polynomial(sol->particular), den);
}

Polynomial interpolate(std::span<const GaussianRational> xs, std::span<const GaussianRational> ys) {
  Polynomial out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Polynomial basis(GaussianRational(1));
    GaussianRational denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= Polynomial::linear(xs[j]);
      denom *= xs[i] - xs[j];
    }
    out += basis * (ys[i] / denom);
  }
  return out;
}

}  // namespace parhiggs
