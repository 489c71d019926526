#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "parhiggs/lambda_connection.hpp"

namespace parhiggs {

using MassVector = std::array<GaussianRational, kPointCount>;

// Fiber q0 + t r of quadratic differentials with quadratic residue μ_i^2 at p_i.
struct QuadraticBase {
  RationalFunction q0;
  RationalFunction r;
  RationalFunction at(const GaussianRational& t) const;
};

// Coefficient of (z - p)^-2 in q at p.
GaussianRational quadratic_residue(const RationalFunction& q, const GaussianRational& p);

// q0 = Q0 / N^2 with Q0 the cubic interpolant of μ_i^2 N'(p_i)^2, and r = 1/N.
QuadraticBase basis_B_mu(const MassVector& mu, const MarkedDivisor& divisor);

// t with q = q0 + t r, i.e. the z^4 coefficient of q N^2.
GaussianRational base_coordinate(const RationalFunction& q, const MarkedDivisor& divisor);

// Throws ConditionViolated unless q lies in B(μ).
void require_in_base(const RationalFunction& q, const MassVector& mu, const MarkedDivisor& divisor);

struct TwistedHiggs {
  SplitType split;
  FieldMatrix field;
};

// O(-1) ⊕ O(-3) with [[0, Q/N], [1/N, 0]] for q = Q/N^2.
TwistedHiggs s_KD(const RationalFunction& q, const MarkedDivisor& divisor);

enum class SectionBranch { Degree4, Degree2, Degree0Split, Degree0Nonsplit };
std::string to_string(SectionBranch branch);

struct NamedSection {
  std::string name;
  RationalFunction value;
};

struct HitchinSection {
  LambdaConnection higgs;
  SectionBranch branch;
  PointSubset subset;
  // The line whose graded object is the fixed point labeled by the subset.
  LineSubbundle limit_line;
  std::vector<NamedSection> ingredients;
};

struct SectionOptions {
  // Degree-2 case: the point of I whose flag is the second summand; defaults to the smaller index.
  std::optional<std::size_t> kernel_point;
};

// Stable parabolic Higgs bundle in the fiber of q, with flags carrying μ, limiting to the fixed point D_I.
// Throws ConditionViolated (table condition, odd |I|, q outside B(μ)) or DegenerateResidue.
HitchinSection hitchin_section(const WeightVector& alpha, PointSubset subset, const MassVector& mu,
                               const RationalFunction& q, const MarkedDivisor& divisor = MarkedDivisor::standard(),
                               const SectionOptions& options = {});

// Number of sheets of the framed base over B(μ): one sign choice per nonzero mass.
int framed_base_sheets(const MassVector& mu);

// True iff the second fundamental form of sub, as a section of Hom(sub, E/sub) ⊗ K(D_I),
// is a nowhere-vanishing section of a degree-0 line. Requires λ != 0.
bool parabolic_oper_check(const LambdaConnection& conn, const LineSubbundle& sub, PointSubset subset);

}  // namespace parhiggs
