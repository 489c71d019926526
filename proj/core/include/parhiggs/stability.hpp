#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "parhiggs/lambda_connection.hpp"

namespace parhiggs {

struct RankedLine {
  LineSubbundle line;
  Rational par_degree;
};

struct AllSubbundles {};

using InvariantLines = std::variant<AllSubbundles, std::vector<RankedLine>>;

// Lowest underlying degree that can matter: any saturated line of degree < min(a, b) - 1
// is beaten by a line found at min(a, b) - 1, and has negative parabolic degree.
int subbundle_degree_floor(SplitType split);

// Saturated line of maximal parabolic degree among all line subbundles.
RankedLine max_destabilizing_line(const ParabolicRank2Bundle& bundle);

// λ = 0 only. Throws EigenvalueNotInField when -det Φ is c g^2 with c not a square in Q(i).
InvariantLines invariant_line_subbundles(const LambdaConnection& higgs);

// ∇-invariant saturated lines of degree >= subbundle_degree_floor. For a positive-dimensional
// family of invariant lines of one degree only its best member is reported.
std::vector<RankedLine> invariant_lines(const LambdaConnection& conn);

struct StabilityReport {
  bool stable = true;
  bool all_lines_invariant = false;
  // Invariant line of maximal parabolic degree, ties broken by certificate_order.
  std::optional<RankedLine> certificate;
  // Every invariant line attaining the certificate's parabolic degree.
  std::vector<RankedLine> ties;
};

StabilityReport is_stable(const LambdaConnection& conn);

}  // namespace parhiggs
