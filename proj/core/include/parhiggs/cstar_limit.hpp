#pragma once

#include <optional>
#include <vector>

#include "parhiggs/fixed_points.hpp"
#include "parhiggs/lambda_connection.hpp"

namespace parhiggs {

// Rank-2 filtration by slots: A^j = E for j <= whole_until, A^j = line for whole_until < j <= line_until,
// A^j = 0 afterwards.
struct GriffithsFiltration {
  int whole_until = 0;
  std::optional<LineSubbundle> line;
  int line_until = 0;

  static GriffithsFiltration trivial() { return {}; }
  // E ⊃ L ⊃ 0 with E in slot 0 and L in slot 1.
  static GriffithsFiltration two_step(LineSubbundle line) { return {0, std::move(line), 1}; }

  friend bool operator==(const GriffithsFiltration&, const GriffithsFiltration&) = default;
};

// ∇(A^j) ⊂ A^{j-1} ⊗ K(D) for all j; only a repeated non-invariant line can fail.
bool is_griffiths_transverse(const GriffithsFiltration& filtration, const LambdaConnection& conn);

struct HodgePiece {
  int slot = 0;
  ParabolicLineBundle bundle;
};

// Graded object of a filtration: a single rank-2 piece with zero field, or the line M in slot `top`
// and E/M in slot `bottom` with φ: M -> (E/M) ⊗ K(D) (zero unless the slots are adjacent).
struct HodgeSystem {
  std::optional<ParabolicRank2Bundle> whole;
  int whole_slot = 0;
  std::optional<LineSubbundle> line;
  std::optional<HodgePiece> top;
  std::optional<HodgePiece> bottom;
  RationalFunction phi;
};

HodgeSystem associated_graded(const GriffithsFiltration& filtration, const LambdaConnection& conn);

enum class DestabilizerPiece { SublineOfWhole, Quotient, Sub };

struct Destabilizer {
  Rational zeta;  // slope
  int eta = 1;    // rank
  int slot = 0;
  DestabilizerPiece piece = DestabilizerPiece::Quotient;
  std::optional<LineSubbundle> line;
};

// Maximal destabilizing Hodge subsystem (largest slope > 0, larger rank on ties); empty when semistable.
std::optional<Destabilizer> maximal_destabilizer(const HodgeSystem& system);

struct ZetaEta {
  Rational zeta;
  int eta;
};

// Throws SemistableInput.
ZetaEta zeta_eta(const HodgeSystem& system);

// B^j = ker(E -> (E/A^j) / Â_{j-1}). Throws SemistableInput.
GriffithsFiltration simpson_step(const GriffithsFiltration& filtration, const LambdaConnection& conn);

struct TraceEntry {
  Rational zeta;
  int eta = 1;
  int slot = 0;
};

struct IterationResult {
  GriffithsFiltration filtration;
  HodgeSystem graded;
  std::vector<TraceEntry> trace;
};

inline constexpr int kIterationCap = 64;

// Throws IterationBound past `cap` steps, InvalidInput for a non-transverse start.
IterationResult iterate_to_semistable(const LambdaConnection& conn, GriffithsFiltration initial,
                                      int cap = kIterationCap);

// Limit of ξ·(λ, ∇) as ξ -> 0: (E(α), 0) or the Hodge bundle L ⊕ E/L with φ0.
struct LimitDatum {
  bool stable_bundle = true;
  std::optional<ParabolicRank2Bundle> bundle;  // stable-bundle case
  std::optional<LineSubbundle> line;           // Hodge case
  SplitType ambient_split;                     // splitting of E, for reading `line`
  SplitType split;
  PointSubset subset;  // points where the flag leaves L
  RationalFunction phi0;
  std::optional<ParabolicLineBundle> l1;
  std::optional<ParabolicLineBundle> l2;
};

// Requires the connection to be stable; throws InvalidInput if the destabilizing line is invariant.
LimitDatum hn_limit(const LambdaConnection& conn);
// Reads the limit off a semistable graded object.
LimitDatum limit_from_graded(const LambdaConnection& conn, const HodgeSystem& graded);

// Isomorphism invariants of limit data: type, split, incidence pattern, weights, and the divisor of φ0
// as a section of Hom(L1, L2) ⊗ K(D) (monic φ0·N).
struct LimitInvariants {
  bool stable_bundle = true;
  SplitType split;
  PointSubset subset;
  std::vector<Rational> l1_weights;
  Polynomial phi0_divisor;
  friend bool operator==(const LimitInvariants&, const LimitInvariants&) = default;
};

LimitInvariants invariants(const LimitDatum& limit, const MarkedDivisor& divisor);
LimitInvariants invariants(const FixedPointDatum& datum);

}  // namespace parhiggs
