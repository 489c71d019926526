#include "parhiggs/cstar_limit.hpp"

#include "parhiggs/errors.hpp"
#include "parhiggs/stability.hpp"

namespace parhiggs {
namespace {

bool has_line(const GriffithsFiltration& f) { return f.line.has_value() && f.line_until > f.whole_until; }

GriffithsFiltration normalized(GriffithsFiltration f) {
  if (!has_line(f)) {
    f.line.reset();
    f.line_until = f.whole_until;
  }
  return f;
}

}  // namespace

bool is_griffiths_transverse(const GriffithsFiltration& filtration, const LambdaConnection& conn) {
  if (!has_line(filtration)) return true;
  if (filtration.line_until - filtration.whole_until < 2) return true;
  return second_fundamental_form(conn, *filtration.line).is_zero();
}

HodgeSystem associated_graded(const GriffithsFiltration& filtration, const LambdaConnection& conn) {
  HodgeSystem out;
  if (!has_line(filtration)) {
    out.whole = conn.bundle();
    out.whole_slot = filtration.whole_until;
    return out;
  }
  const auto& line = *filtration.line;
  out.line = line;
  out.top = HodgePiece{filtration.line_until, induced_sub_bundle(conn.bundle(), line)};
  out.bottom = HodgePiece{filtration.whole_until, induced_quotient_bundle(conn.bundle(), line)};
  if (filtration.line_until == filtration.whole_until + 1) out.phi = second_fundamental_form(conn, line);
  return out;
}

std::optional<Destabilizer> maximal_destabilizer(const HodgeSystem& system) {
  if (system.whole) {
    RankedLine best = max_destabilizing_line(*system.whole);
    if (best.par_degree <= 0) return std::nullopt;
    return Destabilizer{best.par_degree, 1, system.whole_slot, DestabilizerPiece::SublineOfWhole, best.line};
  }
  // The quotient sits in the lowest slot and is always a subsystem; the sub is one only when φ = 0.
  // Their parabolic degrees sum to 0, so at most one is positive.
  Rational q = par_degree(system.bottom->bundle);
  if (q > 0) return Destabilizer{q, 1, system.bottom->slot, DestabilizerPiece::Quotient, std::nullopt};
  Rational m = par_degree(system.top->bundle);
  if (system.phi.is_zero() && m > 0) {
    return Destabilizer{m, 1, system.top->slot, DestabilizerPiece::Sub, system.line};
  }
  return std::nullopt;
}

ZetaEta zeta_eta(const HodgeSystem& system) {
  auto d = maximal_destabilizer(system);
  if (!d) throw SemistableInput("system of Hodge bundles is semistable");
  return {d->zeta, d->eta};
}

GriffithsFiltration simpson_step(const GriffithsFiltration& filtration, const LambdaConnection& conn) {
  GriffithsFiltration f = normalized(filtration);
  auto d = maximal_destabilizer(associated_graded(f, conn));
  if (!d) throw SemistableInput("system of Hodge bundles is semistable");
  GriffithsFiltration out = f;
  switch (d->piece) {
    case DestabilizerPiece::SublineOfWhole:
      // A^j = E up to k: B^j = E up to k, B^{k+1} = Â_k.
      out.line = d->line;
      out.line_until = f.whole_until + 1;
      break;
    case DestabilizerPiece::Quotient:
      // Â_k = E/M: B^{k+1} = E, then M on the remaining slots of the old line.
      out.whole_until = f.whole_until + 1;
      break;
    case DestabilizerPiece::Sub:
      // Â_h = M: M persists one slot further.
      out.line_until = f.line_until + 1;
      break;
  }
  return normalized(out);
}

IterationResult iterate_to_semistable(const LambdaConnection& conn, GriffithsFiltration initial, int cap) {
  IterationResult out;
  out.filtration = normalized(std::move(initial));
  if (!is_griffiths_transverse(out.filtration, conn)) {
    throw InvalidInput("initial filtration is not Griffiths transverse");
  }
  for (int step = 0;; ++step) {
    out.graded = associated_graded(out.filtration, conn);
    auto d = maximal_destabilizer(out.graded);
    if (!d) return out;
    if (step == cap) throw IterationBound("no semistable graded object after " + std::to_string(cap) + " steps");
    out.trace.push_back({d->zeta, d->eta, d->slot});
    out.filtration = simpson_step(out.filtration, conn);
  }
}

namespace {

LimitDatum hodge_limit(const LambdaConnection& conn, const LineSubbundle& line, RationalFunction phi0) {
  const auto& bundle = conn.bundle();
  LimitDatum out;
  out.stable_bundle = false;
  out.line = line;
  out.ambient_split = bundle.split();
  out.split = {line.degree(), bundle.split().a + bundle.split().b - line.degree()};
  unsigned mask = 0;
  for (std::size_t i = 0; i < kPointCount; ++i) {
    if (!line.passes_through(bundle, i)) mask |= 1u << i;
  }
  out.subset = PointSubset(mask);
  out.phi0 = std::move(phi0);
  out.l1 = induced_sub_bundle(bundle, line);
  out.l2 = induced_quotient_bundle(bundle, line);
  return out;
}

LimitDatum bundle_limit(const LambdaConnection& conn) {
  LimitDatum out;
  out.bundle = conn.bundle();
  out.split = conn.bundle().split();
  return out;
}

}  // namespace

LimitDatum hn_limit(const LambdaConnection& conn) {
  RankedLine best = max_destabilizing_line(conn.bundle());
  if (best.par_degree < 0) return bundle_limit(conn);
  RationalFunction phi0 = second_fundamental_form(conn, best.line);
  if (phi0.is_zero()) throw InvalidInput("connection is not stable: its destabilizing line is invariant");
  return hodge_limit(conn, best.line, phi0);
}

LimitDatum limit_from_graded(const LambdaConnection& conn, const HodgeSystem& graded) {
  if (graded.whole) return bundle_limit(conn);
  return hodge_limit(conn, *graded.line, graded.phi);
}

LimitInvariants invariants(const LimitDatum& limit, const MarkedDivisor& divisor) {
  LimitInvariants out;
  out.stable_bundle = limit.stable_bundle;
  out.split = limit.split;
  if (limit.stable_bundle) return out;
  out.subset = limit.subset;
  out.l1_weights = limit.l1->weights;
  RationalFunction scaled = limit.phi0 * RationalFunction(divisor.product());
  out.phi0_divisor = scaled.numerator().monic();
  return out;
}

LimitInvariants invariants(const FixedPointDatum& datum) {
  LimitInvariants out;
  out.stable_bundle = false;
  out.split = datum.split;
  out.subset = datum.subset;
  out.l1_weights = datum.l1.weights;
  RationalFunction scaled = datum.phi0 * RationalFunction(datum.divisor.product());
  out.phi0_divisor = scaled.numerator().monic();
  return out;
}

}  // namespace parhiggs
