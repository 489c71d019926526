#include "parhiggs/stability.hpp"

#include <algorithm>
#include <stdexcept>

#include "parhiggs/errors.hpp"
#include "parhiggs/linear_algebra.hpp"

namespace parhiggs {
namespace {

Rational subset_value(const WeightVector& alpha, int d, PointSubset s) {
  Rational out = d;
  for (std::size_t i = 0; i < kPointCount; ++i) out += induced_sub_weight(alpha, i, s.contains(i));
  return out;
}

// Subsets ordered by the weight they add, largest first.
std::vector<PointSubset> subsets_by_weight(const WeightVector& alpha) {
  std::vector<PointSubset> out;
  for (unsigned m = 0; m < 16; ++m) out.emplace_back(m);
  std::stable_sort(out.begin(), out.end(), [&](PointSubset x, PointSubset y) {
    return subset_value(alpha, 0, x) > subset_value(alpha, 0, y);
  });
  return out;
}

// Row expressing u(p) y - v(p) x = 0 in section-space coordinates.
Vector incidence_row(const SectionSpace& space, const GaussianRational& p, const ProjectivePoint& flag) {
  Vector row;
  GaussianRational power(1);
  for (int k = 0; k < space.u_terms(); ++k) {
    row.push_back(power * flag.y());
    power *= p;
  }
  power = GaussianRational(1);
  for (int k = 0; k < space.v_terms(); ++k) {
    row.push_back(-(power * flag.x()));
    power *= p;
  }
  return row;
}

Vector combine(const std::vector<Vector>& basis, const Vector& c) {
  Vector out(basis.front().size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (c[k].is_zero()) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += c[k] * basis[k][j];
  }
  return out;
}

LineSubbundle saturate_section(const SectionSpace& space, const Vector& coeffs) {
  auto [u, v] = unpack_section(space, coeffs);
  return LineSubbundle::saturate(RationalFunction(u), RationalFunction(v), space.split);
}

struct FamilyBest {
  Rational value;
  LineSubbundle line;
};

// Best subset value attained by a nonzero member of span(basis), strictly above `threshold` if given.
std::optional<FamilyBest> best_in_family(const ParabolicRank2Bundle& bundle, const SectionSpace& space,
                                         const std::vector<Vector>& basis, const std::optional<Rational>& threshold) {
  if (basis.empty()) return std::nullopt;
  for (PointSubset s : subsets_by_weight(bundle.alpha())) {
    Rational value = subset_value(bundle.alpha(), space.degree, s);
    if (threshold && value <= *threshold) break;
    Matrix m(0, basis.size());
    for (auto i : s.indices()) {
      Vector row = incidence_row(space, bundle.divisor().point(i), bundle.flag(i));
      Vector reduced(basis.size());
      for (std::size_t k = 0; k < basis.size(); ++k) {
        for (std::size_t j = 0; j < row.size(); ++j) {
          if (!row[j].is_zero() && !basis[k][j].is_zero()) reduced[k] += row[j] * basis[k][j];
        }
      }
      m.append_row(reduced);
    }
    std::vector<Vector> kernel;
    if (m.rows() == 0) {
      Vector e(basis.size());
      e[0] = GaussianRational(1);
      kernel.push_back(e);
    } else {
      kernel = nullspace(m);
    }
    if (kernel.empty()) continue;
    return FamilyBest{value, saturate_section(space, combine(basis, kernel.front()))};
  }
  return std::nullopt;
}

std::vector<Vector> identity_basis(std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t k = 0; k < n; ++k) {
    Vector e(n);
    e[k] = GaussianRational(1);
    out.push_back(std::move(e));
  }
  return out;
}

RankedLine ranked(const ParabolicRank2Bundle& bundle, LineSubbundle line) {
  Rational pd = par_degree(induced_sub_bundle(bundle, line));
  return {std::move(line), pd};
}

void sort_ranked(std::vector<RankedLine>& lines) {
  std::sort(lines.begin(), lines.end(), [](const RankedLine& x, const RankedLine& y) {
    if (x.par_degree != y.par_degree) return x.par_degree > y.par_degree;
    return certificate_order(x.line, y.line) == std::strong_ordering::less;
  });
  lines.erase(std::unique(lines.begin(), lines.end(),
                          [](const RankedLine& x, const RankedLine& y) { return x.line == y.line; }),
              lines.end());
}

// Kernel direction of the rank-one matrix M.
LineSubbundle kernel_line(const FieldMatrix& m, SplitType split) {
  if (!m[0][0].is_zero() || !m[0][1].is_zero()) return LineSubbundle::saturate(-m[0][1], m[0][0], split);
  return LineSubbundle::saturate(-m[1][1], m[1][0], split);
}

bool is_zero_field(const FieldMatrix& m) {
  for (const auto& row : m) {
    for (const auto& e : row) {
      if (!e.is_zero()) return false;
    }
  }
  return true;
}

std::vector<GaussianRational> residue_eigenvalues(const Matrix2& r, std::size_t point) {
  GaussianRational tr = r[0][0] + r[1][1];
  GaussianRational det = r[0][0] * r[1][1] - r[0][1] * r[1][0];
  GaussianRational disc = tr * tr - GaussianRational(4) * det;
  auto root = exact_sqrt(disc);
  if (!root) {
    throw EigenvalueNotInField("residue eigenvalues at p" + std::to_string(point + 1) + " are not in Q(i)");
  }
  GaussianRational half(Rational(1, 2));
  std::vector<GaussianRational> out{(tr + *root) * half};
  if (!root->is_zero()) out.push_back((tr - *root) * half);
  return out;
}

// Matrix of w ↦ N (λ w' + (A - m) w) on the degree-d section space, rows = coefficients of both components.
Matrix invariance_system(const std::array<std::array<Polynomial, 2>, 2>& num, const Polynomial& n,
                         const Polynomial& nm, const GaussianRational& lambda, const SectionSpace& space) {
  std::vector<std::array<Polynomial, 2>> columns;
  for (int slot = 0; slot < 2; ++slot) {
    int terms = slot == 0 ? space.u_terms() : space.v_terms();
    for (int k = 0; k < terms; ++k) {
      Polynomial mono = Polynomial::monomial(1, k);
      Polynomial deriv = mono.derivative() * n * lambda;
      std::array<Polynomial, 2> col;
      std::size_t s = static_cast<std::size_t>(slot);
      std::size_t o = 1 - s;
      col[s] = deriv + (num[s][s] - nm) * mono;
      col[o] = num[o][s] * mono;
      columns.push_back(col);
    }
  }
  int height0 = 0;
  int height1 = 0;
  for (const auto& c : columns) {
    height0 = std::max(height0, c[0].degree() + 1);
    height1 = std::max(height1, c[1].degree() + 1);
  }
  Matrix m(static_cast<std::size_t>(height0 + height1), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (int r = 0; r < height0; ++r) m(static_cast<std::size_t>(r), c) = columns[c][0].coefficient(r);
    for (int r = 0; r < height1; ++r) m(static_cast<std::size_t>(height0 + r), c) = columns[c][1].coefficient(r);
  }
  return m;
}

}  // namespace

int subbundle_degree_floor(SplitType split) { return std::min(split.a, split.b) - 1; }

RankedLine max_destabilizing_line(const ParabolicRank2Bundle& bundle) {
  const SplitType split = bundle.split();
  Rational max_weights = 0;
  for (std::size_t i = 0; i < kPointCount; ++i) max_weights += 1 - bundle.alpha()[i];
  std::optional<FamilyBest> best;
  for (int d = std::max(split.a, split.b);; --d) {
    if (best && d + max_weights < best->value) break;
    // At d0 = min(a,b) - 1 the section space has dimension >= 4, so three incidences can be imposed and
    // the value there exceeds d + Σ(1 - α) for every d < d0; the loop never passes below d0.
    if (d < subbundle_degree_floor(split)) throw std::logic_error("subbundle search passed its degree floor");
    SectionSpace space{split, d};
    auto found = best_in_family(bundle, space, identity_basis(static_cast<std::size_t>(space.dimension())),
                                best ? std::optional<Rational>(best->value) : std::nullopt);
    if (found) best = std::move(found);
  }
  RankedLine out = ranked(bundle, best->line);
  if (out.par_degree != best->value) throw std::logic_error("saturated witness changed parabolic degree");
  return out;
}

InvariantLines invariant_line_subbundles(const LambdaConnection& higgs) {
  if (!higgs.is_higgs()) throw InvalidInput("invariant_line_subbundles requires lambda = 0");
  const FieldMatrix& phi = higgs.matrix();
  if (is_zero_field(phi)) return AllSubbundles{};
  const SplitType split = higgs.bundle().split();
  std::vector<RankedLine> out;
  RationalFunction q = hitchin_det(phi);
  if (q.is_zero()) {
    out.push_back(ranked(higgs.bundle(), kernel_line(phi, split)));
    return out;
  }
  SquareRoot root = classify_square(q);
  if (root.kind == SquareClass::SquareOutsideField) {
    throw EigenvalueNotInField("-det(Phi) is a square only over an extension of Q(i)");
  }
  if (root.kind == SquareClass::NotSquare) return out;
  for (int sgn : {1, -1}) {
    RationalFunction s = root.root * RationalFunction(GaussianRational(sgn));
    FieldMatrix shifted = phi;
    shifted[0][0] -= s;
    shifted[1][1] -= s;
    out.push_back(ranked(higgs.bundle(), kernel_line(shifted, split)));
  }
  sort_ranked(out);
  return out;
}

std::vector<RankedLine> invariant_lines(const LambdaConnection& conn) {
  const auto& bundle = conn.bundle();
  const SplitType split = bundle.split();
  const auto& divisor = bundle.divisor();
  const Polynomial& n = divisor.product();
  auto num = numerator_matrix(conn);

  std::array<std::vector<GaussianRational>, kPointCount> choices;
  for (std::size_t k = 0; k < kPointCount; ++k) choices[k] = residue_eigenvalues(residue_matrix(conn, k), k);

  std::vector<RankedLine> out;
  std::array<std::size_t, kPointCount> pick{};
  while (true) {
    GaussianRational total;
    for (std::size_t k = 0; k < kPointCount; ++k) total += choices[k][pick[k]];
    // The restricted connection on a degree-d line has residues summing to -λ d.
    std::optional<int> degree;
    if (conn.lambda().is_zero()) {
      throw InvalidInput("invariant_lines by residue enumeration requires lambda != 0");
    }
    GaussianRational dval = -total / conn.lambda();
    if (dval.is_real() && boost::multiprecision::denominator(dval.re()) == 1) {
      Integer di = boost::multiprecision::numerator(dval.re());
      if (di <= std::max(split.a, split.b) && di >= subbundle_degree_floor(split)) degree = di.convert_to<int>();
    }
    if (degree) {
      Polynomial nm;
      for (std::size_t k = 0; k < kPointCount; ++k) {
        nm += exact_quotient(n, Polynomial::linear(divisor.point(k))) * choices[k][pick[k]];
      }
      SectionSpace space{split, *degree};
      auto basis = nullspace(invariance_system(num, n, nm, conn.lambda(), space));
      if (auto best = best_in_family(bundle, space, basis, std::nullopt)) {
        out.push_back(ranked(bundle, best->line));
      }
    }
    std::size_t k = 0;
    while (k < kPointCount && ++pick[k] == choices[k].size()) {
      pick[k] = 0;
      ++k;
    }
    if (k == kPointCount) break;
  }
  sort_ranked(out);
  return out;
}

StabilityReport is_stable(const LambdaConnection& conn) {
  StabilityReport report;
  std::vector<RankedLine> lines;
  if (conn.is_higgs()) {
    InvariantLines inv = invariant_line_subbundles(conn);
    if (std::holds_alternative<AllSubbundles>(inv)) {
      report.all_lines_invariant = true;
      lines.push_back(max_destabilizing_line(conn.bundle()));
    } else {
      lines = std::get<std::vector<RankedLine>>(std::move(inv));
    }
  } else {
    lines = invariant_lines(conn);
  }
  if (lines.empty()) return report;
  report.certificate = lines.front();
  for (const auto& l : lines) {
    if (l.par_degree == lines.front().par_degree) report.ties.push_back(l);
  }
  report.stable = lines.front().par_degree < 0;
  return report;
}

}  // namespace parhiggs
