#include "parhiggs/isomorphism.hpp"

#include <algorithm>

#include "parhiggs/linear_algebra.hpp"

namespace parhiggs {
namespace {

struct Slot {
  std::size_t i;
  std::size_t j;
  int power;
};

GaugeMatrix assemble(const std::vector<Slot>& slots, const Vector& coeffs) {
  GaugeMatrix g;
  for (std::size_t c = 0; c < slots.size(); ++c) {
    g[slots[c].i][slots[c].j] += Polynomial::monomial(coeffs[c], slots[c].power);
  }
  return g;
}

bool is_isomorphism(const GaugeMatrix& g, const LambdaConnection& from, const LambdaConnection& to) {
  Polynomial det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  if (det.degree() != 0) return false;
  const auto& divisor = from.bundle().divisor();
  for (std::size_t k = 0; k < kPointCount; ++k) {
    const auto& p = divisor.point(k);
    const auto& f = from.bundle().flag(k);
    GaussianRational x = g[0][0](p) * f.x() + g[0][1](p) * f.y();
    GaussianRational y = g[1][0](p) * f.x() + g[1][1](p) * f.y();
    if (!(ProjectivePoint(x, y) == to.bundle().flag(k))) return false;
  }
  return true;
}

}  // namespace

std::optional<GaugeMatrix> find_isomorphism(const LambdaConnection& from, const LambdaConnection& to) {
  if (!(from.bundle().split() == to.bundle().split()) || !(from.lambda() == to.lambda()) ||
      !(from.bundle().divisor() == to.bundle().divisor())) {
    return std::nullopt;
  }
  const SplitType split = from.bundle().split();
  const int deg[2] = {split.a, split.b};
  const Polynomial& n = from.bundle().divisor().product();
  auto p1 = numerator_matrix(from);
  auto p2 = numerator_matrix(to);

  std::vector<Slot> slots;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (int k = 0; k <= deg[i] - deg[j]; ++k) slots.push_back({i, j, k});
    }
  }
  // Column c holds the four entries of λ N g' + P2 g - g P1 for g = the c-th monomial slot.
  std::vector<std::array<Polynomial, 4>> columns;
  for (const auto& s : slots) {
    GaugeMatrix g;
    g[s.i][s.j] = Polynomial::monomial(1, s.power);
    std::array<Polynomial, 4> col;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        Polynomial e = g[i][j].derivative() * n * from.lambda();
        for (std::size_t k = 0; k < 2; ++k) e += p2[i][k] * g[k][j] - g[i][k] * p1[k][j];
        col[2 * i + j] = e;
      }
    }
    columns.push_back(col);
  }
  std::array<int, 4> height{};
  for (const auto& c : columns) {
    for (std::size_t e = 0; e < 4; ++e) height[e] = std::max(height[e], c[e].degree() + 1);
  }
  std::size_t rows = 0;
  for (int h : height) rows += static_cast<std::size_t>(h);
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    std::size_t offset = 0;
    for (std::size_t e = 0; e < 4; ++e) {
      for (int r = 0; r < height[e]; ++r) m(offset + static_cast<std::size_t>(r), c) = columns[c][e].coefficient(r);
      offset += static_cast<std::size_t>(height[e]);
    }
  }
  auto basis = nullspace(m);
  if (basis.empty()) return std::nullopt;
  std::vector<Vector> candidates = basis;
  Vector sum(slots.size());
  for (const auto& b : basis) {
    for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += b[c];
  }
  candidates.push_back(sum);
  for (const auto& c : candidates) {
    GaugeMatrix g = assemble(slots, c);
    if (is_isomorphism(g, from, to)) return g;
  }
  return std::nullopt;
}

}  // namespace parhiggs
