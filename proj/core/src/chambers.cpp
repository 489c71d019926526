#include "parhiggs/chambers.hpp"

#include <algorithm>
#include <map>

#include "parhiggs/errors.hpp"

namespace parhiggs {
namespace {

std::array<Wall, kWallCount> build_walls() {
  std::array<Wall, kWallCount> out;
  out[0] = {"sum(alpha) - 1", {1, 1, 1, 1}, -1};
  for (std::size_t k = 0; k < kPointCount; ++k) {
    std::array<int, kPointCount> c{1, 1, 1, 1};
    c[k] = -1;
    std::string idx = std::to_string(k + 1);
    out[1 + k] = {"sum_{i!=" + idx + "} alpha_i - alpha_" + idx, c, 0};
    out[5 + k] = {"sum_{i!=" + idx + "} alpha_i - alpha_" + idx + " - 1", c, -1};
  }
  out[9] = {"alpha_1 + alpha_2 - alpha_3 - alpha_4", {1, 1, -1, -1}, 0};
  out[10] = {"alpha_1 + alpha_3 - alpha_2 - alpha_4", {1, -1, 1, -1}, 0};
  out[11] = {"alpha_1 + alpha_4 - alpha_2 - alpha_3", {1, -1, -1, 1}, 0};
  return out;
}

}  // namespace

const std::array<Wall, kWallCount>& walls() {
  static const std::array<Wall, kWallCount> table = build_walls();
  return table;
}

Rational wall_value(const Wall& wall, const WeightVector& alpha) {
  Rational out = wall.constant;
  for (std::size_t i = 0; i < kPointCount; ++i) out += wall.coefficients[i] * alpha[i];
  return out;
}

std::string Chamber::signature() const {
  std::string out;
  for (auto s : signs) out += s > 0 ? '+' : '-';
  return out;
}

Chamber chamber_of(const WeightVector& alpha) {
  Chamber out;
  const auto& ws = walls();
  for (std::size_t w = 0; w < kWallCount; ++w) {
    int s = sign(wall_value(ws[w], alpha));
    if (s == 0) throw OnWall(static_cast<int>(w), "weights lie on the wall " + ws[w].name + " = 0");
    out.signs[w] = static_cast<std::int8_t>(s);
  }
  return out;
}

bool is_generic(const WeightVector& alpha) {
  for (const auto& w : walls()) {
    if (wall_value(w, alpha) == 0) return false;
  }
  return true;
}

ChamberCensus chamber_census(int denominator) {
  if (denominator < 3) throw InvalidInput("census denominator must be at least 3");
  ChamberCensus out;
  out.denominator = denominator;
  const int top = (denominator - 1) / 2;
  const auto& ws = walls();
  std::map<Chamber, std::size_t> index;
  std::array<int, kPointCount> k{1, 1, 1, 1};
  for (;;) {
    ++out.grid_points;
    // Scaled by the denominator every wall value is an integer.
    Chamber c;
    bool on_wall = false;
    for (std::size_t w = 0; w < kWallCount && !on_wall; ++w) {
      int value = ws[w].constant * denominator;
      for (std::size_t i = 0; i < kPointCount; ++i) value += ws[w].coefficients[i] * k[i];
      on_wall = value == 0;
      c.signs[w] = static_cast<std::int8_t>(value > 0 ? 1 : -1);
    }
    if (on_wall) {
      ++out.on_walls;
    } else {
      auto [it, fresh] = index.try_emplace(c, out.chambers.size());
      if (fresh) {
        out.chambers.push_back({c,
                                WeightVector({Rational(k[0], denominator), Rational(k[1], denominator),
                                              Rational(k[2], denominator), Rational(k[3], denominator)}),
                                0});
      }
      ++out.chambers[it->second].samples;
    }
    std::size_t i = kPointCount;
    while (i > 0 && ++k[i - 1] > top) k[--i] = 1;
    if (i == 0) break;
  }
  std::sort(out.chambers.begin(), out.chambers.end(),
            [](const CensusEntry& a, const CensusEntry& b) { return a.chamber < b.chamber; });
  return out;
}

}  // namespace parhiggs
