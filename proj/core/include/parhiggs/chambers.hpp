#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "parhiggs/parabolic.hpp"

namespace parhiggs {

inline constexpr std::size_t kWallCount = 12;

// Affine function Σ c_i α_i + constant on weight space.
struct Wall {
  std::string name;
  std::array<int, kPointCount> coefficients;
  int constant;
};

// Order: Σα - 1; Σ_{i≠k} α_i - α_k for k = 1..4; Σ_{i≠k} α_i - α_k - 1 for k = 1..4;
// α1+α2-α3-α4, α1+α3-α2-α4, α1+α4-α2-α3.
const std::array<Wall, kWallCount>& walls();

Rational wall_value(const Wall& wall, const WeightVector& alpha);

struct Chamber {
  std::array<std::int8_t, kWallCount> signs{};

  // '+'/'-' per wall in wall order.
  std::string signature() const;
  friend bool operator==(const Chamber&, const Chamber&) = default;
  friend auto operator<=>(const Chamber&, const Chamber&) = default;
};

// Throws OnWall with the index of the first vanishing wall.
Chamber chamber_of(const WeightVector& alpha);
bool is_generic(const WeightVector& alpha);

struct CensusEntry {
  Chamber chamber;
  WeightVector representative;  // first grid point of the chamber in lexicographic order
  std::size_t samples = 0;
};

struct ChamberCensus {
  int denominator = 0;
  std::size_t grid_points = 0;
  std::size_t on_walls = 0;
  std::vector<CensusEntry> chambers;  // sorted by chamber
};

// Samples α_i = k_i / denominator, 0 < k_i < denominator / 2, skipping points on walls.
ChamberCensus chamber_census(int denominator);

}  // namespace parhiggs
