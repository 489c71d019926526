#pragma once

#include <array>
#include <string>
#include <vector>

#include "parhiggs/line_subbundle.hpp"
#include "parhiggs/parabolic.hpp"

namespace parhiggs {

using Matrix2 = std::array<std::array<GaussianRational, 2>, 2>;
using FieldMatrix = std::array<std::array<RationalFunction, 2>, 2>;

// ∇ = λ d + A(z) dz on the split bundle, in the affine frame. λ = 0 is a Higgs field.
class LambdaConnection {
 public:
  // Throws InvalidInput naming the first violated condition (see connection_violations).
  LambdaConnection(GaussianRational lambda, ParabolicRank2Bundle bundle, FieldMatrix matrix);
  static LambdaConnection higgs(ParabolicRank2Bundle bundle, FieldMatrix matrix) {
    return LambdaConnection(GaussianRational(0), std::move(bundle), std::move(matrix));
  }

  const GaussianRational& lambda() const { return lambda_; }
  const ParabolicRank2Bundle& bundle() const { return bundle_; }
  const FieldMatrix& matrix() const { return matrix_; }
  const RationalFunction& entry(std::size_t i, std::size_t j) const { return matrix_[i][j]; }
  bool is_higgs() const { return lambda_.is_zero(); }

  friend bool operator==(const LambdaConnection&, const LambdaConnection&) = default;

 private:
  GaussianRational lambda_;
  ParabolicRank2Bundle bundle_;
  FieldMatrix matrix_;
};

// Conditions checked:
//   poles of every entry are simple and lie on the divisor;
//   N * A_ij has degree <= a_i - a_j + 2 off the diagonal (regular at infinity);
//   A_ii + λ a_i / z = O(z^-2) at infinity;
//   A_11 + A_22 = λ N'/N (the induced operator on the determinant is λ d);
//   each residue preserves its flag.
std::vector<std::string> connection_violations(const GaussianRational& lambda, const ParabolicRank2Bundle& bundle,
                                               const FieldMatrix& matrix);

Matrix2 residue_matrix(const FieldMatrix& matrix, const GaussianRational& p);
Matrix2 residue_matrix(const LambdaConnection& conn, std::size_t point);

// Eigenvalue on the flag line at each point.
std::array<GaussianRational, kPointCount> complex_masses(const LambdaConnection& conn);

// q = -det Φ. Throws InvalidInput when λ != 0.
RationalFunction hitchin_det(const LambdaConnection& conn);
RationalFunction hitchin_det(const FieldMatrix& matrix);

LambdaConnection scale(const GaussianRational& xi, const LambdaConnection& conn);

// det[w, λw' + A w] for w = (u, v): the map L -> (E/L) ⊗ K(D) in the frames w and det(E)/w.
RationalFunction second_fundamental_form(const LambdaConnection& conn, const LineSubbundle& line);

// Polynomial numerators N * A_ij.
std::array<std::array<Polynomial, 2>, 2> numerator_matrix(const LambdaConnection& conn);

Matrix2 multiply(const Matrix2& a, const Matrix2& b);
FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b);

}  // namespace parhiggs
