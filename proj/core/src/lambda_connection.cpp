#include "parhiggs/lambda_connection.hpp"

#include "parhiggs/errors.hpp"

namespace parhiggs {
namespace {

std::string entry_name(std::size_t i, std::size_t j) {
  return "A" + std::to_string(i + 1) + std::to_string(j + 1);
}

int split_degree(const SplitType& s, std::size_t i) { return i == 0 ? s.a : s.b; }

}  // namespace

std::vector<std::string> connection_violations(const GaussianRational& lambda, const ParabolicRank2Bundle& bundle,
                                               const FieldMatrix& matrix) {
  std::vector<std::string> out;
  const auto& divisor = bundle.divisor();
  const Polynomial& n = divisor.product();
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const auto& f = matrix[i][j];
      if (!divmod(n, f.denominator()).remainder.is_zero()) {
        out.push_back(entry_name(i, j) + " has a pole off the divisor or of order > 1");
        continue;
      }
      if (f.is_zero()) continue;
      if (i != j) {
        int bound = split_degree(bundle.split(), i) - split_degree(bundle.split(), j) - 2;
        if (f.degree() > bound) {
          out.push_back(entry_name(i, j) + " is not regular at infinity (degree " + std::to_string(f.degree()) +
                        " > " + std::to_string(bound) + ")");
        }
      }
    }
  }
  if (!out.empty()) return out;

  for (std::size_t i = 0; i < 2; ++i) {
    RationalFunction shifted =
        matrix[i][i] + RationalFunction(Polynomial(lambda * GaussianRational(split_degree(bundle.split(), i))),
                                        Polynomial::z());
    if (!shifted.is_zero() && shifted.degree() > -2) {
      out.push_back(entry_name(i, i) + " + lambda*a/z is not O(z^-2) at infinity");
    }
  }
  RationalFunction trace = matrix[0][0] + matrix[1][1];
  RationalFunction expected = RationalFunction(n.derivative() * lambda, n);
  if (!(trace == expected)) out.push_back("trace is not lambda*N'/N");

  for (std::size_t k = 0; k < kPointCount; ++k) {
    Matrix2 r = residue_matrix(matrix, divisor.point(k));
    const auto& f = bundle.flag(k);
    GaussianRational rx = r[0][0] * f.x() + r[0][1] * f.y();
    GaussianRational ry = r[1][0] * f.x() + r[1][1] * f.y();
    if (!(rx * f.y() - ry * f.x()).is_zero()) {
      out.push_back("residue at p" + std::to_string(k + 1) + " does not preserve the flag");
    }
  }
  return out;
}

LambdaConnection::LambdaConnection(GaussianRational lambda, ParabolicRank2Bundle bundle, FieldMatrix matrix)
    : lambda_(std::move(lambda)), bundle_(std::move(bundle)), matrix_(std::move(matrix)) {
  auto violations = connection_violations(lambda_, bundle_, matrix_);
  if (!violations.empty()) throw InvalidInput("invalid lambda-connection: " + violations.front());
}

Matrix2 residue_matrix(const FieldMatrix& matrix, const GaussianRational& p) {
  Matrix2 out;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) out[i][j] = residue_at(matrix[i][j], p);
  }
  return out;
}

Matrix2 residue_matrix(const LambdaConnection& conn, std::size_t point) {
  return residue_matrix(conn.matrix(), conn.bundle().divisor().point(point));
}

std::array<GaussianRational, kPointCount> complex_masses(const LambdaConnection& conn) {
  std::array<GaussianRational, kPointCount> out;
  for (std::size_t k = 0; k < kPointCount; ++k) {
    Matrix2 r = residue_matrix(conn, k);
    const auto& f = conn.bundle().flag(k);
    GaussianRational rx = r[0][0] * f.x() + r[0][1] * f.y();
    GaussianRational ry = r[1][0] * f.x() + r[1][1] * f.y();
    if (!(rx * f.y() - ry * f.x()).is_zero()) {
      throw FlagNotEigenline("flag at p" + std::to_string(k + 1) + " is not an eigenline of the residue");
    }
    out[k] = f.x().is_zero() ? ry : rx / f.x();
  }
  return out;
}

RationalFunction hitchin_det(const FieldMatrix& m) { return m[0][1] * m[1][0] - m[0][0] * m[1][1]; }

RationalFunction hitchin_det(const LambdaConnection& conn) {
  if (!conn.is_higgs()) throw InvalidInput("hitchin_det requires lambda = 0");
  return hitchin_det(conn.matrix());
}

LambdaConnection scale(const GaussianRational& xi, const LambdaConnection& conn) {
  FieldMatrix m = conn.matrix();
  for (auto& row : m) {
    for (auto& e : row) e *= RationalFunction(xi);
  }
  return LambdaConnection(xi * conn.lambda(), conn.bundle(), std::move(m));
}

RationalFunction second_fundamental_form(const LambdaConnection& conn, const LineSubbundle& line) {
  RationalFunction u(line.u());
  RationalFunction v(line.v());
  RationalFunction lam(conn.lambda());
  const auto& a = conn.matrix();
  RationalFunction du = lam * u.derivative() + a[0][0] * u + a[0][1] * v;
  RationalFunction dv = lam * v.derivative() + a[1][0] * u + a[1][1] * v;
  return u * dv - v * du;
}

std::array<std::array<Polynomial, 2>, 2> numerator_matrix(const LambdaConnection& conn) {
  std::array<std::array<Polynomial, 2>, 2> out;
  const Polynomial& n = conn.bundle().divisor().product();
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const auto& f = conn.entry(i, j);
      out[i][j] = f.numerator() * exact_quotient(n, f.denominator());
    }
  }
  return out;
}

Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
  Matrix2 out;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  }
  return out;
}

FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b) {
  FieldMatrix out;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  }
  return out;
}

}  // namespace parhiggs
