#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace opair {

using Cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Scalar field of the inner product spaces E, F, G. For complex spaces
/// every pairing used in quadratic forms is the real part of the Hermitian
/// inner product.
enum class ScalarField { Real, Complex };

inline int real_components(ScalarField f) {
  return f == ScalarField::Real ? 1 : 2;
}

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

/// Thrown when a square root of an indefinite quadratic form is requested.
/// Carries the offending eigenvalue and a Jacobian-shaped witness X with
/// <X, MX> = min_eigenvalue * |X|^2.
struct NotPositiveSemiDefinite : Error {
  NotPositiveSemiDefinite(double min_eig, Matrix witness_in)
      : Error("quadratic form is not positive semi-definite (min eigenvalue " +
              std::to_string(min_eig) + ")"),
        min_eigenvalue(min_eig),
        witness(std::move(witness_in)) {}
  double min_eigenvalue;
  Matrix witness;
};

struct SingularMatrixError : Error {
  SingularMatrixError(const std::string& which, double cond)
      : Error("matrix " + which + " is numerically singular (cond " +
              std::to_string(cond) + ")"),
        condition_number(cond) {}
  double condition_number;
};

struct DegenerateGradient : Error {
  explicit DegenerateGradient(const RealVector& x_in)
      : Error("defining function has vanishing gradient at a boundary point"),
        x(x_in) {}
  RealVector x;
};

struct NotOnBoundary : Error {
  NotOnBoundary(const RealVector& x_in, double rho)
      : Error("point is not on the zero level set (rho = " +
              std::to_string(rho) + ")"),
        x(x_in) {}
  RealVector x;
};

struct NotStarShaped : Error {
  explicit NotStarShaped(const std::string& what) : Error(what) {}
};

struct RankJump : Error {
  RankJump(const RealVector& a, const RealVector& b, int rank_a, int rank_b)
      : Error("kernel dimension of the boundary symbol jumps between sampled "
              "points (" +
              std::to_string(rank_a) + " vs " + std::to_string(rank_b) + ")"),
        x1(a),
        x2(b) {}
  RealVector x1, x2;
};

struct FieldRejected : Error {
  explicit FieldRejected(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// Real pairing <X, Y> = Re tr(X^* Y), the inner product behind every
/// quadratic form in this library.
inline double real_pairing(const Matrix& x, const Matrix& y) {
  return (x.adjoint() * y).trace().real();
}

/// Realification [[Re M, -Im M], [Im M, Re M]] of a complex matrix, i.e. the
/// matrix of the real bilinear form (a, b) -> Re <a, M b> in the layout
/// [Re; Im].
inline RealMatrix realify_block(const Matrix& m) {
  const Eigen::Index r = m.rows(), c = m.cols();
  RealMatrix out(2 * r, 2 * c);
  out.topLeftCorner(r, c) = m.real();
  out.topRightCorner(r, c) = -m.imag();
  out.bottomLeftCorner(r, c) = m.imag();
  out.bottomRightCorner(r, c) = m.real();
  return out;
}

/// Realified coordinates of a complex vector in the layout [Re; Im].
inline RealVector realify_vector(const Vector& v) {
  RealVector out(2 * v.size());
  out.head(v.size()) = v.real();
  out.tail(v.size()) = v.imag();
  return out;
}

inline Vector unrealify_vector(const RealVector& w) {
  const Eigen::Index m = w.size() / 2;
  Vector out(m);
  out.real() = w.head(m);
  out.imag() = w.tail(m);
  return out;
}

/// Interprets a real 2n-vector as a complex frequency (first half real parts,
/// second half imaginary parts).
inline Vector complexify_frequency(const RealVector& w) {
  return unrealify_vector(w);
}

}  // namespace opair
