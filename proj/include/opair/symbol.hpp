#pragma once

#include <string>
#include <vector>

#include "opair/types.hpp"

namespace opair {

/// A constant-coefficient homogeneous first-order operator sum_j B_j d_j,
/// stored through its coefficient matrices. The symbol evaluates linearly,
/// B(xi) = sum_j xi_j B_j, at real or complex frequencies (complex frequencies
/// on real-coefficient symbols act by scalar promotion).
///
/// Immutable after construction; all operations on it are pure.
class FirstOrderSymbol {
 public:
  FirstOrderSymbol(ScalarField field, int n, int dim_src, int dim_dst,
                   std::vector<Matrix> coeffs);

  static FirstOrderSymbol zero(ScalarField field, int n, int dim_src,
                               int dim_dst);

  ScalarField field() const { return field_; }
  int n() const { return n_; }
  int dim_src() const { return dim_src_; }
  int dim_dst() const { return dim_dst_; }
  const std::vector<Matrix>& coeffs() const { return coeffs_; }
  const Matrix& coeff(int j) const { return coeffs_[j]; }

  /// sum_j zeta_j B_j for a complex frequency.
  Matrix eval(const Vector& zeta) const;
  /// sum_j xi_j B_j for a real frequency.
  Matrix eval(const RealVector& xi) const;
  /// Real-matrix evaluation; only valid for real-field symbols.
  RealMatrix eval_real(const RealVector& xi) const;

  /// Largest coefficient operator norm; the natural scale for tolerances.
  double scale() const { return scale_; }

  bool is_zero() const { return scale_ == 0.0; }

 private:
  ScalarField field_;
  int n_, dim_src_, dim_dst_;
  std::vector<Matrix> coeffs_;
  double scale_;
};

/// A compatible pair (A, B) of first-order operators with common source F.
struct OperatorPair {
  OperatorPair(FirstOrderSymbol a, FirstOrderSymbol b);

  FirstOrderSymbol A;
  FirstOrderSymbol B;

  ScalarField field() const { return A.field(); }
  int n() const { return A.n(); }
  int dim_F() const { return A.dim_src(); }
  int dim_G() const { return A.dim_dst(); }
  int dim_E() const { return B.dim_dst(); }
};

/// The stacked operator D with coefficients [A_j; B_j]; its symbol is
/// D(xi) u = (A(xi) u, B(xi) u).
FirstOrderSymbol stack_symbol(const OperatorPair& p);

struct RescaledPair {
  OperatorPair pair;
  double cond_A0;
  double cond_B0;
};

/// Premultiplies A by A0 and B by B0 (both invertible). Ellipticity verdicts
/// and the boundary condition ker B(nu) are unchanged; the Laplace
/// coefficients are not, and may lose definiteness.
RescaledPair rescale_pair(const OperatorPair& p, const Matrix& A0,
                          const Matrix& B0,
                          double max_condition_number = 1e14);

/// Restricts the source space F to the span of the (orthonormal) columns of
/// basis: coefficients A_j V, B_j V.
OperatorPair restrict_source(const OperatorPair& p, const Matrix& basis);

}  // namespace opair
