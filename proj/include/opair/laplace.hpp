#pragma once

#include <utility>
#include <vector>

#include "opair/symbol.hpp"

namespace opair {

/// The Laplace coefficients M of a pair (A, B): the self-adjoint map on
/// L(R^n, F) with blocks M_ij = A_i^* A_j + B_j^* B_i. Its quadratic form
/// <X, MX> is the interior correction term of the divergence identity
/// relating |Au|^2 + |Bu|^2 to boundary data.
///
/// Two equivalent representations are kept:
///  - block_coeffs: the n^2 operators M_ij on F;
///  - gram: the real symmetric matrix of the form w.r.t. the real pairing,
///    of size n * dim_F * s (s = 1 real, s = 2 complex). Realified
///    coordinates of X stack per-column blocks [Re X(e_j); Im X(e_j)], so the
///    index of (j, part, alpha) is j*(s*m) + part*m + alpha.
/// The Gram matrix is assembled from its upper block triangle and mirrored,
/// which keeps it equal to its transpose exactly.
class LaplaceForm {
 public:
  explicit LaplaceForm(const OperatorPair& p);

  ScalarField field() const { return field_; }
  int n() const { return n_; }
  int dim_F() const { return dim_f_; }
  /// Real components per F coordinate (1 or 2).
  int s() const { return s_; }

  const Matrix& block(int i, int j) const { return blocks_[i * n_ + j]; }
  const std::vector<Matrix>& block_coeffs() const { return blocks_; }
  const RealMatrix& gram() const { return gram_; }

  /// Applies M to a Jacobian value: column i of the result is
  /// sum_j M_ij X(e_j).
  Matrix apply(const Matrix& x) const;

  /// Eigenvalues of the Gram matrix, ascending.
  const RealVector& eigenvalues() const;
  double min_eigenvalue() const { return eigenvalues()(0); }
  double max_abs_eigenvalue() const;

  /// Positive semi-definite up to tol_psd relative to the largest eigenvalue
  /// magnitude.
  bool is_psd(double tol_psd = 1e-9) const;

  bool is_identity(double tol = 1e-12) const;

  /// Realified coordinates of a Jacobian value (see class comment).
  RealVector realify(const Matrix& x) const;
  Matrix unrealify(const RealVector& v) const;

 private:
  ScalarField field_;
  int n_, dim_f_, s_;
  std::vector<Matrix> blocks_;
  RealMatrix gram_;
  mutable RealVector eigenvalues_;
  mutable RealMatrix eigenvectors_;
  void ensure_eigendecomposition() const;
  friend FirstOrderSymbol sqrt_laplace_symbol(const LaplaceForm&, double);
};

/// Assembles the Laplace coefficients of the pair.
LaplaceForm laplace_form(const OperatorPair& p);

/// <X, MX> with the real pairing; accepts complex X on real-field pairs by
/// scalar promotion (the form then splits as Q(Re X) + Q(Im X)).
double quadratic_form(const LaplaceForm& m, const Matrix& x);
double quadratic_form(const LaplaceForm& m, const RealMatrix& x);

/// Same value computed through the realified Gram matrix; kept as an
/// independent route for cross-checking the block path.
double quadratic_form_gram(const LaplaceForm& m, const Matrix& x);

/// The two summands (|A(zeta) u|^2, |B(conj zeta) u|^2); their sum equals
/// <u x zeta, M (u x zeta)> under the real-pairing extension.
std::pair<double, double> complex_rank_one_value(const OperatorPair& p,
                                                 const Vector& u,
                                                 const Vector& zeta);

/// The first-order symbol of u -> sqrt(M)(Du), acting from the realified F
/// (dim s*m) into realified L(R^n, F) (dim n*s*m). Requires M positive
/// semi-definite within tol_psd; eigenvalues in [-tol, 0] are clamped to 0
/// before the square root. Satisfies |D_M(xi) u| = |D(xi) u| for real xi.
FirstOrderSymbol sqrt_laplace_symbol(const LaplaceForm& m,
                                     double tol_psd = 1e-9);

}  // namespace opair
