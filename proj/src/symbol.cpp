#include "opair/symbol.hpp"

#include <Eigen/SVD>

namespace opair {

namespace {

double operator_norm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  return m.jacobiSvd().singularValues()(0);
}

}  // namespace

FirstOrderSymbol::FirstOrderSymbol(ScalarField field, int n, int dim_src,
                                   int dim_dst, std::vector<Matrix> coeffs)
    : field_(field),
      n_(n),
      dim_src_(dim_src),
      dim_dst_(dim_dst),
      coeffs_(std::move(coeffs)) {
  if (n <= 0 || dim_src < 0 || dim_dst < 0)
    throw InvalidArgument("symbol dimensions must be nonnegative, n positive");
  if (static_cast<int>(coeffs_.size()) != n)
    throw DimensionMismatch("expected " + std::to_string(n) +
                            " coefficient matrices, got " +
                            std::to_string(coeffs_.size()));
  for (int j = 0; j < n; ++j) {
    if (coeffs_[j].rows() != dim_dst || coeffs_[j].cols() != dim_src)
      throw DimensionMismatch(
          "coefficient " + std::to_string(j + 1) + " has shape " +
          std::to_string(coeffs_[j].rows()) + "x" +
          std::to_string(coeffs_[j].cols()) + ", expected " +
          std::to_string(dim_dst) + "x" + std::to_string(dim_src));
    if (field_ == ScalarField::Real && coeffs_[j].imag().cwiseAbs().sum() != 0)
      throw InvalidArgument("real-field symbol has complex coefficients");
  }
  scale_ = 0.0;
  for (const Matrix& c : coeffs_) scale_ = std::max(scale_, operator_norm(c));
}

FirstOrderSymbol FirstOrderSymbol::zero(ScalarField field, int n, int dim_src,
                                        int dim_dst) {
  std::vector<Matrix> coeffs(n, Matrix::Zero(dim_dst, dim_src));
  return FirstOrderSymbol(field, n, dim_src, dim_dst, std::move(coeffs));
}

Matrix FirstOrderSymbol::eval(const Vector& zeta) const {
  if (zeta.size() != n_)
    throw DimensionMismatch("frequency has length " +
                            std::to_string(zeta.size()) + ", expected " +
                            std::to_string(n_));
  Matrix out = Matrix::Zero(dim_dst_, dim_src_);
  for (int j = 0; j < n_; ++j) out += zeta[j] * coeffs_[j];
  return out;
}

Matrix FirstOrderSymbol::eval(const RealVector& xi) const {
  if (xi.size() != n_)
    throw DimensionMismatch("frequency has length " + std::to_string(xi.size()) +
                            ", expected " + std::to_string(n_));
  Matrix out = Matrix::Zero(dim_dst_, dim_src_);
  for (int j = 0; j < n_; ++j) out += xi[j] * coeffs_[j];
  return out;
}

RealMatrix FirstOrderSymbol::eval_real(const RealVector& xi) const {
  if (field_ != ScalarField::Real)
    throw InvalidArgument("eval_real on a complex-field symbol");
  if (xi.size() != n_)
    throw DimensionMismatch("frequency has length " + std::to_string(xi.size()) +
                            ", expected " + std::to_string(n_));
  RealMatrix out = RealMatrix::Zero(dim_dst_, dim_src_);
  for (int j = 0; j < n_; ++j) out += xi[j] * coeffs_[j].real();
  return out;
}

OperatorPair::OperatorPair(FirstOrderSymbol a, FirstOrderSymbol b)
    : A(std::move(a)), B(std::move(b)) {
  if (A.n() != B.n())
    throw DimensionMismatch("A and B live in different space dimensions");
  if (A.dim_src() != B.dim_src())
    throw DimensionMismatch("A and B have different source spaces");
  if (A.field() != B.field())
    throw InvalidArgument("A and B have different scalar fields");
}

FirstOrderSymbol stack_symbol(const OperatorPair& p) {
  std::vector<Matrix> coeffs;
  coeffs.reserve(p.n());
  const int rows = p.dim_G() + p.dim_E();
  for (int j = 0; j < p.n(); ++j) {
    Matrix c(rows, p.dim_F());
    c.topRows(p.dim_G()) = p.A.coeff(j);
    c.bottomRows(p.dim_E()) = p.B.coeff(j);
    coeffs.push_back(std::move(c));
  }
  return FirstOrderSymbol(p.field(), p.n(), p.dim_F(), rows, std::move(coeffs));
}

namespace {

double condition_number(const Matrix& m) {
  if (m.rows() == 0) return 1.0;
  auto sv = m.jacobiSvd().singularValues();
  double smin = sv(sv.size() - 1);
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / smin;
}

}  // namespace

RescaledPair rescale_pair(const OperatorPair& p, const Matrix& A0,
                          const Matrix& B0, double max_condition_number) {
  if (A0.rows() != A0.cols() || A0.rows() != p.dim_G())
    throw DimensionMismatch("A0 must be square of size dim G");
  if (B0.rows() != B0.cols() || B0.rows() != p.dim_E())
    throw DimensionMismatch("B0 must be square of size dim E");
  const double cond_a = condition_number(A0);
  const double cond_b = condition_number(B0);
  if (!(cond_a <= max_condition_number)) throw SingularMatrixError("A0", cond_a);
  if (!(cond_b <= max_condition_number)) throw SingularMatrixError("B0", cond_b);

  std::vector<Matrix> a, b;
  for (int j = 0; j < p.n(); ++j) {
    a.push_back(A0 * p.A.coeff(j));
    b.push_back(B0 * p.B.coeff(j));
  }
  ScalarField field = p.field();
  if (field == ScalarField::Real &&
      (A0.imag().cwiseAbs().sum() != 0 || B0.imag().cwiseAbs().sum() != 0))
    field = ScalarField::Complex;
  OperatorPair out(
      FirstOrderSymbol(field, p.n(), p.dim_F(), p.dim_G(), std::move(a)),
      FirstOrderSymbol(field, p.n(), p.dim_F(), p.dim_E(), std::move(b)));
  return RescaledPair{std::move(out), cond_a, cond_b};
}

OperatorPair restrict_source(const OperatorPair& p, const Matrix& basis) {
  if (basis.rows() != p.dim_F())
    throw DimensionMismatch("restriction basis does not match dim F");
  std::vector<Matrix> a, b;
  for (int j = 0; j < p.n(); ++j) {
    a.push_back(p.A.coeff(j) * basis);
    b.push_back(p.B.coeff(j) * basis);
  }
  ScalarField field = p.field();
  if (field == ScalarField::Real && basis.imag().cwiseAbs().sum() != 0)
    field = ScalarField::Complex;
  const int m = static_cast<int>(basis.cols());
  return OperatorPair(
      FirstOrderSymbol(field, p.n(), m, p.dim_G(), std::move(a)),
      FirstOrderSymbol(field, p.n(), m, p.dim_E(), std::move(b)));
}

}  // namespace opair
