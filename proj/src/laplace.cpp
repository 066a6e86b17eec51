#include "opair/laplace.hpp"

#include <Eigen/Eigenvalues>

namespace opair {

LaplaceForm::LaplaceForm(const OperatorPair& p)
    : field_(p.field()),
      n_(p.n()),
      dim_f_(p.dim_F()),
      s_(real_components(p.field())) {
  blocks_.resize(static_cast<size_t>(n_) * n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j) {
      Matrix m_ij = p.A.coeff(i).adjoint() * p.A.coeff(j) +
                    p.B.coeff(j).adjoint() * p.B.coeff(i);
      if (i == j) {
        // M_ii is self-adjoint; rebuild it from its upper triangle so the
        // stored block is exactly so.
        for (int a = 0; a < dim_f_; ++a) {
          m_ij(a, a) = Cplx(m_ij(a, a).real(), 0.0);
          for (int b = a + 1; b < dim_f_; ++b) m_ij(b, a) = std::conj(m_ij(a, b));
        }
        blocks_[i * n_ + i] = m_ij;
      } else {
        blocks_[j * n_ + i] = m_ij.adjoint();  // M_ji = M_ij^*
        blocks_[i * n_ + j] = std::move(m_ij);
      }
    }
  }

  const int bs = s_ * dim_f_;
  gram_.resize(n_ * bs, n_ * bs);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (s_ == 1)
        gram_.block(i * bs, j * bs, bs, bs) = blocks_[i * n_ + j].real();
      else
        gram_.block(i * bs, j * bs, bs, bs) = realify_block(blocks_[i * n_ + j]);
    }
  // Mirror the strict lower triangle; the blocks already satisfy
  // M_ji = M_ij^*, so this only removes rounding asymmetry inside realified
  // diagonal blocks.
  for (Eigen::Index c = 0; c < gram_.cols(); ++c)
    for (Eigen::Index r = c + 1; r < gram_.rows(); ++r) gram_(r, c) = gram_(c, r);
}

LaplaceForm laplace_form(const OperatorPair& p) { return LaplaceForm(p); }

Matrix LaplaceForm::apply(const Matrix& x) const {
  if (x.rows() != dim_f_ || x.cols() != n_)
    throw DimensionMismatch("Jacobian value has shape " +
                            std::to_string(x.rows()) + "x" +
                            std::to_string(x.cols()) + ", expected " +
                            std::to_string(dim_f_) + "x" + std::to_string(n_));
  Matrix out = Matrix::Zero(dim_f_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.col(i) += block(i, j) * x.col(j);
  return out;
}

void LaplaceForm::ensure_eigendecomposition() const {
  if (eigenvalues_.size() > 0) return;
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(gram_);
  eigenvalues_ = es.eigenvalues();
  eigenvectors_ = es.eigenvectors();
}

const RealVector& LaplaceForm::eigenvalues() const {
  ensure_eigendecomposition();
  return eigenvalues_;
}

double LaplaceForm::max_abs_eigenvalue() const {
  ensure_eigendecomposition();
  return eigenvalues_.cwiseAbs().maxCoeff();
}

bool LaplaceForm::is_psd(double tol_psd) const {
  ensure_eigendecomposition();
  return min_eigenvalue() >= -tol_psd * std::max(max_abs_eigenvalue(), 1e-300);
}

bool LaplaceForm::is_identity(double tol) const {
  return (gram_ - RealMatrix::Identity(gram_.rows(), gram_.cols()))
             .cwiseAbs()
             .maxCoeff() <= tol;
}

RealVector LaplaceForm::realify(const Matrix& x) const {
  const int bs = s_ * dim_f_;
  RealVector v(n_ * bs);
  for (int j = 0; j < n_; ++j) {
    v.segment(j * bs, dim_f_) = x.col(j).real();
    if (s_ == 2) v.segment(j * bs + dim_f_, dim_f_) = x.col(j).imag();
  }
  return v;
}

Matrix LaplaceForm::unrealify(const RealVector& v) const {
  const int bs = s_ * dim_f_;
  Matrix x(dim_f_, n_);
  for (int j = 0; j < n_; ++j) {
    x.col(j).real() = v.segment(j * bs, dim_f_);
    x.col(j).imag() = s_ == 2 ? RealVector(v.segment(j * bs + dim_f_, dim_f_))
                              : RealVector(RealVector::Zero(dim_f_));
  }
  return x;
}

double quadratic_form(const LaplaceForm& m, const Matrix& x) {
  if (x.rows() != m.dim_F() || x.cols() != m.n())
    throw DimensionMismatch("Jacobian value has shape " +
                            std::to_string(x.rows()) + "x" +
                            std::to_string(x.cols()) + ", expected " +
                            std::to_string(m.dim_F()) + "x" +
                            std::to_string(m.n()));
  Cplx q = 0.0;
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j)
      q += x.col(i).dot(m.block(i, j) * x.col(j));  // dot conjugates its lhs
  return q.real();
}

double quadratic_form(const LaplaceForm& m, const RealMatrix& x) {
  return quadratic_form(m, Matrix(x.cast<Cplx>()));
}

double quadratic_form_gram(const LaplaceForm& m, const Matrix& x) {
  if (m.field() == ScalarField::Real && x.imag().cwiseAbs().sum() != 0) {
    // Promotion of a complex X over a real pair: the real form splits.
    RealVector re = m.realify(Matrix(x.real().cast<Cplx>()));
    RealVector im = m.realify(Matrix(x.imag().cast<Cplx>()));
    return re.dot(m.gram() * re) + im.dot(m.gram() * im);
  }
  RealVector v = m.realify(x);
  return v.dot(m.gram() * v);
}

std::pair<double, double> complex_rank_one_value(const OperatorPair& p,
                                                 const Vector& u,
                                                 const Vector& zeta) {
  if (u.size() != p.dim_F())
    throw DimensionMismatch("u has length " + std::to_string(u.size()) +
                            ", expected dim F = " + std::to_string(p.dim_F()));
  const double a2 = (p.A.eval(zeta) * u).squaredNorm();
  const Vector zbar = zeta.conjugate();
  const double b2 = (p.B.eval(zbar) * u).squaredNorm();
  return {a2, b2};
}

FirstOrderSymbol sqrt_laplace_symbol(const LaplaceForm& m, double tol_psd) {
  m.ensure_eigendecomposition();
  const RealVector& eig = m.eigenvalues_;
  const RealMatrix& vec = m.eigenvectors_;
  const double scale = std::max(m.max_abs_eigenvalue(), 1e-300);
  if (eig(0) < -tol_psd * scale) {
    Matrix witness = m.unrealify(vec.col(0));
    throw NotPositiveSemiDefinite(eig(0), std::move(witness));
  }
  RealVector clamped = eig.cwiseMax(0.0).cwiseSqrt();
  RealMatrix root = vec * clamped.asDiagonal() * vec.transpose();

  // Coefficient j embeds the realified F into column block j of the realified
  // Jacobian space and applies sqrt(M).
  const int bs = m.s() * m.dim_F();
  std::vector<Matrix> coeffs;
  coeffs.reserve(m.n());
  for (int j = 0; j < m.n(); ++j) {
    RealMatrix c = root.middleCols(j * bs, bs);
    coeffs.push_back(c.cast<Cplx>());
  }
  return FirstOrderSymbol(ScalarField::Real, m.n(), bs, m.n() * bs,
                          std::move(coeffs));
}

}  // namespace opair
