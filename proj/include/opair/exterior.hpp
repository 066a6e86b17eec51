#pragma once

#include <vector>

#include "opair/types.hpp"

namespace opair {

/// Basis bookkeeping for Lambda^k R^n: multi-indices in lexicographic order,
/// wedge and interior products by shuffle parity. The same combinatorics
/// serves complex form spaces spanned by k-fold products of generators.
class KFormBasis {
 public:
  KFormBasis(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  int dimension() const { return static_cast<int>(indices_.size()); }
  const std::vector<int>& index_set(int i) const { return indices_[i]; }
  int position(const std::vector<int>& index_set) const;

 private:
  int n_, k_;
  std::vector<std::vector<int>> indices_;
};

/// Matrix of e_i ^ (.) : Lambda^k -> Lambda^{k+1} (i is 0-based).
RealMatrix wedge_matrix(int n, int k, int i);

/// Matrix of e_i -| (.) : Lambda^k -> Lambda^{k-1}, the pointwise adjoint of
/// wedge_matrix.
RealMatrix interior_matrix(int n, int k, int i);

/// Matrix of v ^ (.) for a general vector v.
RealMatrix wedge_matrix(int n, int k, const RealVector& v);
RealMatrix interior_matrix(int n, int k, const RealVector& v);

/// The wedge-homomorphism extension of a linear map J on R^n to Lambda^k.
RealMatrix lambda_extension(const RealMatrix& j, int k);

/// Hodge star Lambda^k R^n -> Lambda^{n-k} R^n: *(e_S) = sign * e_{S^c} with
/// the permutation parity of (S, S^c).
RealMatrix hodge_star(int n, int k);

/// Orthonormal basis (as columns) of the self-dual 2-forms in R^4, the range
/// of (1 + *)/2.
RealMatrix self_dual_basis_r4();

}  // namespace opair
