#include "opair/exterior.hpp"

#include <algorithm>
#include <map>

namespace opair {

namespace {

void enumerate(int n, int k, int start, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    enumerate(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

KFormBasis::KFormBasis(int n, int k) : n_(n), k_(k) {
  if (n < 0 || k < 0 || k > n)
    throw InvalidArgument("KFormBasis requires 0 <= k <= n");
  std::vector<int> cur;
  enumerate(n, k, 0, cur, indices_);
}

int KFormBasis::position(const std::vector<int>& index_set) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), index_set);
  if (it == indices_.end() || *it != index_set)
    throw InvalidArgument("index set is not a basis multi-index");
  return static_cast<int>(it - indices_.begin());
}

RealMatrix wedge_matrix(int n, int k, int i) {
  if (i < 0 || i >= n) throw InvalidArgument("wedge direction out of range");
  KFormBasis src(n, k);
  if (k + 1 > n) return RealMatrix::Zero(0, src.dimension());
  KFormBasis dst(n, k + 1);
  RealMatrix out = RealMatrix::Zero(dst.dimension(), src.dimension());
  for (int c = 0; c < src.dimension(); ++c) {
    const auto& s = src.index_set(c);
    if (std::binary_search(s.begin(), s.end(), i)) continue;
    std::vector<int> t = s;
    auto pos = std::lower_bound(t.begin(), t.end(), i);
    int passed = static_cast<int>(pos - t.begin());
    t.insert(pos, i);
    double sign = (passed % 2 == 0) ? 1.0 : -1.0;
    out(dst.position(t), c) = sign;
  }
  return out;
}

RealMatrix interior_matrix(int n, int k, int i) {
  if (i < 0 || i >= n) throw InvalidArgument("interior direction out of range");
  KFormBasis src(n, k);
  if (k == 0) return RealMatrix::Zero(0, src.dimension());
  KFormBasis dst(n, k - 1);
  RealMatrix out = RealMatrix::Zero(dst.dimension(), src.dimension());
  for (int c = 0; c < src.dimension(); ++c) {
    const auto& s = src.index_set(c);
    auto pos = std::lower_bound(s.begin(), s.end(), i);
    if (pos == s.end() || *pos != i) continue;
    int passed = static_cast<int>(pos - s.begin());
    std::vector<int> t;
    t.reserve(k - 1);
    for (int v : s)
      if (v != i) t.push_back(v);
    double sign = (passed % 2 == 0) ? 1.0 : -1.0;
    out(dst.position(t), c) = sign;
  }
  return out;
}

RealMatrix wedge_matrix(int n, int k, const RealVector& v) {
  RealMatrix out = wedge_matrix(n, k, 0) * v[0];
  for (int i = 1; i < n; ++i) out += wedge_matrix(n, k, i) * v[i];
  return out;
}

RealMatrix interior_matrix(int n, int k, const RealVector& v) {
  RealMatrix out = interior_matrix(n, k, 0) * v[0];
  for (int i = 1; i < n; ++i) out += interior_matrix(n, k, i) * v[i];
  return out;
}

RealMatrix lambda_extension(const RealMatrix& j, int k) {
  const int n = static_cast<int>(j.rows());
  if (j.cols() != n) throw InvalidArgument("lambda_extension needs a square map");
  KFormBasis basis(n, k);
  const int d = basis.dimension();
  RealMatrix out(d, d);
  // Column c holds J e_{s_1} ^ ... ^ J e_{s_k} expanded over the basis:
  // the (r, c) entry is det of the k x k minor of J with rows r, columns c.
  for (int c = 0; c < d; ++c) {
    const auto& cs = basis.index_set(c);
    for (int r = 0; r < d; ++r) {
      const auto& rs = basis.index_set(r);
      RealMatrix minor(k, k);
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) minor(a, b) = j(rs[a], cs[b]);
      out(r, c) = k == 0 ? 1.0 : minor.determinant();
    }
  }
  return out;
}

RealMatrix hodge_star(int n, int k) {
  KFormBasis src(n, k);
  KFormBasis dst(n, n - k);
  RealMatrix out = RealMatrix::Zero(dst.dimension(), src.dimension());
  for (int c = 0; c < src.dimension(); ++c) {
    const auto& s = src.index_set(c);
    std::vector<int> comp;
    comp.reserve(n - k);
    for (int i = 0; i < n; ++i)
      if (!std::binary_search(s.begin(), s.end(), i)) comp.push_back(i);
    // Parity of the concatenation (s, comp) as a permutation of (0..n-1).
    std::vector<int> perm = s;
    perm.insert(perm.end(), comp.begin(), comp.end());
    int inversions = 0;
    for (size_t a = 0; a < perm.size(); ++a)
      for (size_t b = a + 1; b < perm.size(); ++b)
        if (perm[a] > perm[b]) ++inversions;
    out(dst.position(comp), c) = (inversions % 2 == 0) ? 1.0 : -1.0;
  }
  return out;
}

RealMatrix self_dual_basis_r4() {
  RealMatrix star = hodge_star(4, 2);
  RealMatrix proj = 0.5 * (RealMatrix::Identity(6, 6) + star);
  // proj is symmetric idempotent of rank 3; orthonormalize its range.
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(proj);
  RealMatrix basis(6, 3);
  int col = 0;
  for (int i = 0; i < 6; ++i)
    if (es.eigenvalues()(i) > 0.5) basis.col(col++) = es.eigenvectors().col(i);
  if (col != 3) throw Error("self-dual projector rank is not 3");
  return basis;
}

}  // namespace opair
