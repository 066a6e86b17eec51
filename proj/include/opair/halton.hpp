#pragma once

#include <vector>

#include "opair/types.hpp"

namespace opair {

/// Deterministic low-discrepancy points, used for quasi-uniform sphere grids
/// and frequency sampling. No RNG involved; the k-th point is always the same.
double radical_inverse(int base, long index);

/// k-th Halton point in [0,1)^dim (k >= 0), prime bases 2, 3, 5, ...
RealVector halton_point(long k, int dim);

/// Quasi-uniform points on the unit sphere S^{dim-1}: Halton points pushed
/// through the inverse normal CDF and normalized. Includes +/- basis vectors.
std::vector<RealVector> sphere_points(int dim, int count);

/// Inverse of the standard normal CDF, accurate to ~1e-15 (Acklam's
/// approximation polished by one Halley step on erfc).
double inverse_normal_cdf(double p);

}  // namespace opair
