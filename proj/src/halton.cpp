#include "opair/halton.hpp"

#include <cmath>

namespace opair {

namespace {

constexpr int kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                           37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79};

}  // namespace

double radical_inverse(int base, long index) {
  double inv_base = 1.0 / base;
  double factor = inv_base;
  double value = 0.0;
  while (index > 0) {
    value += static_cast<double>(index % base) * factor;
    index /= base;
    factor *= inv_base;
  }
  return value;
}

RealVector halton_point(long k, int dim) {
  RealVector p(dim);
  for (int j = 0; j < dim; ++j) p[j] = radical_inverse(kPrimes[j], k + 1);
  return p;
}

double inverse_normal_cdf(double p) {
  // Acklam's rational approximation.
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double x;
  if (p < plow) {
    double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - plow) {
    double q = p - 0.5;
    double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  // One Halley refinement against erfc brings this to near machine precision.
  double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
  double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
  x = x - u / (1.0 + x * u / 2.0);
  return x;
}

std::vector<RealVector> sphere_points(int dim, int count) {
  std::vector<RealVector> pts;
  pts.reserve(count + 2 * dim);
  for (int j = 0; j < dim; ++j) {
    RealVector e = RealVector::Zero(dim);
    e[j] = 1.0;
    pts.push_back(e);
    pts.push_back(-e);
  }
  long k = 0;
  while (static_cast<int>(pts.size()) < count + 2 * dim) {
    RealVector u = halton_point(k++, dim);
    RealVector z(dim);
    for (int j = 0; j < dim; ++j) {
      double p = std::min(std::max(u[j], 1e-16), 1.0 - 1e-16);
      z[j] = inverse_normal_cdf(p);
    }
    double norm = z.norm();
    if (norm < 1e-8) continue;
    pts.push_back(z / norm);
  }
  return pts;
}

}  // namespace opair
