#pragma once

#include <functional>

#include "opair/types.hpp"

namespace opair {

struct ScanOptions {
  int grid_points = 10000;   // quasi-uniform points on the first level
  int refine_starts = 16;    // local searches seeded from the best grid points
  double initial_step = 0.05;
  double min_step = 1e-10;
  int max_refine_evals = 40000;
  unsigned long seed = 42;   // recorded with the result; the scan itself is
                             // deterministic independently of it
};

struct ScanResult {
  double min_value = 0.0;
  RealVector argmin;
  double coarse_min_value = 0.0;  // minimum after the first (nested) level
  int grid_points = 0;
  int refine_iterations = 0;
  unsigned long seed = 0;
};

/// Minimizes f over the unit sphere S^{dim-1}: quasi-uniform grid (>= 1e4
/// points for dim <= 4, a product angle grid union for larger dim), then
/// compass-search refinement from the best grid points. Runs two nested grid
/// levels; the reported minimum is monotone under refinement by construction.
ScanResult minimize_on_sphere(int dim,
                              const std::function<double(const RealVector&)>& f,
                              const ScanOptions& opts = {});

}  // namespace opair
