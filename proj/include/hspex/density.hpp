#pragma once

#include <cstdint>
#include <vector>

#include "hspex/pattern.hpp"

namespace hspex {

struct DensityConfig {
  double tolerance = 1e-10;
  long max_iterations = 100000;
  int restarts = 64;
  std::uint64_t seed = 2026u;
};

struct DensityEstimate {
  double value = 0.0;
  std::vector<double> maximizer;  // point on the color simplex, length l
  double residual = 0.0;          // first-order stationarity defect
  bool converged = false;
};

// Largest value of the pattern's simplex polynomial over the color simplex,
// by restarted projected ascent.
DensityEstimate pattern_density(const Pattern& p, const DensityConfig& config = {});

struct RatioTrace {
  std::vector<long long> sizes;          // host orders visited (doubling)
  std::vector<double> ratios;            // best colorable edge count / C(n, r)
  std::vector<long long> composition;    // argmax class sizes at the last order
  double value = 0.0;                    // final ratio
  bool exhausted = false;                // stopped because the step fell below step_tol
};

// Densest colorable share of all r-sets at finite host order, maximized over
// class compositions.  The order doubles from n0 until consecutive ratios
// differ by less than step_tol or the order would exceed n_max.  Small orders
// scan every composition; large orders search a window around the continuous
// maximizer, widening it whenever the argmax touches the window edge.  The
// ratio sequence is nonincreasing and converges to the simplex density from
// above.
RatioTrace density_by_ratio(const Pattern& p, long long n0, long long n_max,
                            double step_tol, const DensityConfig& config = {});

}  // namespace hspex
