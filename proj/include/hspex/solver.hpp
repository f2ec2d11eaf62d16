#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hspex/hypergraph.hpp"
#include "hspex/pattern.hpp"

namespace hspex {

enum class SolveMethod { automatic, power, projected_gradient, simplex };

struct SolverConfig {
  double tolerance = 1e-10;
  long max_iterations = 100000;
  int restarts = 32;
  std::uint64_t seed = 2026u;
  SolveMethod method = SolveMethod::automatic;
  int threads = 1;
};

struct WeightVector {
  std::vector<double> values;
  double alpha = 2.0;
};

struct VectorStats {
  double min = 0.0;
  double max = 0.0;
  double ratio = 0.0;  // max/min; infinity when min is zero
};

struct SpectralEstimate {
  double lambda = 0.0;
  WeightVector vector;
  double residual = 0.0;
  long iterations = 0;
  int restarts_used = 0;
  std::string method;
  bool converged = false;
};

// Weighted edge polynomial r! * sum_e prod_{v in e} x_v.
double lagrangian_poly(const Hypergraph& h, std::span<const double> x);

// Partial derivatives of lagrangian_poly.
std::vector<double> poly_gradient(const Hypergraph& h, std::span<const double> x);

// Largest value of the edge polynomial over the nonnegative part of the unit
// alpha-norm sphere, found by restarted local ascent with a stationarity
// certificate.  alpha >= 1; the reported residual is the certificate.
SpectralEstimate alpha_spectral_radius(const Hypergraph& h, double alpha,
                                       const SolverConfig& config = {});

// Stationarity defect of (lambda, x).  For alpha > 1 this is the maximum over
// supported vertices of |lambda x_v^{alpha-1} - (r-1)! sum_{e: v in e}
// prod_{u in e, u != v} x_u|; for alpha = 1 it is the first-order defect on
// the simplex (supported vertices share the common gradient value, the rest
// must not exceed it).
double eigen_residual(const Hypergraph& h, double alpha, double lambda,
                      std::span<const double> x);

// Solves the class-reduced problem for the edge-maximal colorable graph with
// the given class sizes: one weight per class, edge counts folded into
// binomial coefficients.  The estimate carries the lifted full-length vector
// and a residual certified against the materialized graph when feasible.
SpectralEstimate symmetric_spectral_radius(const std::vector<int>& sizes, const Pattern& p,
                                           double alpha, const SolverConfig& config = {});

// One solve per grid point, warm-starting each solve with the previous
// optimizer.  The grid must be sorted increasing and start at >= 1.
std::vector<SpectralEstimate> alpha_sweep(const Hypergraph& h, const std::vector<double>& grid,
                                          const SolverConfig& config = {});

VectorStats vector_stats(std::span<const double> x);

}  // namespace hspex
