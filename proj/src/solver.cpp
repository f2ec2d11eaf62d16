#include "hspex/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hspex/combin.hpp"
#include "hspex/errors.hpp"
#include "engine.hpp"

namespace hspex {

using namespace detail;

namespace {

EngineConfig engine_config(const SolverConfig& cfg) {
  EngineConfig ec;
  ec.tolerance = cfg.tolerance;
  ec.max_iterations = cfg.max_iterations;
  ec.restarts = cfg.restarts;
  ec.seed = cfg.seed;
  ec.threads = cfg.threads;
  switch (cfg.method) {
    case SolveMethod::automatic: ec.method = EngineConfig::Method::automatic; break;
    case SolveMethod::power: ec.method = EngineConfig::Method::power; break;
    case SolveMethod::projected_gradient:
    case SolveMethod::simplex: ec.method = EngineConfig::Method::gradient; break;
  }
  return ec;
}

// Deterministic dense-support starts: prefixes of a greedy
// max-internal-degree ordering, evaluated at uniform weight.
std::vector<std::vector<double>> greedy_starts(const Hypergraph& h, double alpha) {
  std::vector<std::vector<double>> out;
  if (h.edge_count() == 0 || h.n == 0) return out;
  std::vector<char> in(h.n, 0);
  std::vector<int> chosen;
  auto edges_inside = [&](int extra) {
    int cnt = 0;
    for (const Edge& e : h.edges) {
      bool ok = true;
      for (int v : e)
        if (!in[v] && v != extra) {
          ok = false;
          break;
        }
      if (ok) ++cnt;
    }
    return cnt;
  };
  double best_val = -1.0;
  std::vector<double> best_x;
  GraphObjective obj(h);
  for (int step = 0; step < h.n; ++step) {
    int pick = -1, gain = -1;
    for (int v = 0; v < h.n; ++v) {
      if (in[v]) continue;
      int gv = edges_inside(v);
      if (gv > gain) gain = gv, pick = v;
    }
    in[pick] = 1;
    chosen.push_back(pick);
    if (int(chosen.size()) < h.r) continue;
    std::vector<double> x(h.n, 0.0);
    double w = std::pow(double(chosen.size()), -1.0 / alpha);
    for (int v : chosen) x[v] = w;
    double val = obj.eval(x.data());
    if (val > best_val) {
      best_val = val;
      best_x = x;
    }
  }
  if (!best_x.empty()) out.push_back(std::move(best_x));
  return out;
}

SpectralEstimate solve_graph(const Hypergraph& h, double alpha, const SolverConfig& cfg,
                             const std::vector<std::vector<double>>& warm) {
  if (alpha < 1.0) throw validation_error("alpha must be at least 1");
  if (h.edge_count() == 0) {
    SpectralEstimate est;
    est.vector.alpha = alpha;
    est.vector.values.assign(h.n, h.n > 0 ? std::pow(double(h.n), -1.0 / alpha) : 0.0);
    est.method = "trivial";
    est.converged = true;
    return est;
  }
  GraphObjective obj(h);
  std::vector<std::vector<double>> extra = warm;
  for (auto& s : greedy_starts(h, alpha)) extra.push_back(std::move(s));
  long iters = 0;
  int used = 0;
  RunResult best = solve_objective(obj, alpha, engine_config(cfg), extra, &iters, &used);

  SpectralEstimate est;
  est.lambda = best.lambda;
  est.vector.values = best.x;
  est.vector.alpha = alpha;
  est.residual = best.residual;
  est.iterations = iters;
  est.restarts_used = used;
  est.method = best.method;
  est.converged = best.converged;
  return est;
}

}  // namespace

double lagrangian_poly(const Hypergraph& h, std::span<const double> x) {
  if (int(x.size()) != h.n) throw validation_error("weight vector length mismatch");
  GraphObjective obj(h);
  return obj.eval(x.data());
}

std::vector<double> poly_gradient(const Hypergraph& h, std::span<const double> x) {
  if (int(x.size()) != h.n) throw validation_error("weight vector length mismatch");
  GraphObjective obj(h);
  std::vector<double> g(h.n, 0.0);
  obj.grad_scaled(x.data(), g.data());
  for (double& v : g) v *= h.r;  // grad_scaled holds (1/r) of the gradient
  return g;
}

SpectralEstimate alpha_spectral_radius(const Hypergraph& h, double alpha,
                                       const SolverConfig& config) {
  return solve_graph(h, alpha, config, {});
}

double eigen_residual(const Hypergraph& h, double alpha, double lambda,
                      std::span<const double> x) {
  if (int(x.size()) != h.n) throw validation_error("weight vector length mismatch");
  if (alpha < 1.0) throw validation_error("alpha must be at least 1");
  GraphObjective obj(h);
  std::vector<double> gbuf;
  return defect(obj, alpha, lambda, x.data(), gbuf);
}

SpectralEstimate symmetric_spectral_radius(const std::vector<int>& sizes, const Pattern& p,
                                           double alpha, const SolverConfig& config) {
  if (alpha < 1.0) throw validation_error("alpha must be at least 1");
  if (int(sizes.size()) != p.l) throw validation_error("class count mismatch");
  long long n = 0;
  for (int s : sizes) {
    if (s < 0) throw validation_error("class sizes must be nonnegative");
    n += s;
  }

  std::vector<int> active;  // objective dimension -> class
  for (int c = 0; c < p.l; ++c)
    if (sizes[c] > 0) active.push_back(c);
  std::vector<int> dim_of(p.l, -1);
  for (size_t d = 0; d < active.size(); ++d) dim_of[active[d]] = int(d);

  // One variable per nonempty class; substituting z_c = n_c^{1/alpha} y_c
  // puts the class-constant problem on the unit alpha-sphere.
  TermObjective obj;
  obj.dims = int(active.size());
  obj.deg = p.r;
  for (const auto& row : p.rows) {
    TermObjective::Term t;
    t.coeff = factorial_d(p.r);
    bool dead = false;
    for (int c = 0; c < p.l; ++c) {
      if (row[c] == 0) continue;
      if (dim_of[c] < 0 || row[c] > sizes[c]) {
        dead = true;
        break;
      }
      t.coeff *= binom_d(sizes[c], row[c]) * std::pow(double(sizes[c]), -row[c] / alpha);
      t.factors.push_back({dim_of[c], row[c]});
    }
    if (!dead && !t.factors.empty()) obj.terms.push_back(std::move(t));
  }

  SpectralEstimate est;
  est.vector.alpha = alpha;
  if (obj.terms.empty() || obj.dims == 0) {
    est.vector.values.assign(size_t(n), n > 0 ? std::pow(double(n), -1.0 / alpha) : 0.0);
    est.method = "reduced-trivial";
    est.converged = true;
    return est;
  }

  long iters = 0;
  int used = 0;
  RunResult best = solve_objective(obj, alpha, engine_config(config), {}, &iters, &used);

  // lift the class weights back to a per-vertex vector
  std::vector<double> full;
  full.reserve(size_t(n));
  for (int c = 0; c < p.l; ++c) {
    double y = dim_of[c] >= 0
                   ? best.x[dim_of[c]] * std::pow(double(sizes[c]), -1.0 / alpha)
                   : 0.0;
    full.insert(full.end(), sizes[c], y);
  }
  est.lambda = best.lambda;
  est.vector.values = std::move(full);
  est.iterations = iters;
  est.restarts_used = used;
  est.converged = best.converged;
  est.residual = best.residual;
  est.method = std::string("reduced+") + best.method;

  // certify against the materialized host when that is affordable
  if (binom_d(n, p.r) <= 2e6) {
    ColoredGraph host = maximal_colorable(sizes, p);
    est.residual = eigen_residual(host.graph, alpha, est.lambda, est.vector.values);
    est.converged = est.residual <= config.tolerance;
  }
  return est;
}

std::vector<SpectralEstimate> alpha_sweep(const Hypergraph& h, const std::vector<double>& grid,
                                          const SolverConfig& config) {
  if (grid.empty()) throw validation_error("alpha grid is empty");
  for (size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 1.0) throw validation_error("alpha grid must stay at or above 1");
    if (i > 0 && grid[i] <= grid[i - 1])
      throw validation_error("alpha grid must be strictly increasing");
  }
  std::vector<SpectralEstimate> out;
  std::vector<std::vector<double>> warm;
  for (double a : grid) {
    SpectralEstimate est = solve_graph(h, a, config, warm);
    warm.assign(1, est.vector.values);
    out.push_back(std::move(est));
  }
  return out;
}

VectorStats vector_stats(std::span<const double> x) {
  VectorStats s;
  if (x.empty()) return s;
  s.min = *std::min_element(x.begin(), x.end());
  s.max = *std::max_element(x.begin(), x.end());
  s.ratio = s.min > 0.0 ? s.max / s.min : std::numeric_limits<double>::infinity();
  return s;
}

}  // namespace hspex
