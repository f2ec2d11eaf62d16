#pragma once

// Internal ascent engine shared by the spectral and density modules.  Not
// installed; include only from library sources.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <thread>
#include <vector>

#include "hspex/combin.hpp"
#include "hspex/errors.hpp"
#include "hspex/hypergraph.hpp"

namespace hspex::detail {

constexpr double kSupportEps = 1e-12;

// Homogeneous polynomial with nonnegative coefficients, maximized over the
// nonnegative part of the unit alpha-sphere (alpha == 1: the simplex).
// grad_scaled fills g_i = (d f / d x_i) / deg and returns f itself
// (Euler: sum_i x_i g_i = f).
struct Objective {
  int dims = 0;
  int deg = 2;
  virtual double eval(const double* x) const = 0;
  virtual double grad_scaled(const double* x, double* g) const = 0;
  virtual ~Objective() = default;
};

struct GraphObjective final : Objective {
  std::vector<int> flat;  // edge vertices, r per edge
  int m = 0;
  double fact_r = 2.0, fact_rm1 = 1.0;

  explicit GraphObjective(const Hypergraph& h) {
    if (h.r >= 63) throw validation_error("edge size too large for the solver");
    dims = h.n;
    deg = h.r;
    m = h.edge_count();
    fact_r = factorial_d(h.r);
    fact_rm1 = factorial_d(h.r - 1);
    flat.reserve(size_t(m) * h.r);
    for (const Edge& e : h.edges)
      for (int v : e) flat.push_back(v);
  }

  double eval(const double* x) const override {
    double total = 0.0;
    const int r = deg;
    for (int e = 0; e < m; ++e) {
      double prod = 1.0;
      const int* vs = flat.data() + size_t(e) * r;
      for (int i = 0; i < r; ++i) prod *= x[vs[i]];
      total += prod;
    }
    return fact_r * total;
  }

  double grad_scaled(const double* x, double* g) const override {
    const int r = deg;
    std::fill(g, g + dims, 0.0);
    double pre[64], suf[64];
    for (int e = 0; e < m; ++e) {
      const int* vs = flat.data() + size_t(e) * r;
      pre[0] = 1.0;
      for (int i = 0; i < r; ++i) pre[i + 1] = pre[i] * x[vs[i]];
      suf[r] = 1.0;
      for (int i = r - 1; i >= 0; --i) suf[i] = suf[i + 1] * x[vs[i]];
      for (int i = 0; i < r; ++i) g[vs[i]] += fact_rm1 * pre[i] * suf[i + 1];
    }
    double f = 0.0;
    for (int i = 0; i < dims; ++i) f += x[i] * g[i];
    return f;
  }
};

struct TermObjective final : Objective {
  struct Term {
    double coeff;
    std::vector<std::pair<int, int>> factors;  // (variable, power)
  };
  std::vector<Term> terms;

  double eval(const double* x) const override {
    double total = 0.0;
    for (const Term& t : terms) {
      double prod = t.coeff;
      for (auto [v, p] : t.factors)
        for (int i = 0; i < p; ++i) prod *= x[v];
      total += prod;
    }
    return total;
  }

  double grad_scaled(const double* x, double* g) const override {
    std::fill(g, g + dims, 0.0);
    double f = 0.0;
    for (const Term& t : terms) {
      double prod = t.coeff;
      for (auto [v, p] : t.factors)
        for (int i = 0; i < p; ++i) prod *= x[v];
      f += prod;
      for (auto [v, p] : t.factors) {
        double d = t.coeff * p;
        for (auto [w, q] : t.factors) {
          int pw = q - (w == v ? 1 : 0);
          for (int i = 0; i < pw; ++i) d *= x[w];
        }
        g[v] += d / deg;
      }
    }
    return f;
  }
};

inline double alpha_norm(const double* x, int n, double alpha) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += std::pow(x[i], alpha);
  return std::pow(s, 1.0 / alpha);
}

inline void normalize(std::vector<double>& x, double alpha) {
  double nrm = alpha_norm(x.data(), int(x.size()), alpha);
  if (nrm <= 0.0) return;
  for (double& v : x) v /= nrm;
}

// First-order defect of (lambda, x): for alpha > 1 the supported-vertex
// eigenequation residual, for alpha == 1 the simplex stationarity defect.
inline double defect(const Objective& obj, double alpha, double lambda, const double* x,
                     std::vector<double>& gbuf) {
  gbuf.assign(obj.dims, 0.0);
  obj.grad_scaled(x, gbuf.data());
  double worst = 0.0;
  for (int i = 0; i < obj.dims; ++i) {
    double d;
    if (alpha > 1.0) {
      if (x[i] <= kSupportEps) continue;
      d = std::fabs(lambda * std::pow(x[i], alpha - 1.0) - gbuf[i]);
    } else {
      d = (x[i] > kSupportEps) ? std::fabs(gbuf[i] - lambda)
                               : std::max(0.0, gbuf[i] - lambda);
    }
    worst = std::max(worst, d);
  }
  return worst;
}

// Euclidean projection onto the standard simplex.
inline void project_simplex(std::vector<double>& v) {
  std::vector<double> u = v;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double css = 0.0, tau = 0.0;
  for (size_t j = 0; j < u.size(); ++j) {
    css += u[j];
    double t = (css - 1.0) / double(j + 1);
    if (u[j] - t > 0.0) tau = t;
  }
  for (double& x : v) x = std::max(0.0, x - tau);
}

struct EngineConfig {
  double tolerance = 1e-10;
  long max_iterations = 100000;
  int restarts = 32;
  std::uint64_t seed = 2026u;
  int threads = 1;
  // automatic: fixed-point iteration when alpha >= deg, gradient otherwise
  enum class Method { automatic, power, gradient } method = Method::automatic;
};

struct RunResult {
  double lambda = 0.0;
  std::vector<double> x;
  double residual = std::numeric_limits<double>::infinity();
  long iters = 0;
  bool converged = false;
  const char* method = "none";
};

// Terminal refinement.  Ascent on the objective stalls once improvements in f
// reach machine epsilon, which (f being quadratically flat at the maximizer)
// leaves a first-order defect near sqrt(eps).  These damped fixed-point steps
// contract the defect itself and only ever accept a step that lowers it:
// alpha > 1 uses the shifted eigen-map, alpha == 1 the replicator map.
inline void polish_fixed_point(const Objective& obj, double alpha, double tol,
                               std::vector<double>& x, double& f, double& res, long& it,
                               long budget, std::vector<double>& gbuf) {
  const int n = obj.dims;
  std::vector<double> g(n), y(n);
  while (it < budget && res > tol) {
    obj.grad_scaled(x.data(), g.data());
    bool improved = false;
    double sigma = 0.0;
    const double sigma0 = std::max(std::fabs(f), 1e-6);
    for (int attempt = 0; attempt < 9; ++attempt) {
      if (alpha > 1.0) {
        const double invexp = 1.0 / (alpha - 1.0);
        for (int i = 0; i < n; ++i) {
          double base = g[i] + (sigma > 0.0 ? sigma * std::pow(x[i], alpha - 1.0) : 0.0);
          y[i] = base > 0.0 ? std::pow(base, invexp) : 0.0;
        }
      } else {
        for (int i = 0; i < n; ++i) y[i] = x[i] * (g[i] + sigma);
      }
      normalize(y, alpha);
      double fy = obj.eval(y.data());
      double resy = defect(obj, alpha, fy, y.data(), gbuf);
      if (resy < res) {
        x.swap(y);
        f = fy;
        res = resy;
        improved = true;
        ++it;
        break;
      }
      sigma = (sigma == 0.0) ? sigma0 : sigma * 4.0;
    }
    if (!improved) break;
  }
}

// Gradient ascent with renormalization retraction (alpha > 1) or simplex
// projection (alpha == 1); monotone via backtracking.
inline RunResult run_gradient(const Objective& obj, double alpha, const EngineConfig& cfg,
                              std::vector<double> x, long budget) {
  RunResult out;
  out.method = alpha > 1.0 ? "projected-gradient" : "simplex";
  const int n = obj.dims;
  std::vector<double> g(n), trial(n), gbuf;
  if (alpha > 1.0)
    normalize(x, alpha);
  else
    project_simplex(x);
  double f = obj.grad_scaled(x.data(), g.data());
  double eta = 0.25;
  long it = 0;
  for (; it < budget; ++it) {
    double res = defect(obj, alpha, f, x.data(), gbuf);
    if (res <= cfg.tolerance) {
      out.converged = true;
      break;
    }
    double scale = 0.0;
    for (double v : g) scale = std::max(scale, std::fabs(v));
    if (scale <= 0.0) break;  // flat spot away from every term
    bool accepted = false;
    while (eta > 1e-15) {
      for (int i = 0; i < n; ++i) trial[i] = std::max(0.0, x[i] + eta * g[i] / scale);
      if (alpha > 1.0)
        normalize(trial, alpha);
      else
        project_simplex(trial);
      double ftrial = obj.eval(trial.data());
      if (ftrial > f) {
        x = trial;
        f = obj.grad_scaled(x.data(), g.data());
        eta = std::min(eta * 1.3, 4.0);
        accepted = true;
        break;
      }
      eta *= 0.5;
    }
    if (!accepted) break;  // step collapsed: stationary to machine precision
  }
  f = obj.eval(x.data());
  double res = defect(obj, alpha, f, x.data(), gbuf);
  if (res > cfg.tolerance)
    polish_fixed_point(obj, alpha, cfg.tolerance, x, f, res, it,
                       std::min(budget, it + 2000), gbuf);
  out.lambda = f;
  out.x = std::move(x);
  out.residual = res;
  out.converged = out.residual <= cfg.tolerance;
  out.iters = it;
  return out;
}

// Fixed-point iteration x_i <- (g_i + sigma x_i^{alpha-1})^{1/(alpha-1)} for
// alpha >= deg.  The shift sigma starts at zero and escalates when the
// objective stalls (period-two behaviour of near-bipartite structures); a
// decreasing objective hands over to gradient ascent.
inline RunResult run_power(const Objective& obj, double alpha, const EngineConfig& cfg,
                           std::vector<double> x, long budget) {
  RunResult out;
  out.method = "power";
  const int n = obj.dims;
  std::vector<double> g(n), y(n), gbuf;
  normalize(x, alpha);
  double sigma = 0.0;
  int escalations = 0, stall = 0;
  double f_prev = -std::numeric_limits<double>::infinity();
  long it = 0;
  const double invexp = 1.0 / (alpha - 1.0);
  for (; it < budget; ++it) {
    double f = obj.grad_scaled(x.data(), g.data());
    double res = defect(obj, alpha, f, x.data(), gbuf);
    if (res <= cfg.tolerance) {
      out.converged = true;
      break;
    }
    if (f < f_prev - 1e-12 * std::max(1.0, std::fabs(f_prev))) break;  // hand over
    if (std::fabs(f - f_prev) <= 1e-14 * std::max(1.0, std::fabs(f)))
      ++stall;
    else
      stall = 0;
    f_prev = f;
    if (stall > 40) {
      if (escalations >= 3) break;
      sigma = (sigma == 0.0) ? std::max(0.25 * std::fabs(f), 1e-3) : sigma * 8.0;
      ++escalations;
      stall = 0;
    }
    for (int i = 0; i < n; ++i) {
      double base = g[i] + (sigma > 0.0 ? sigma * std::pow(x[i], alpha - 1.0) : 0.0);
      y[i] = base > 0.0 ? std::pow(base, invexp) : 0.0;
    }
    normalize(y, alpha);
    x.swap(y);
  }
  out.lambda = obj.eval(x.data());
  out.x = std::move(x);
  out.residual = defect(obj, alpha, out.lambda, out.x.data(), gbuf);
  out.converged = out.residual <= cfg.tolerance;
  out.iters = it;
  return out;
}

inline RunResult run_one_start(const Objective& obj, double alpha, const EngineConfig& cfg,
                               std::vector<double> start) {
  bool power_ok = alpha >= double(obj.deg) && alpha > 1.0;
  bool use_power = cfg.method == EngineConfig::Method::power ||
                   (cfg.method == EngineConfig::Method::automatic && power_ok);
  if (use_power && power_ok) {
    RunResult r = run_power(obj, alpha, cfg, start, cfg.max_iterations);
    if (r.converged) return r;
    long left = cfg.max_iterations - r.iters;
    if (left <= 0) return r;
    RunResult r2 = run_gradient(obj, alpha, cfg, r.x, left);
    r2.iters += r.iters;
    r2.method = "power+projected-gradient";
    return r2.lambda >= r.lambda ? r2 : r;
  }
  return run_gradient(obj, alpha, cfg, std::move(start), cfg.max_iterations);
}

inline bool lex_less_rounded(const std::vector<double>& a, const std::vector<double>& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    long long la = std::llround(a[i] * 1e9), lb = std::llround(b[i] * 1e9);
    if (la != lb) return la < lb;
  }
  return a.size() < b.size();
}

inline std::vector<double> start_vector(int kind, int dims, std::mt19937_64& rng) {
  std::vector<double> x(dims, 1.0);
  if (kind == 0) return x;  // uniform
  if (kind % 2 == 1) {
    // interior random point, Dirichlet-like
    std::exponential_distribution<double> ex(1.0);
    for (double& v : x) v = ex(rng) + 1e-9;
    return x;
  }
  // random face: keep each coordinate with probability 1/2
  std::uniform_int_distribution<int> coin(0, 1);
  bool any = false;
  for (double& v : x) {
    if (coin(rng)) {
      v = 1.0;
      any = true;
    } else {
      v = 0.0;
    }
  }
  if (!any) x[rng() % dims] = 1.0;
  return x;
}

// Restarted ascent: deterministic uniform start, caller-supplied warm starts,
// then seeded random interior points and faces.  The winner is the largest
// objective value, ties broken by the lexicographically smallest rounded
// vector, so results are reproducible for a fixed seed.
inline RunResult solve_objective(const Objective& obj, double alpha, const EngineConfig& cfg,
                                 const std::vector<std::vector<double>>& extra_starts,
                                 long* iterations_total, int* restarts_used) {
  const int dims = obj.dims;
  int restarts = std::max(1, cfg.restarts);
  std::vector<std::vector<double>> starts;
  for (const auto& s : extra_starts)
    if (int(s.size()) == dims) starts.push_back(s);
  for (int k = 0; k < restarts; ++k) {
    std::mt19937_64 rng(mix_seed(cfg.seed, std::uint64_t(k)));
    starts.push_back(start_vector(k, dims, rng));
  }

  std::vector<RunResult> results(starts.size());
  auto better = [](const RunResult& a, const RunResult& b) {
    if (a.lambda != b.lambda) return a.lambda > b.lambda;
    return lex_less_rounded(a.x, b.x);
  };

  if (cfg.threads > 1) {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < cfg.threads; ++t)
      pool.emplace_back([&]() {
        for (size_t k = next.fetch_add(1); k < starts.size(); k = next.fetch_add(1))
          results[k] = run_one_start(obj, alpha, cfg, starts[k]);
      });
    for (auto& th : pool) th.join();
  } else {
    int agree = 0;
    size_t done = 0;
    const RunResult* best_so_far = nullptr;
    for (size_t k = 0; k < starts.size(); ++k) {
      results[k] = run_one_start(obj, alpha, cfg, starts[k]);
      ++done;
      if (!best_so_far || better(results[k], *best_so_far)) {
        best_so_far = &results[k];
        agree = 0;
      } else if (results[k].converged &&
                 std::fabs(results[k].lambda - best_so_far->lambda) <=
                     5e-12 * std::max(1.0, std::fabs(best_so_far->lambda))) {
        ++agree;
      }
      // extra restarts stop paying once many independent starts agree
      if (done >= 10 && agree >= 6 && best_so_far->converged) break;
    }
    results.resize(done);
  }

  RunResult best;
  long total_iters = 0;
  for (const RunResult& r : results) {
    total_iters += r.iters;
    if (best.x.empty() || better(r, best)) best = r;
  }
  if (iterations_total) *iterations_total = total_iters;
  if (restarts_used) *restarts_used = int(results.size());
  return best;
}

}  // namespace hspex::detail
