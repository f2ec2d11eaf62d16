#include "hspex/density.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hspex/combin.hpp"
#include "hspex/errors.hpp"
#include "engine.hpp"

namespace hspex {

using namespace detail;

namespace {

double count_for(const Pattern& p, const std::vector<long long>& sizes) {
  double total = 0.0;
  for (const auto& row : p.rows) {
    double prod = 1.0;
    for (int c = 0; c < p.l && prod > 0.0; ++c)
      if (row[c] > 0) prod *= binom_d(sizes[c], row[c]);
    total += prod;
  }
  return total;
}

// Exact scan over every composition of n into l parts.
void full_scan(const Pattern& p, long long n, std::vector<long long>& best,
               double& best_cnt) {
  std::vector<long long> cur(p.l, 0);
  std::function<void(int, long long)> rec = [&](int c, long long left) {
    if (c == p.l - 1) {
      cur[c] = left;
      double cnt = count_for(p, cur);
      if (cnt > best_cnt) {
        best_cnt = cnt;
        best = cur;
      }
      return;
    }
    for (long long s = 0; s <= left; ++s) {
      cur[c] = s;
      rec(c + 1, left - s);
    }
  };
  rec(0, n);
}

// Scan the compositions inside a box around the continuous maximizer; the
// caller widens the box whenever the argmax touches its edge.
bool window_scan(const Pattern& p, long long n, const std::vector<long long>& lo,
                 const std::vector<long long>& hi, std::vector<long long>& best,
                 double& best_cnt) {
  bool found = false;
  std::vector<long long> cur(p.l, 0);
  std::function<void(int, long long)> rec = [&](int c, long long left) {
    if (c == p.l - 1) {
      if (left < lo[c] || left > hi[c]) return;
      cur[c] = left;
      double cnt = count_for(p, cur);
      if (!found || cnt > best_cnt) {
        found = true;
        best_cnt = cnt;
        best = cur;
      }
      return;
    }
    for (long long s = lo[c]; s <= std::min(hi[c], left); ++s) {
      cur[c] = s;
      rec(c + 1, left - s);
    }
  };
  rec(0, n);
  return found;
}

}  // namespace

DensityEstimate pattern_density(const Pattern& p, const DensityConfig& config) {
  DensityEstimate est;
  est.maximizer.assign(p.l, 1.0 / double(p.l));
  if (p.rows.empty()) {
    est.converged = true;
    return est;
  }

  TermObjective obj;
  obj.dims = p.l;
  obj.deg = p.r;
  for (const auto& row : p.rows) {
    TermObjective::Term t;
    t.coeff = factorial_d(p.r);
    for (int c = 0; c < p.l; ++c) {
      if (row[c] == 0) continue;
      t.coeff /= factorial_d(row[c]);
      t.factors.push_back({c, row[c]});
    }
    obj.terms.push_back(std::move(t));
  }

  EngineConfig ec;
  ec.tolerance = config.tolerance;
  ec.max_iterations = config.max_iterations;
  ec.restarts = config.restarts;
  ec.seed = config.seed;
  RunResult best = solve_objective(obj, 1.0, ec, {}, nullptr, nullptr);
  est.value = best.lambda;
  est.maximizer = best.x;
  est.residual = best.residual;
  est.converged = best.converged;
  return est;
}

RatioTrace density_by_ratio(const Pattern& p, long long n0, long long n_max,
                            double step_tol, const DensityConfig& config) {
  if (n0 < p.r) throw validation_error("initial order must be at least the edge size");
  if (n_max < n0) throw validation_error("order cap below the initial order");
  if (step_tol <= 0.0) throw validation_error("step tolerance must be positive");

  DensityEstimate cont = pattern_density(p, config);

  RatioTrace trace;
  long long n = n0;
  for (;;) {
    std::vector<long long> best(p.l, 0);
    double best_cnt = -1.0;

    // composition count C(n + l - 1, l - 1); scan exhaustively when small
    double comp_count = binom_d(n + p.l - 1, p.l - 1);
    if (comp_count <= 2e5) {
      full_scan(p, n, best, best_cnt);
    } else {
      long long w = 8;
      for (int widen = 0; widen < 24; ++widen) {
        std::vector<long long> lo(p.l), hi(p.l);
        for (int c = 0; c < p.l; ++c) {
          long long center = llround(cont.maximizer[c] * double(n));
          lo[c] = std::max<long long>(0, center - w);
          hi[c] = std::min<long long>(n, center + w);
        }
        best_cnt = -1.0;
        if (window_scan(p, n, lo, hi, best, best_cnt)) {
          bool on_edge = false;
          for (int c = 0; c < p.l; ++c)
            if ((best[c] == lo[c] && lo[c] > 0) || (best[c] == hi[c] && hi[c] < n))
              on_edge = true;
          if (!on_edge) break;
        }
        w *= 2;
        if (w > n) {
          full_scan(p, n, best, best_cnt);
          break;
        }
      }
    }

    double ratio = best_cnt / binom_d(n, p.r);
    trace.sizes.push_back(n);
    trace.ratios.push_back(ratio);
    trace.composition = best;
    trace.value = ratio;
    size_t k = trace.ratios.size();
    if (k >= 2 && trace.ratios[k - 2] - trace.ratios[k - 1] < step_tol) {
      trace.exhausted = true;
      break;
    }
    if (n * 2 > n_max) break;
    n *= 2;
  }
  return trace;
}

}  // namespace hspex
