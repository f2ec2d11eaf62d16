#include "hspex/combin.hpp"

#include "hspex/errors.hpp"

namespace hspex {

double binom_d(long long n, int k) {
  if (k < 0 || n < k) return 0.0;
  if (k > n - k) k = int(n - k);
  double out = 1.0;
  for (int t = 0; t < k; ++t) out = out * double(n - t) / double(t + 1);
  return out;
}

std::uint64_t binom_u64(int n, int k) {
  if (k < 0 || n < k) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t out = 1;
  for (int t = 0; t < k; ++t) {
    std::uint64_t next = out * std::uint64_t(n - t);
    if (next / std::uint64_t(n - t) != out)
      throw infeasible_error("binomial overflows 64 bits");
    out = next / std::uint64_t(t + 1);
  }
  return out;
}

double falling_factorial(double n, int r) {
  double out = 1.0;
  for (int t = 0; t < r; ++t) out *= (n - t);
  return out;
}

double factorial_d(int r) {
  double out = 1.0;
  for (int t = 2; t <= r; ++t) out *= t;
  return out;
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    fn(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

void for_each_composition(int n, int parts, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> comp(parts, 0);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == parts - 1) {
      comp[idx] = left;
      fn(comp);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      comp[idx] = v;
      rec(idx + 1, left - v);
    }
  };
  if (parts <= 0) return;
  rec(0, n);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace hspex
