#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace hspex {

// Binomial coefficient as a double; exact for the desk-scale arguments the
// enumeration code uses, adequate relative precision for the density caps
// where n runs into the millions.
double binom_d(long long n, int k);

// Exact binomial for small arguments; throws infeasible_error on overflow.
std::uint64_t binom_u64(int n, int k);

// Falling factorial (n)_r = n(n-1)...(n-r+1) as a double.
double falling_factorial(double n, int r);

double factorial_d(int r);

// Visit all strictly increasing k-subsets of {0..n-1} in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn);

// Visit all ordered compositions of n into 'parts' nonnegative parts, in
// lexicographic order.
void for_each_composition(int n, int parts, const std::function<void(const std::vector<int>&)>& fn);

// splitmix64; used to derive independent per-restart seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace hspex
