#pragma once

// Test-only reference computations written straight from the problem
// definitions. They share no code with the models under test.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

inline Perm iota_perm(int n, int first) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), first);
  return p;
}

/// Surplus entries per difference row, counted with std::multiset.
inline long costas_cost(const Perm& p) {
  const int n = static_cast<int>(p.size());
  long cost = 0;
  for (int d = 1; d < n; ++d) {
    std::set<int> distinct;
    for (int i = 0; i + d < n; ++i) distinct.insert(p[i + d] - p[i]);
    cost += (n - d) - static_cast<long>(distinct.size());
  }
  return cost;
}

/// Triangle entries touching position i whose value repeats in their row.
inline long costas_projection(const Perm& p, int i) {
  const int n = static_cast<int>(p.size());
  long err = 0;
  for (int d = 1; d < n; ++d) {
    std::multiset<int> row;
    for (int k = 0; k + d < n; ++k) row.insert(p[k + d] - p[k]);
    for (int k = 0; k + d < n; ++k) {
      if ((k == i || k + d == i) && row.count(p[k + d] - p[k]) > 1) ++err;
    }
  }
  return err;
}

inline long all_interval_cost(const Perm& p) {
  std::set<int> seen;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) seen.insert(std::abs(p[k + 1] - p[k]));
  long missing = 0;
  for (long d = 1; d < static_cast<long>(p.size()); ++d) {
    if (!seen.count(static_cast<int>(d))) missing += d * d * d * d * d * d;
  }
  return missing;
}

/// 1 + the best decrease over every exchange of position i (0 if none helps),
/// or 0 when the configuration is already a solution. Brute force.
template <typename CostFn>
long exchange_gain(const Perm& p, int i, CostFn cost) {
  const long current = cost(p);
  if (current == 0) return 0;
  long best = current;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (static_cast<int>(j) == i) continue;
    Perm q = p;
    std::swap(q[static_cast<std::size_t>(i)], q[j]);
    best = std::min(best, cost(q));
  }
  return current - best + 1;
}

inline long partition_cost(const Perm& p) {
  long a = 0, b = 0, a2 = 0, b2 = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const long v = p[i];
    if (i < p.size() / 2) {
      a += v;
      a2 += v * v;
    } else {
      b += v;
      b2 += v * v;
    }
  }
  return std::labs(a - b) + std::labs(a2 - b2);
}

inline long all_interval_projection(const Perm& p, int i) {
  return exchange_gain(p, i, [](const Perm& q) { return all_interval_cost(q); });
}

inline long partition_projection(const Perm& p, int i) {
  return exchange_gain(p, i, [](const Perm& q) { return partition_cost(q); });
}

inline long magic_cost(const Perm& p, int side) {
  const long m = static_cast<long>(side) * (side * side + 1) / 2;
  long cost = 0;
  long diag = 0, anti = 0;
  for (int r = 0; r < side; ++r) {
    long row = 0, col = 0;
    for (int c = 0; c < side; ++c) {
      row += p[r * side + c];
      col += p[c * side + r];
    }
    cost += std::labs(row - m) + std::labs(col - m);
    diag += p[r * side + r];
    anti += p[r * side + side - 1 - r];
  }
  return cost + std::labs(diag - m) + std::labs(anti - m);
}

}  // namespace oracle
