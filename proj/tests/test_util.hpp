// Shared helpers for the unit tests.
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "qeuler/qseries.hpp"

namespace qeuler::testing {

inline QSeries poly(std::vector<long long> c, int order) { return QSeries::polynomial(c, order); }

inline QSeries random_series(std::mt19937& rng, int order, bool unit = false) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<long long> c(order + 1);
  for (auto& x : c) x = d(rng);
  if (unit && c[0] == 0) c[0] = 1;
  return QSeries::polynomial(c, order);
}

inline std::vector<int> random_perm(std::mt19937& rng, int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

}  // namespace qeuler::testing
