#pragma once

#include <algorithm>
#include <boost/rational.hpp>
#include <numeric>
#include <vector>

#include "twistcert/int_matrix.h"

namespace twistcert::testing {

// Leibniz expansion; only for small dimensions.
inline long long leibniz_det(const IntMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    long long term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Gaussian elimination with partial pivoting over the rationals.
inline boost::rational<long long> rational_det(const IntMatrix& m) {
  using Q = boost::rational<long long>;
  const std::size_t n = m.dim();
  std::vector<std::vector<Q>> a(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Q(static_cast<long long>(m(i, j)));
  }
  Q det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].numerator() == 0) ++pivot;
    if (pivot == n) return Q(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Q f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

// Plain triple loop; the matrices in the tests stay small.
inline IntMatrix naive_product(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      long long s = 0;
      for (std::size_t k = 0; k < a.dim(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  }
  return c;
}

}  // namespace twistcert::testing
