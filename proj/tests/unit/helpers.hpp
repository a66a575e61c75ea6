#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "lieent/intmat.hpp"
#include "lieent/linalg.hpp"

namespace testutil {

inline lieent::Matrix mat(int n, std::initializer_list<double> vals) {
  lieent::Matrix m(n, n);
  int k = 0;
  for (double v : vals) {
    m(k / n, k % n) = v;
    ++k;
  }
  return m;
}

inline lieent::IntMatrix imat(int n, std::initializer_list<std::int64_t> vals) {
  lieent::IntMatrix m(n);
  int k = 0;
  for (auto v : vals) {
    m.a[k++] = v;
  }
  return m;
}

// Plain Gaussian-elimination determinant, kept independent of the library's
// LU and eigenvalue paths on purpose.
inline double ref_det(lieent::Matrix m) {
  const int n = static_cast<int>(m.rows());
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > std::abs(m(p, k))) p = i;
    if (m(p, k) == 0.0) return 0.0;
    if (p != k) {
      m.row(p).swap(m.row(k));
      det = -det;
    }
    det *= m(k, k);
    for (int i = k + 1; i < n; ++i) {
      const double f = m(i, k) / m(k, k);
      for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed1234u);
  return gen;
}

inline lieent::Matrix random_orthogonal(int n, std::mt19937& gen) {
  std::normal_distribution<double> g(0.0, 1.0);
  lieent::Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = g(gen);
  Eigen::HouseholderQR<lieent::Matrix> qr(a);
  lieent::Matrix q = qr.householderQ();
  lieent::Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i)
    if (r(i, i) < 0) q.col(i) = -q.col(i);
  return q;
}

// random invertible matrix with condition number at most cond_cap
inline lieent::Matrix random_conditioned(int n, double cond_cap, std::mt19937& gen) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double span = std::log(cond_cap);
  lieent::Matrix d = lieent::Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = std::exp(u(gen) * span - span / 2);
  return random_orthogonal(n, gen) * d * random_orthogonal(n, gen);
}

inline lieent::IntMatrix random_lattice(int n, int entry_cap, std::mt19937& gen) {
  std::uniform_int_distribution<int> u(-entry_cap, entry_cap);
  while (true) {
    lieent::IntMatrix m(n);
    for (auto& v : m.a) v = u(gen);
    if (lieent::int_det(m) != 0) return m;
  }
}

}  // namespace testutil
