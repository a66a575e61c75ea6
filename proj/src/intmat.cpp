#include "lieent/intmat.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>

namespace lieent {

namespace {

using i128 = __int128;

i128 checked_mul(i128 x, i128 y) {
  i128 r;
  if (__builtin_mul_overflow(x, y, &r)) fail(errc::invalid_argument, "integer overflow in exact arithmetic");
  return r;
}

i128 i128_abs(i128 x) { return x < 0 ? -x : x; }

}  // namespace

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool operator==(const IntMatrix& x, const IntMatrix& y) { return x.dim == y.dim && x.a == y.a; }

IntMatrix int_mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.dim != y.dim) fail(errc::dimension_mismatch, "integer matrix product");
  IntMatrix r(x.dim);
  for (int i = 0; i < x.dim; ++i)
    for (int j = 0; j < x.dim; ++j) {
      i128 s = 0;
      for (int k = 0; k < x.dim; ++k) s += checked_mul(x.at(i, k), y.at(k, j));
      if (s > INT64_MAX || s < INT64_MIN) fail(errc::invalid_argument, "integer overflow in matrix product");
      r.at(i, j) = static_cast<std::int64_t>(s);
    }
  return r;
}

IntMatrix int_pow(const IntMatrix& x, int k) {
  if (k < 0) fail(errc::invalid_argument, "negative matrix power");
  IntMatrix r = IntMatrix::identity(x.dim);
  for (int i = 0; i < k; ++i) r = int_mul(r, x);
  return r;
}

IntMatrix block_diag(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix r(x.dim + y.dim);
  for (int i = 0; i < x.dim; ++i)
    for (int j = 0; j < x.dim; ++j) r.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.dim; ++i)
    for (int j = 0; j < y.dim; ++j) r.at(x.dim + i, x.dim + j) = y.at(i, j);
  return r;
}

// Bareiss fraction-free elimination; all divisions are exact.
__int128 int_det(const IntMatrix& m) {
  const int n = m.dim;
  if (n == 0) return 1;
  std::vector<i128> w(m.a.begin(), m.a.end());
  auto e = [&](int i, int j) -> i128& { return w[static_cast<std::size_t>(i) * n + j]; };
  i128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (e(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (e(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(e(k, j), e(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        e(i, j) = (checked_mul(e(i, j), e(k, k)) - checked_mul(e(i, k), e(k, j))) / prev;
    prev = e(k, k);
  }
  return sign > 0 ? e(n - 1, n - 1) : -e(n - 1, n - 1);
}

Matrix to_real(const IntMatrix& m) {
  Matrix r(m.dim, m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) r(i, j) = static_cast<double>(m.at(i, j));
  return r;
}

// Faddeev-LeVerrier; the trace divisions are exact over the integers.
std::optional<std::vector<__int128>> char_poly_exact(const IntMatrix& m) {
  const int n = m.dim;
  if (n == 0) return std::vector<i128>{1};
  long double mx = 0;
  for (auto v : m.a) mx = std::max<long double>(mx, std::abs((long double)v));
  long double bound = 1;
  for (int i = 1; i <= n; ++i) bound *= (mx + 1) * n;
  if (bound > 1e33L) return std::nullopt;

  std::vector<i128> M(m.a.begin(), m.a.end());  // running Faddeev matrix
  std::vector<i128> c(static_cast<std::size_t>(n) + 1, 0);
  c[n] = 1;
  auto mat = [&](std::vector<i128>& w, int i, int j) -> i128& { return w[static_cast<std::size_t>(i) * n + j]; };
  std::vector<i128> A(m.a.begin(), m.a.end());
  for (int k = 1; k <= n; ++k) {
    i128 tr = 0;
    for (int i = 0; i < n; ++i) tr += mat(M, i, i);
    i128 ck = -tr / k;
    c[n - k] = ck;
    if (k == n) break;
    for (int i = 0; i < n; ++i) mat(M, i, i) += ck;
    std::vector<i128> N(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        i128 s = 0;
        for (int t = 0; t < n; ++t) s += checked_mul(mat(A, i, t), mat(M, t, j));
        mat(N, i, j) = s;
      }
    M.swap(N);
  }
  return c;
}

namespace {

// integer polynomials, ascending coefficients
using Poly = std::vector<i128>;

// exact division; empty when the division leaves a remainder
std::optional<Poly> poly_div_exact(Poly num, const Poly& den) {
  if (num.size() < den.size()) return std::nullopt;
  Poly q(num.size() - den.size() + 1, 0);
  const i128 lead = den.back();
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    i128 top = num[i + den.size() - 1];
    if (top % lead != 0) return std::nullopt;
    i128 f = top / lead;
    q[i] = f;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= checked_mul(f, den[j]);
  }
  for (i128 v : num)
    if (v != 0) return std::nullopt;
  return q;
}

// Cyclotomic polynomials for every order whose totient is at most 6.
const std::vector<Poly>& low_order_cyclotomics() {
  static const std::vector<Poly> polys = [] {
    const std::array<int, 13> orders{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 18};
    std::vector<Poly> by_order(19);
    for (int n = 1; n <= 18; ++n) {
      Poly xn(static_cast<std::size_t>(n) + 1, 0);
      xn[0] = -1;
      xn[n] = 1;
      for (int d = 1; d < n; ++d)
        if (n % d == 0 && !by_order[d].empty()) xn = *poly_div_exact(xn, by_order[d]);
      by_order[n] = xn;
    }
    std::vector<Poly> out;
    for (int n : orders) out.push_back(by_order[n]);
    return out;
  }();
  return polys;
}

}  // namespace

bool cyclotomic_product(const std::vector<__int128>& poly) {
  if (poly.empty() || poly.back() != 1) fail(errc::invalid_argument, "cyclotomic check needs a monic polynomial");
  if (poly.size() > 7) fail(errc::invalid_argument, "cyclotomic check implemented for degree <= 6");
  Poly p = poly;
  bool progress = true;
  while (p.size() > 1 && progress) {
    progress = false;
    for (const Poly& phi : low_order_cyclotomics()) {
      if (phi.size() > p.size()) continue;
      if (auto q = poly_div_exact(p, phi)) {
        p = *q;
        progress = true;
        break;
      }
    }
  }
  return p.size() == 1 && i128_abs(p[0]) == 1;
}

}  // namespace lieent
