#include "lieent/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

namespace lieent {

namespace {

// canonical order: descending modulus, then real part, then imaginary part
bool canonical_less(const std::complex<double>& x, const std::complex<double>& y) {
  const double ax = std::abs(x), ay = std::abs(y);
  if (ax != ay) return ax > ay;
  if (x.real() != y.real()) return x.real() > y.real();
  return x.imag() > y.imag();
}

}  // namespace

int Spectrum::total_multiplicity() const {
  int t = 0;
  for (const auto& e : entries) t += e.multiplicity;
  return t;
}

double Spectrum::spectral_radius() const {
  double r = 0;
  for (const auto& e : entries) r = std::max(r, std::abs(e.value));
  return r;
}

Matrix Subspace::projector() const {
  if (dim() == 0) return Matrix::Zero(ambient_dim, ambient_dim);
  return basis * basis.transpose();
}

void check_square(const Matrix& m) {
  if (m.rows() != m.cols()) fail(errc::dimension_mismatch, "matrix is not square");
}

void check_finite(const Matrix& m) {
  if (!m.allFinite()) fail(errc::invalid_argument, "matrix has non-finite entries");
}

double frobenius(const Matrix& m) { return m.norm(); }

Spectrum eigenvalues(const Matrix& m, const NumericConfig& cfg) {
  check_square(m);
  check_finite(m);
  const int n = static_cast<int>(m.rows());
  Spectrum s;
  if (n == 0) return s;

  Eigen::EigenSolver<Matrix> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) fail(errc::non_convergence, "eigenvalue iteration did not converge");

  std::vector<std::complex<double>> vals(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(vals.begin(), vals.end(), canonical_less);

  // merge numerically identical values into multiplicities
  const double merge = cfg.spectrum_group_tol * (1.0 + frobenius(m));
  std::vector<std::vector<std::complex<double>>> groups;
  for (const auto& v : vals) {
    if (!groups.empty() && std::abs(v - groups.back().back()) <= merge)
      groups.back().push_back(v);
    else
      groups.push_back({v});
  }
  for (const auto& g : groups) {
    std::complex<double> mean(0, 0);
    for (const auto& v : g) mean += v;
    mean /= static_cast<double>(g.size());
    if (std::abs(mean.imag()) == 0.0) mean.imag(0.0);  // normalize -0
    s.entries.push_back({mean, static_cast<int>(g.size())});
  }
  std::sort(s.entries.begin(), s.entries.end(),
            [](const Spectrum::Entry& a, const Spectrum::Entry& b) { return canonical_less(a.value, b.value); });

  s.residual_bound = 20.0 * n * std::numeric_limits<double>::epsilon() * frobenius(m);
  return s;
}

std::vector<std::complex<double>> eigenvalue_list(const Spectrum& s) {
  std::vector<std::complex<double>> out;
  for (const auto& e : s.entries)
    for (int i = 0; i < e.multiplicity; ++i) out.push_back(e.value);
  return out;
}

Subspace null_space(const Matrix& m, double tol, const NumericConfig& cfg) {
  check_finite(m);
  const int cols = static_cast<int>(m.cols());
  if (cols == 0) return Subspace{0, Matrix(0, 0)};
  if (m.rows() == 0) return full_space(cols);

  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double scale = (smax <= cfg.vanish_floor) ? 1.0 : smax;
  const double cutoff = tol * scale;

  std::vector<int> keep;
  for (int i = 0; i < cols; ++i) {
    const double s = i < sv.size() ? sv(i) : 0.0;  // columns past min(rows,cols) carry zero singular values
    if (s <= cutoff) keep.push_back(i);
  }
  Subspace out;
  out.ambient_dim = cols;
  out.basis = Matrix(cols, static_cast<int>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) out.basis.col(static_cast<int>(j)) = svd.matrixV().col(keep[j]);
  return out;
}

Subspace full_space(int n) {
  Subspace s;
  s.ambient_dim = n;
  s.basis = Matrix::Identity(n, n);
  return s;
}

Subspace intersect(const Subspace& a, const Subspace& b, const NumericConfig& cfg) {
  if (a.ambient_dim != b.ambient_dim) fail(errc::dimension_mismatch, "subspaces live in different ambient spaces");
  const int n = a.ambient_dim;
  Matrix stacked(2 * n, n);
  stacked.topRows(n) = Matrix::Identity(n, n) - a.projector();
  stacked.bottomRows(n) = Matrix::Identity(n, n) - b.projector();
  return null_space(stacked, cfg.rel_tol, cfg);
}

Vector matrix_power_apply(const Matrix& m, const Vector& x, long n) {
  check_square(m);
  if (m.rows() != x.size()) fail(errc::dimension_mismatch, "vector does not match matrix dimension");
  if (n < 0) fail(errc::invalid_argument, "negative power");
  Vector y = x;
  for (long i = 0; i < n; ++i) y = m * y;
  return y;
}

double determinant(const Matrix& m) {
  check_square(m);
  if (m.rows() == 0) return 1.0;
  return m.partialPivLu().determinant();
}

// Scale-invariant regularity test: smallest singular value against the
// largest. A raw determinant threshold degrades with dimension (det of an
// adjoint lift is 1 while any norm power explodes), so the singular-value
// ratio is the workable form of the "numerically invertible" precondition.
bool is_invertible(const Matrix& m, const NumericConfig& cfg) {
  check_square(m);
  const int n = static_cast<int>(m.rows());
  if (n == 0) return true;
  check_finite(m);
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv(0) == 0.0) return false;
  (void)cfg;
  return sv(n - 1) > 1e-12 * sv(0);
}

}  // namespace lieent
