#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "lieent/errors.hpp"
#include "lieent/numeric_config.hpp"

namespace lieent {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;

// Eigenvalue multiset in the canonical order: descending modulus, then
// descending real part, then descending imaginary part. Numerically equal
// values are merged into one entry with a multiplicity.
struct Spectrum {
  struct Entry {
    std::complex<double> value;
    int multiplicity = 1;
  };
  std::vector<Entry> entries;
  // backward-error style bound on the computed eigenvalues
  double residual_bound = 0.0;

  int total_multiplicity() const;
  double spectral_radius() const;
};

// Linear subspace of R^n, held as an orthonormal column basis (k may be 0).
struct Subspace {
  int ambient_dim = 0;
  Matrix basis;

  int dim() const { return static_cast<int>(basis.cols()); }
  Matrix projector() const;
};

void check_square(const Matrix& m);
void check_finite(const Matrix& m);

Spectrum eigenvalues(const Matrix& m, const NumericConfig& cfg = default_config());

// multiplicity-expanded list in the canonical order
std::vector<std::complex<double>> eigenvalue_list(const Spectrum& s);

// Right null space. The cutoff keeps singular values <= tol * s_max; when the
// whole profile sits below cfg.vanish_floor the matrix counts as zero and the
// scale falls back to 1, so roundoff-sized residues of an exact zero matrix
// still yield the full space.
Subspace null_space(const Matrix& m, double tol, const NumericConfig& cfg = default_config());

Subspace full_space(int n);

// Intersection via the null space of the stacked complement projectors.
Subspace intersect(const Subspace& a, const Subspace& b, const NumericConfig& cfg = default_config());

Vector matrix_power_apply(const Matrix& m, const Vector& x, long n);

double frobenius(const Matrix& m);

// LU-based determinant (partial pivoting)
double determinant(const Matrix& m);

bool is_invertible(const Matrix& m, const NumericConfig& cfg = default_config());

}  // namespace lieent
