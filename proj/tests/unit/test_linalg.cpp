#include <doctest.h>

#include <cmath>
#include <complex>

#include "helpers.hpp"
#include "lieent/linalg.hpp"

using namespace lieent;
using testutil::mat;

TEST_CASE("spectrum of the standard hyperbolic toral map") {
  // roots of x^2 - 3x + 1 by the quadratic formula
  const double lo = (3.0 - std::sqrt(5.0)) / 2.0;
  const double hi = (3.0 + std::sqrt(5.0)) / 2.0;
  Spectrum s = eigenvalues(mat(2, {2, 1, 1, 1}));
  REQUIRE(s.entries.size() == 2);
  CHECK(s.entries[0].value.real() == doctest::Approx(hi).epsilon(1e-12));
  CHECK(s.entries[0].value.imag() == 0.0);
  CHECK(s.entries[1].value.real() == doctest::Approx(lo).epsilon(1e-12));
  CHECK(s.total_multiplicity() == 2);
  CHECK(s.spectral_radius() == doctest::Approx(hi).epsilon(1e-12));
}

TEST_CASE("spectrum ordering is by modulus, then real, then imaginary part") {
  Spectrum s = eigenvalues(mat(3, {3, 0, 0, 0, -5, 0, 0, 0, 2}));
  REQUIRE(s.entries.size() == 3);
  CHECK(s.entries[0].value.real() == doctest::Approx(-5.0));
  CHECK(s.entries[1].value.real() == doctest::Approx(3.0));
  CHECK(s.entries[2].value.real() == doctest::Approx(2.0));

  Spectrum r = eigenvalues(mat(2, {0, -1, 1, 0}));
  REQUIRE(r.entries.size() == 2);
  CHECK(r.entries[0].value.imag() == doctest::Approx(1.0));
  CHECK(r.entries[1].value.imag() == doctest::Approx(-1.0));
  CHECK(r.entries[0].value.real() == doctest::Approx(0.0));
}

TEST_CASE("repeated eigenvalues merge into multiplicities") {
  Spectrum s = eigenvalues(Matrix::Identity(2, 2));
  REQUIRE(s.entries.size() == 1);
  CHECK(s.entries[0].multiplicity == 2);
  CHECK(s.entries[0].value.real() == doctest::Approx(1.0));

  // defective eigenvalue: computed pair scatters but must merge back
  Spectrum t = eigenvalues(mat(2, {1, 1, 0, 1}));
  REQUIRE(t.entries.size() == 1);
  CHECK(t.entries[0].multiplicity == 2);
  CHECK(t.entries[0].value.real() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("eigenvalue products and sums match determinant and trace") {
  auto& gen = testutil::rng();
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 6);
    Matrix m = testutil::random_conditioned(n, 100.0, gen);
    auto vals = eigenvalue_list(eigenvalues(m));
    REQUIRE(static_cast<int>(vals.size()) == n);
    std::complex<double> prod(1, 0), sum(0, 0);
    for (auto v : vals) {
      prod *= v;
      sum += v;
    }
    const double scale = std::max(1.0, std::abs(testutil::ref_det(m)));
    CHECK(std::abs(prod - std::complex<double>(testutil::ref_det(m), 0)) <= 1e-8 * scale);
    CHECK(std::abs(sum - std::complex<double>(m.trace(), 0)) <= 1e-8 * std::max(1.0, std::abs(m.trace())));
  }
}

TEST_CASE("conjugate eigenvalues appear symmetrically") {
  auto& gen = testutil::rng();
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 4);
    Matrix m = testutil::random_conditioned(n, 50.0, gen);
    auto vals = eigenvalue_list(eigenvalues(m));
    for (auto v : vals) {
      if (v.imag() == 0.0) continue;
      bool found = false;
      for (auto w : vals)
        if (std::abs(w - std::conj(v)) <= 1e-9 * (1 + std::abs(v))) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("null space on fixed cases") {
  Subspace z = null_space(Matrix::Zero(3, 3), 1e-9);
  CHECK(z.dim() == 3);
  CHECK((z.projector() - Matrix::Identity(3, 3)).norm() <= 1e-12);

  CHECK(null_space(Matrix::Identity(4, 4), 1e-9).dim() == 0);

  Subspace s = null_space(mat(2, {0, 1, 0, 0}), 1e-9);
  REQUIRE(s.dim() == 1);
  Matrix want = Matrix::Zero(2, 2);
  want(0, 0) = 1.0;
  CHECK((s.projector() - want).norm() <= 1e-12);
}

TEST_CASE("null space of a roundoff-sized residue of zero is the full space") {
  Matrix m = Matrix::Constant(3, 3, 1e-14);
  CHECK(null_space(m, 1e-9).dim() == 3);
}

TEST_CASE("rank-nullity on structured cases") {
  auto& gen = testutil::rng();
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 4);
    Matrix m = testutil::random_conditioned(n, 100.0, gen);
    CHECK(null_space(m, 1e-9).dim() == 0);
    // rank-one outer product
    Vector u = m.col(0), v = m.col(n - 1);
    CHECK(null_space(Matrix(u * v.transpose()), 1e-9).dim() == n - 1);
  }
}

TEST_CASE("subspace intersection") {
  Matrix e12(3, 2), e13(3, 2);
  e12.setZero();
  e13.setZero();
  e12(0, 0) = 1;
  e12(1, 1) = 1;
  e13(0, 0) = 1;
  e13(2, 1) = 1;
  Subspace a{3, e12}, b{3, e13};
  Subspace c = intersect(a, b);
  REQUIRE(c.dim() == 1);
  Matrix want = Matrix::Zero(3, 3);
  want(0, 0) = 1;
  CHECK((c.projector() - want).norm() <= 1e-9);

  Subspace full = full_space(3);
  Subspace cb = intersect(full, b);
  CHECK(cb.dim() == 2);
  CHECK((cb.projector() - b.projector()).norm() <= 1e-9);

  // orthogonal lines intersect trivially
  Matrix ex(2, 1), ey(2, 1);
  ex << 1, 0;
  ey << 0, 1;
  CHECK(intersect(Subspace{2, ex}, Subspace{2, ey}).dim() == 0);

  // dimension bound dim(a) + dim(b) - n
  CHECK(c.dim() >= a.dim() + b.dim() - 3);
}

TEST_CASE("matrix power application") {
  Vector x(2);
  x << 1, 1;
  Vector y = matrix_power_apply(mat(2, {2, 0, 0, 3}), x, 5);
  CHECK(y(0) == doctest::Approx(32.0));
  CHECK(y(1) == doctest::Approx(243.0));
  Vector s = matrix_power_apply(mat(2, {1, 1, 0, 1}), x, 7);
  CHECK(s(0) == doctest::Approx(8.0));
  CHECK(s(1) == doctest::Approx(1.0));
  CHECK((matrix_power_apply(mat(2, {5, 1, 2, 5}), x, 0) - x).norm() == 0.0);
}

TEST_CASE("determinant and invertibility") {
  auto& gen = testutil::rng();
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 5);
    Matrix m = testutil::random_conditioned(n, 1000.0, gen);
    CHECK(determinant(m) == doctest::Approx(testutil::ref_det(m)).epsilon(1e-8));
    CHECK(is_invertible(m));
  }
  CHECK_FALSE(is_invertible(mat(2, {1, 1, 1, 1})));
  CHECK_FALSE(is_invertible(Matrix::Zero(2, 2)));
}

TEST_CASE("dimension and finiteness guards") {
  Matrix bad(2, 3);
  bad.setZero();
  CHECK_THROWS_AS(eigenvalues(bad), Error);
  Matrix inf = Matrix::Identity(2, 2);
  inf(0, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(eigenvalues(inf), Error);
  Vector x(3);
  x.setZero();
  CHECK_THROWS_AS(matrix_power_apply(Matrix::Identity(2, 2), x, 1), Error);
}
