#include <doctest.h>

#include "helpers.hpp"
#include "lieent/intmat.hpp"

using namespace lieent;
using testutil::imat;

TEST_CASE("exact determinant matches elimination on fixed cases") {
  CHECK(int_det(imat(2, {2, 1, 1, 1})) == 1);
  CHECK(int_det(imat(2, {2, 0, 0, 3})) == 6);
  CHECK(int_det(imat(2, {1, 2, 2, 4})) == 0);
  CHECK(int_det(imat(3, {0, 0, 1, 0, 1, 0, 1, 0, 0})) == -1);
  CHECK(int_det(IntMatrix::identity(5)) == 1);
  CHECK(int_det(IntMatrix()) == 1);
}

TEST_CASE("exact determinant agrees with floating elimination on random lattice maps") {
  auto& gen = testutil::rng();
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 5);
    IntMatrix m = testutil::random_lattice(n, 4, gen);
    const double want = testutil::ref_det(to_real(m));
    CHECK(static_cast<double>(static_cast<long long>(int_det(m))) == doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("integer product and power") {
  IntMatrix shear = imat(2, {1, 1, 0, 1});
  IntMatrix s5 = int_pow(shear, 5);
  CHECK(s5 == imat(2, {1, 5, 0, 1}));
  IntMatrix cat = imat(2, {2, 1, 1, 1});
  CHECK(int_mul(cat, IntMatrix::identity(2)) == cat);
  // cat^2 computed by hand
  CHECK(int_pow(cat, 2) == imat(2, {5, 3, 3, 2}));
  CHECK(int_pow(cat, 0) == IntMatrix::identity(2));
}

TEST_CASE("block diagonal assembly") {
  IntMatrix b = block_diag(imat(1, {2}), imat(2, {0, -1, 1, 0}));
  CHECK(b.dim == 3);
  CHECK(b.at(0, 0) == 2);
  CHECK(b.at(1, 2) == -1);
  CHECK(b.at(2, 1) == 1);
  CHECK(b.at(0, 1) == 0);
  CHECK(int_det(b) == 2);
}

TEST_CASE("characteristic polynomial is exact") {
  // dim 2: x^2 - tr x + det, ascending coefficients
  auto p = char_poly_exact(imat(2, {2, 1, 1, 1}));
  REQUIRE(p.has_value());
  REQUIRE(p->size() == 3);
  CHECK(static_cast<long long>((*p)[0]) == 1);
  CHECK(static_cast<long long>((*p)[1]) == -3);
  CHECK(static_cast<long long>((*p)[2]) == 1);

  auto q = char_poly_exact(imat(3, {1, 0, 0, 0, 2, 0, 0, 0, 3}));
  REQUIRE(q.has_value());
  // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
  CHECK(static_cast<long long>((*q)[0]) == -6);
  CHECK(static_cast<long long>((*q)[1]) == 11);
  CHECK(static_cast<long long>((*q)[2]) == -6);
  CHECK(static_cast<long long>((*q)[3]) == 1);
}

TEST_CASE("cyclotomic factor detection") {
  auto poly_of = [](const IntMatrix& m) { return *char_poly_exact(m); };
  // quarter turn: x^2 + 1
  CHECK(cyclotomic_product(poly_of(imat(2, {0, -1, 1, 0}))));
  // order-3 rotation: x^2 + x + 1
  CHECK(cyclotomic_product(poly_of(imat(2, {0, -1, 1, -1}))));
  // shear: (x - 1)^2
  CHECK(cyclotomic_product(poly_of(imat(2, {1, 1, 0, 1}))));
  CHECK(cyclotomic_product(poly_of(IntMatrix::identity(4))));
  // -identity: (x + 1)^2
  CHECK(cyclotomic_product(poly_of(imat(2, {-1, 0, 0, -1}))));
  // order-6 block times order-4 block, degree 4
  IntMatrix six = imat(2, {1, -1, 1, 0});
  CHECK(cyclotomic_product(poly_of(block_diag(six, imat(2, {0, -1, 1, 0})))));

  CHECK_FALSE(cyclotomic_product(poly_of(imat(1, {2}))));
  CHECK_FALSE(cyclotomic_product(poly_of(imat(2, {2, 1, 1, 1}))));
  CHECK_FALSE(cyclotomic_product(poly_of(imat(2, {2, 0, 0, 3}))));
  // one expanding block next to a rotation still fails the check
  CHECK_FALSE(cyclotomic_product(poly_of(block_diag(imat(1, {-3}), imat(2, {0, -1, 1, 0})))));
}

TEST_CASE("cyclotomic spectrum is equivalent to slow power growth") {
  // On dim-2 lattice maps with |entries| <= 1 a cyclotomic polynomial means
  // every power stays within linear growth (entries <= 24 after 24 steps),
  // while any non-cyclotomic one has spectral radius >= the golden ratio and
  // blows far past that. Sweep the whole family.
  for (std::int64_t a = -1; a <= 1; ++a)
    for (std::int64_t b = -1; b <= 1; ++b)
      for (std::int64_t c = -1; c <= 1; ++c)
        for (std::int64_t d = -1; d <= 1; ++d) {
          IntMatrix m = imat(2, {a, b, c, d});
          if (int_det(m) == 0) continue;
          IntMatrix p = int_pow(m, 24);
          bool bounded = true;
          for (auto v : p.a)
            if (v > 64 || v < -64) bounded = false;
          CHECK(cyclotomic_product(*char_poly_exact(m)) == bounded);
        }
}
