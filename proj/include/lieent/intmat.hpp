#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lieent/linalg.hpp"

namespace lieent {

// Square integer matrix, row-major. dim 0 is the empty lattice map (the
// identity of the trivial torus); user-facing payloads require dim >= 1,
// derived toral components may be empty.
struct IntMatrix {
  int dim = 0;
  std::vector<std::int64_t> a;

  IntMatrix() = default;
  explicit IntMatrix(int n) : dim(n), a(static_cast<std::size_t>(n) * n, 0) {}

  std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }
  std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * dim + j]; }

  static IntMatrix identity(int n);
};

bool operator==(const IntMatrix& x, const IntMatrix& y);

IntMatrix int_mul(const IntMatrix& x, const IntMatrix& y);
IntMatrix int_pow(const IntMatrix& x, int k);
IntMatrix block_diag(const IntMatrix& x, const IntMatrix& y);

// Exact fraction-free determinant (Bareiss). Throws on overflow of the
// 128-bit intermediates; lattice maps in scope are far below that.
__int128 int_det(const IntMatrix& m);

Matrix to_real(const IntMatrix& m);

// Exact characteristic polynomial det(xI - m), coefficients ascending.
// Empty when the a-priori coefficient bound does not fit 128 bits.
std::optional<std::vector<__int128>> char_poly_exact(const IntMatrix& m);

// Whether a monic integer polynomial of degree <= 6 is a product of
// cyclotomic polynomials, i.e. all of its roots are roots of unity.
bool cyclotomic_product(const std::vector<__int128>& poly);

}  // namespace lieent
