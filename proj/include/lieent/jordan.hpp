#pragma once

#include "lieent/linalg.hpp"

namespace lieent {

// Commuting factorization source = elliptic * hyperbolic * unipotent:
// elliptic semisimple with unit-modulus spectrum, hyperbolic semisimple with
// positive real spectrum, unipotent with all eigenvalues one.
struct JordanTriple {
  Matrix source;
  Matrix elliptic;
  Matrix hyperbolic;
  Matrix unipotent;
};

// Residuals of the defining properties, used by the factorization itself and
// by the verification suites.
struct JordanResiduals {
  double product = 0.0;      // |E H U - source| / |source|
  double commute = 0.0;      // worst pairwise commutator, relative
  double elliptic_modulus = 0.0;
  double hyperbolic_real = 0.0;  // worst |Im| or negativity in the H spectrum
  double nilpotent = 0.0;    // |(U - I)^dim|, relative to max(1, |U - I|)
  double max() const;
};

JordanResiduals jordan_residuals(const JordanTriple& t, const NumericConfig& cfg = default_config());

JordanTriple multiplicative_jordan(const Matrix& m, const NumericConfig& cfg = default_config());

// Joint fixed space of the hyperbolic and unipotent factors; the restriction
// of m to it has unit-modulus spectrum.
Subspace recurrent_subspace(const Matrix& m, const NumericConfig& cfg = default_config());

// Symmetric positive definite P with e^T P e = P for a semisimple e whose
// spectrum lies on the unit circle; built from the complex eigenbasis.
Matrix elliptic_invariant_gram(const Matrix& e, const NumericConfig& cfg = default_config());

}  // namespace lieent
