#pragma once

#include <complex>
#include <string>
#include <vector>

#include "lieent/group.hpp"
#include "lieent/intmat.hpp"
#include "lieent/linalg.hpp"

namespace lieent {

// One expanding eigenvalue instance; an eigenvalue of multiplicity m appears
// m times so that the certificate value is the plain sum of log_modulus.
struct Contribution {
  double re = 0.0;
  double im = 0.0;
  double modulus = 0.0;
  double log_modulus = 0.0;  // in the certificate's log base
};

struct TraceStep {
  std::string rule;
  std::string source_ref;
  std::string detail;
};

// Entropy value plus the full audit trail: which reduction rules fired, in
// application order, and which eigenvalues contribute.
struct EntropyCertificate {
  double value = 0.0;
  std::string log_base = "e";
  bool conjectural = false;
  std::vector<Contribution> contributions;
  std::vector<TraceStep> trace;
};

EntropyCertificate bowen_formula(const Matrix& m, const NumericConfig& cfg = default_config());

// exact_cyclotomic: for dim <= 6, decide entropy == 0 exactly via the
// characteristic polynomial instead of the numeric modulus band.
EntropyCertificate torus_entropy(const IntMatrix& t, const NumericConfig& cfg = default_config(),
                                 bool exact_cyclotomic = false);
EntropyCertificate abelian_entropy(const IntMatrix& t, const Matrix& b, const Matrix& s,
                                   const NumericConfig& cfg = default_config(), bool exact_cyclotomic = false);
EntropyCertificate nilpotent_entropy(const IntMatrix& toral_map, const NumericConfig& cfg = default_config(),
                                     bool exact_cyclotomic = false);
EntropyCertificate semisimple_entropy(const Matrix& g, ConjugationKind kind, int k,
                                      const NumericConfig& cfg = default_config());
EntropyCertificate reductive_entropy(const IntMatrix& center_t, const Matrix& center_b, const Matrix& center_s,
                                     const Matrix& derived_g, bool pi_proper,
                                     const NumericConfig& cfg = default_config(), bool exact_cyclotomic = false);
EntropyCertificate product_entropy(const EntropyCertificate& a, const EntropyCertificate& b);
EntropyCertificate power_entropy(const EntropyCertificate& c, int k);
EntropyCertificate conjectural_general_entropy(const IntMatrix& t_r_prime, const IntMatrix& t_r_mod_r_prime,
                                               const NumericConfig& cfg = default_config(),
                                               bool exact_cyclotomic = false);

// Validates, then dispatches to the variant rule. Throws VALIDATION_FAILED
// wrapping the report when validation finds an error.
EntropyCertificate compute(const GroupDescriptor& g, const EndoDescriptor& e,
                           const NumericConfig& cfg = default_config(), bool exact_cyclotomic = false);

// Convert between natural log and base 2 ("e" or "2").
EntropyCertificate rebase_certificate(const EntropyCertificate& c, const std::string& base);

std::string certificate_to_json(const EntropyCertificate& c);

}  // namespace lieent
