#pragma once

namespace lieent {

// Every tolerance used by the library lives in this record; operations take it
// as a trailing parameter so nothing numeric is hard-coded at a call site.
struct NumericConfig {
  // generic relative tolerance (null spaces, invertibility, comparisons)
  double rel_tol = 1e-9;
  // |lambda| within this band of 1 is treated as modulus exactly one
  double modulus_band = 1e-9;
  // eigenvalue clustering for the Jordan factorization, relative to the
  // spectral scale 1 + max |lambda|
  double cluster_tol = 1e-7;
  // clustering widens by this factor when a factorization fails its own checks
  double cluster_escalation = 10.0;
  int cluster_max_rounds = 6;
  // spectral projectors larger than this mean the clustering split a single
  // defective eigenvalue; the round is rejected and clustering widens
  double projector_cap = 1e8;
  // |E*H*U - source| relative to |source|
  double triple_product_tol = 1e-8;
  // pairwise commutators of the three factors, relative
  double commute_tol = 1e-8;
  // diagonalization residual allowed for a semisimple factor
  double semisimple_tol = 1e-7;
  // |(U - I)^dim| for the unipotent factor
  double nilpotent_tol = 1e-7;
  // residual allowed in g^T P g = P for an invariant Gram matrix
  double gram_tol = 1e-7;
  // a singular-value profile whose largest entry is below this floor counts
  // as identically zero when a null-space threshold is formed
  double vanish_floor = 1e-10;
  // orbit norm beyond which an iteration is declared divergent
  double divergence_cutoff = 1e12;
  // spectrum multiplicities merge below this, relative to 1 + |m|
  double spectrum_group_tol = 1e-7;
};

inline const NumericConfig& default_config() {
  static const NumericConfig c;
  return c;
}

}  // namespace lieent
