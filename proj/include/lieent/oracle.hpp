#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieent/intmat.hpp"
#include "lieent/linalg.hpp"
#include "lieent/numeric_config.hpp"

namespace lieent {

// Point on the torus R^p / Z^p, coordinates in [0, 1).
using TorusPoint = std::vector<double>;

// Applies x -> t*x mod 1 exactly n times. Coordinates representable as
// dyadic rationals with denominator 2^62 are iterated in exact integer
// arithmetic; anything finer falls back to floating point.
TorusPoint torus_iterate(const IntMatrix& t, const TorusPoint& x, std::int64_t n);

struct EstimateRow {
  int n = 0;
  double epsilon = 0.0;
  std::int64_t separated_count = 0;
  double rate = 0.0;  // log(separated_count) / n
};

struct EntropyEstimate {
  std::vector<EstimateRow> per_n;  // sorted by n
  double extrapolated = 0.0;
  double epsilon_used = 0.0;
  bool wall_budget_exhausted = false;
};

struct EstimateOptions {
  double wall_budget_seconds = 300.0;
  // rows with separated_count above this fraction of the grid are treated as
  // saturated and excluded from the extrapolation window
  double saturation_fraction = 0.4;
  bool parallel = true;
};

// Greedy maximal (n, epsilon)-separated subsets of the uniform grid with
// grid_resolution points per axis, for each n = 1..n_max; extrapolated entropy is
// the least-squares slope of log(count) over the top third of the unsaturated
// n-range. Deterministic for fixed inputs; the torus metric is the max-metric
// with per-coordinate wrap distance min(|d|, 1 - |d|).
EntropyEstimate estimate_entropy(const IntMatrix& t, int n_max, double epsilon, std::int64_t grid_resolution,
                                 const EstimateOptions& opts = {});

// Reference implementation: per-pair orbit tables and direct d_n evaluation,
// no difference-lattice shortcut, no threading. Same outputs, much slower;
// kept small-grid only for cross-checking and benchmarks.
EntropyEstimate estimate_entropy_serial(const IntMatrix& t, int n_max, double epsilon, std::int64_t grid_resolution);

std::string estimate_to_json(const EntropyEstimate& e);
std::string estimate_to_csv(const EntropyEstimate& e);

// Matrix of X -> g X g^{-1} on n x n matrices in the elementary-matrix basis
// E11, E12, ..., Enn (row-major).
Matrix adjoint_matrix(const Matrix& g, const NumericConfig& cfg = default_config());

struct AdjointJordanReport {
  bool ok = false;
  double elliptic_residual = 0.0;
  double hyperbolic_residual = 0.0;
  double unipotent_residual = 0.0;
  double max() const;
};

// Checks that the multiplicative Jordan parts of Ad(g) are the Ad images of
// the parts of g, within 1e-6 relative in Frobenius norm.
AdjointJordanReport verify_adjoint_jordan(const Matrix& g, const NumericConfig& cfg = default_config());

// True iff x commutes with the hyperbolic and unipotent Jordan parts of g,
// within tol * ||x|| * ||part|| each.
bool conjugation_recurrent_membership(const Matrix& g, const Matrix& x, double tol,
                                      const NumericConfig& cfg = default_config());

struct RecurrenceResult {
  bool recurrent = false;
  int best_n = 0;
  double best_distance = 0.0;
  bool divergent = false;
};

// Sweeps n = 1..N looking for ||m^n x - x|| <= delta. The norm is the
// elliptic-invariant Gram norm of m's elliptic part when the factorization
// succeeds, Euclidean otherwise; orbits passing the divergence cutoff are
// reported divergent and non-recurrent.
RecurrenceResult recurrence_check(const Matrix& m, const Vector& x, int big_n, double delta,
                                  const NumericConfig& cfg = default_config());

struct LiYorkeWitness {
  TorusPoint a;
  TorusPoint b;
  TorusPoint c;  // point the pair collides near at the proximal times
  std::vector<std::int64_t> return_times;    // both orbits within delta of their starts, pair still separated
  std::vector<std::int64_t> proximal_times;  // pair distance below delta
  std::vector<double> gaps;                  // pair distance at each proximal time
};

inline constexpr const char* li_yorke_caveat =
    "absence of a witness within the budget is not a proof that no Li-Yorke pair exists";

// Scans candidate pairs (a, b) with a a fixed dyadic point and b offset by a
// near-irrational rational with large odd denominator; orbits are iterated in
// exact integer arithmetic. budget bounds the total number of orbit steps.
std::optional<LiYorkeWitness> li_yorke_search(const IntMatrix& t, std::int64_t budget, double delta);

std::string li_yorke_to_json(const std::optional<LiYorkeWitness>& w, std::int64_t budget, double delta);

}  // namespace lieent
