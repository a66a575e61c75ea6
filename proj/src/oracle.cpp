#include "lieent/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <json.hpp>

#include "lieent/errors.hpp"
#include "lieent/jordan.hpp"

namespace lieent {

namespace {

constexpr int dyadic_den_log = 62;

std::vector<std::int64_t> apply_mod(const IntMatrix& t, const std::vector<std::int64_t>& v, std::int64_t m) {
  const int p = t.dim;
  std::vector<std::int64_t> out(p, 0);
  for (int i = 0; i < p; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < p; ++j) acc += t.at(i, j) * v[j];
    acc %= m;
    if (acc < 0) acc += m;
    out[i] = acc;
  }
  return out;
}

std::int64_t wrap_int(std::int64_t d, std::int64_t m) {
  d %= m;
  if (d < 0) d += m;
  return std::min(d, m - d);
}

// exact mod-m orbit steps accumulate p products of entry * residue in int64
void check_orbit_entries(const IntMatrix& t, std::int64_t m) {
  std::int64_t emax = 0;
  for (const auto& v : t.a) emax = std::max(emax, std::abs(v));
  const std::int64_t limit = (std::int64_t{1} << 62) / (m * std::max(1, t.dim));
  if (emax > limit) fail(errc::invalid_argument, "lattice map entries too large for exact orbit arithmetic");
}

bool dyadic_lift(const TorusPoint& x, std::vector<std::int64_t>& num) {
  num.clear();
  for (double c : x) {
    const double scaled = std::ldexp(c, dyadic_den_log);
    if (!(scaled >= 0.0) || scaled != std::floor(scaled) || scaled >= std::ldexp(1.0, dyadic_den_log)) return false;
    num.push_back(static_cast<std::int64_t>(scaled));
  }
  return true;
}

}  // namespace

TorusPoint torus_iterate(const IntMatrix& t, const TorusPoint& x, std::int64_t n) {
  if (static_cast<int>(x.size()) != t.dim) fail(errc::dimension_mismatch, "point dimension does not match the map");
  if (n < 0) fail(errc::invalid_argument, "iteration count must be nonnegative");
  TorusPoint cur = x;
  for (auto& c : cur) {
    if (!std::isfinite(c)) fail(errc::invalid_argument, "point has a non finite coordinate");
    c -= std::floor(c);
  }
  if (n == 0 || t.dim == 0) return cur;

  std::vector<std::int64_t> num;
  if (dyadic_lift(cur, num)) {
    const std::int64_t den = std::int64_t{1} << dyadic_den_log;
    const int p = t.dim;
    for (std::int64_t step = 0; step < n; ++step) {
      std::vector<std::int64_t> next(p, 0);
      for (int i = 0; i < p; ++i) {
        unsigned __int128 acc = 0;
        for (int j = 0; j < p; ++j) {
          __int128 term = static_cast<__int128>(t.at(i, j)) * num[j];
          term %= den;
          if (term < 0) term += den;
          acc += static_cast<unsigned __int128>(term);
        }
        next[i] = static_cast<std::int64_t>(acc % static_cast<unsigned __int128>(den));
      }
      num = std::move(next);
    }
    for (int i = 0; i < p; ++i) cur[i] = std::ldexp(static_cast<double>(num[i]), -dyadic_den_log);
    return cur;
  }

  for (std::int64_t step = 0; step < n; ++step) {
    TorusPoint next(t.dim, 0.0);
    for (int i = 0; i < t.dim; ++i) {
      double acc = 0.0;
      for (int j = 0; j < t.dim; ++j) acc += static_cast<double>(t.at(i, j)) * cur[j];
      next[i] = acc - std::floor(acc);
    }
    cur = std::move(next);
  }
  return cur;
}

// ---------------------------------------------------------------------------
// separated-set entropy estimation
//
// Grid orbits are translation covariant: T^i(x) - T^i(y) = T^i(x - y) mod R,
// so the level-n conflict relation "d_n(x, y) <= epsilon" depends only on the
// difference x - y, and any conflicting difference already lies in the box of
// per-coordinate wrap distance <= floor(epsilon * R) at i = 0. The kernel
// evolves that box once, then each greedy pass scans the surviving conflict
// offsets against the accepted bitmap.

namespace {

struct GridGeom {
  int p = 0;
  std::int64_t r = 0;
  std::int64_t total = 0;
  std::vector<std::int64_t> stride;
};

GridGeom make_geom(int p, std::int64_t r) {
  GridGeom g;
  g.p = p;
  g.r = r;
  g.total = 1;
  for (int i = 0; i < p; ++i) {
    if (g.total > (std::int64_t{1} << 28) / r) fail(errc::invalid_argument, "grid has too many points");
    g.total *= r;
  }
  g.stride.assign(p, 1);
  for (int i = p - 2; i >= 0; --i) g.stride[i] = g.stride[i + 1] * r;
  return g;
}

// life(delta) = number of consecutive iterates T^i(delta) staying inside the
// epsilon box; a difference conflicts at level n iff life >= n
struct ConflictTable {
  std::int64_t e = 0;
  std::int64_t side = 0;
  std::int64_t box_total = 0;
  std::vector<std::vector<std::int32_t>> offsets;  // per n: flat signed offsets, p per entry
};

ConflictTable build_conflicts(const IntMatrix& t, const GridGeom& g, std::int64_t e, int n_max, bool parallel) {
  ConflictTable ct;
  ct.e = e;
  ct.side = 2 * e + 1;
  ct.box_total = 1;
  for (int i = 0; i < g.p; ++i) {
    if (ct.box_total > (std::int64_t{1} << 24) / ct.side)
      fail(errc::invalid_argument, "epsilon ball covers too many grid points");
    ct.box_total *= ct.side;
  }
  if (ct.box_total > (std::int64_t{1} << 26) / n_max)
    fail(errc::invalid_argument, "n_max too large for this epsilon box");

  std::vector<std::int32_t> life(static_cast<size_t>(ct.box_total), 0);
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t bi = 0; bi < ct.box_total; ++bi) {
    std::vector<std::int64_t> delta(g.p);
    std::int64_t rest = bi;
    bool zero = true;
    for (int i = g.p - 1; i >= 0; --i) {
      const std::int64_t off = rest % ct.side - ct.e;
      rest /= ct.side;
      delta[i] = off < 0 ? off + g.r : off;
      zero = zero && off == 0;
    }
    if (zero) continue;  // a point never conflicts with itself
    int steps = 0;
    std::vector<std::int64_t> cur = delta;
    while (steps < n_max) {
      std::int64_t w = 0;
      for (int i = 0; i < g.p; ++i) w = std::max(w, wrap_int(cur[i], g.r));
      if (w > e) break;
      ++steps;
      if (steps < n_max) cur = apply_mod(t, cur, g.r);
    }
    life[static_cast<size_t>(bi)] = steps;
  }

  // enumerate box elements by ascending sup-norm radius so conflict scans
  // meet near neighbours first; ties keep box order (deterministic)
  std::vector<std::int64_t> order(static_cast<size_t>(ct.box_total));
  std::vector<std::int32_t> radius(static_cast<size_t>(ct.box_total), 0);
  for (std::int64_t bi = 0; bi < ct.box_total; ++bi) {
    order[static_cast<size_t>(bi)] = bi;
    std::int64_t rest = bi, rad = 0;
    for (int i = g.p - 1; i >= 0; --i) {
      rad = std::max(rad, std::abs(rest % ct.side - ct.e));
      rest /= ct.side;
    }
    radius[static_cast<size_t>(bi)] = static_cast<std::int32_t>(rad);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::int64_t a, std::int64_t b) {
    return radius[static_cast<size_t>(a)] < radius[static_cast<size_t>(b)];
  });

  ct.offsets.assign(static_cast<size_t>(n_max) + 1, {});
  std::vector<std::int32_t> off(g.p);
  for (std::int64_t bi : order) {
    const int steps = life[static_cast<size_t>(bi)];
    if (steps == 0) continue;
    std::int64_t rest = bi;
    for (int i = g.p - 1; i >= 0; --i) {
      off[i] = static_cast<std::int32_t>(rest % ct.side - ct.e);
      rest /= ct.side;
    }
    for (int n = 1; n <= steps; ++n)
      ct.offsets[static_cast<size_t>(n)].insert(ct.offsets[static_cast<size_t>(n)].end(), off.begin(), off.end());
  }
  return ct;
}

void decode(const GridGeom& g, std::int64_t idx, std::vector<std::int64_t>& coords) {
  for (int i = g.p - 1; i >= 0; --i) {
    coords[i] = idx % g.r;
    idx /= g.r;
  }
}

bool conflicts_with_accepted(const GridGeom& g, const std::vector<std::int32_t>& offs,
                             const std::vector<std::uint8_t>& accepted, const std::vector<std::int64_t>& x) {
  const size_t entries = offs.size() / static_cast<size_t>(g.p);
  for (size_t k = 0; k < entries; ++k) {
    std::int64_t yidx = 0;
    for (int i = 0; i < g.p; ++i) {
      std::int64_t y = x[i] - offs[k * static_cast<size_t>(g.p) + static_cast<size_t>(i)];
      if (y < 0) y += g.r;
      if (y >= g.r) y -= g.r;
      yidx += y * g.stride[i];
    }
    if (accepted[static_cast<size_t>(yidx)]) return true;
  }
  return false;
}

double lsq_slope(const std::vector<EstimateRow>& rows, size_t lo, size_t hi) {
  const auto count = static_cast<double>(hi - lo + 1);
  double nbar = 0.0, ybar = 0.0;
  for (size_t i = lo; i <= hi; ++i) {
    nbar += rows[i].n;
    ybar += std::log(static_cast<double>(rows[i].separated_count));
  }
  nbar /= count;
  ybar /= count;
  double num = 0.0, den = 0.0;
  for (size_t i = lo; i <= hi; ++i) {
    const double dn = rows[i].n - nbar;
    num += dn * (std::log(static_cast<double>(rows[i].separated_count)) - ybar);
    den += dn * dn;
  }
  return den > 0.0 ? num / den : 0.0;
}

// extrapolated = least-squares slope of log(count) over the top third of the
// unsaturated n-range (at least two rows). Earlier rows sit in a packing
// transient that biases the slope low on coarse grids; saturated rows carry
// no growth information. All rows stay in per_n either way.
void finalize_estimate(EntropyEstimate& est, double capacity, double saturation_fraction) {
  if (est.per_n.empty()) return;
  size_t hi = est.per_n.size() - 1;
  for (size_t i = est.per_n.size(); i-- > 0;) {
    if (static_cast<double>(est.per_n[i].separated_count) <= saturation_fraction * capacity) {
      hi = i;
      break;
    }
  }
  const size_t window = std::max<size_t>(2, (hi + 1) / 3);
  const size_t lo = hi + 1 >= window ? hi + 1 - window : 0;
  est.extrapolated = lo < hi ? std::max(0.0, lsq_slope(est.per_n, lo, hi)) : est.per_n[hi].rate;
}

void check_estimate_inputs(const IntMatrix& t, int n_max, double epsilon, std::int64_t grid_resolution) {
  if (t.dim < 1) fail(errc::invalid_argument, "estimation needs a positive dimensional torus");
  if (int_det(t) == 0) fail(errc::singular_lattice_map, "lattice map is singular; the endomorphism is not surjective");
  if (n_max < 2) fail(errc::invalid_argument, "n_max must be at least 2");
  if (n_max > 10000) fail(errc::invalid_argument, "n_max is unreasonably large");
  if (!(epsilon > 0.0) || !(epsilon < 0.5)) fail(errc::invalid_argument, "epsilon must lie in (0, 0.5)");
  if (grid_resolution < 2 || static_cast<double>(grid_resolution) < 1.0 / epsilon)
    fail(errc::invalid_argument, "grid resolution must be at least 1/epsilon");
  check_orbit_entries(t, grid_resolution);
}

EstimateRow make_row(int n, double epsilon, std::int64_t count) {
  EstimateRow row;
  row.n = n;
  row.epsilon = epsilon;
  row.separated_count = count;
  row.rate = std::log(static_cast<double>(count)) / n;
  return row;
}

}  // namespace

EntropyEstimate estimate_entropy(const IntMatrix& t, int n_max, double epsilon, std::int64_t grid_resolution,
                                 const EstimateOptions& opts) {
  check_estimate_inputs(t, n_max, epsilon, grid_resolution);
  const GridGeom g = make_geom(t.dim, grid_resolution);
  const auto eps_int = static_cast<std::int64_t>(std::floor(epsilon * static_cast<double>(grid_resolution) + 1e-9));
  const ConflictTable ct = build_conflicts(t, g, eps_int, n_max, opts.parallel);
  const auto start = std::chrono::steady_clock::now();

  EntropyEstimate est;
  est.epsilon_used = epsilon;

  constexpr std::int64_t block = 8192;
  std::vector<std::uint8_t> accepted(static_cast<size_t>(g.total));
  std::vector<std::uint8_t> clean(static_cast<size_t>(block));
  std::vector<std::int64_t> coords(g.p);

  for (int n = 1; n <= n_max; ++n) {
    const auto& offs = ct.offsets[static_cast<size_t>(n)];
    // the two-phase split only pays off when the conflict scan dominates
    const bool two_phase = opts.parallel && offs.size() / static_cast<size_t>(g.p) >= 64;
    std::fill(accepted.begin(), accepted.end(), 0);
    std::int64_t count = 0;
    bool out_of_time = false;

    for (std::int64_t base = 0; base < g.total && !out_of_time; base += block) {
      const std::int64_t hi = std::min(base + block, g.total);

      if (two_phase) {
        // distance evaluation against the pre-block accepted set runs in
        // parallel; selection stays sequential, so results match a serial pass
#pragma omp parallel for schedule(static)
        for (std::int64_t idx = base; idx < hi; ++idx) {
          std::vector<std::int64_t> xc(g.p);
          decode(g, idx, xc);
          clean[static_cast<size_t>(idx - base)] = conflicts_with_accepted(g, offs, accepted, xc) ? 0 : 1;
        }
      }

      for (std::int64_t idx = base; idx < hi; ++idx) {
        if (two_phase && !clean[static_cast<size_t>(idx - base)]) continue;
        decode(g, idx, coords);
        if (conflicts_with_accepted(g, offs, accepted, coords)) continue;
        accepted[static_cast<size_t>(idx)] = 1;
        ++count;
      }

      if (std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > opts.wall_budget_seconds)
        out_of_time = true;
    }

    if (out_of_time) {
      est.wall_budget_exhausted = true;
      break;
    }
    est.per_n.push_back(make_row(n, epsilon, count));
  }

  finalize_estimate(est, static_cast<double>(g.total), opts.saturation_fraction);
  return est;
}

EntropyEstimate estimate_entropy_serial(const IntMatrix& t, int n_max, double epsilon, std::int64_t grid_resolution) {
  check_estimate_inputs(t, n_max, epsilon, grid_resolution);
  const GridGeom g = make_geom(t.dim, grid_resolution);
  if (g.total > (std::int64_t{1} << 20) || g.total * n_max * g.p > (std::int64_t{1} << 24))
    fail(errc::invalid_argument, "reference estimator is limited to small grids");
  const auto eps_int = static_cast<std::int64_t>(std::floor(epsilon * static_cast<double>(grid_resolution) + 1e-9));

  // orbit table: coordinates of T^i(x) for every grid point and i < n_max
  const auto total = static_cast<size_t>(g.total);
  const auto pp = static_cast<size_t>(g.p);
  std::vector<std::int64_t> orbit(total * static_cast<size_t>(n_max) * pp);
  std::vector<std::int64_t> cur(g.p);
  for (std::int64_t idx = 0; idx < g.total; ++idx) {
    decode(g, idx, cur);
    for (int i = 0; i < n_max; ++i) {
      for (int c = 0; c < g.p; ++c)
        orbit[(static_cast<size_t>(idx) * static_cast<size_t>(n_max) + static_cast<size_t>(i)) * pp +
              static_cast<size_t>(c)] = cur[c];
      cur = apply_mod(t, cur, g.r);
    }
  }

  EntropyEstimate est;
  est.epsilon_used = epsilon;
  std::vector<std::int64_t> chosen;
  for (int n = 1; n <= n_max; ++n) {
    chosen.clear();
    for (std::int64_t idx = 0; idx < g.total; ++idx) {
      bool conflict = false;
      for (std::int64_t y : chosen) {
        bool within = true;
        for (int i = 0; i < n && within; ++i) {
          std::int64_t w = 0;
          for (int c = 0; c < g.p; ++c) {
            const auto xi = orbit[(static_cast<size_t>(idx) * static_cast<size_t>(n_max) + static_cast<size_t>(i)) * pp +
                                  static_cast<size_t>(c)];
            const auto yi = orbit[(static_cast<size_t>(y) * static_cast<size_t>(n_max) + static_cast<size_t>(i)) * pp +
                                  static_cast<size_t>(c)];
            w = std::max(w, wrap_int(xi - yi, g.r));
          }
          within = w <= eps_int;
        }
        if (within) {
          conflict = true;
          break;
        }
      }
      if (!conflict) chosen.push_back(idx);
    }
    est.per_n.push_back(make_row(n, epsilon, static_cast<std::int64_t>(chosen.size())));
  }
  finalize_estimate(est, static_cast<double>(g.total), EstimateOptions{}.saturation_fraction);
  return est;
}

std::string estimate_to_json(const EntropyEstimate& e) {
  nlohmann::ordered_json j;
  j["per_n"] = nlohmann::ordered_json::array();
  for (const auto& row : e.per_n)
    j["per_n"].push_back(nlohmann::ordered_json{
        {"n", row.n}, {"epsilon", row.epsilon}, {"separated_count", row.separated_count}, {"rate", row.rate}});
  j["extrapolated"] = e.extrapolated;
  j["epsilon_used"] = e.epsilon_used;
  j["wall_budget_exhausted"] = e.wall_budget_exhausted;
  j["metric"] = "torus max-metric, per coordinate wrap distance min(|d|, 1 - |d|)";
  return j.dump(2) + "\n";
}

std::string estimate_to_csv(const EntropyEstimate& e) {
  std::string out = "n,epsilon,separated_count,rate\n";
  char buf[128];
  for (const auto& row : e.per_n) {
    std::snprintf(buf, sizeof(buf), "%d,%.12g,%lld,%.12g\n", row.n, row.epsilon,
                  static_cast<long long>(row.separated_count), row.rate);
    out += buf;
  }
  return out;
}

// ---------------------------------------------------------------------------
// adjoint representation

Matrix adjoint_matrix(const Matrix& g, const NumericConfig& cfg) {
  check_square(g);
  if (g.rows() == 0) return Matrix(0, 0);
  check_finite(g);
  const int n = static_cast<int>(g.rows());
  if (!is_invertible(g, cfg)) fail(errc::singular_matrix, "adjoint needs an invertible element");
  const Matrix ginv = g.inverse();
  Matrix ad(n * n, n * n);
  // row-major elementary basis: g E_ij g^{-1} has (k,l) entry g_ki (g^{-1})_jl
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ad(k * n + l, i * n + j) = g(k, i) * ginv(j, l);
  return ad;
}

double AdjointJordanReport::max() const {
  return std::max(elliptic_residual, std::max(hyperbolic_residual, unipotent_residual));
}

AdjointJordanReport verify_adjoint_jordan(const Matrix& g, const NumericConfig& cfg) {
  const JordanTriple parts = multiplicative_jordan(g, cfg);
  const Matrix ad = adjoint_matrix(g, cfg);
  const JordanTriple ad_parts = multiplicative_jordan(ad, cfg);

  // Jordan parts are unique, so Ad of the parts must reproduce the parts of
  // Ad; componentwise residuals relative to the target's largest entry
  const auto residual = [](const Matrix& got, const Matrix& want) {
    const double scale = std::max(1.0, want.cwiseAbs().maxCoeff());
    return (got - want).cwiseAbs().maxCoeff() / scale;
  };

  AdjointJordanReport report;
  report.elliptic_residual = residual(ad_parts.elliptic, adjoint_matrix(parts.elliptic, cfg));
  report.hyperbolic_residual = residual(ad_parts.hyperbolic, adjoint_matrix(parts.hyperbolic, cfg));
  report.unipotent_residual = residual(ad_parts.unipotent, adjoint_matrix(parts.unipotent, cfg));
  report.ok = report.max() <= 1e-6;
  return report;
}

bool conjugation_recurrent_membership(const Matrix& g, const Matrix& x, double tol, const NumericConfig& cfg) {
  check_square(g);
  check_square(x);
  if (g.rows() != x.rows()) fail(errc::dimension_mismatch, "group element and probe must have equal size");
  if (!(tol > 0.0)) fail(errc::invalid_argument, "tolerance must be positive");
  if (!is_invertible(x, cfg)) fail(errc::singular_matrix, "probe must be invertible");
  const JordanTriple parts = multiplicative_jordan(g, cfg);
  const double xn = frobenius(x);
  const double hcomm = frobenius(x * parts.hyperbolic - parts.hyperbolic * x);
  const double ucomm = frobenius(x * parts.unipotent - parts.unipotent * x);
  return hcomm <= tol * xn * frobenius(parts.hyperbolic) && ucomm <= tol * xn * frobenius(parts.unipotent);
}

// ---------------------------------------------------------------------------
// recurrence and Li-Yorke search

RecurrenceResult recurrence_check(const Matrix& m, const Vector& x, int big_n, double delta,
                                  const NumericConfig& cfg) {
  check_square(m);
  check_finite(m);
  if (m.rows() != x.size()) fail(errc::dimension_mismatch, "vector dimension does not match the matrix");
  if (big_n < 1) fail(errc::invalid_argument, "iteration bound must be positive");
  if (!(delta > 0.0)) fail(errc::invalid_argument, "delta must be positive");

  // measure in the elliptic-invariant Gram norm when the factorization
  // succeeds; the elliptic part acts as an isometry there
  Matrix gram = Matrix::Identity(m.rows(), m.rows());
  try {
    const JordanTriple parts = multiplicative_jordan(m, cfg);
    gram = elliptic_invariant_gram(parts.elliptic, cfg);
  } catch (const Error&) {
  }
  const auto norm_of = [&gram](const Vector& v) { return std::sqrt(std::max(0.0, v.dot(gram * v))); };

  RecurrenceResult result;
  result.best_distance = std::numeric_limits<double>::infinity();
  Vector cur = x;
  for (int n = 1; n <= big_n; ++n) {
    cur = m * cur;
    if (!cur.allFinite() || norm_of(cur) > cfg.divergence_cutoff) {
      result.divergent = true;
      result.recurrent = false;
      return result;
    }
    const double dist = norm_of(cur - x);
    if (dist < result.best_distance) {
      result.best_distance = dist;
      result.best_n = n;
    }
    if (dist <= delta) {
      result.recurrent = true;
      return result;
    }
  }
  return result;
}

namespace {

struct PairCandidate {
  std::vector<std::int64_t> a;  // numerators over den
  std::vector<std::int64_t> b;
  std::int64_t den = 0;
};

std::vector<std::int64_t> offset_numerators(int p, double seed, std::int64_t q) {
  std::vector<std::int64_t> out(p);
  for (int i = 0; i < p; ++i) {
    const double whole = (i + 1) * seed;
    const double f = whole - std::floor(whole);
    out[i] = std::clamp<std::int64_t>(static_cast<std::int64_t>(f * static_cast<double>(q)), 1, q - 1);
  }
  return out;
}

double wrap_max_dist(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v, std::int64_t den) {
  std::int64_t w = 0;
  for (size_t i = 0; i < u.size(); ++i) w = std::max(w, wrap_int(u[i] - v[i], den));
  return static_cast<double>(w) / static_cast<double>(den);
}

TorusPoint to_point(const std::vector<std::int64_t>& num, std::int64_t den) {
  TorusPoint p(num.size());
  for (size_t i = 0; i < num.size(); ++i) p[i] = static_cast<double>(num[i]) / static_cast<double>(den);
  return p;
}

}  // namespace

std::optional<LiYorkeWitness> li_yorke_search(const IntMatrix& t, std::int64_t budget, double delta) {
  if (t.dim < 1) fail(errc::invalid_argument, "search needs a positive dimensional torus");
  if (budget < 1) fail(errc::invalid_argument, "budget must be positive");
  if (!(delta > 0.0) || !(delta < 0.5)) fail(errc::invalid_argument, "delta must lie in (0, 0.5)");

  // odd prime denominator: exact orbits can never collapse onto the dyadic
  // lattice, which floating point iteration would silently do
  const std::int64_t q = 999983;
  const std::int64_t den = 2 * q;
  check_orbit_entries(t, den);

  const int p = t.dim;
  constexpr double golden = 0.6180339887498949;
  constexpr double silver = 0.41421356237309515;

  std::vector<PairCandidate> candidates;
  {
    PairCandidate c;
    c.den = den;
    c.a.assign(p, 0);
    c.b = offset_numerators(p, golden, q);
    for (auto& v : c.b) v *= 2;  // lift m/q to the common denominator 2q
    candidates.push_back(c);
    c.b = offset_numerators(p, silver, q);
    for (auto& v : c.b) v *= 2;
    candidates.push_back(c);
    c.a.assign(p, q);  // the half-integer point, eventually periodic under any lattice map
    c.b = offset_numerators(p, golden, q);
    for (auto& v : c.b) v = (q + 2 * v) % den;
    candidates.push_back(c);
  }

  const auto per_candidate = std::max<std::int64_t>(1, budget / static_cast<std::int64_t>(candidates.size()));
  constexpr size_t needed = 3;
  constexpr size_t keep = 16;

  for (const auto& cand : candidates) {
    if (wrap_max_dist(cand.a, cand.b, den) <= delta) continue;  // the pair must start separated
    std::vector<std::int64_t> ua = cand.a, ub = cand.b;
    bool a_fixed_zero = true;
    for (auto v : cand.a) a_fixed_zero = a_fixed_zero && v == 0;

    LiYorkeWitness w;
    w.a = to_point(cand.a, den);
    w.b = to_point(cand.b, den);
    bool have_c = false;

    for (std::int64_t n = 1; n <= per_candidate; ++n) {
      ub = apply_mod(t, ub, den);
      if (!a_fixed_zero) ua = apply_mod(t, ua, den);

      const double pair_dist = wrap_max_dist(ua, ub, den);
      if (pair_dist < delta && w.proximal_times.size() < keep) {
        w.proximal_times.push_back(n);
        w.gaps.push_back(pair_dist);
        if (!have_c) {
          w.c = to_point(ua, den);
          have_c = true;
        }
      }
      if (pair_dist > delta && w.return_times.size() < keep && wrap_max_dist(ub, cand.b, den) < delta &&
          (a_fixed_zero || wrap_max_dist(ua, cand.a, den) < delta))
        w.return_times.push_back(n);

      if (w.proximal_times.size() >= keep && w.return_times.size() >= keep) break;
    }
    if (w.proximal_times.size() >= needed && w.return_times.size() >= needed) return w;
  }
  return std::nullopt;
}

std::string li_yorke_to_json(const std::optional<LiYorkeWitness>& w, std::int64_t budget, double delta) {
  nlohmann::ordered_json j;
  j["found"] = w.has_value();
  j["budget"] = budget;
  j["delta"] = delta;
  if (w) {
    nlohmann::ordered_json jw;
    jw["a"] = w->a;
    jw["b"] = w->b;
    jw["c"] = w->c;
    jw["return_times"] = w->return_times;
    jw["proximal_times"] = w->proximal_times;
    jw["gaps"] = w->gaps;
    j["witness"] = jw;
  } else {
    j["witness"] = nullptr;
  }
  j["caveat"] = li_yorke_caveat;
  return j.dump(2) + "\n";
}

}  // namespace lieent
