#include "lieent/jordan.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace lieent {

namespace {

using Complex = std::complex<double>;

double rel_norm(const Matrix& x, const Matrix& y) {
  const double d = (x - y).norm();
  const double s = std::max(1e-300, y.norm());
  return d / s;
}

// Unitary similarity exchanging the diagonal entries k and k+1 of an upper
// triangular T, applied to T and accumulated into Q (A = Q T Q^H throughout).
void swap_adjacent(CMatrix& T, CMatrix& Q, int k) {
  const Complex a = T(k, k), b = T(k, k + 1), d = T(k + 1, k + 1);
  const Complex v0 = b, v1 = d - a;
  const double r = std::sqrt(std::norm(v0) + std::norm(v1));
  if (r == 0.0) return;  // equal entries: nothing to move
  const Complex c0 = std::conj(v0) / r, c1 = std::conj(v1) / r;
  Eigen::Matrix2cd G;
  G << c0, c1, -std::conj(c1), std::conj(c0);
  T.middleRows(k, 2) = G * T.middleRows(k, 2);
  T.middleCols(k, 2) = T.middleCols(k, 2) * G.adjoint();
  Q.middleCols(k, 2) = Q.middleCols(k, 2) * G.adjoint();
  T(k + 1, k) = Complex(0, 0);
}

struct ClusterData {
  Complex mean;
  int size = 0;
  CMatrix projector;  // spectral projector, oblique
  CMatrix subspace;   // orthonormal basis of the invariant subspace
};

// connected components of the diagonal under |x - y| <= tol
std::vector<int> cluster_labels(const std::vector<Complex>& vals, double tol) {
  const int n = static_cast<int>(vals.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(vals[i] - vals[j]) <= tol) parent[find(i)] = find(j);
  std::vector<int> label(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    const int root = find(i);
    if (label[root] < 0) label[root] = next++;
    label[i] = label[root];
  }
  return label;
}

// Spectral projector and invariant-subspace basis for each cluster, via
// reordered Schur forms and a triangular Sylvester solve.
std::vector<ClusterData> build_clusters(const CMatrix& T0, const CMatrix& Q0, const std::vector<int>& label) {
  const int n = static_cast<int>(T0.rows());
  const int nclusters = 1 + *std::max_element(label.begin(), label.end());
  std::vector<ClusterData> out(nclusters);

  for (int c = 0; c < nclusters; ++c) {
    CMatrix T = T0, Q = Q0;
    std::vector<int> lab = label;
    int s = 0;
    for (int i = 0; i < n; ++i)
      if (lab[i] == c) ++s;
    // bubble the cluster to the leading block
    for (int t = 0; t < s; ++t) {
      int p = t;
      while (lab[p] != c) ++p;
      for (int q = p; q > t; --q) {
        swap_adjacent(T, Q, q - 1);
        std::swap(lab[q - 1], lab[q]);
      }
    }
    ClusterData cd;
    cd.size = s;
    Complex mean(0, 0);
    for (int i = 0; i < s; ++i) mean += T(i, i);
    cd.mean = mean / static_cast<double>(s);
    cd.subspace = Q.leftCols(s);

    if (s == n) {
      cd.projector = CMatrix::Identity(n, n);
    } else {
      const auto T11 = T.topLeftCorner(s, s);
      const auto T12 = T.topRightCorner(s, n - s);
      const auto T22 = T.bottomRightCorner(n - s, n - s);
      CMatrix X(s, n - s);
      for (int j = 0; j < n - s; ++j) {
        Eigen::VectorXcd rhs = T12.col(j);
        for (int i = 0; i < j; ++i) rhs += X.col(i) * T22(i, j);
        CMatrix M = T11 - T22(j, j) * CMatrix::Identity(s, s);
        X.col(j) = M.triangularView<Eigen::Upper>().solve(rhs);
      }
      CMatrix PT = CMatrix::Zero(n, n);
      PT.topLeftCorner(s, s) = CMatrix::Identity(s, s);
      PT.topRightCorner(s, n - s) = X;
      cd.projector = Q * PT * Q.adjoint();
    }
    out[c] = cd;
  }
  return out;
}

struct SchurPair {
  CMatrix T, Q;
};

SchurPair complex_schur(const Matrix& m) {
  Eigen::ComplexSchur<CMatrix> schur(m.cast<Complex>());
  if (schur.info() != Eigen::Success) fail(errc::non_convergence, "Schur iteration did not converge");
  return {schur.matrixT(), schur.matrixU()};
}

double imag_residue(const CMatrix& x) { return x.imag().norm(); }

}  // namespace

double JordanResiduals::max() const {
  return std::max({product, commute, elliptic_modulus, hyperbolic_real, nilpotent});
}

JordanResiduals jordan_residuals(const JordanTriple& t, const NumericConfig& cfg) {
  JordanResiduals r;
  const Matrix& m = t.source;
  const int n = static_cast<int>(m.rows());
  if (n == 0) return r;
  r.product = rel_norm(t.elliptic * t.hyperbolic * t.unipotent, m);
  auto comm = [](const Matrix& x, const Matrix& y) {
    return (x * y - y * x).norm() / std::max(1e-300, x.norm() * y.norm());
  };
  r.commute = std::max({comm(t.elliptic, t.hyperbolic), comm(t.elliptic, t.unipotent), comm(t.hyperbolic, t.unipotent)});

  for (const auto& v : eigenvalue_list(eigenvalues(t.elliptic, cfg)))
    r.elliptic_modulus = std::max(r.elliptic_modulus, std::abs(std::abs(v) - 1.0));
  for (const auto& v : eigenvalue_list(eigenvalues(t.hyperbolic, cfg))) {
    r.hyperbolic_real = std::max(r.hyperbolic_real, std::abs(v.imag()));
    if (v.real() < 1e-12) r.hyperbolic_real = std::max(r.hyperbolic_real, 1e-12 - v.real());
  }

  Matrix nil = t.unipotent - Matrix::Identity(n, n);
  Matrix p = Matrix::Identity(n, n);
  for (int k = 0; k < n && p.norm() > 1e-300; ++k) p = p * nil;
  // guarded scale so a large-but-exactly-nilpotent factor is not penalized by
  // the roundoff of the power chain
  r.nilpotent = p.norm() / std::max(1.0, std::pow(nil.norm(), 2));
  return r;
}

JordanTriple multiplicative_jordan(const Matrix& m, const NumericConfig& cfg) {
  check_square(m);
  check_finite(m);
  const int n = static_cast<int>(m.rows());
  JordanTriple t;
  t.source = m;
  if (n == 0) {
    t.elliptic = t.hyperbolic = t.unipotent = Matrix(0, 0);
    return t;
  }
  if (!is_invertible(m, cfg)) fail(errc::singular_matrix, "multiplicative factorization needs an invertible matrix");

  const SchurPair sp = complex_schur(m);
  std::vector<Complex> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = sp.T(i, i);
  double rho = 0.0;
  for (const auto& v : diag) rho = std::max(rho, std::abs(v));
  const double scale = 1.0 + rho;

  std::vector<int> prev_label;
  std::string last_reason = "no clustering round satisfied the factorization checks";
  for (int round = 0; round <= cfg.cluster_max_rounds; ++round) {
    const double tol = cfg.cluster_tol * scale * std::pow(cfg.cluster_escalation, round);
    std::vector<int> label = cluster_labels(diag, tol);
    if (!prev_label.empty() && label == prev_label) continue;
    prev_label = label;

    std::vector<ClusterData> clusters;
    try {
      clusters = build_clusters(sp.T, sp.Q, label);
    } catch (const Error&) {
      continue;
    }

    double kappa = 0.0;
    for (const auto& c : clusters) kappa = std::max(kappa, c.projector.norm());
    if (kappa > cfg.projector_cap) {
      last_reason = "spectral projectors are too ill-conditioned; eigenvalues were likely split from one defective group";
      continue;
    }

    CMatrix psum = CMatrix::Zero(n, n);
    CMatrix E = CMatrix::Zero(n, n), H = CMatrix::Zero(n, n), S = CMatrix::Zero(n, n);
    for (const auto& c : clusters) {
      const double mod = std::abs(c.mean);
      if (mod < 1e-12) {
        psum = CMatrix::Zero(n, n);  // poison: cannot happen for invertible input
        break;
      }
      const double snapped = std::abs(mod - 1.0) <= cfg.modulus_band ? 1.0 : mod;
      const Complex unit = c.mean / mod;
      psum += c.projector;
      E += unit * c.projector;
      H += snapped * c.projector;
      S += unit * snapped * c.projector;
    }
    if (!psum.allFinite() || (psum - CMatrix::Identity(n, n)).norm() > 1e-6 * n) {
      last_reason = "spectral projectors did not resolve the identity";
      continue;
    }

    CMatrix N = m.cast<Complex>() - S;
    Eigen::PartialPivLU<CMatrix> lu(S);
    CMatrix U = CMatrix::Identity(n, n) + lu.solve(N);

    const double imag = imag_residue(E) + imag_residue(H) + imag_residue(U);
    if (imag > 1e-8 * scale * n) {
      last_reason = "factors failed to realify";
      continue;
    }

    JordanTriple cand;
    cand.source = m;
    cand.elliptic = E.real();
    cand.hyperbolic = H.real();
    cand.unipotent = U.real();

    JordanResiduals res;
    try {
      res = jordan_residuals(cand, cfg);
    } catch (const Error&) {
      continue;
    }
    if (res.product <= cfg.triple_product_tol && res.commute <= cfg.commute_tol &&
        res.elliptic_modulus <= cfg.semisimple_tol && res.hyperbolic_real <= cfg.semisimple_tol &&
        res.nilpotent <= cfg.nilpotent_tol) {
      return cand;
    }
    last_reason = "factorization residuals above tolerance";
  }
  fail(errc::non_convergence, "multiplicative factorization: " + last_reason);
}

Subspace recurrent_subspace(const Matrix& m, const NumericConfig& cfg) {
  const JordanTriple t = multiplicative_jordan(m, cfg);
  const int n = static_cast<int>(m.rows());
  const Subspace fix_h = null_space(t.hyperbolic - Matrix::Identity(n, n), cfg.rel_tol, cfg);
  const Subspace fix_u = null_space(t.unipotent - Matrix::Identity(n, n), cfg.rel_tol, cfg);
  return intersect(fix_h, fix_u, cfg);
}

Matrix elliptic_invariant_gram(const Matrix& e, const NumericConfig& cfg) {
  check_square(e);
  check_finite(e);
  const int n = static_cast<int>(e.rows());
  if (n == 0) return Matrix(0, 0);
  if (!is_invertible(e, cfg)) fail(errc::not_elliptic, "elliptic factor must be invertible");

  const SchurPair sp = complex_schur(e);
  std::vector<Complex> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = sp.T(i, i);
  const double scale = 1.0 + frobenius(e);

  std::string reason = "semisimplicity check failed";
  for (int round = 0; round <= cfg.cluster_max_rounds; ++round) {
    const double tol = cfg.cluster_tol * scale * std::pow(cfg.cluster_escalation, round);
    std::vector<int> label = cluster_labels(diag, tol);
    std::vector<ClusterData> clusters = build_clusters(sp.T, sp.Q, label);

    bool moduli_ok = true;
    for (const auto& c : clusters)
      if (std::abs(std::abs(c.mean) - 1.0) > cfg.semisimple_tol) moduli_ok = false;
    if (!moduli_ok) {
      reason = "spectrum is not within tolerance of the unit circle";
      continue;
    }

    CMatrix S = CMatrix::Zero(n, n), W = CMatrix::Zero(n, n);
    for (const auto& c : clusters) {
      S += c.mean * c.projector;
      W += c.subspace * c.subspace.adjoint();
    }
    if (!S.allFinite() || (S - e.cast<Complex>()).norm() > cfg.semisimple_tol * scale) {
      reason = "semisimplicity check failed";
      continue;
    }

    CMatrix Gc = W.ldlt().solve(CMatrix::Identity(n, n));
    Matrix G = Gc.real();
    G = 0.5 * (G + G.transpose());
    if ((e.transpose() * G * e - G).norm() <= cfg.gram_tol * std::max(1.0, G.norm())) return G;
    reason = "no invariant Gram matrix within tolerance";
  }
  fail(errc::not_elliptic, reason);
}

}  // namespace lieent
