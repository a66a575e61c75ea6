#include "lieent/group.hpp"

#include <cmath>
#include <sstream>

#include "lieent/citations.hpp"
#include "lieent/errors.hpp"

namespace lieent {

const char* variant_name(GroupVariant v) {
  switch (v) {
    case GroupVariant::torus: return "TORUS";
    case GroupVariant::vector_space: return "VECTOR";
    case GroupVariant::abelian: return "ABELIAN";
    case GroupVariant::nilpotent: return "NILPOTENT";
    case GroupVariant::semisimple_linear: return "SEMISIMPLE_LINEAR";
    case GroupVariant::reductive: return "REDUCTIVE";
    case GroupVariant::compact: return "COMPACT";
    case GroupVariant::general_conjecture: return "GENERAL_CONJECTURE";
  }
  return "?";
}

std::optional<GroupVariant> variant_from_name(const std::string& name) {
  for (GroupVariant v : {GroupVariant::torus, GroupVariant::vector_space, GroupVariant::abelian,
                         GroupVariant::nilpotent, GroupVariant::semisimple_linear, GroupVariant::reductive,
                         GroupVariant::compact, GroupVariant::general_conjecture}) {
    if (name == variant_name(v)) return v;
  }
  return std::nullopt;
}

const char* severity_name(Severity s) {
  switch (s) {
    case Severity::info: return "INFO";
    case Severity::warning: return "WARNING";
    case Severity::error: return "ERROR";
  }
  return "?";
}

GroupDescriptor GroupDescriptor::torus(int p) { return {GroupVariant::torus, p, 0, 0, 0, true}; }
GroupDescriptor GroupDescriptor::vector_space(int q) { return {GroupVariant::vector_space, 0, q, 0, 0, true}; }
GroupDescriptor GroupDescriptor::abelian(int p, int q) { return {GroupVariant::abelian, p, q, 0, 0, true}; }
GroupDescriptor GroupDescriptor::nilpotent(int p, int n) { return {GroupVariant::nilpotent, p, 0, n, 0, true}; }
GroupDescriptor GroupDescriptor::semisimple(int n) { return {GroupVariant::semisimple_linear, 0, 0, 0, n, true}; }
GroupDescriptor GroupDescriptor::reductive(int p, int q, int n, bool pi_proper) {
  return {GroupVariant::reductive, p, q, 0, n, pi_proper};
}
GroupDescriptor GroupDescriptor::compact(int p) { return {GroupVariant::compact, p, 0, 0, 0, true}; }
GroupDescriptor GroupDescriptor::general_conjecture(int p, int q) {
  return {GroupVariant::general_conjecture, p, q, 0, 0, true};
}

bool ValidationReport::has(const std::string& code) const {
  for (const auto& f : findings)
    if (f.code == code) return true;
  return false;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (size_t i = 0; i < findings.size(); ++i) {
    if (i) os << "; ";
    os << severity_name(findings[i].severity) << " " << findings[i].code << ": " << findings[i].message;
  }
  return os.str();
}

namespace {

class Collector {
 public:
  void add(Severity s, std::string code, std::string message, std::string ref) {
    report_.findings.push_back({s, std::move(code), std::move(message), std::move(ref)});
    if (s == Severity::error) report_.ok = false;
  }
  ValidationReport take() { return std::move(report_); }

 private:
  ValidationReport report_;
};

void check_lattice(Collector& c, const IntMatrix& t, int expected_dim, const std::string& where) {
  if (t.dim != expected_dim) {
    c.add(Severity::error, "DIMENSION_MISMATCH",
          where + " is " + std::to_string(t.dim) + "x" + std::to_string(t.dim) + ", expected " +
              std::to_string(expected_dim) + "x" + std::to_string(expected_dim),
          cite::plumbing);
    return;
  }
  if (t.dim == 0) return;
  const auto det = int_det(t);
  if (det == 0) {
    c.add(Severity::error, "SINGULAR_LATTICE_MAP", where + " has determinant 0; the torus factor is not surjective",
          cite::abelian_reduction);
    return;
  }
  const auto mag = det < 0 ? -det : det;
  if (mag > 1) {
    c.add(Severity::warning, "FINITE_COVERING",
          where + " has |det| = " + std::to_string(static_cast<long long>(mag)) +
              ": a " + std::to_string(static_cast<long long>(mag)) +
              "-fold covering of the torus factor; kernel finite, map proper",
          cite::properness);
  }
}

void check_vector_map(Collector& c, const Matrix& s, int expected_dim, const NumericConfig& cfg,
                      const std::string& where) {
  if (s.rows() != expected_dim || s.cols() != expected_dim) {
    c.add(Severity::error, "DIMENSION_MISMATCH",
          where + " is " + std::to_string(s.rows()) + "x" + std::to_string(s.cols()) + ", expected " +
              std::to_string(expected_dim) + "x" + std::to_string(expected_dim),
          cite::plumbing);
    return;
  }
  if (expected_dim > 0 && !is_invertible(s, cfg)) {
    c.add(Severity::error, "NOT_SURJECTIVE", where + " is singular; it must be a linear isomorphism",
          cite::abelian_reduction);
  }
}

void check_abelian_payload(Collector& c, const EndoDescriptor& e, int p, int q, const NumericConfig& cfg,
                           const std::string& prefix) {
  check_lattice(c, e.lattice_map, p, prefix + "lattice map");
  check_vector_map(c, e.vector_map, q, cfg, prefix + "vector map");
  if (e.coupling.rows() != p || e.coupling.cols() != q) {
    c.add(Severity::error, "DIMENSION_MISMATCH",
          prefix + "coupling block is " + std::to_string(e.coupling.rows()) + "x" +
              std::to_string(e.coupling.cols()) + ", expected " + std::to_string(p) + "x" + std::to_string(q),
          cite::plumbing);
  } else if (e.coupling.size() > 0 && e.coupling.norm() > 0.0) {
    c.add(Severity::info, "COUPLING_IGNORED", prefix + "coupling block recorded; it does not affect the entropy",
          cite::coupling_ignored);
  }
}

void check_conjugation_payload(Collector& c, const EndoDescriptor& e, int n, const NumericConfig& cfg,
                               const std::string& prefix) {
  if (e.conjugator.rows() != n || e.conjugator.cols() != n) {
    c.add(Severity::error, "DIMENSION_MISMATCH",
          prefix + "conjugation element is " + std::to_string(e.conjugator.rows()) + "x" +
              std::to_string(e.conjugator.cols()) + ", expected " + std::to_string(n) + "x" + std::to_string(n),
          cite::plumbing);
    return;
  }
  if (n == 0) return;
  if (!e.conjugator.allFinite()) {
    c.add(Severity::error, "SINGULAR_MATRIX", prefix + "conjugation element has non-finite entries", cite::plumbing);
    return;
  }
  if (!is_invertible(e.conjugator, cfg)) {
    c.add(Severity::error, "SINGULAR_MATRIX", prefix + "conjugation element is singular", cite::semisimple_power);
    return;
  }
  const double mag = std::abs(determinant(e.conjugator));
  if (std::abs(mag - 1.0) > 1e-9 * std::max(1.0, mag)) {
    c.add(Severity::error, "NOT_UNIMODULAR",
          prefix + "conjugation element must satisfy |det g| = 1 up to 1e-9, got |det g| = " + std::to_string(mag),
          cite::semisimple_zero);
  }
  if (e.conj_kind == ConjugationKind::power && e.power < 1) {
    c.add(Severity::error, "INVALID_POWER", prefix + "power must be a positive integer", cite::semisimple_power);
  }
}

}  // namespace

ValidationReport validate(const GroupDescriptor& g, const EndoDescriptor& e, const NumericConfig& cfg) {
  if (g.variant != e.variant) {
    fail(errc::variant_mismatch, std::string("group descriptor is ") + variant_name(g.variant) +
                                     " but endomorphism payload is " + variant_name(e.variant));
  }
  Collector c;
  if (g.toral_dim < 0 || g.vector_dim < 0 || g.algebra_dim < 0 || g.matrix_size < 0) {
    c.add(Severity::error, "NEGATIVE_DIMENSION", "all dimensions must be nonnegative", cite::plumbing);
    return c.take();
  }

  switch (g.variant) {
    case GroupVariant::torus:
      check_lattice(c, e.lattice_map, g.toral_dim, "lattice map");
      break;
    case GroupVariant::vector_space:
      check_vector_map(c, e.vector_map, g.vector_dim, cfg, "vector map");
      break;
    case GroupVariant::abelian:
      check_abelian_payload(c, e, g.toral_dim, g.vector_dim, cfg, "");
      break;
    case GroupVariant::nilpotent:
      if (g.toral_dim > g.algebra_dim) {
        c.add(Severity::error, "BAD_DIMENSION",
              "toral dimension " + std::to_string(g.toral_dim) + " exceeds algebra dimension " +
                  std::to_string(g.algebra_dim),
              cite::nilpotent_reduction);
      }
      check_lattice(c, e.lattice_map, g.toral_dim, "toral map");
      if (e.differential) {
        if (e.differential->rows() != g.algebra_dim || e.differential->cols() != g.algebra_dim) {
          c.add(Severity::error, "DIMENSION_MISMATCH",
                "differential must be " + std::to_string(g.algebra_dim) + "x" + std::to_string(g.algebra_dim),
                cite::plumbing);
        } else {
          c.add(Severity::info, "DIFFERENTIAL_RECORDED",
                "differential recorded for reporting; the entropy depends only on the toral map",
                cite::nilpotent_reduction);
        }
      }
      break;
    case GroupVariant::semisimple_linear:
      if (g.matrix_size < 1) {
        c.add(Severity::error, "BAD_DIMENSION", "matrix size must be at least 1", cite::plumbing);
        break;
      }
      check_conjugation_payload(c, e, g.matrix_size, cfg, "");
      break;
    case GroupVariant::reductive:
      if (g.matrix_size < 1) {
        c.add(Severity::error, "BAD_DIMENSION", "derived part needs matrix size at least 1", cite::plumbing);
      } else {
        check_conjugation_payload(c, e, g.matrix_size, cfg, "derived ");
      }
      check_abelian_payload(c, e, g.toral_dim, g.vector_dim, cfg, "center ");
      if (!g.pi_proper) {
        c.add(Severity::warning, "PI_NOT_PROPER",
              "the reduction is only proven when pi: Z(G)_0 x G' -> G is proper; the result will be marked "
              "conjectural",
              cite::pi_proper_warning);
      }
      break;
    case GroupVariant::compact:
      check_lattice(c, e.lattice_map, g.toral_dim, "toral map");
      break;
    case GroupVariant::general_conjecture:
      check_lattice(c, e.lattice_map, g.toral_dim, "T(R') map");
      check_lattice(c, e.second_lattice_map, g.vector_dim, "T(R/R') map");
      c.add(Severity::info, "CONJECTURAL", "the general reduction is conjectural; results carry that flag",
            cite::conjectural_gap);
      break;
  }
  return c.take();
}

IntMatrix toral_component(const GroupDescriptor& g, const EndoDescriptor& e) {
  if (g.variant != e.variant) {
    fail(errc::variant_mismatch, std::string("group descriptor is ") + variant_name(g.variant) +
                                     " but endomorphism payload is " + variant_name(e.variant));
  }
  switch (g.variant) {
    case GroupVariant::torus:
    case GroupVariant::abelian:
    case GroupVariant::nilpotent:
    case GroupVariant::compact:
    case GroupVariant::reductive:
      return e.lattice_map;
    case GroupVariant::vector_space:
    case GroupVariant::semisimple_linear:
      return IntMatrix();
    case GroupVariant::general_conjecture:
      break;
  }
  fail(errc::unsupported_variant, "the toral component of the general conjectural class is not defined");
}

}  // namespace lieent
