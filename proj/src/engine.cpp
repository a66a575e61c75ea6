#include "lieent/engine.hpp"

#include <cmath>
#include <json.hpp>

#include "lieent/citations.hpp"
#include "lieent/errors.hpp"

namespace lieent {

namespace {

void add_step(EntropyCertificate& c, const char* rule, const char* ref, std::string detail) {
  c.trace.push_back({rule, ref, std::move(detail)});
}

void prepend_step(EntropyCertificate& c, const char* rule, const char* ref, std::string detail) {
  c.trace.insert(c.trace.begin(), {rule, ref, std::move(detail)});
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Entropy exactly zero decided by the characteristic polynomial: appends the
// exact-mode step and, when the polynomial is cyclotomic, zeroes the numeric
// certificate.
void apply_exact_cyclotomic(EntropyCertificate& cert, const IntMatrix& t) {
  if (t.dim > 6) {
    add_step(cert, "CYCLOTOMIC_EXACT", cite::cyclotomic_note,
             "exact mode requested but only available up to dimension 6; numeric band result kept");
    return;
  }
  const auto poly = char_poly_exact(t);
  if (!poly) {
    add_step(cert, "CYCLOTOMIC_EXACT", cite::cyclotomic_note,
             "exact mode requested but the coefficient bound overflowed; numeric band result kept");
    return;
  }
  if (cyclotomic_product(*poly)) {
    cert.value = 0.0;
    cert.contributions.clear();
    add_step(cert, "CYCLOTOMIC_EXACT", cite::cyclotomic_note,
             "characteristic polynomial is a product of cyclotomic factors; entropy is exactly 0");
  } else {
    add_step(cert, "CYCLOTOMIC_EXACT", cite::cyclotomic_note,
             "characteristic polynomial is not a product of cyclotomic factors; positive entropy is certified "
             "exactly");
  }
}

}  // namespace

EntropyCertificate bowen_formula(const Matrix& m, const NumericConfig& cfg) {
  check_square(m);
  if (m.rows() > 0) {
    check_finite(m);
    if (!is_invertible(m, cfg)) fail(errc::singular_matrix, "Bowen's formula needs an invertible matrix");
  }
  EntropyCertificate cert;
  const Spectrum spec = m.rows() > 0 ? eigenvalues(m, cfg) : Spectrum{};
  int expanding = 0;
  for (const auto& entry : spec.entries) {
    const double mod = std::abs(entry.value);
    if (mod - 1.0 <= cfg.modulus_band) continue;
    const double lg = std::log(mod);
    for (int i = 0; i < entry.multiplicity; ++i) {
      cert.contributions.push_back({entry.value.real(), entry.value.imag(), mod, lg});
      cert.value += lg;
      ++expanding;
    }
  }
  add_step(cert, "BOWEN_FORMULA", cite::bowen_formula,
           std::to_string(expanding) + " of " + std::to_string(m.rows()) +
               " eigenvalues lie outside the unit modulus band; value = " + format_value(cert.value));
  return cert;
}

EntropyCertificate torus_entropy(const IntMatrix& t, const NumericConfig& cfg, bool exact_cyclotomic) {
  if (t.dim > 0 && int_det(t) == 0)
    fail(errc::singular_lattice_map, "lattice map is singular; the torus endomorphism is not surjective");
  EntropyCertificate cert;
  if (t.dim == 0) {
    add_step(cert, "TORUS_FORMULA", cite::torus_formula, "trivial torus; entropy 0");
    return cert;
  }
  cert = bowen_formula(to_real(t), cfg);
  if (exact_cyclotomic) apply_exact_cyclotomic(cert, t);
  prepend_step(cert, "TORUS_FORMULA", cite::torus_formula,
               "entropy of the torus endomorphism from the spectrum of the " + std::to_string(t.dim) + "x" +
                   std::to_string(t.dim) + " lattice lift");
  return cert;
}

EntropyCertificate abelian_entropy(const IntMatrix& t, const Matrix& b, const Matrix& s, const NumericConfig& cfg,
                                   bool exact_cyclotomic) {
  if (s.rows() != s.cols()) fail(errc::dimension_mismatch, "vector map must be square");
  if (s.rows() > 0 && !is_invertible(s, cfg))
    fail(errc::not_surjective, "vector map is singular; it must be a linear isomorphism");
  EntropyCertificate cert = torus_entropy(t, cfg, exact_cyclotomic);
  prepend_step(cert, "VECTOR_TRIVIAL", cite::vector_trivial,
               "the vector part S (" + std::to_string(s.rows()) + "x" + std::to_string(s.cols()) +
                   " isomorphism) contributes 0");
  prepend_step(cert, "ABELIAN_REDUCTION", cite::abelian_reduction,
               "reduced to the toral component; coupling block (" + std::to_string(b.rows()) + "x" +
                   std::to_string(b.cols()) + ") recorded and ignored");
  return cert;
}

EntropyCertificate nilpotent_entropy(const IntMatrix& toral_map, const NumericConfig& cfg, bool exact_cyclotomic) {
  EntropyCertificate cert = torus_entropy(toral_map, cfg, exact_cyclotomic);
  prepend_step(cert, "NILPOTENT_REDUCTION", cite::nilpotent_reduction,
               "entropy of a nilpotent-group endomorphism equals that of its restriction to T(G)");
  return cert;
}

EntropyCertificate semisimple_entropy(const Matrix& g, ConjugationKind kind, int k, const NumericConfig& cfg) {
  check_square(g);
  if (g.rows() == 0) fail(errc::invalid_argument, "conjugation element must be at least 1x1");
  check_finite(g);
  if (!is_invertible(g, cfg)) fail(errc::singular_matrix, "conjugation element is singular");
  if (kind == ConjugationKind::power && k < 1) fail(errc::invalid_argument, "power must be a positive integer");

  EntropyCertificate cert;
  add_step(cert, "SEMISIMPLE_ZERO", cite::semisimple_zero,
           "entropy of a semi-simple group endomorphism is 0; the toral component T(G) is trivial");
  add_step(cert, "SEMISIMPLE_POWER", cite::semisimple_power,
           kind == ConjugationKind::power
               ? "phi^" + std::to_string(k) + " = C_g, and h(phi^k) = k h(phi), so h(phi) = h(C_g)/k"
               : "phi = C_g is already a conjugation");
  add_step(cert, "LI_YORKE_ARGUMENT", cite::li_yorke_exists,
           "positive entropy would force a Li-Yorke pair, which conjugations do not admit");
  return cert;
}

EntropyCertificate reductive_entropy(const IntMatrix& center_t, const Matrix& center_b, const Matrix& center_s,
                                     const Matrix& derived_g, bool pi_proper, const NumericConfig& cfg,
                                     bool exact_cyclotomic) {
  EntropyCertificate center = abelian_entropy(center_t, center_b, center_s, cfg, exact_cyclotomic);
  EntropyCertificate derived = semisimple_entropy(derived_g, ConjugationKind::plain, 1, cfg);

  EntropyCertificate cert;
  cert.value = center.value;
  cert.contributions = center.contributions;
  add_step(cert, "REDUCTIVE_SPLIT", cite::reductive_split,
           "entropy computed on the covering Z(G)_0 x G' and pushed down along pi");
  add_step(cert, "PRODUCT_FORMULA", cite::product_formula,
           "h(phi~) = h(phi|Z(G)_0) + h(phi|G') = " + format_value(center.value) + " + 0");
  cert.trace.insert(cert.trace.end(), center.trace.begin(), center.trace.end());
  cert.trace.insert(cert.trace.end(), derived.trace.begin(), derived.trace.end());
  if (!pi_proper) {
    cert.conjectural = true;
    add_step(cert, "PI_PROPER_WARNING", cite::pi_proper_warning,
             "pi was not declared proper; the reduction is unproven here and the result is conjectural");
  }
  return cert;
}

EntropyCertificate product_entropy(const EntropyCertificate& a, const EntropyCertificate& b) {
  if (a.log_base != b.log_base) fail(errc::invalid_argument, "certificates use different log bases");
  EntropyCertificate cert;
  cert.log_base = a.log_base;
  cert.value = a.value + b.value;
  cert.conjectural = a.conjectural || b.conjectural;
  cert.contributions = a.contributions;
  cert.contributions.insert(cert.contributions.end(), b.contributions.begin(), b.contributions.end());
  add_step(cert, "PRODUCT_FORMULA", cite::product_formula,
           format_value(a.value) + " + " + format_value(b.value) + " = " + format_value(cert.value));
  cert.trace.insert(cert.trace.end(), a.trace.begin(), a.trace.end());
  cert.trace.insert(cert.trace.end(), b.trace.begin(), b.trace.end());
  return cert;
}

EntropyCertificate power_entropy(const EntropyCertificate& c, int k) {
  if (k < 1) fail(errc::invalid_argument, "power must be a positive integer");
  EntropyCertificate cert = c;
  cert.value = 0.0;
  for (auto& contrib : cert.contributions) {
    // the spectrum of the k-th power is the k-th powers of the spectrum
    const std::complex<double> powed = std::pow(std::complex<double>(contrib.re, contrib.im), k);
    contrib.re = powed.real();
    contrib.im = powed.imag();
    contrib.modulus = std::abs(powed);
    contrib.log_modulus *= k;
    cert.value += contrib.log_modulus;
  }
  prepend_step(cert, "POWER_FORMULA", cite::power_rule,
               "h(phi^" + std::to_string(k) + ") = " + std::to_string(k) + " h(phi)");
  return cert;
}

EntropyCertificate conjectural_general_entropy(const IntMatrix& t_r_prime, const IntMatrix& t_r_mod_r_prime,
                                               const NumericConfig& cfg, bool exact_cyclotomic) {
  EntropyCertificate a = torus_entropy(t_r_prime, cfg, exact_cyclotomic);
  EntropyCertificate b = torus_entropy(t_r_mod_r_prime, cfg, exact_cyclotomic);
  EntropyCertificate cert;
  cert.value = a.value + b.value;
  cert.conjectural = true;
  cert.contributions = a.contributions;
  cert.contributions.insert(cert.contributions.end(), b.contributions.begin(), b.contributions.end());
  add_step(cert, "GENERAL_CONJECTURE", cite::conjectural_general,
           "h(phi|T(R')) + h(phi~|T(R/R')) = " + format_value(a.value) + " + " + format_value(b.value));
  add_step(cert, "CONJECTURE_GAP", cite::conjectural_gap,
           "this general form is conjectural; it needs prop. 2.5 for locally compact principal bundles");
  cert.trace.insert(cert.trace.end(), a.trace.begin(), a.trace.end());
  cert.trace.insert(cert.trace.end(), b.trace.begin(), b.trace.end());
  return cert;
}

EntropyCertificate compute(const GroupDescriptor& g, const EndoDescriptor& e, const NumericConfig& cfg,
                           bool exact_cyclotomic) {
  const ValidationReport report = validate(g, e, cfg);
  if (!report.ok) fail(errc::validation_failed, report.summary());

  switch (g.variant) {
    case GroupVariant::torus:
      return torus_entropy(e.lattice_map, cfg, exact_cyclotomic);
    case GroupVariant::vector_space: {
      EntropyCertificate cert;
      add_step(cert, "VECTOR_TRIVIAL", cite::vector_trivial,
               "a linear isomorphism of a finite dimensional vector space has entropy 0");
      return cert;
    }
    case GroupVariant::abelian:
      return abelian_entropy(e.lattice_map, e.coupling, e.vector_map, cfg, exact_cyclotomic);
    case GroupVariant::nilpotent:
      return nilpotent_entropy(e.lattice_map, cfg, exact_cyclotomic);
    case GroupVariant::semisimple_linear:
      return semisimple_entropy(e.conjugator, e.conj_kind, e.power, cfg);
    case GroupVariant::reductive:
      return reductive_entropy(e.lattice_map, e.coupling, e.vector_map, e.conjugator, g.pi_proper, cfg,
                               exact_cyclotomic);
    case GroupVariant::compact: {
      EntropyCertificate cert = torus_entropy(e.lattice_map, cfg, exact_cyclotomic);
      prepend_step(cert, "COMPACT_REDUCTIVE", cite::compact_reductive,
                   "compact groups are reductive with pi proper; entropy reduces to the maximal torus of the "
                   "center");
      return cert;
    }
    case GroupVariant::general_conjecture:
      return conjectural_general_entropy(e.lattice_map, e.second_lattice_map, cfg, exact_cyclotomic);
  }
  fail(errc::unsupported_variant, "unhandled variant");
}

EntropyCertificate rebase_certificate(const EntropyCertificate& c, const std::string& base) {
  if (base != "e" && base != "2") fail(errc::invalid_argument, "log base must be \"e\" or \"2\"");
  if (base == c.log_base) return c;
  const double factor = base == "2" ? 1.0 / std::log(2.0) : std::log(2.0);
  EntropyCertificate out = c;
  out.log_base = base;
  out.value = 0.0;
  for (auto& contrib : out.contributions) {
    contrib.log_modulus *= factor;
    out.value += contrib.log_modulus;
  }
  if (out.contributions.empty()) out.value = c.value * factor;
  return out;
}

std::string certificate_to_json(const EntropyCertificate& c) {
  nlohmann::ordered_json j;
  j["value"] = c.value;
  j["log_base"] = c.log_base;
  j["conjectural"] = c.conjectural;
  j["contributions"] = nlohmann::ordered_json::array();
  for (const auto& contrib : c.contributions) {
    j["contributions"].push_back(nlohmann::ordered_json{{"re", contrib.re},
                                                        {"im", contrib.im},
                                                        {"modulus", contrib.modulus},
                                                        {"log_modulus", contrib.log_modulus}});
  }
  j["trace"] = nlohmann::ordered_json::array();
  for (const auto& step : c.trace) {
    j["trace"].push_back(
        nlohmann::ordered_json{{"rule", step.rule}, {"paper_ref", step.source_ref}, {"detail", step.detail}});
  }
  return j.dump(2) + "\n";
}

}  // namespace lieent
