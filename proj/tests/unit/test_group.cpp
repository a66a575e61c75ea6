#include <doctest.h>

#include <fstream>
#include <json.hpp>

#include "helpers.hpp"
#include "lieent/group.hpp"

using namespace lieent;
using namespace testutil;

namespace {

EndoDescriptor torus_endo(const IntMatrix& t) {
  EndoDescriptor e;
  e.variant = GroupVariant::torus;
  e.lattice_map = t;
  return e;
}

EndoDescriptor abelian_endo(const IntMatrix& t, const Matrix& b, const Matrix& s) {
  EndoDescriptor e;
  e.variant = GroupVariant::abelian;
  e.lattice_map = t;
  e.coupling = b;
  e.vector_map = s;
  return e;
}

EndoDescriptor conjugation_endo(const Matrix& g) {
  EndoDescriptor e;
  e.variant = GroupVariant::semisimple_linear;
  e.conjugator = g;
  return e;
}

bool has_severity(const ValidationReport& r, Severity s, const std::string& code) {
  for (const auto& f : r.findings)
    if (f.severity == s && f.code == code) return true;
  return false;
}

}  // namespace

TEST_CASE("doubling on the circle validates with a covering warning") {
  const auto r = validate(GroupDescriptor::torus(1), torus_endo(imat(1, {2})));
  CHECK(r.ok);
  REQUIRE(has_severity(r, Severity::warning, "FINITE_COVERING"));
  for (const auto& f : r.findings)
    if (f.code == "FINITE_COVERING") {
      CHECK(f.message.find("2-fold covering") != std::string::npos);
      CHECK(f.message.find("proper") != std::string::npos);
    }
}

TEST_CASE("automorphisms validate without findings") {
  const auto r = validate(GroupDescriptor::torus(2), torus_endo(imat(2, {2, 1, 1, 1})));
  CHECK(r.ok);
  CHECK(r.findings.empty());
}

TEST_CASE("singular data is rejected") {
  const auto r = validate(GroupDescriptor::torus(1), torus_endo(imat(1, {0})));
  CHECK(!r.ok);
  CHECK(has_severity(r, Severity::error, "SINGULAR_LATTICE_MAP"));

  EndoDescriptor e;
  e.variant = GroupVariant::abelian;
  e.lattice_map = imat(1, {1});
  e.coupling = Matrix::Zero(1, 1);
  e.vector_map = Matrix::Zero(1, 1);
  const auto r2 = validate(GroupDescriptor::abelian(1, 1), e);
  CHECK(!r2.ok);
  CHECK(has_severity(r2, Severity::error, "NOT_SURJECTIVE"));
}

TEST_CASE("variant mismatch throws") {
  CHECK_THROWS_WITH_AS(validate(GroupDescriptor::torus(1), conjugation_endo(Matrix::Identity(2, 2))),
                       doctest::Contains("VARIANT_MISMATCH"), Error);
}

TEST_CASE("dimension mismatches are findings, not crashes") {
  const auto r = validate(GroupDescriptor::torus(2), torus_endo(imat(1, {2})));
  CHECK(!r.ok);
  CHECK(has_severity(r, Severity::error, "DIMENSION_MISMATCH"));

  EndoDescriptor e = abelian_endo(imat(1, {2}), Matrix::Zero(2, 1), Matrix::Identity(1, 1));
  const auto r2 = validate(GroupDescriptor::abelian(1, 1), e);
  CHECK(!r2.ok);
  CHECK(has_severity(r2, Severity::error, "DIMENSION_MISMATCH"));
}

TEST_CASE("nonzero coupling is recorded as informational") {
  EndoDescriptor e = abelian_endo(imat(1, {2}), Matrix::Ones(1, 1), Matrix::Identity(1, 1) * 3.0);
  const auto r = validate(GroupDescriptor::abelian(1, 1), e);
  CHECK(r.ok);
  CHECK(has_severity(r, Severity::info, "COUPLING_IGNORED"));
}

TEST_CASE("nilpotent descriptor checks the toral bound and differential shape") {
  EndoDescriptor e;
  e.variant = GroupVariant::nilpotent;
  e.lattice_map = imat(1, {2});
  CHECK(validate(GroupDescriptor::nilpotent(1, 3), e).ok);

  CHECK(!validate(GroupDescriptor::nilpotent(4, 3),
                  [] {
                    EndoDescriptor x;
                    x.variant = GroupVariant::nilpotent;
                    x.lattice_map = IntMatrix::identity(4);
                    return x;
                  }())
             .ok);

  e.differential = Matrix::Identity(2, 2);
  const auto r = validate(GroupDescriptor::nilpotent(1, 3), e);
  CHECK(!r.ok);
  CHECK(has_severity(r, Severity::error, "DIMENSION_MISMATCH"));

  e.differential = Matrix::Identity(3, 3);
  const auto r2 = validate(GroupDescriptor::nilpotent(1, 3), e);
  CHECK(r2.ok);
  CHECK(has_severity(r2, Severity::info, "DIFFERENTIAL_RECORDED"));
}

TEST_CASE("semisimple conjugation element must be invertible and unimodular") {
  Matrix g(2, 2);
  g << 2, 0, 0, 0.5;
  CHECK(validate(GroupDescriptor::semisimple(2), conjugation_endo(g)).ok);

  const auto r = validate(GroupDescriptor::semisimple(2), conjugation_endo(Matrix::Zero(2, 2)));
  CHECK(has_severity(r, Severity::error, "SINGULAR_MATRIX"));

  const auto r2 = validate(GroupDescriptor::semisimple(2), conjugation_endo(2.0 * Matrix::Identity(2, 2)));
  CHECK(has_severity(r2, Severity::error, "NOT_UNIMODULAR"));

  EndoDescriptor e = conjugation_endo(g);
  e.conj_kind = ConjugationKind::power;
  e.power = 0;
  CHECK(has_severity(validate(GroupDescriptor::semisimple(2), e), Severity::error, "INVALID_POWER"));
  e.power = 3;
  CHECK(validate(GroupDescriptor::semisimple(2), e).ok);
}

TEST_CASE("reductive descriptor warns when the projection is not known proper") {
  EndoDescriptor e;
  e.variant = GroupVariant::reductive;
  e.lattice_map = imat(1, {3});
  e.coupling = Matrix(1, 0);
  e.vector_map = Matrix(0, 0);
  Matrix g(2, 2);
  g << 0, -1, 1, 0;
  e.conjugator = g;

  const auto proper = validate(GroupDescriptor::reductive(1, 0, 2, true), e);
  CHECK(proper.ok);
  CHECK(!proper.has("PI_NOT_PROPER"));

  const auto improper = validate(GroupDescriptor::reductive(1, 0, 2, false), e);
  CHECK(improper.ok);
  REQUIRE(has_severity(improper, Severity::warning, "PI_NOT_PROPER"));
  for (const auto& f : improper.findings)
    if (f.code == "PI_NOT_PROPER") CHECK(f.source_ref.find("6.5") != std::string::npos);
}

TEST_CASE("validate is total over junk payloads") {
  for (int p = 0; p <= 2; ++p)
    for (int d = 0; d <= 2; ++d) {
      EndoDescriptor e;
      e.variant = GroupVariant::torus;
      e.lattice_map = IntMatrix(d);
      const auto r = validate(GroupDescriptor::torus(p), e);
      CHECK(r.ok == (p == d && p >= 0 ? (p == 0 || int_det(e.lattice_map) != 0) : false));
    }
}

TEST_CASE("toral component projects the right payload") {
  CHECK(toral_component(GroupDescriptor::torus(1), torus_endo(imat(1, {2}))) == imat(1, {2}));

  EndoDescriptor ab = abelian_endo(imat(2, {2, 1, 1, 1}), Matrix::Zero(2, 1), Matrix::Identity(1, 1));
  CHECK(toral_component(GroupDescriptor::abelian(2, 1), ab) == imat(2, {2, 1, 1, 1}));

  Matrix g(3, 3);
  g.setIdentity();
  EndoDescriptor ss;
  ss.variant = GroupVariant::semisimple_linear;
  ss.conjugator = g;
  CHECK(toral_component(GroupDescriptor::semisimple(3), ss).dim == 0);

  EndoDescriptor red;
  red.variant = GroupVariant::reductive;
  red.lattice_map = imat(1, {3});
  red.conjugator = g;
  CHECK(toral_component(GroupDescriptor::reductive(1, 0, 3, true), red) == imat(1, {3}));

  EndoDescriptor gen;
  gen.variant = GroupVariant::general_conjecture;
  gen.lattice_map = imat(1, {2});
  gen.second_lattice_map = imat(1, {3});
  CHECK_THROWS_WITH_AS(toral_component(GroupDescriptor::general_conjecture(1, 1), gen),
                       doctest::Contains("UNSUPPORTED_VARIANT"), Error);
}

TEST_CASE("descriptor parsing accepts the documented shapes") {
  const std::string text = R"({
    "group": {"variant": "ABELIAN", "toral_dim": 1, "vector_dim": 1},
    "endo": {"lattice_map": [[2]], "coupling": [[0.5]], "vector_map": [[3.0]]},
    "options": {"log_base": "2", "exact_cyclotomic": true}
  })";
  const DescriptorFile d = parse_descriptor(text);
  CHECK(d.group == GroupDescriptor::abelian(1, 1));
  CHECK(d.endo.lattice_map == imat(1, {2}));
  CHECK(d.endo.coupling(0, 0) == 0.5);
  CHECK(d.endo.vector_map(0, 0) == 3.0);
  CHECK(d.options.log_base == "2");
  CHECK(d.options.exact_cyclotomic);
}

TEST_CASE("parsing rejects unknown fields, bad integers, ragged rows") {
  CHECK_THROWS_WITH_AS(parse_descriptor(R"({"group": {"variant": "TORUS", "toral_dim": 1},
                                            "endo": {"lattice_map": [[2]]}, "extra": 1})"),
                       doctest::Contains("unknown field 'extra'"), Error);
  CHECK_THROWS_WITH_AS(parse_descriptor(R"({"group": {"variant": "TORUS", "toral_dim": 1, "bogus": 2},
                                            "endo": {"lattice_map": [[2]]}})"),
                       doctest::Contains("unknown field 'bogus'"), Error);
  CHECK_THROWS_WITH_AS(parse_descriptor(R"({"group": {"variant": "TORUS", "toral_dim": 1},
                                            "endo": {"lattice_map": [[2.5]]}})"),
                       doctest::Contains("exact JSON integers"), Error);
  CHECK_THROWS_WITH_AS(parse_descriptor(R"({"group": {"variant": "TORUS", "toral_dim": 2},
                                            "endo": {"lattice_map": [[2, 1], [1]]}})"),
                       doctest::Contains("square"), Error);
  CHECK_THROWS_WITH_AS(parse_descriptor(R"({"group": {"variant": "WHAT"}, "endo": {}})"),
                       doctest::Contains("unknown group variant"), Error);
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_descriptor("{\n  \"group\": {,}\n}");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::parse_error);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("serialization round-trips every variant") {
  std::vector<std::string> texts;

  texts.push_back(R"({"group": {"variant": "TORUS", "toral_dim": 1}, "endo": {"lattice_map": [[2]]}})");
  texts.push_back(R"({"group": {"variant": "VECTOR", "vector_dim": 2},
                      "endo": {"vector_map": [[0.5, 0.25], [1.5, 3.125]]}})");
  texts.push_back(R"({"group": {"variant": "ABELIAN", "toral_dim": 1, "vector_dim": 1},
                      "endo": {"lattice_map": [[2]], "coupling": [[0.1]], "vector_map": [[3.0]]}})");
  texts.push_back(R"({"group": {"variant": "NILPOTENT", "toral_dim": 1, "algebra_dim": 3},
                      "endo": {"toral_map": [[2]], "differential": [[1,0,0],[0,1,0],[0,0,1]]}})");
  texts.push_back(R"({"group": {"variant": "SEMISIMPLE_LINEAR", "matrix_size": 2},
                      "endo": {"kind": "POWER_OF_CONJUGATION", "k": 3, "g": [[2, 0], [0, 0.5]]}})");
  texts.push_back(R"({"group": {"variant": "REDUCTIVE",
                                "center": {"toral_dim": 1, "vector_dim": 0},
                                "derived": {"matrix_size": 2}, "pi_proper": false},
                      "endo": {"center": {"lattice_map": [[3]]},
                               "derived": {"kind": "CONJUGATION", "g": [[0, -1], [1, 0]]}}})");
  texts.push_back(R"({"group": {"variant": "COMPACT", "toral_dim": 1}, "endo": {"toral_map": [[2]]}})");
  texts.push_back(R"({"group": {"variant": "GENERAL_CONJECTURE", "toral_r_prime_dim": 1,
                                "toral_r_mod_r_prime_dim": 1},
                      "endo": {"toral_r_prime": [[2]], "toral_r_mod_r_prime": [[3]]}})");

  for (const auto& text : texts) {
    CAPTURE(text);
    const DescriptorFile d = parse_descriptor(text);
    const std::string once = serialize_descriptor(d);
    const DescriptorFile d2 = parse_descriptor(once);
    const std::string twice = serialize_descriptor(d2);
    CHECK(once == twice);
    CHECK(d2.group == d.group);
    CHECK(d2.endo.lattice_map == d.endo.lattice_map);
    CHECK(d2.endo.second_lattice_map == d.endo.second_lattice_map);
    CHECK(d2.endo.vector_map == d.endo.vector_map);
    CHECK(d2.endo.coupling == d.endo.coupling);
    CHECK(d2.endo.conjugator == d.endo.conjugator);
    CHECK(d2.endo.power == d.endo.power);
    CHECK(d2.options == d.options);
  }
}

TEST_CASE("schema is valid JSON and matches the shipped copy") {
  const auto schema = nlohmann::json::parse(descriptor_schema());
  CHECK(schema.contains("properties"));
#ifdef LIEENT_SOURCE_DIR
  std::ifstream f(std::string(LIEENT_SOURCE_DIR) + "/docs/descriptor-schema.json");
  REQUIRE(f.good());
  nlohmann::json shipped;
  f >> shipped;
  CHECK(shipped == schema);
#endif
}
