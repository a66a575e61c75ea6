#include <json.hpp>

#include "lieent/errors.hpp"
#include "lieent/group.hpp"

namespace lieent {

namespace {

using OJson = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& msg) { fail(errc::parse_error, msg); }

std::pair<int, int> line_column(const std::string& text, size_t byte) {
  int line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

void expect_object(const OJson& j, const std::string& ctx) {
  if (!j.is_object()) bad(ctx + " must be a JSON object");
}

void allow_keys(const OJson& j, std::initializer_list<const char*> keys, const std::string& ctx) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : keys)
      if (item.key() == k) known = true;
    if (!known) bad("unknown field '" + item.key() + "' in " + ctx);
  }
}

const OJson& need(const OJson& j, const char* key, const std::string& ctx) {
  auto it = j.find(key);
  if (it == j.end()) bad("missing field '" + std::string(key) + "' in " + ctx);
  return *it;
}

int need_dim(const OJson& j, const char* key, const std::string& ctx) {
  const OJson& v = need(j, key, ctx);
  if (!v.is_number_integer()) bad("field '" + std::string(key) + "' in " + ctx + " must be an integer");
  const long long d = v.get<long long>();
  if (d < 0) bad("field '" + std::string(key) + "' in " + ctx + " must be nonnegative");
  return static_cast<int>(d);
}

IntMatrix parse_lattice(const OJson& j, const std::string& ctx) {
  if (!j.is_array()) bad(ctx + " must be an array of arrays");
  const int n = static_cast<int>(j.size());
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const OJson& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      bad(ctx + " must be square: row " + std::to_string(i) + " has " + std::to_string(row.size()) +
          " entries, expected " + std::to_string(n));
    for (int k = 0; k < n; ++k) {
      if (!row[k].is_number_integer())
        bad(ctx + " entries must be exact JSON integers (row " + std::to_string(i) + ", column " +
            std::to_string(k) + ")");
      m.a[static_cast<size_t>(i) * n + k] = row[k].get<std::int64_t>();
    }
  }
  return m;
}

Matrix parse_real(const OJson& j, const std::string& ctx) {
  if (!j.is_array()) bad(ctx + " must be an array of arrays");
  const int rows = static_cast<int>(j.size());
  int cols = 0;
  if (rows > 0) {
    if (!j[0].is_array()) bad(ctx + " must be an array of arrays");
    cols = static_cast<int>(j[0].size());
  }
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const OJson& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      bad(ctx + " rows must all have " + std::to_string(cols) + " entries (row " + std::to_string(i) + ")");
    for (int k = 0; k < cols; ++k) {
      if (!row[k].is_number()) bad(ctx + " entries must be numbers (row " + std::to_string(i) + ")");
      m(i, k) = row[k].get<double>();
    }
  }
  return m;
}

OJson lattice_to_json(const IntMatrix& m) {
  OJson rows = OJson::array();
  for (int i = 0; i < m.dim; ++i) {
    OJson row = OJson::array();
    for (int k = 0; k < m.dim; ++k) row.push_back(m.at(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

OJson real_to_json(const Matrix& m) {
  OJson rows = OJson::array();
  for (int i = 0; i < m.rows(); ++i) {
    OJson row = OJson::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

GroupDescriptor parse_group(const OJson& j) {
  expect_object(j, "group");
  const OJson& vn = need(j, "variant", "group");
  if (!vn.is_string()) bad("group.variant must be a string");
  const auto variant = variant_from_name(vn.get<std::string>());
  if (!variant) bad("unknown group variant '" + vn.get<std::string>() + "'");

  GroupDescriptor g;
  switch (*variant) {
    case GroupVariant::torus:
      allow_keys(j, {"variant", "toral_dim"}, "group");
      g = GroupDescriptor::torus(need_dim(j, "toral_dim", "group"));
      break;
    case GroupVariant::vector_space:
      allow_keys(j, {"variant", "vector_dim"}, "group");
      g = GroupDescriptor::vector_space(need_dim(j, "vector_dim", "group"));
      break;
    case GroupVariant::abelian:
      allow_keys(j, {"variant", "toral_dim", "vector_dim"}, "group");
      g = GroupDescriptor::abelian(need_dim(j, "toral_dim", "group"), need_dim(j, "vector_dim", "group"));
      break;
    case GroupVariant::nilpotent:
      allow_keys(j, {"variant", "toral_dim", "algebra_dim"}, "group");
      g = GroupDescriptor::nilpotent(need_dim(j, "toral_dim", "group"), need_dim(j, "algebra_dim", "group"));
      break;
    case GroupVariant::semisimple_linear:
      allow_keys(j, {"variant", "matrix_size"}, "group");
      g = GroupDescriptor::semisimple(need_dim(j, "matrix_size", "group"));
      break;
    case GroupVariant::reductive: {
      allow_keys(j, {"variant", "center", "derived", "pi_proper"}, "group");
      const OJson& center = need(j, "center", "group");
      expect_object(center, "group.center");
      allow_keys(center, {"toral_dim", "vector_dim"}, "group.center");
      const OJson& derived = need(j, "derived", "group");
      expect_object(derived, "group.derived");
      allow_keys(derived, {"matrix_size"}, "group.derived");
      const OJson& pp = need(j, "pi_proper", "group");
      if (!pp.is_boolean()) bad("group.pi_proper must be a boolean");
      g = GroupDescriptor::reductive(need_dim(center, "toral_dim", "group.center"),
                                     need_dim(center, "vector_dim", "group.center"),
                                     need_dim(derived, "matrix_size", "group.derived"), pp.get<bool>());
      break;
    }
    case GroupVariant::compact:
      allow_keys(j, {"variant", "toral_dim"}, "group");
      g = GroupDescriptor::compact(need_dim(j, "toral_dim", "group"));
      break;
    case GroupVariant::general_conjecture:
      allow_keys(j, {"variant", "toral_r_prime_dim", "toral_r_mod_r_prime_dim"}, "group");
      g = GroupDescriptor::general_conjecture(need_dim(j, "toral_r_prime_dim", "group"),
                                              need_dim(j, "toral_r_mod_r_prime_dim", "group"));
      break;
  }
  return g;
}

IntMatrix lattice_or_empty(const OJson& j, const char* key, int dim, const std::string& ctx) {
  auto it = j.find(key);
  if (it == j.end()) {
    if (dim == 0) return IntMatrix();
    bad("missing field '" + std::string(key) + "' in " + ctx);
  }
  return parse_lattice(*it, ctx + "." + key);
}

Matrix real_or_default(const OJson& j, const char* key, int rows, int cols, const std::string& ctx) {
  auto it = j.find(key);
  if (it == j.end()) {
    if (rows == 0 || cols == 0) return Matrix::Zero(rows, cols);
    bad("missing field '" + std::string(key) + "' in " + ctx);
  }
  return parse_real(*it, ctx + "." + key);
}

void parse_abelian_payload(const OJson& j, const GroupDescriptor& g, EndoDescriptor& e, const std::string& ctx,
                           int p, int q) {
  (void)g;
  e.lattice_map = lattice_or_empty(j, "lattice_map", p, ctx);
  e.vector_map = real_or_default(j, "vector_map", q, q, ctx);
  auto it = j.find("coupling");
  e.coupling = it == j.end() ? Matrix::Zero(p, q) : parse_real(*it, ctx + ".coupling");
}

void parse_conjugation_payload(const OJson& j, EndoDescriptor& e, const std::string& ctx) {
  const OJson& kind = need(j, "kind", ctx);
  if (!kind.is_string()) bad(ctx + ".kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "CONJUGATION") {
    e.conj_kind = ConjugationKind::plain;
    e.power = 1;
  } else if (k == "POWER_OF_CONJUGATION") {
    e.conj_kind = ConjugationKind::power;
    const OJson& kk = need(j, "k", ctx);
    if (!kk.is_number_integer()) bad(ctx + ".k must be an integer");
    e.power = static_cast<int>(kk.get<long long>());
  } else {
    bad(ctx + ".kind must be CONJUGATION or POWER_OF_CONJUGATION");
  }
  e.conjugator = parse_real(need(j, "g", ctx), ctx + ".g");
}

EndoDescriptor parse_endo(const OJson& j, const GroupDescriptor& g) {
  expect_object(j, "endo");
  EndoDescriptor e;
  e.variant = g.variant;
  switch (g.variant) {
    case GroupVariant::torus:
      allow_keys(j, {"lattice_map"}, "endo");
      e.lattice_map = lattice_or_empty(j, "lattice_map", g.toral_dim, "endo");
      break;
    case GroupVariant::vector_space:
      allow_keys(j, {"vector_map"}, "endo");
      e.vector_map = real_or_default(j, "vector_map", g.vector_dim, g.vector_dim, "endo");
      break;
    case GroupVariant::abelian:
      allow_keys(j, {"lattice_map", "coupling", "vector_map"}, "endo");
      parse_abelian_payload(j, g, e, "endo", g.toral_dim, g.vector_dim);
      break;
    case GroupVariant::nilpotent:
      allow_keys(j, {"toral_map", "differential"}, "endo");
      e.lattice_map = lattice_or_empty(j, "toral_map", g.toral_dim, "endo");
      if (auto it = j.find("differential"); it != j.end()) e.differential = parse_real(*it, "endo.differential");
      break;
    case GroupVariant::semisimple_linear:
      allow_keys(j, {"kind", "k", "g"}, "endo");
      parse_conjugation_payload(j, e, "endo");
      break;
    case GroupVariant::reductive: {
      allow_keys(j, {"center", "derived"}, "endo");
      const OJson& center = need(j, "center", "endo");
      expect_object(center, "endo.center");
      allow_keys(center, {"lattice_map", "coupling", "vector_map"}, "endo.center");
      parse_abelian_payload(center, g, e, "endo.center", g.toral_dim, g.vector_dim);
      const OJson& derived = need(j, "derived", "endo");
      expect_object(derived, "endo.derived");
      allow_keys(derived, {"kind", "k", "g"}, "endo.derived");
      parse_conjugation_payload(derived, e, "endo.derived");
      break;
    }
    case GroupVariant::compact:
      allow_keys(j, {"toral_map"}, "endo");
      e.lattice_map = lattice_or_empty(j, "toral_map", g.toral_dim, "endo");
      break;
    case GroupVariant::general_conjecture:
      allow_keys(j, {"toral_r_prime", "toral_r_mod_r_prime"}, "endo");
      e.lattice_map = lattice_or_empty(j, "toral_r_prime", g.toral_dim, "endo");
      e.second_lattice_map = lattice_or_empty(j, "toral_r_mod_r_prime", g.vector_dim, "endo");
      break;
  }
  return e;
}

DescriptorOptions parse_options(const OJson& j) {
  DescriptorOptions o;
  expect_object(j, "options");
  allow_keys(j, {"log_base", "exact_cyclotomic"}, "options");
  if (auto it = j.find("log_base"); it != j.end()) {
    if (!it->is_string() || (it->get<std::string>() != "e" && it->get<std::string>() != "2"))
      bad("options.log_base must be \"e\" or \"2\"");
    o.log_base = it->get<std::string>();
  }
  if (auto it = j.find("exact_cyclotomic"); it != j.end()) {
    if (!it->is_boolean()) bad("options.exact_cyclotomic must be a boolean");
    o.exact_cyclotomic = it->get<bool>();
  }
  return o;
}

}  // namespace

DescriptorFile parse_descriptor(const std::string& text) {
  OJson j;
  try {
    j = OJson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    bad("invalid JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  expect_object(j, "descriptor");
  allow_keys(j, {"group", "endo", "options"}, "descriptor");

  DescriptorFile d;
  d.group = parse_group(need(j, "group", "descriptor"));
  d.endo = parse_endo(need(j, "endo", "descriptor"), d.group);
  if (auto it = j.find("options"); it != j.end()) d.options = parse_options(*it);
  return d;
}

std::string serialize_descriptor(const DescriptorFile& d) {
  OJson group;
  group["variant"] = variant_name(d.group.variant);
  switch (d.group.variant) {
    case GroupVariant::torus:
    case GroupVariant::compact:
      group["toral_dim"] = d.group.toral_dim;
      break;
    case GroupVariant::vector_space:
      group["vector_dim"] = d.group.vector_dim;
      break;
    case GroupVariant::abelian:
      group["toral_dim"] = d.group.toral_dim;
      group["vector_dim"] = d.group.vector_dim;
      break;
    case GroupVariant::nilpotent:
      group["toral_dim"] = d.group.toral_dim;
      group["algebra_dim"] = d.group.algebra_dim;
      break;
    case GroupVariant::semisimple_linear:
      group["matrix_size"] = d.group.matrix_size;
      break;
    case GroupVariant::reductive:
      group["center"] = OJson{{"toral_dim", d.group.toral_dim}, {"vector_dim", d.group.vector_dim}};
      group["derived"] = OJson{{"matrix_size", d.group.matrix_size}};
      group["pi_proper"] = d.group.pi_proper;
      break;
    case GroupVariant::general_conjecture:
      group["toral_r_prime_dim"] = d.group.toral_dim;
      group["toral_r_mod_r_prime_dim"] = d.group.vector_dim;
      break;
  }

  auto conjugation_json = [&]() {
    OJson c;
    c["kind"] = d.endo.conj_kind == ConjugationKind::plain ? "CONJUGATION" : "POWER_OF_CONJUGATION";
    if (d.endo.conj_kind == ConjugationKind::power) c["k"] = d.endo.power;
    c["g"] = real_to_json(d.endo.conjugator);
    return c;
  };

  OJson endo;
  switch (d.group.variant) {
    case GroupVariant::torus:
      endo["lattice_map"] = lattice_to_json(d.endo.lattice_map);
      break;
    case GroupVariant::vector_space:
      endo["vector_map"] = real_to_json(d.endo.vector_map);
      break;
    case GroupVariant::abelian:
      endo["lattice_map"] = lattice_to_json(d.endo.lattice_map);
      endo["coupling"] = real_to_json(d.endo.coupling);
      endo["vector_map"] = real_to_json(d.endo.vector_map);
      break;
    case GroupVariant::nilpotent:
      endo["toral_map"] = lattice_to_json(d.endo.lattice_map);
      if (d.endo.differential) endo["differential"] = real_to_json(*d.endo.differential);
      break;
    case GroupVariant::semisimple_linear:
      endo = conjugation_json();
      break;
    case GroupVariant::reductive:
      endo["center"] = OJson{{"lattice_map", lattice_to_json(d.endo.lattice_map)},
                             {"coupling", real_to_json(d.endo.coupling)},
                             {"vector_map", real_to_json(d.endo.vector_map)}};
      endo["derived"] = conjugation_json();
      break;
    case GroupVariant::compact:
      endo["toral_map"] = lattice_to_json(d.endo.lattice_map);
      break;
    case GroupVariant::general_conjecture:
      endo["toral_r_prime"] = lattice_to_json(d.endo.lattice_map);
      endo["toral_r_mod_r_prime"] = lattice_to_json(d.endo.second_lattice_map);
      break;
  }

  OJson out;
  out["group"] = std::move(group);
  out["endo"] = std::move(endo);
  out["options"] = OJson{{"log_base", d.options.log_base}, {"exact_cyclotomic", d.options.exact_cyclotomic}};
  return out.dump(2) + "\n";
}

std::string descriptor_schema() {
  static const char* schema = R"SCHEMA({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "Lie group endomorphism descriptor",
  "type": "object",
  "required": ["group", "endo"],
  "additionalProperties": false,
  "properties": {
    "group": {
      "type": "object",
      "description": "Structural description of the connected Lie group; the variant selects the endo payload shape.",
      "oneOf": [
        {"properties": {"variant": {"const": "TORUS"}, "toral_dim": {"$ref": "#/definitions/dim"}}, "required": ["variant", "toral_dim"], "additionalProperties": false},
        {"properties": {"variant": {"const": "VECTOR"}, "vector_dim": {"$ref": "#/definitions/dim"}}, "required": ["variant", "vector_dim"], "additionalProperties": false},
        {"properties": {"variant": {"const": "ABELIAN"}, "toral_dim": {"$ref": "#/definitions/dim"}, "vector_dim": {"$ref": "#/definitions/dim"}}, "required": ["variant", "toral_dim", "vector_dim"], "additionalProperties": false},
        {"properties": {"variant": {"const": "NILPOTENT"}, "toral_dim": {"$ref": "#/definitions/dim"}, "algebra_dim": {"$ref": "#/definitions/dim"}}, "required": ["variant", "toral_dim", "algebra_dim"], "additionalProperties": false},
        {"properties": {"variant": {"const": "SEMISIMPLE_LINEAR"}, "matrix_size": {"$ref": "#/definitions/dim"}}, "required": ["variant", "matrix_size"], "additionalProperties": false},
        {"properties": {"variant": {"const": "REDUCTIVE"}, "center": {"type": "object", "properties": {"toral_dim": {"$ref": "#/definitions/dim"}, "vector_dim": {"$ref": "#/definitions/dim"}}, "required": ["toral_dim", "vector_dim"], "additionalProperties": false}, "derived": {"type": "object", "properties": {"matrix_size": {"$ref": "#/definitions/dim"}}, "required": ["matrix_size"], "additionalProperties": false}, "pi_proper": {"type": "boolean"}}, "required": ["variant", "center", "derived", "pi_proper"], "additionalProperties": false},
        {"properties": {"variant": {"const": "COMPACT"}, "toral_dim": {"$ref": "#/definitions/dim"}}, "required": ["variant", "toral_dim"], "additionalProperties": false},
        {"properties": {"variant": {"const": "GENERAL_CONJECTURE"}, "toral_r_prime_dim": {"$ref": "#/definitions/dim"}, "toral_r_mod_r_prime_dim": {"$ref": "#/definitions/dim"}}, "required": ["variant", "toral_r_prime_dim", "toral_r_mod_r_prime_dim"], "additionalProperties": false}
      ]
    },
    "endo": {
      "type": "object",
      "description": "Endomorphism payload matching the group variant. Lattice maps are square row-major arrays of exact JSON integers; real matrices are row-major arrays of numbers. Lattice maps and vector maps may be omitted when their dimension is 0; a missing coupling block defaults to zero.",
      "oneOf": [
        {"description": "TORUS", "properties": {"lattice_map": {"$ref": "#/definitions/lattice"}}, "additionalProperties": false},
        {"description": "VECTOR", "properties": {"vector_map": {"$ref": "#/definitions/realmat"}}, "additionalProperties": false},
        {"description": "ABELIAN", "properties": {"lattice_map": {"$ref": "#/definitions/lattice"}, "coupling": {"$ref": "#/definitions/realmat"}, "vector_map": {"$ref": "#/definitions/realmat"}}, "additionalProperties": false},
        {"description": "NILPOTENT", "properties": {"toral_map": {"$ref": "#/definitions/lattice"}, "differential": {"$ref": "#/definitions/realmat"}}, "additionalProperties": false},
        {"description": "SEMISIMPLE_LINEAR", "$ref": "#/definitions/conjugation"},
        {"description": "REDUCTIVE", "properties": {"center": {"type": "object", "properties": {"lattice_map": {"$ref": "#/definitions/lattice"}, "coupling": {"$ref": "#/definitions/realmat"}, "vector_map": {"$ref": "#/definitions/realmat"}}, "additionalProperties": false}, "derived": {"$ref": "#/definitions/conjugation"}}, "required": ["center", "derived"], "additionalProperties": false},
        {"description": "COMPACT", "properties": {"toral_map": {"$ref": "#/definitions/lattice"}}, "additionalProperties": false},
        {"description": "GENERAL_CONJECTURE", "properties": {"toral_r_prime": {"$ref": "#/definitions/lattice"}, "toral_r_mod_r_prime": {"$ref": "#/definitions/lattice"}}, "additionalProperties": false}
      ]
    },
    "options": {
      "type": "object",
      "properties": {
        "log_base": {"enum": ["e", "2"], "default": "e"},
        "exact_cyclotomic": {"type": "boolean", "default": false, "description": "For lattice maps of dimension at most 6, verify zero entropy exactly via cyclotomic factorization of the characteristic polynomial."}
      },
      "additionalProperties": false
    }
  },
  "definitions": {
    "dim": {"type": "integer", "minimum": 0},
    "lattice": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
    "realmat": {"type": "array", "items": {"type": "array", "items": {"type": "number"}}},
    "conjugation": {
      "type": "object",
      "properties": {"kind": {"enum": ["CONJUGATION", "POWER_OF_CONJUGATION"]}, "k": {"type": "integer", "minimum": 1}, "g": {"$ref": "#/definitions/realmat"}},
      "required": ["kind", "g"],
      "additionalProperties": false
    }
  }
}
)SCHEMA";
  return schema;
}

}  // namespace lieent
