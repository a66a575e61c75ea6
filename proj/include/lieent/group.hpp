#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieent/intmat.hpp"
#include "lieent/linalg.hpp"

namespace lieent {

enum class GroupVariant {
  torus,
  vector_space,
  abelian,
  nilpotent,
  semisimple_linear,
  reductive,
  compact,
  general_conjecture,
};

const char* variant_name(GroupVariant v);
std::optional<GroupVariant> variant_from_name(const std::string& name);

// Structural description of a connected Lie group. Groups are described by
// the data the reduction theorems consume (dimensions and which class the
// group belongs to), not by charts or multiplication tables.
struct GroupDescriptor {
  GroupVariant variant = GroupVariant::torus;
  int toral_dim = 0;   // p; for GENERAL_CONJECTURE the dimension of T(R')
  int vector_dim = 0;  // q; for GENERAL_CONJECTURE the dimension of T(R/R')
  int algebra_dim = 0; // NILPOTENT ambient algebra dimension
  int matrix_size = 0; // SEMISIMPLE_LINEAR / REDUCTIVE derived part
  bool pi_proper = true;  // REDUCTIVE only

  static GroupDescriptor torus(int p);
  static GroupDescriptor vector_space(int q);
  static GroupDescriptor abelian(int p, int q);
  static GroupDescriptor nilpotent(int p, int n);
  static GroupDescriptor semisimple(int n);
  static GroupDescriptor reductive(int p, int q, int n, bool pi_proper);
  static GroupDescriptor compact(int p);
  static GroupDescriptor general_conjecture(int p, int q);

  bool operator==(const GroupDescriptor&) const = default;
};

enum class ConjugationKind { plain, power };

// Variant-matched endomorphism payload. The abelian fields double as the
// center payload of a REDUCTIVE descriptor, the conjugation fields as its
// derived payload.
struct EndoDescriptor {
  GroupVariant variant = GroupVariant::torus;

  IntMatrix lattice_map;         // toral map; GENERAL_CONJECTURE: T(R') map
  IntMatrix second_lattice_map;  // GENERAL_CONJECTURE: T(R/R') map
  Matrix coupling = Matrix(0, 0);       // ABELIAN p x q block
  Matrix vector_map = Matrix(0, 0);     // ABELIAN q x q isomorphism
  std::optional<Matrix> differential;   // NILPOTENT, recorded but not used

  ConjugationKind conj_kind = ConjugationKind::plain;
  int power = 1;
  Matrix conjugator = Matrix(0, 0);
};

enum class Severity { info, warning, error };
const char* severity_name(Severity s);

struct Finding {
  Severity severity = Severity::info;
  std::string code;
  std::string message;
  std::string source_ref;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Finding> findings;
  bool has(const std::string& code) const;
  std::string summary() const;  // one line per finding
};

// Total over matching variants: every payload yields a report. A variant
// mismatch between the two descriptors throws VARIANT_MISMATCH.
ValidationReport validate(const GroupDescriptor& g, const EndoDescriptor& e,
                          const NumericConfig& cfg = default_config());

// Lattice matrix of the endomorphism restricted to T(G). Trivial (0x0) for
// semisimple groups; undefined for GENERAL_CONJECTURE.
IntMatrix toral_component(const GroupDescriptor& g, const EndoDescriptor& e);

struct DescriptorOptions {
  std::string log_base = "e";  // "e" or "2"
  bool exact_cyclotomic = false;
  bool operator==(const DescriptorOptions&) const = default;
};

struct DescriptorFile {
  GroupDescriptor group;
  EndoDescriptor endo;
  DescriptorOptions options;
};

// JSON wire format. Unknown fields are rejected; lattice entries must be
// exact JSON integers; parse errors carry line and column.
DescriptorFile parse_descriptor(const std::string& text);
std::string serialize_descriptor(const DescriptorFile& d);
std::string descriptor_schema();

}  // namespace lieent
