#pragma once

#include <json.hpp>
#include <string>

#include "hm/decomp.hpp"
#include "hm/towers.hpp"

namespace hm::io {

// Ordered JSON keeps insertion order, so identical report objects serialize
// to identical bytes.
using json = nlohmann::ordered_json;

// Exact scalars travel as strings ("2/3", "-1"); plain JSON integers are
// also accepted on input.
std::string scalar_str(const Rat& a);
Rat parse_scalar(const json& j);

json field_json(const FieldSpec& f);
FieldSpec parse_field(const json& j);

// Category spec file: {"field": {...}, one of "table" | "poset" | "quiver"}.
// Unknown keys anywhere in a spec file are rejected with parse-error.
KCategory parse_category(const json& file);
// Emits the "table" form; parse_category(category_json(c)) reproduces c.
json category_json(const KCategory& c);

// Action spec file: {"category": {...}, "group": {"names", "table"},
// "action": {"kind": "trivial" | "permutation" | "matrices", ...}}.
GroupAction parse_action_file(const json& file);
json action_file_json(const GroupAction& a);

// Grading spec file: {"category", "group", "grading": {"components": [
// {"target", "source", "degree", "basis": [[scalars]]}]}}.
GradedCategory parse_grading_file(const json& file);
json grading_file_json(const GradedCategory& g);

// Equivariant module spec file: action file keys plus "module" (either the
// string "regular" or explicit bimodule tables) and, for explicit modules,
// "tau" matrices per group element and object pair.
EquivariantBimodule parse_equivariant_file(const json& file);
json equivariant_file_json(const EquivariantBimodule& m);

// Report builders. Every report carries the field, complex variant,
// truncation degree, and (where relevant) window metadata.
json validation_json(const std::string& subject, const ValidationReport& r);
json dims_json(const std::string& kind, const std::vector<long>& dims, bool normalized,
               const FieldSpec& f);
json strongly_graded_json(const StronglyGradedReport& full, const StronglyGradedReport& reduced,
                          const FieldSpec& f);
json galois_json(const GaloisCertificate& cert, const PropertyReport* props, const FieldSpec& f);
json check_json(const std::string& kind, const std::vector<std::string>& columns,
                const CheckReport& r, const FieldSpec& f);
json e2_json(const E2Page& page, const FieldSpec& f);
json phi_json(const PhiReport& r, const std::string& element, const FieldSpec& f);
json ses_json(const SesReport& r, int window);

// Deterministic aligned-text rendering of any report object: scalars as
// "key: value" lines, arrays of objects as aligned tables.
std::string render_table(const json& report);

// Read and parse a JSON file; throws parse-error on missing or malformed
// input.
json load_file(const std::string& path);

}  // namespace hm::io
