#pragma once
// JSON exchange format for algebras, lattice algebras, modules and reports.
//
// algebra: {"dim", "labels", "sc": [[i, j, k, "num/den"], ...],
//           "field": "F5" | "Q" | "Zloc(5)", "identity": [...],
//           "grading": [...], "x_grading": [[...], ...]}
// module:  {"dim", "field", "action": [[a, row, col, "num/den"], ...],
//           "grading": [...], "x_grading": [[...], ...]}

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "kzl/algebra.hpp"
#include "kzl/forced.hpp"
#include "kzl/koszul.hpp"
#include "kzl/resolution.hpp"

namespace kzl::io {

using nlohmann::json;

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FieldKind { prime, rationals, plocal };
struct FieldSpec {
  FieldKind kind = FieldKind::prime;
  unsigned p = 0;  // 0 for rationals
};
FieldSpec parse_field(const std::string& s);
std::string field_string(const FieldSpec& f);

json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);

// over F_p; coefficients "num/den" are reduced mod p
Algebra algebra_from_json(const json& j);
json algebra_to_json(const Algebra& A);

// "Zloc(p)" directly; "Q" needs p from the caller (p_override > 0)
LatticeAlgebra lattice_from_json(const json& j, unsigned p_override = 0);
json lattice_to_json(const LatticeAlgebra& A);

Module module_from_json(const json& j, const AlgebraPtr& A);
json module_to_json(const Module& M);

json ext_table_to_json(const ExtTable& T);
json verdict_to_json(const Verdict& v, const std::vector<std::string>& labels = {});

// unit of A from the structure constants; throws FormatError if none
Vec find_identity(const Algebra& A);

}  // namespace kzl::io
