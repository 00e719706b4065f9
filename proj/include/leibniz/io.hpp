#pragma once

// JSON encodings: algebra files in, reports out.
//
// Algebra file:
//   {"field": {"prime": 3} | "rationals",
//    "dim": 3,
//    "constants": [[1, 1, 3, 1], [2, 2, 3, "1"]],   // [i, j, k, c_ijk], 1-based
//    "labels": ["a1", "a2", "a3"]}                 // optional
// Scalars are integers or "num/den" strings.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "leibniz/theorem1.hpp"

namespace leibniz {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "leibniz-kit";
inline constexpr const char* kToolVersion = "1.0.0";

struct AlgebraFile {
  StructureConstants constants;
  std::vector<std::string> labels;
};

FieldSpec field_from_json(const Json& j);
Json field_to_json(const FieldSpec& f);

/// Throws Error(Parse) with the offending field named in the message.
AlgebraFile parse_algebra(const Json& j);
/// Reads and parses a file; JSON syntax errors report line and column.
AlgebraFile read_algebra_file(const std::filesystem::path& path);
Json algebra_to_json(const Algebra& a);

Json scalar_to_json(const Scalar& s);
Json vector_to_json(std::span<const Scalar> v);
/// RREF basis rows.
Json subspace_to_json(const Subspace& s);
/// Row-major nested arrays.
Json matrix_to_json(const Matrix& m);
/// Column-major: one array per basis image.
Json map_to_json(const LinearMap& f);

/// λ read off a Lei4-shaped table ([a1,a1] = a3, [a2,a2] = λ a3, nothing
/// else), or nullopt if the table has another shape.
std::optional<Scalar> lei4_lambda(const Algebra& a);

// Report bodies for each CLI command.
Json check_results(const std::vector<LeibnizViolation>& violations);
Json invariants_results(const Algebra& a);
Json enumeration_results(const AutSet& s, bool list_elements);
Json theorem1_results(const Theorem1Report& r, bool list_differences);
Json form_results(const Algebra& a, const Vector& generator);

/// {"tool", "version", "command", "results"}; keys in that order.
Json make_report(const Json& command, Json results);

}  // namespace leibniz
