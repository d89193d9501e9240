#pragma once

// JSON wire format for every object kind. Output is canonical: keys sorted
// (nlohmann's default object map) and floats in shortest round-trip form.

#include <optional>
#include <string>

#include <json.hpp>

#include "ybe/brace.hpp"
#include "ybe/matrix.hpp"
#include "ybe/solution.hpp"
#include "ybe/weights.hpp"

namespace ybe {

using nlohmann::json;

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class ObjectKind { brace, ring, solution, weights, matrix, partition };
std::string kind_name(ObjectKind k);
/// Reads "kind"; an object with only "classes" is a partition. Throws IoError.
ObjectKind object_kind(const json& j);

json to_json(const FiniteBrace& b);
json to_json(const FiniteRing& r);
json to_json(const SetSolution& s);
json to_json(const PartitionedSet& p);
json to_json(const WeightSystem& d);
json to_json(const CMatrix& m);
/// Adds a "rational" array of exact strings ("7/9") parallel to "entries".
json to_json(const CMatrix& m, const std::vector<std::string>& rational);

FiniteBrace brace_from_json(const json& j);
FiniteRing ring_from_json(const json& j);
SetSolution solution_from_json(const json& j);
PartitionedSet partition_from_json(const json& j);
WeightSystem weights_from_json(const json& j);
/// Validates any "rational" annotation against the stored floats.
CMatrix matrix_from_json(const json& j);

/// Weight or matrix entry: [re, im], a number, or "p/q" optionally followed by
/// "@k/m" for the factor e^{2πik/m}.
cplx parse_complex(const json& v);
cplx parse_complex_text(const std::string& s);

/// Best-effort small-denominator rational for x ("7/9"); nullopt if none fits.
std::optional<std::string> rational_text(double x, int max_den = 1000);

json read_json_file(const std::string& path);
std::string canonical_dump(const json& j);
void write_json_file(const std::string& path, const json& j);

}  // namespace ybe
