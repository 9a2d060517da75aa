#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "unavoidable/certify.hpp"
#include "unavoidable/complex.hpp"
#include "unavoidable/partition.hpp"
#include "unavoidable/realizability.hpp"

namespace unav {

using Json = nlohmann::ordered_json;

/// Rationals travel as strings ("3/5", "2") so no precision is lost.
Json rational_json(const Rational& value);
/// Accepts a string or an integer. Throws ParseError otherwise.
Rational rational_from_json(const Json& value);

/// Members in increasing order.
Json subset_json(Subset s);
Json subsets_json(std::span<const Subset> sets);

Json to_json(const PartitionWitness& w);
Json to_json(const PackingWitness& w);
Json to_json(const Measure& mu);
Json to_json(const WeightedHypergraph& family);
/// {feasible, margin, witness, note, constraints, pivots}
Json to_json(const LpVerdict& verdict);
Json to_json(const Certificate& certificate);

/// {"m": 5, "family": [[1,2],[3]], "omega": ["1/2", "1"]}
WeightedHypergraph parse_weights_json(std::string_view text);
/// {"weights": ["1/5", ...]}
Measure parse_measure_json(std::string_view text);

/// Reads a whole file; ParseError when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace unav
