#pragma once

#include <json.hpp>
#include <string>

#include "omega/aleph.hpp"
#include "omega/cli/evaluator.hpp"

namespace omega::cli {

enum class OutputFormat { Plain, Json };

using Json = nlohmann::ordered_json;

// {"valuation", "coefficients": [[num, den], ...], "known_order", "infinite_moment"}.
// valuation is null for zero and known_order is null for exact values; a
// numerator or denominator outside int64 is written as a decimal string.
Json to_json(const OmegaNumber& x);
Json to_json(const ExtendedOmega& x);
Json to_json(const AlephInt& x);
Json to_json(const Value& v);

// Inverse of to_json. Throws DomainError on malformed input.
ExtendedOmega extended_from_json(const Json& j);
OmegaNumber omega_from_json(const Json& j);

std::string render(const Value& v, OutputFormat fmt);
std::string render(const AlephInt& x, OutputFormat fmt);

}  // namespace omega::cli
