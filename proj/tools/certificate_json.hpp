#pragma once

#include <json.hpp>

#include "origami/ring_analysis.hpp"

namespace origami::cli {

// {"product": [i, j], "terms": [{"generator": k, "monomial": {"m": e}, "coefficient": "n"}]}
nlohmann::ordered_json certificate_to_json(const Certificate& cert);
// Throws ParseError on malformed input.
Certificate certificate_from_json(const nlohmann::json& j, std::size_t projections);

}  // namespace origami::cli
