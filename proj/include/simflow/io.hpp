#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "simflow/complex.hpp"

namespace simflow {

/// {"name": ..., "facets": [[...], ...], "metadata": {...}}; only "facets"
/// is required.
struct ComplexDocument {
    std::optional<std::string> name;
    std::vector<std::vector<std::uint64_t>> facets;
    nlohmann::json metadata = nlohmann::json::object();
};

/// Throws ParseError naming the offending field or input position.
ComplexDocument parse_document(std::string_view text);

/// parse_document followed by build_complex.
SimplicialComplex parse_complex(std::string_view text);

/// Canonical document: dense facets, with metadata.original_labels[v] giving
/// the caller's id for vertex v whenever the labels were not already 0..V-1.
ComplexDocument to_document(const SimplicialComplex& complex, std::optional<std::string> name = std::nullopt);

nlohmann::json to_json(const ComplexDocument& document);
std::string serialize_complex(const SimplicialComplex& complex, std::optional<std::string> name = std::nullopt);

} // namespace simflow
