#include "simflow/io.hpp"

#include "simflow/error.hpp"

namespace simflow {

ComplexDocument parse_document(std::string_view text)
{
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!root.is_object()) throw Error(ErrorKind::ParseError, "document must be a JSON object");

    ComplexDocument doc;
    if (root.contains("name")) {
        if (!root["name"].is_string()) throw Error(ErrorKind::ParseError, "field 'name' must be a string");
        doc.name = root["name"].get<std::string>();
    }
    if (root.contains("metadata")) {
        if (!root["metadata"].is_object()) throw Error(ErrorKind::ParseError, "field 'metadata' must be an object");
        doc.metadata = root["metadata"];
    }
    if (!root.contains("facets")) throw Error(ErrorKind::ParseError, "missing required field 'facets'");
    const auto& facets = root["facets"];
    if (!facets.is_array()) throw Error(ErrorKind::ParseError, "field 'facets' must be an array");
    for (std::size_t i = 0; i < facets.size(); ++i) {
        const auto& f = facets[i];
        const std::string where = "facets[" + std::to_string(i) + "]";
        if (!f.is_array()) throw Error(ErrorKind::ParseError, where + " must be an array");
        std::vector<std::uint64_t> vertices;
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (!f[j].is_number_unsigned())
                throw Error(ErrorKind::ParseError,
                            where + "[" + std::to_string(j) + "] must be a nonnegative integer");
            vertices.push_back(f[j].get<std::uint64_t>());
        }
        doc.facets.push_back(std::move(vertices));
    }
    return doc;
}

SimplicialComplex parse_complex(std::string_view text) { return build_complex(parse_document(text).facets); }

ComplexDocument to_document(const SimplicialComplex& complex, std::optional<std::string> name)
{
    ComplexDocument doc;
    doc.name = std::move(name);
    doc.facets = complex.facet_lists(false);
    const auto& labels = complex.original_labels();
    bool identity = true;
    for (std::size_t v = 0; v < labels.size(); ++v) identity = identity && labels[v] == v;
    if (!identity) doc.metadata["original_labels"] = labels;
    return doc;
}

nlohmann::json to_json(const ComplexDocument& document)
{
    nlohmann::json out = nlohmann::json::object();
    if (document.name) out["name"] = *document.name;
    out["facets"] = document.facets;
    if (!document.metadata.empty()) out["metadata"] = document.metadata;
    return out;
}

std::string serialize_complex(const SimplicialComplex& complex, std::optional<std::string> name)
{
    return to_json(to_document(complex, std::move(name))).dump();
}

} // namespace simflow
