#include <stdexcept>

#include "ildpc/incidence.hpp"
#include "json.hpp"

namespace ildpc {

std::string graph_spec_to_json(const GraphSpec& spec) {
    nlohmann::json doc;
    doc["family"] = spec.family == Family::field ? "field" : "ring";
    doc["base"] = spec.base;
    if (spec.family == Family::field) {
        doc["modulus"] = FieldCtx::build(spec.base).modulus();  // low degree first
    } else {
        doc["modulus"] = nullptr;
    }
    if (spec.restriction)
        doc["restriction"] = *spec.restriction;
    else
        doc["restriction"] = nullptr;
    doc["component"] = spec.component == ComponentSelection::largest ? "largest" : "all";
    return doc.dump(2) + "\n";
}

GraphSpec graph_spec_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed graph spec document: ") + e.what());
    }
    GraphSpec spec;
    const std::string family = doc.at("family").get<std::string>();
    if (family == "field")
        spec.family = Family::field;
    else if (family == "ring")
        spec.family = Family::ring;
    else
        throw std::invalid_argument("graph spec family must be \"field\" or \"ring\"");
    spec.base = doc.at("base").get<int>();
    if (spec.base < 2) throw std::invalid_argument("graph spec base must be >= 2");
    if (doc.contains("restriction") && !doc["restriction"].is_null())
        spec.restriction = doc["restriction"].get<std::vector<int>>();
    if (doc.contains("component")) {
        const std::string sel = doc["component"].get<std::string>();
        if (sel == "largest")
            spec.component = ComponentSelection::largest;
        else if (sel == "all")
            spec.component = ComponentSelection::all;
        else
            throw std::invalid_argument("graph spec component must be \"all\" or \"largest\"");
    }
    if (doc.contains("modulus") && !doc["modulus"].is_null() && spec.family == Family::field) {
        // The modulus is canonical; a mismatch means the document came from an
        // incompatible builder.
        const auto given = doc["modulus"].get<std::vector<int>>();
        if (given != FieldCtx::build(spec.base).modulus())
            throw std::invalid_argument("graph spec modulus is not the canonical modulus");
    }
    return spec;
}

}  // namespace ildpc
