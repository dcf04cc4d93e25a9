#pragma once

#include "clasp/aarhus.hpp"
#include "clasp/clasper.hpp"
#include "clasp/diagrams.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace clasp {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "v1";

/// Parses text, converting syntax errors to InputError.
Json parse_json(std::string_view text);

// Every from_json-style reader throws InputError on schema violations and
// runs the type's own validity check.

/// Tree JSON. Negative colors print as {"label": labels[i]} when labels are
/// given and as {"label": i} otherwise.
Json to_json(const ColoredTree& t, const std::vector<std::string>* labels = nullptr);
ColoredTree tree_from_json(const Json& j, const std::vector<std::string>* labels = nullptr);

Json to_json(const TreeVector& v);
TreeVector tree_vector_from_json(const Json& j);

Json to_json(const Pattern& p);
/// Returns the tree and the optional "vertex" field.
std::pair<ColoredTree, std::optional<int>> pattern_input_from_json(const Json& j);
Pattern pattern_from_json(const Json& j);

Json to_json(const NPattern& q);
NPattern npattern_from_json(const Json& j);

Json to_json(const ClasperSpec& c);
ClasperSpec clasper_from_json(const Json& j);

Json to_json(const ClasperSystem& s);
ClasperSystem clasper_system_from_json(const Json& j);

Json to_json(const NullCertificate& c);
NullCertificate certificate_from_json(const Json& j);

Json to_json(const SurgeryPresentation& s);
SurgeryPresentation presentation_from_json(const Json& j);

Json to_json(const LeggedSeries& s);
LeggedSeries series_from_json(const Json& j);

Json to_json(const GluingResult& g);
GluingResult gluing_result_from_json(const Json& j);

Json to_json(const SphereVerdict& v);

/// Report only; not read back.
Json to_json(const ZminReport& r);

}  // namespace clasp
