#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "eeh/axiomset.hpp"
#include "eeh/complex.hpp"
#include "eeh/gadgets.hpp"
#include "eeh/reduction.hpp"

namespace eeh {

using Json = nlohmann::ordered_json;

/// Parses text; FormatError names `what` and the parser's position.
Json parse_json(const std::string& text, const std::string& what = "input");
/// Reads and parses a file; FormatError on I/O or syntax problems.
Json read_json_file(const std::string& path);

/// `{"name": <optional>, "facets": [[label, ...], ...]}`.
Complex complex_from_json(const Json& j);
Json complex_to_json(const Complex& complex, const std::optional<std::string>& name = std::nullopt);

struct Certificate {
  int budget = 0;
  MoveSequence moves;
};

/// `{"budget": p, "moves": [{"op": "collapse"|"expand", "free": [...], "pair": [...]}]}`.
Certificate certificate_from_json(const Json& j);
Json certificate_to_json(const Certificate& certificate);

/// `{"sentences": [...], "implications": [{"premises": [...], "conclusion": s}], "budget": p}`.
AxiomSetInstance instance_from_json(const Json& j);
Json instance_to_json(const AxiomSetInstance& instance);

/// `{"f": [[...], ...], "e": [[...], ...]}`.
Json port_map_to_json(const GadgetHandle& gadget);

/// `{"gadgets": {s: {"m", "l", "f", "e", "vertex_map"}}, "classes": {rep: [...]}}`.
Json provenance_to_json(const ReductionOutput& output);

Json simplex_to_json(const Simplex& s);

}  // namespace eeh
