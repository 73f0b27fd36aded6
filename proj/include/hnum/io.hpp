#pragma once

#include <string>
#include <vector>

#include "hnum/cover.hpp"
#include "hnum/signs.hpp"

namespace hnum {

// JSON schema:
// { "degree": int, "genus": int, "pairs": [[v,v],...],
//   "edges": [{"from": "-inf"|index, "to": "+inf"|index, "weight": int,
//              "colour": "red"|"blue"|null, "dotted_pair": id|null}],
//   "splitting": "+-..." }
std::string cover_to_json(const TropicalCover& c, const RealStructure& rho,
                          const std::string& splitting);

struct ParsedCover {
    TropicalCover cover;
    RealStructure rho;
    std::string splitting;
};
ParsedCover cover_from_json(const std::string& text);

// Graphviz digraph; vertices ranked left to right, edge attributes carry
// weight, colour and dotting.
std::string cover_to_dot(const TropicalCover& c, const RealStructure& rho);

enum class ExportFormat { Json, Dot };
ExportFormat parse_export_format(const std::string& name); // "json" | "dot"

std::string export_cover(const CoverClass& cls, const std::string& splitting, ExportFormat fmt);

} // namespace hnum
