#include "hnum/io.hpp"

#include <json.hpp>

#include "hnum/errors.hpp"

namespace hnum {

using nlohmann::json;

namespace {

json endpoint_to_json(int ep, bool from) {
    if (from && ep == kLeftEnd) return "-inf";
    if (!from && ep == kRightEnd) return "+inf";
    return ep;
}

int endpoint_from_json(const json& j, bool from) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (from && s == "-inf") return kLeftEnd;
        if (!from && s == "+inf") return kRightEnd;
        throw ParseError("bad endpoint \"" + s + "\"");
    }
    return j.get<int>();
}

int dotted_unit_of(const RealStructure& rho, int edge) {
    for (size_t u = 0; u < rho.dotted.size(); ++u)
        if (rho.dotted[u].e1 == edge || rho.dotted[u].e2 == edge) return (int)u;
    return -1;
}

} // namespace

std::string cover_to_json(const TropicalCover& c, const RealStructure& rho,
                          const std::string& splitting) {
    json j;
    j["degree"] = c.degree();
    j["genus"] = c.genus();
    json pairs = json::array();
    for (int p = 0; p < c.num_pairs; ++p) pairs.push_back(json::array({2 * p, 2 * p + 1}));
    j["pairs"] = pairs;
    json edges = json::array();
    for (size_t e = 0; e < c.edges.size(); ++e) {
        json je;
        je["from"] = endpoint_to_json(c.edges[e].from, true);
        je["to"] = endpoint_to_json(c.edges[e].to, false);
        je["weight"] = c.edges[e].weight;
        Colour col = edge_colour(c, rho, (int)e);
        if (col == Colour::None)
            je["colour"] = nullptr;
        else
            je["colour"] = col == Colour::Blue ? "blue" : "red";
        int unit = dotted_unit_of(rho, (int)e);
        if (unit < 0)
            je["dotted_pair"] = nullptr;
        else
            je["dotted_pair"] = unit;
        edges.push_back(je);
    }
    j["edges"] = edges;
    j["splitting"] = splitting;
    return j.dump(2);
}

ParsedCover cover_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad cover JSON: ") + e.what());
    }
    ParsedCover out;
    out.cover.num_pairs = (int)j.at("pairs").size();
    std::vector<std::pair<int, int>> units; // unit id -> (e1, e2)
    std::vector<Colour> colours;
    for (const json& je : j.at("edges")) {
        Edge e;
        e.from = endpoint_from_json(je.at("from"), true);
        e.to = endpoint_from_json(je.at("to"), false);
        e.weight = je.at("weight").get<int>();
        int idx = (int)out.cover.edges.size();
        out.cover.edges.push_back(e);
        Colour col = Colour::None;
        if (!je.at("colour").is_null())
            col = je.at("colour").get<std::string>() == "blue" ? Colour::Blue : Colour::Red;
        colours.push_back(col);
        if (!je.at("dotted_pair").is_null()) {
            int unit = je.at("dotted_pair").get<int>();
            if (unit < 0) throw ParseError("negative dotted unit id");
            if (unit >= (int)units.size()) units.resize(unit + 1, {-1, -1});
            if (units[unit].second >= 0)
                throw ParseError("dotted unit with more than two edges");
            (units[unit].first < 0 ? units[unit].first : units[unit].second) = idx;
        }
    }
    for (auto [e1, e2] : units) {
        if (e1 < 0 || e2 < 0) throw ParseError("dotted unit with fewer than two edges");
        CFElem el;
        el.e1 = std::min(e1, e2);
        el.e2 = std::max(e1, e2);
        el.is_fork = !(out.cover.edges[el.e1].from >= 0 && out.cover.edges[el.e1].to >= 0);
        out.rho.dotted.push_back(el);
    }
    EvenComponents comps = even_components(out.cover, out.rho);
    for (int comp : comps.comp_ids) {
        Colour col = Colour::None;
        for (size_t e = 0; e < colours.size(); ++e) {
            if (comps.comp_of_edge[e] != comp || colours[e] == Colour::None) continue;
            if (col != Colour::None && col != colours[e])
                throw ParseError("two colours inside one even component");
            col = colours[e];
        }
        if (col != Colour::None) out.rho.colours.emplace_back(comp, col);
    }
    out.splitting = j.value("splitting", std::string());
    return out;
}

std::string cover_to_dot(const TropicalCover& c, const RealStructure& rho) {
    std::string s = "digraph cover {\n  rankdir=LR;\n  node [shape=circle, width=0.2, label=\"\"];\n";
    s += "  left [label=\"-inf\", shape=plaintext];\n";
    s += "  right [label=\"+inf\", shape=plaintext];\n";
    for (int v = 0; v < c.num_vertices(); ++v)
        s += "  v" + std::to_string(v) + " [xlabel=\"x" + std::to_string(v + 1) + "\"];\n";
    // Keep the drawing in sweep order.
    s += "  left";
    for (int v = 0; v < c.num_vertices(); ++v) s += " -> v" + std::to_string(v);
    s += " -> right [style=invis, weight=100];\n";
    for (size_t e = 0; e < c.edges.size(); ++e) {
        const Edge& ed = c.edges[e];
        std::string from = ed.from == kLeftEnd ? "left" : "v" + std::to_string(ed.from);
        std::string to = ed.to == kRightEnd ? "right" : "v" + std::to_string(ed.to);
        std::string attrs = "label=\"" + std::to_string(ed.weight) + "\"";
        Colour col = edge_colour(c, rho, (int)e);
        if (col == Colour::Blue) attrs += ", color=blue";
        if (col == Colour::Red) attrs += ", color=red";
        if (rho.is_dotted((int)e)) attrs += ", style=dotted";
        s += "  " + from + " -> " + to + " [" + attrs + "];\n";
    }
    s += "}\n";
    return s;
}

ExportFormat parse_export_format(const std::string& name) {
    if (name == "json") return ExportFormat::Json;
    if (name == "dot") return ExportFormat::Dot;
    throw ParseError("unknown export format \"" + name + "\" (expected json or dot)");
}

std::string export_cover(const CoverClass& cls, const std::string& splitting, ExportFormat fmt) {
    if (fmt == ExportFormat::Json) return cover_to_json(cls.cover, cls.rho, splitting);
    return cover_to_dot(cls.cover, cls.rho);
}

} // namespace hnum
