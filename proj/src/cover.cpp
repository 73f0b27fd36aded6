#include "hnum/cover.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hnum/errors.hpp"

namespace hnum {

char colour_char(Colour c) {
    switch (c) {
        case Colour::Blue: return 'b';
        case Colour::Red: return 'r';
        default: return '-';
    }
}

int TropicalCover::rank(int endpoint) const {
    if (endpoint == kLeftEnd) return -1;
    if (endpoint == kRightEnd) return num_vertices();
    return endpoint;
}

bool TropicalCover::is_inner(int e) const {
    return edges[e].from >= 0 && edges[e].to >= 0;
}

bool TropicalCover::is_bridge(int e) const {
    int a = edges[e].from, b = edges[e].to;
    return a >= 0 && b >= 0 && b == a + 1 && a % 2 == 0;
}

Partition TropicalCover::left_profile() const {
    std::vector<int> parts;
    for (const Edge& e : edges)
        if (e.from == kLeftEnd) parts.push_back(e.weight);
    return Partition(std::move(parts));
}

Partition TropicalCover::right_profile() const {
    std::vector<int> parts;
    for (const Edge& e : edges)
        if (e.to == kRightEnd) parts.push_back(e.weight);
    return Partition(std::move(parts));
}

int TropicalCover::degree() const { return left_profile().sum(); }

namespace {

struct Dsu {
    std::vector<int> parent;
    int comps;
    explicit Dsu(int n) : parent(n), comps(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
};

} // namespace

bool TropicalCover::connected() const {
    int v = num_vertices();
    if (v == 0) return edges.size() == 1;
    Dsu dsu(v);
    for (const Edge& e : edges) {
        if (e.from == kLeftEnd && e.to == kRightEnd) return false; // untouched strand
        if (e.from >= 0 && e.to >= 0) dsu.unite(e.from, e.to);
    }
    return dsu.comps == 1;
}

int TropicalCover::genus() const {
    int v = num_vertices();
    int inner = 0;
    for (size_t e = 0; e < edges.size(); ++e) inner += is_inner((int)e);
    if (v == 0) return 0;
    Dsu dsu(v);
    for (const Edge& e : edges)
        if (e.from >= 0 && e.to >= 0) dsu.unite(e.from, e.to);
    return inner - v + dsu.comps;
}

bool RealStructure::is_dotted(int edge) const {
    for (const CFElem& el : dotted)
        if (el.e1 == edge || el.e2 == edge) return true;
    return false;
}

Colour RealStructure::colour_of_component(int comp) const {
    for (auto [id, c] : colours)
        if (id == comp) return c;
    return Colour::None;
}

std::optional<Violation> validate_cover(const TropicalCover& c, int g, const Partition& lambda,
                                        const Partition& mu) {
    const int nv = c.num_vertices();
    // Structural sanity comes first: endpoints ordered, weights positive.
    for (const Edge& e : c.edges) {
        if (e.weight < 1) return Violation{"structure", "non-positive edge weight"};
        if (e.from != kLeftEnd && (e.from < 0 || e.from >= nv))
            return Violation{"structure", "bad source endpoint"};
        if (e.to != kRightEnd && (e.to < 0 || e.to >= nv))
            return Violation{"structure", "bad target endpoint"};
        if (c.rank(e.from) >= c.rank(e.to))
            return Violation{"structure", "edge does not point left to right"};
    }
    for (int v = 0; v < nv; ++v) {
        int valence = 0;
        for (const Edge& e : c.edges) valence += (e.from == v) + (e.to == v);
        if (valence != 3)
            return Violation{"valence", "vertex " + std::to_string(v) + " has valence " +
                                            std::to_string(valence)};
    }
    for (int v = 0; v < nv; ++v) {
        int in = 0, out = 0;
        for (const Edge& e : c.edges) {
            if (e.to == v) in += e.weight;
            if (e.from == v) out += e.weight;
        }
        if (in != out)
            return Violation{"balancing", "vertex " + std::to_string(v) + ": in " +
                                              std::to_string(in) + " vs out " + std::to_string(out)};
    }
    // Constant degree over every slice between consecutive ranks.
    int deg = -1;
    for (int s = 0; s <= nv; ++s) {
        int total = 0;
        for (const Edge& e : c.edges)
            if (c.rank(e.from) < s && s <= c.rank(e.to)) total += e.weight;
        if (deg < 0) deg = total;
        if (total != deg)
            return Violation{"degree", "slice " + std::to_string(s) + " carries " +
                                           std::to_string(total) + ", expected " +
                                           std::to_string(deg)};
    }
    if (!c.connected()) return Violation{"connectivity", "cover is not connected"};
    if (c.genus() != g)
        return Violation{"genus", "b1 = " + std::to_string(c.genus()) + ", expected " +
                                      std::to_string(g)};
    if (!(c.left_profile() == lambda))
        return Violation{"left-profile", c.left_profile().str() + " != " + lambda.str()};
    if (!(c.right_profile() == mu))
        return Violation{"right-profile", c.right_profile().str() + " != " + mu.str()};
    return std::nullopt;
}

std::vector<int> even_bridges(const TropicalCover& c) {
    std::vector<int> out;
    for (size_t e = 0; e < c.edges.size(); ++e)
        if (c.is_bridge((int)e) && c.edges[e].weight % 2 == 0) out.push_back((int)e);
    return out;
}

namespace {

// Parallel inner edge pairs grouped by endpoints.
std::vector<std::pair<int, int>> parallel_inner_pairs(const TropicalCover& c) {
    std::map<std::pair<int, int>, std::vector<int>> by_ends;
    for (size_t e = 0; e < c.edges.size(); ++e)
        if (c.is_inner((int)e)) by_ends[{c.edges[e].from, c.edges[e].to}].push_back((int)e);
    std::vector<std::pair<int, int>> out;
    for (auto& [ends, ids] : by_ends) {
        if (ids.size() == 1) continue;
        if (ids.size() > 2)
            throw InvariantError("more than two parallel edges between one vertex pair");
        out.emplace_back(ids[0], ids[1]);
    }
    return out;
}

} // namespace

std::vector<CFElem> symmetric_circles(const TropicalCover& c) {
    std::vector<CFElem> out;
    for (auto [a, b] : parallel_inner_pairs(c))
        if (c.edges[a].weight == c.edges[b].weight) out.push_back(CFElem{a, b, false});
    return out;
}

std::vector<CFElem> nonsymmetric_even_bridge_circles(const TropicalCover& c) {
    std::vector<CFElem> out;
    for (auto [a, b] : parallel_inner_pairs(c)) {
        if (c.edges[a].weight == c.edges[b].weight) continue;
        if (c.is_bridge(a) && c.is_bridge(b) && c.edges[a].weight % 2 == 0 &&
            c.edges[b].weight % 2 == 0)
            out.push_back(CFElem{a, b, false});
    }
    return out;
}

std::vector<int> even_inner_undotted(const TropicalCover& c, const RealStructure& rho) {
    std::vector<int> out;
    for (size_t e = 0; e < c.edges.size(); ++e)
        if (c.is_inner((int)e) && c.edges[e].weight % 2 == 0 && !rho.is_dotted((int)e))
            out.push_back((int)e);
    return out;
}

EvenComponents even_components(const TropicalCover& c, const RealStructure& rho) {
    int n = (int)c.edges.size();
    std::vector<int> members;
    for (int e = 0; e < n; ++e)
        if (c.edges[e].weight % 2 == 0 && !rho.is_dotted(e)) members.push_back(e);
    Dsu dsu(n);
    // Adjacent when sharing an inner vertex.
    for (int v = 0; v < c.num_vertices(); ++v) {
        int first = -1;
        for (int e : members) {
            if (c.edges[e].from != v && c.edges[e].to != v) continue;
            if (first < 0)
                first = e;
            else
                dsu.unite(first, e);
        }
    }
    EvenComponents out;
    out.comp_of_edge.assign(n, -1);
    std::map<int, int> root_to_id;
    for (int e : members) {
        int root = dsu.find(e);
        auto it = root_to_id.find(root);
        if (it == root_to_id.end()) it = root_to_id.emplace(root, e).first;
        it->second = std::min(it->second, e);
    }
    for (int e : members) out.comp_of_edge[e] = root_to_id[dsu.find(e)];
    for (auto& [root, id] : root_to_id) out.comp_ids.push_back(id);
    std::sort(out.comp_ids.begin(), out.comp_ids.end());
    return out;
}

Colour edge_colour(const TropicalCover& c, const RealStructure& rho, int edge) {
    if (c.edges[edge].weight % 2 != 0 || rho.is_dotted(edge)) return Colour::None;
    EvenComponents comps = even_components(c, rho);
    return rho.colour_of_component(comps.comp_of_edge[edge]);
}

uint128 mult_enhanced(const TropicalCover& c, const RealStructure& rho) {
    std::vector<int> ebr = even_bridges(c);
    std::vector<int> einner = even_inner_undotted(c, rho);
    int outside_bridges = 0;
    for (int e : einner)
        if (!c.is_bridge(e)) ++outside_bridges;

    std::vector<CFElem> circles = symmetric_circles(c);
    int dotted_circles = 0;
    uint128 weight_product = 1;
    for (const CFElem& circ : circles) {
        if (!rho.is_dotted(circ.e1)) continue;
        ++dotted_circles;
        weight_product = checked_mul(weight_product, (uint128)c.edges[circ.e1].weight);
    }
    int cn = (int)nonsymmetric_even_bridge_circles(c).size();

    int exponent = outside_bridges + dotted_circles + cn;
    uint128 m = weight_product;
    for (int i = 0; i < exponent; ++i) m = checked_mul(m, 2);
    return m;
}

std::string canonical_key(const TropicalCover& c, const RealStructure& rho, bool with_colours) {
    struct Row {
        int from, to, weight;
        char colour;
        int unit; // dotted unit: index into rho.dotted, -1 if none
    };
    std::vector<Row> rows;
    rows.reserve(c.edges.size());
    for (size_t e = 0; e < c.edges.size(); ++e) {
        int unit = -1;
        for (size_t u = 0; u < rho.dotted.size(); ++u)
            if (rho.dotted[u].e1 == (int)e || rho.dotted[u].e2 == (int)e) unit = (int)u;
        char col = '-';
        if (with_colours) col = colour_char(edge_colour(c, rho, (int)e));
        rows.push_back(Row{c.edges[e].from, c.edges[e].to, c.edges[e].weight, col, unit});
    }
    auto rank = [&](int ep) { return c.rank(ep); };
    std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
        if (rank(a.from) != rank(b.from)) return rank(a.from) < rank(b.from);
        if (rank(a.to) != rank(b.to)) return rank(a.to) < rank(b.to);
        if (a.weight != b.weight) return a.weight < b.weight;
        if (a.colour != b.colour) return a.colour < b.colour;
        return a.unit < b.unit;
    });
    // Renumber dotted units by first appearance in the sorted order.
    std::map<int, int> unit_new;
    for (Row& r : rows) {
        if (r.unit < 0) continue;
        auto it = unit_new.find(r.unit);
        if (it == unit_new.end()) it = unit_new.emplace(r.unit, (int)unit_new.size()).first;
        r.unit = it->second;
    }
    std::string key = "r" + std::to_string(c.num_pairs) + ";";
    for (const Row& r : rows) {
        key += std::to_string(r.from) + "," + std::to_string(r.to) + "," +
               std::to_string(r.weight) + "," + r.colour + ",";
        key += (r.unit >= 0 ? std::to_string(r.unit) : "-");
        key += ";";
    }
    return key;
}

} // namespace hnum
