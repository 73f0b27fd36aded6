#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hnum/partition.hpp"
#include "hnum/rational.hpp"

namespace hnum {

// Edge endpoints: a vertex index in [0, 2r), or one of the two boundary
// sentinels.  Inner vertices are totally ordered left to right; vertex 2i and
// 2i+1 form the pair P_i realising the i-th branch point with a 3-cycle.
inline constexpr int kLeftEnd = -1;  // adjacent to -infinity
inline constexpr int kRightEnd = -2; // adjacent to +infinity

enum class Colour : uint8_t { None, Blue, Red };

char colour_char(Colour c);

struct Edge {
    int from = kLeftEnd; // kLeftEnd or vertex
    int to = kRightEnd;  // vertex or kRightEnd; rank(from) < rank(to)
    int weight = 0;

    bool operator==(const Edge& o) const = default;
};

// Weighted 3-valent graph over the ordered vertices; no metric data.
struct TropicalCover {
    int num_pairs = 0; // r
    std::vector<Edge> edges;

    int num_vertices() const { return 2 * num_pairs; }
    int rank(int endpoint) const; // -1 for left boundary, 2r for right
    bool is_inner(int e) const;

    // The edge joining the two vertices of one pair (circle shapes have two).
    bool is_bridge(int e) const;

    Partition left_profile() const;
    Partition right_profile() const;
    int degree() const; // total weight over the leftmost slice
    // First Betti number; meaningful once the cover is connected.
    int genus() const;
    bool connected() const;
};

// A symmetric circle (two parallel inner edges of equal weight) or a
// symmetric fork (two equal ends at one vertex).  e1 < e2 index into edges.
struct CFElem {
    int e1 = -1;
    int e2 = -1;
    bool is_fork = false;

    bool operator==(const CFElem& o) const = default;
    bool operator<(const CFElem& o) const {
        if (e1 != o.e1) return e1 < o.e1;
        return e2 < o.e2;
    }
};

// Dotted subset of CF(phi) plus a colour per component of the even-weight
// subgraph of C minus dotted interiors.  Component ids are the least edge
// index in the component, so the colouring is structurally constant on
// components.
struct RealStructure {
    std::vector<CFElem> dotted;
    std::vector<std::pair<int, Colour>> colours; // sorted by component id

    bool is_dotted(int edge) const;
    Colour colour_of_component(int comp) const;
};

struct Violation {
    std::string clause; // first violated clause name
    std::string detail;
};

// Checks, in order: structure, 3-valence, balancing, constant degree,
// connectivity, genus, profiles.  nullopt means the cover is valid.
std::optional<Violation> validate_cover(const TropicalCover& c, int g, const Partition& lambda,
                                        const Partition& mu);

// Derived sets of the multiplicity formula; always recomputed from the data.
std::vector<int> even_bridges(const TropicalCover& c);                      // E_b
std::vector<CFElem> symmetric_circles(const TropicalCover& c);              // C(phi)
std::vector<CFElem> nonsymmetric_even_bridge_circles(const TropicalCover& c); // C_n
std::vector<int> even_inner_undotted(const TropicalCover& c, const RealStructure& rho); // E(I_rho)

// Components of the even subgraph of C minus dotted interiors.
struct EvenComponents {
    std::vector<int> comp_of_edge; // -1 for edges outside the subgraph
    std::vector<int> comp_ids;     // sorted component ids (least edge index)
};
EvenComponents even_components(const TropicalCover& c, const RealStructure& rho);

Colour edge_colour(const TropicalCover& c, const RealStructure& rho, int edge);

// 2^(|E(I_rho)\E_b| + |C & I_rho| + |C_n|) * prod of dotted circle weights.
uint128 mult_enhanced(const TropicalCover& c, const RealStructure& rho);

// Deterministic serialisation, invariant under cover isomorphism (vertices
// are pinned by the ordering, so only parallel edges and fork ends may
// permute, which sorting absorbs).  with_colours selects the real-enhanced
// key; without, the universal (uncoloured) key.
std::string canonical_key(const TropicalCover& c, const RealStructure& rho, bool with_colours);

struct CoverClass {
    std::string key;
    TropicalCover cover;
    RealStructure rho;
    uint128 multiplicity = 0;
};

} // namespace hnum
