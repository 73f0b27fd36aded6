#include "hnum/templates.hpp"

#include "hnum/errors.hpp"

namespace hnum {

const char* shape_name(ShapeId s) {
    static const char* names[kNumShapes] = {"i",  "ii", "iii", "iv",  "v",    "vi",  "vii",
                                            "viii", "ix", "x",  "xi",  "xii", "xiii", "xiv"};
    return names[(int)s];
}

// The signed-pair colour table: one row per shape, positive
// colours per slot.  B = blue, R = red, dash = odd or absent.
//
//          InV1  InV2  OutV1 OutV2 Bridge Bridge2
//   i       -     B     -     B      B      -      (pair joins; out e+2k)
//   ii      -     -     -     -      B      -
//   iii     B     -     B     -      B      -      (cuts to pair)
//   iv      -     -     -     -      B      -
//   v       B     B     B     B      B      -
//   vi      R     B     -     -      -      -
//   vii     R     -     -     R      -      -
//   viii    B     -     B     -      B      -
//   ix      -     B     B     -      -      -
//   x       -     B     -     B      B      -
//   xi      -     -     B     R      -      -
//   xii     -     -     -     -      B      -
//   xiii    -     -     -     -      -      B      (even circle edge)
//   xiv     B     -     -     B      B      B
namespace {
constexpr Colour N = Colour::None, B = Colour::Blue, R = Colour::Red;
constexpr Colour kPositiveColours[kNumShapes][6] = {
    /* i    */ {N, B, N, B, B, N},
    /* ii   */ {N, N, N, N, B, N},
    /* iii  */ {B, N, B, N, B, N},
    /* iv   */ {N, N, N, N, B, N},
    /* v    */ {B, B, B, B, B, N},
    /* vi   */ {R, B, N, N, N, N},
    /* vii  */ {R, N, N, R, N, N},
    /* viii */ {B, N, B, N, B, N},
    /* ix   */ {N, B, B, N, N, N},
    /* x    */ {N, B, N, B, B, N},
    /* xi   */ {N, N, B, R, N, N},
    /* xii  */ {N, N, N, N, B, N},
    /* xiii */ {N, N, N, N, N, B},
    /* xiv  */ {B, N, N, B, B, B},
};
} // namespace

Colour positive_slot_colour(ShapeId shape, Role role) {
    return kPositiveColours[(int)shape][(int)role];
}

Colour slot_colour(ShapeId shape, Role role, int sign) {
    Colour c = positive_slot_colour(shape, role);
    if (sign == 1 || c == Colour::None) return c;
    return c == Colour::Blue ? Colour::Red : Colour::Blue;
}

int RecognizedPair::role_edge(Role r) const {
    switch (r) {
        case Role::InV1: return in_v1;
        case Role::InV2: return in_v2;
        case Role::OutV1: return out_v1;
        case Role::OutV2: return out_v2;
        case Role::Bridge: return bridge;
        case Role::Bridge2: return bridge2;
    }
    return -1;
}

namespace {

bool symmetric_unit(const TropicalCover& c, int a, int b, bool incoming) {
    const Edge& ea = c.edges[a];
    const Edge& eb = c.edges[b];
    if (ea.weight != eb.weight) return false;
    // Fork (both boundary ends) or circle (parallel, same far vertex).
    return incoming ? ea.from == eb.from : ea.to == eb.to;
}

} // namespace

std::optional<RecognizedPair> recognize_pair(const TropicalCover& c, int pair) {
    const int v1 = 2 * pair, v2 = 2 * pair + 1;
    std::vector<int> bridges, in1, out1, in2, out2;
    for (size_t e = 0; e < c.edges.size(); ++e) {
        const Edge& ed = c.edges[e];
        if (ed.from == v1 && ed.to == v2) {
            bridges.push_back((int)e);
            continue;
        }
        if (ed.to == v1) in1.push_back((int)e);
        if (ed.from == v1) out1.push_back((int)e);
        if (ed.to == v2) in2.push_back((int)e);
        if (ed.from == v2) out2.push_back((int)e);
    }
    RecognizedPair rp{};
    auto odd = [&](int e) { return c.edges[e].weight % 2 == 1; };

    if (bridges.size() == 2) {
        // Circle shapes.
        if (in1.size() != 1 || !out1.empty() || !in2.empty() || out2.size() != 1)
            return std::nullopt;
        rp.in_v1 = in1[0];
        rp.out_v2 = out2[0];
        int a = bridges[0], b = bridges[1];
        if (odd(rp.in_v1)) {
            if (odd(a) == odd(b)) return std::nullopt;
            rp.shape = ShapeId::XIII;
            rp.bridge = odd(a) ? a : b;  // odd circle edge
            rp.bridge2 = odd(a) ? b : a; // even circle edge
        } else {
            if (odd(a) || odd(b)) return std::nullopt;
            rp.shape = ShapeId::XIV;
            rp.bridge = c.edges[a].weight <= c.edges[b].weight ? a : b;
            rp.bridge2 = c.edges[a].weight <= c.edges[b].weight ? b : a;
        }
        if (c.edges[rp.in_v1].weight !=
            c.edges[rp.bridge].weight + c.edges[rp.bridge2].weight)
            return std::nullopt;
        if (c.edges[rp.out_v2].weight != c.edges[rp.in_v1].weight) return std::nullopt;
        return rp;
    }
    if (bridges.size() != 1) return std::nullopt;
    rp.bridge = bridges[0];
    const int bw = c.edges[rp.bridge].weight;

    if (in1.size() == 2 && out1.empty() && in2.size() == 1 && out2.size() == 1) {
        // Pair-join shapes i / ii.
        if (!symmetric_unit(c, in1[0], in1[1], /*incoming=*/true)) return std::nullopt;
        rp.fork1 = std::min(in1[0], in1[1]);
        rp.fork2 = std::max(in1[0], in1[1]);
        if (bw != 2 * c.edges[rp.fork1].weight) return std::nullopt;
        rp.in_v2 = in2[0];
        rp.out_v2 = out2[0];
        if (c.edges[rp.out_v2].weight != c.edges[rp.in_v2].weight + bw) return std::nullopt;
        rp.shape = odd(rp.in_v2) ? ShapeId::II : ShapeId::I;
        return rp;
    }
    if (in1.size() == 1 && out1.size() == 1 && in2.empty() && out2.size() == 2) {
        // Pair-cut shapes iii / iv.
        if (!symmetric_unit(c, out2[0], out2[1], /*incoming=*/false)) return std::nullopt;
        rp.fork1 = std::min(out2[0], out2[1]);
        rp.fork2 = std::max(out2[0], out2[1]);
        if (bw != 2 * c.edges[rp.fork1].weight) return std::nullopt;
        rp.in_v1 = in1[0];
        rp.out_v1 = out1[0];
        if (c.edges[rp.in_v1].weight != c.edges[rp.out_v1].weight + bw) return std::nullopt;
        rp.shape = odd(rp.out_v1) ? ShapeId::IV : ShapeId::III;
        return rp;
    }
    if (in1.size() == 1 && out1.size() == 1 && in2.size() == 1 && out2.size() == 1) {
        rp.in_v1 = in1[0];
        rp.out_v1 = out1[0];
        rp.in_v2 = in2[0];
        rp.out_v2 = out2[0];
        if (c.edges[rp.in_v1].weight != c.edges[rp.out_v1].weight + bw) return std::nullopt;
        if (c.edges[rp.out_v2].weight != c.edges[rp.in_v2].weight + bw) return std::nullopt;
        // Parity pattern (in1, out1, bridge, in2, out2) fixes the shape.
        int pat = (odd(rp.in_v1) << 4) | (odd(rp.out_v1) << 3) | (odd(rp.bridge) << 2) |
                  (odd(rp.in_v2) << 1) | odd(rp.out_v2);
        switch (pat) {
            case 0b00000: rp.shape = ShapeId::V; break;
            case 0b01101: rp.shape = ShapeId::VI; break;
            case 0b01110: rp.shape = ShapeId::VII; break;
            case 0b00011: rp.shape = ShapeId::VIII; break;
            case 0b10101: rp.shape = ShapeId::IX; break;
            case 0b11000: rp.shape = ShapeId::X; break;
            case 0b10110: rp.shape = ShapeId::XI; break;
            case 0b11011: rp.shape = ShapeId::XII; break;
            default: return std::nullopt;
        }
        return rp;
    }
    return std::nullopt;
}

int pair_sign(const TropicalCover& c, const RealStructure& rho, const RecognizedPair& rp) {
    static const Role roles[6] = {Role::InV1,  Role::InV2,  Role::OutV1,
                                  Role::OutV2, Role::Bridge, Role::Bridge2};
    int sign = 0;
    for (Role role : roles) {
        Colour want_pos = positive_slot_colour(rp.shape, role);
        if (want_pos == Colour::None) continue;
        int e = rp.role_edge(role);
        if (e < 0) continue;
        Colour have = edge_colour(c, rho, e);
        if (have == Colour::None)
            throw InvariantError("uncoloured even slot on pair shape " +
                                 std::string(shape_name(rp.shape)));
        int s = have == want_pos ? 1 : -1;
        if (sign == 0) sign = s;
        if (sign != s)
            throw InvariantError("inconsistent slot colours on pair shape " +
                                 std::string(shape_name(rp.shape)));
    }
    if (sign == 0) throw InvariantError("pair has no coloured slot to read its sign from");
    return sign;
}

} // namespace hnum
