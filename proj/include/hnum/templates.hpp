#pragma once

#include <array>
#include <optional>
#include <string>

#include "hnum/cover.hpp"

namespace hnum {

// The fourteen local pictures a pair of 3-valent vertices can form, in the
// order of the local multiplicity table.  Each is a parametric family closed
// under vertical reflection: reflecting (i) gives (iii), (ii) gives (iv),
// (vi) gives (xi), (viii) gives (x); the rest are self-mirrored.
enum class ShapeId : uint8_t {
    I,    // pair(k,k) joins to bridge 2k; bridge joins even e -> e+2k
    II,   // pair(k,k) joins to bridge 2k; bridge joins odd o -> o+2k
    III,  // even e+2k cuts to e + bridge 2k; bridge cuts to pair(k,k)
    IV,   // odd o+2k cuts to o + bridge 2k; bridge cuts to pair(k,k)
    V,    // even cuts to even + even bridge; bridge joins even -> even
    VI,   // even cuts to odd + odd bridge; bridge joins even -> odd
    VII,  // even cuts to odd + odd bridge; bridge joins odd -> even
    VIII, // even cuts to even + even bridge; bridge joins odd -> odd
    IX,   // odd cuts to even + odd bridge; bridge joins even -> odd
    X,    // odd cuts to odd + even bridge; bridge joins even -> even
    XI,   // odd cuts to even + odd bridge; bridge joins odd -> even
    XII,  // odd cuts to odd + even bridge; bridge joins odd -> odd
    XIII, // odd opens a circle (odd + even edge) and closes back to odd
    XIV,  // even opens a circle (even + even edge) and closes back to even
};

inline constexpr int kNumShapes = 14;

const char* shape_name(ShapeId s); // "i".."xiv"

enum class Role : uint8_t { InV1, InV2, OutV1, OutV2, Bridge, Bridge2 };

// Colour of an even slot on a POSITIVE pair; Colour::None when the slot is
// odd (or absent) in that shape.  Negative pairs swap blue and red.
Colour positive_slot_colour(ShapeId shape, Role role);

Colour slot_colour(ShapeId shape, Role role, int sign);

// A pair of an enhanced cover matched back to its shape, with edge indices
// per role.  fork1/fork2 hold the symmetric (k,k) unit of shapes i-iv.
struct RecognizedPair {
    ShapeId shape;
    int in_v1 = -1, in_v2 = -1;
    int out_v1 = -1, out_v2 = -1;
    int bridge = -1, bridge2 = -1; // bridge2 only for circle shapes
    int fork1 = -1, fork2 = -1;    // only for shapes i-iv

    int role_edge(Role r) const;
};

// Match pair p of the cover against the fourteen shapes (reflections are the
// same families).  nullopt when the local picture is not one of them.
std::optional<RecognizedPair> recognize_pair(const TropicalCover& c, int pair);

// Sign of a recognised pair under the colouring rho: +1 if the coloured
// slots match the positive table, -1 if they match the swapped table.
// Throws InvariantError when the colours match neither.
int pair_sign(const TropicalCover& c, const RealStructure& rho, const RecognizedPair& rp);

} // namespace hnum
