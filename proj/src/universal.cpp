#include "hnum/universal.hpp"

#include <algorithm>

#include "hnum/errors.hpp"
#include "hnum/sweep.hpp"

namespace hnum {

bool is_universally_enhanced(const TropicalCover& c) {
    for (int p = 0; p < c.num_pairs; ++p)
        if (!recognize_pair(c, p)) return false;
    for (size_t e = 0; e < c.edges.size(); ++e)
        if (c.is_inner((int)e) && c.edges[e].weight % 2 == 0 && !c.is_bridge((int)e))
            return false;
    return true;
}

std::vector<CFElem> universal_dotting(const TropicalCover& c) {
    std::vector<CFElem> dotted;
    for (int p = 0; p < c.num_pairs; ++p) {
        auto rp = recognize_pair(c, p);
        if (!rp) throw DegenerateError("cover is not universally enhanced");
        if (rp->fork1 < 0) continue;
        CFElem el;
        el.e1 = rp->fork1;
        el.e2 = rp->fork2;
        el.is_fork = !(c.edges[el.e1].from >= 0 && c.edges[el.e1].to >= 0);
        dotted.push_back(el);
    }
    std::sort(dotted.begin(), dotted.end());
    return dotted;
}

RealStructure canonical_colouring(const TropicalCover& c, const SignSplitting& splitting) {
    if (!is_universally_enhanced(c)) throw DegenerateError("cover is not universally enhanced");
    if (splitting.size() != c.num_pairs)
        throw DegenerateError("splitting length differs from the number of pairs");
    RealStructure rho;
    rho.dotted = universal_dotting(c);
    EvenComponents comps = even_components(c, rho);
    std::vector<Colour> comp_colour(c.edges.size(), Colour::None);
    static const Role roles[6] = {Role::InV1,  Role::InV2,  Role::OutV1,
                                  Role::OutV2, Role::Bridge, Role::Bridge2};
    for (int p = 0; p < c.num_pairs; ++p) {
        RecognizedPair rp = *recognize_pair(c, p);
        for (Role role : roles) {
            int e = rp.role_edge(role);
            if (e < 0) continue;
            Colour want = slot_colour(rp.shape, role, splitting.sign(p));
            if (want == Colour::None) continue;
            if (rho.is_dotted(e)) continue;
            int comp = comps.comp_of_edge[e];
            if (comp < 0) throw InvariantError("coloured slot outside the even subgraph");
            if (comp_colour[comp] != Colour::None && comp_colour[comp] != want)
                throw InvariantError("conflicting colours on one even component");
            comp_colour[comp] = want;
        }
    }
    for (int comp : comps.comp_ids) {
        if (comp_colour[comp] == Colour::None)
            throw InvariantError("even component left uncoloured");
        rho.colours.emplace_back(comp, comp_colour[comp]);
    }
    return rho;
}

uint128 universal_mult(const TropicalCover& c) {
    if (!is_universally_enhanced(c)) throw DegenerateError("cover is not universally enhanced");
    RealStructure rho;
    rho.dotted = universal_dotting(c);
    if (c.num_pairs == 1) return mult_enhanced(c, rho); // |x| = 2: general formula
    uint128 m = 1;
    for (const CFElem& circ : symmetric_circles(c)) {
        if (!rho.is_dotted(circ.e1)) continue;
        m = checked_mul(m, 2);
        m = checked_mul(m, (uint128)c.edges[circ.e1].weight);
    }
    return m;
}

std::vector<CoverClass> enumerate_universal(int g, const Partition& lambda, const Partition& mu,
                                            int threads) {
    std::vector<CoverClass> classes = enumerate_universal_covers(g, lambda, mu, threads);
    for (CoverClass& cls : classes) cls.multiplicity = universal_mult(cls.cover);
    return classes;
}

uint128 enhanced_number(int g, const Partition& lambda, const Partition& mu, int threads) {
    uint128 total = 0;
    for (const CoverClass& cls : enumerate_universal(g, lambda, mu, threads))
        total = checked_add(total, cls.multiplicity);
    return total;
}

} // namespace hnum
