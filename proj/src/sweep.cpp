#include "hnum/sweep.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "hnum/errors.hpp"
#include "hnum/oracle.hpp"
#include "hnum/templates.hpp"

namespace hnum {

namespace {

constexpr int kOpen = -3;

enum class AKind : uint8_t { Odd, Blue, Red, Unbound, Pair };

struct Active {
    int weight;
    AKind kind;
    int source; // kLeftEnd or producing vertex
    bool frozen; // universal sweep: must reach the right boundary
    int e1, e2;  // edge indices; e2 only for Pair
};

struct BEdge {
    int from;
    int to; // kOpen until consumed or terminated
    int weight;
    Colour colour;
    int unit; // dotted unit id, -1 if none
};

struct State {
    std::vector<BEdge> edges;
    std::vector<Active> actives;
    int next_unit = 0;
};

struct Ctx {
    int g = 0, r = 0;
    Partition lambda, mu;
    const SignSplitting* splitting = nullptr; // null => universal sweep
    bool universal = false;
    std::map<std::string, CoverClass>* out = nullptr;
    std::mutex* out_mutex = nullptr;
};

bool same_group(const Active& a, const Active& b) {
    return a.kind == b.kind && a.weight == b.weight && a.source == b.source &&
           a.frozen == b.frozen;
}

// Indices of group representatives among actives satisfying pred, skipping
// `exclude`.  Membership in a group is blind to pred because pred only looks
// at group fields.
template <typename Pred>
void for_each_rep(const std::vector<Active>& as, int exclude, Pred&& pred,
                  const std::function<void(int)>& fn) {
    for (int i = 0; i < (int)as.size(); ++i) {
        if (i == exclude || !pred(as[i])) continue;
        bool dup = false;
        for (int j = 0; j < i; ++j)
            if (j != exclude && same_group(as[j], as[i])) {
                dup = true;
                break;
            }
        if (!dup) fn(i);
    }
}

int push_edge(State& st, int from, int w, Colour col, int unit = -1) {
    st.edges.push_back(BEdge{from, kOpen, w, col, unit});
    return (int)st.edges.size() - 1;
}

void close_edge(State& st, int e, int at, Colour bind) {
    st.edges[e].to = at;
    if (bind != Colour::None && st.edges[e].colour == Colour::None) st.edges[e].colour = bind;
}

AKind kind_for_even(const Ctx& ctx, Colour slot) {
    if (ctx.universal) return AKind::Unbound;
    return slot == Colour::Blue ? AKind::Blue : AKind::Red;
}

// Slot matching.  Even slots carry the template colour in the enhanced
// sweep; the universal sweep only sees parity and freezing.
bool match_even(const Ctx& ctx, const Active& a, Colour slot) {
    if (a.frozen) return false;
    if (a.kind == AKind::Unbound) return true;
    if (ctx.universal) return false;
    return slot == Colour::Blue ? a.kind == AKind::Blue : a.kind == AKind::Red;
}

bool match_odd(const Active& a) { return !a.frozen && a.kind == AKind::Odd; }

bool match_pair(const Active& a) { return !a.frozen && a.kind == AKind::Pair; }

void remove_actives(std::vector<Active>& as, int i, int j) {
    if (j >= 0 && j > i) std::swap(i, j); // erase the larger index first
    if (i >= 0) as.erase(as.begin() + i);
    if (j >= 0) as.erase(as.begin() + j);
}

void finish(const Ctx& ctx, State st);

void rec(const Ctx& ctx, const State& st, int p);

// One vertex pair consumes/produces actives according to a shape.  All
// fourteen shape families are generated here; reflections are the same
// families with other slot values and need no separate code path.
void apply_pair(const Ctx& ctx, const State& st, int p) {
    const int v1 = 2 * p, v2 = 2 * p + 1;
    const int sign = ctx.universal ? +1 : ctx.splitting->sign(p);
    auto col = [&](ShapeId sh, Role role) {
        return ctx.universal ? Colour::None : slot_colour(sh, role, sign);
    };
    auto step = [&](State&& next) { rec(ctx, next, p + 1); };

    // Shapes i / ii: symmetric pair joins into an even bridge, bridge joins a
    // single.
    for (ShapeId sh : {ShapeId::I, ShapeId::II}) {
        const bool even_in = sh == ShapeId::I;
        for_each_rep(st.actives, -1, match_pair, [&](int pi) {
            const int k = st.actives[pi].weight;
            auto inner = [&](int xi) {
                const Active& pa = st.actives[pi];
                const Active& x = st.actives[xi];
                State next = st;
                close_edge(next, pa.e1, v1, Colour::None);
                close_edge(next, pa.e2, v1, Colour::None);
                push_edge(next, v1, 2 * k, col(sh, Role::Bridge));
                next.edges.back().to = v2;
                close_edge(next, x.e1, v2, even_in ? col(sh, Role::InV2) : Colour::None);
                Colour out_col = even_in ? col(sh, Role::OutV2) : Colour::None;
                int oe = push_edge(next, v2, x.weight + 2 * k, out_col);
                AKind ok = even_in ? kind_for_even(ctx, col(sh, Role::OutV2)) : AKind::Odd;
                bool frozen = ctx.universal && even_in;
                remove_actives(next.actives, pi, xi);
                next.actives.push_back(Active{x.weight + 2 * k, ok, v2, frozen, oe, -1});
                step(std::move(next));
            };
            if (even_in)
                for_each_rep(st.actives, pi,
                             [&](const Active& a) { return match_even(ctx, a, col(sh, Role::InV2)); },
                             inner);
            else
                for_each_rep(st.actives, pi, match_odd, inner);
        });
    }

    // Shapes iii / iv: a single cuts into a single plus an even bridge, the
    // bridge cuts into a symmetric pair.
    for (ShapeId sh : {ShapeId::III, ShapeId::IV}) {
        const bool even_in = sh == ShapeId::III;
        auto pred = [&](const Active& a) {
            return even_in ? match_even(ctx, a, col(sh, Role::InV1)) : match_odd(a);
        };
        for_each_rep(st.actives, -1, pred, [&](int xi) {
            const int w = st.actives[xi].weight;
            const int min_keep = even_in ? 2 : 1;
            for (int k = 1; w - 2 * k >= min_keep; ++k) {
                const Active x = st.actives[xi];
                State next = st;
                close_edge(next, x.e1, v1, even_in ? col(sh, Role::InV1) : Colour::None);
                Colour keep_col = even_in ? col(sh, Role::OutV1) : Colour::None;
                int keep = push_edge(next, v1, w - 2 * k, keep_col);
                int be = push_edge(next, v1, 2 * k, col(sh, Role::Bridge));
                next.edges[be].to = v2;
                int unit = next.next_unit++;
                int f1 = push_edge(next, v2, k, Colour::None, unit);
                int f2 = push_edge(next, v2, k, Colour::None, unit);
                remove_actives(next.actives, xi, -1);
                AKind kk = even_in ? kind_for_even(ctx, keep_col) : AKind::Odd;
                next.actives.push_back(
                    Active{w - 2 * k, kk, v1, ctx.universal && even_in, keep, -1});
                next.actives.push_back(
                    Active{k, AKind::Pair, v2, ctx.universal && k % 2 == 0, f1, f2});
                step(std::move(next));
            }
        });
    }

    // Shapes v..xii: cut at v1, join at v2.
    struct CutJoin {
        ShapeId sh;
        bool in1_even, out1_even, bridge_even, in2_even;
    };
    static const CutJoin cut_join[8] = {
        {ShapeId::V, true, true, true, true},      {ShapeId::VI, true, false, false, true},
        {ShapeId::VII, true, false, false, false}, {ShapeId::VIII, true, true, true, false},
        {ShapeId::IX, false, true, false, true},   {ShapeId::X, false, false, true, true},
        {ShapeId::XI, false, true, false, false},  {ShapeId::XII, false, false, true, false},
    };
    for (const CutJoin& cj : cut_join) {
        auto pred1 = [&](const Active& a) {
            return cj.in1_even ? match_even(ctx, a, col(cj.sh, Role::InV1)) : match_odd(a);
        };
        auto pred2 = [&](const Active& a) {
            return cj.in2_even ? match_even(ctx, a, col(cj.sh, Role::InV2)) : match_odd(a);
        };
        for_each_rep(st.actives, -1, pred1, [&](int xi) {
            for_each_rep(st.actives, xi, pred2, [&](int yi) {
                const int w = st.actives[xi].weight;
                const int min_keep = cj.out1_even ? 2 : 1;
                const int min_bridge = cj.bridge_even ? 2 : 1;
                for (int keep_w = min_keep; w - keep_w >= min_bridge; keep_w += 2) {
                    if ((keep_w % 2 == 0) != cj.out1_even) continue; // parity fixed by start
                    const int bridge_w = w - keep_w;
                    const Active x = st.actives[xi];
                    const Active y = st.actives[yi];
                    State next = st;
                    close_edge(next, x.e1, v1,
                               cj.in1_even ? col(cj.sh, Role::InV1) : Colour::None);
                    Colour keep_col = cj.out1_even ? col(cj.sh, Role::OutV1) : Colour::None;
                    int keep = push_edge(next, v1, keep_w, keep_col);
                    int be = push_edge(next, v1, bridge_w,
                                       cj.bridge_even ? col(cj.sh, Role::Bridge) : Colour::None);
                    next.edges[be].to = v2;
                    close_edge(next, y.e1, v2,
                               cj.in2_even ? col(cj.sh, Role::InV2) : Colour::None);
                    const bool out2_even = (y.weight + bridge_w) % 2 == 0;
                    Colour out2_col = out2_even ? col(cj.sh, Role::OutV2) : Colour::None;
                    int oe = push_edge(next, v2, y.weight + bridge_w, out2_col);
                    remove_actives(next.actives, xi, yi);
                    next.actives.push_back(Active{keep_w,
                                                  cj.out1_even ? kind_for_even(ctx, keep_col)
                                                               : AKind::Odd,
                                                  v1, ctx.universal && cj.out1_even, keep, -1});
                    next.actives.push_back(Active{y.weight + bridge_w,
                                                  out2_even ? kind_for_even(ctx, out2_col)
                                                            : AKind::Odd,
                                                  v2, ctx.universal && out2_even, oe, -1});
                    step(std::move(next));
                }
            });
        });
    }

    // Shapes xiii / xiv: open a circle and close it again.
    for (ShapeId sh : {ShapeId::XIII, ShapeId::XIV}) {
        const bool even_in = sh == ShapeId::XIV;
        auto pred = [&](const Active& a) {
            return even_in ? match_even(ctx, a, col(sh, Role::InV1)) : match_odd(a);
        };
        for_each_rep(st.actives, -1, pred, [&](int xi) {
            const int w = st.actives[xi].weight;
            // xiii: odd + even split of an odd weight; xiv: unordered even+even.
            for (int c1 = even_in ? 2 : 1; c1 <= (even_in ? w / 2 : w - 2); c1 += 2) {
                const int c2 = w - c1;
                const Active x = st.actives[xi];
                State next = st;
                close_edge(next, x.e1, v1, even_in ? col(sh, Role::InV1) : Colour::None);
                int b1 = push_edge(next, v1, c1,
                                   even_in ? col(sh, Role::Bridge) : Colour::None);
                next.edges[b1].to = v2;
                int b2 = push_edge(next, v1, c2, col(sh, Role::Bridge2));
                next.edges[b2].to = v2;
                Colour out_col = even_in ? col(sh, Role::OutV2) : Colour::None;
                int oe = push_edge(next, v2, w, out_col);
                remove_actives(next.actives, xi, -1);
                next.actives.push_back(Active{w,
                                              even_in ? kind_for_even(ctx, out_col) : AKind::Odd,
                                              v2, ctx.universal && even_in, oe, -1});
                step(std::move(next));
            }
        });
    }
}

void rec(const Ctx& ctx, const State& st, int p) {
    if (p == ctx.r) {
        finish(ctx, State(st));
        return;
    }
    // Every remaining pair changes the number of active units by at most one,
    // and the final units cover mu with at most two parts each.
    int units = (int)st.actives.size();
    int need_min = (ctx.mu.length() + 1) / 2;
    if (units - (ctx.r - p) > ctx.mu.length() || units + (ctx.r - p) < need_min) return;
    apply_pair(ctx, st, p);
}

void finish(const Ctx& ctx, State st) {
    // Surviving left-boundary strands would be separate components.
    std::vector<int> weights;
    for (const Active& a : st.actives) {
        if (a.source == kLeftEnd) return;
        weights.push_back(a.weight);
        if (a.kind == AKind::Pair) weights.push_back(a.weight);
    }
    std::sort(weights.begin(), weights.end(), std::greater<int>());
    if (weights != ctx.mu.parts()) return;
    for (const Active& a : st.actives) {
        st.edges[a.e1].to = kRightEnd;
        if (a.e2 >= 0) st.edges[a.e2].to = kRightEnd;
    }

    TropicalCover cover;
    cover.num_pairs = ctx.r;
    cover.edges.reserve(st.edges.size());
    for (const BEdge& e : st.edges) {
        if (e.to == kOpen) throw InvariantError("open edge at sweep termination");
        cover.edges.push_back(Edge{e.from, e.to, e.weight});
    }
    if (!cover.connected()) return;
    if (cover.genus() != ctx.g)
        throw InvariantError("connected 3-valent sweep output with wrong first Betti number");

    RealStructure rho;
    std::map<int, CFElem> units;
    for (int e = 0; e < (int)st.edges.size(); ++e) {
        if (st.edges[e].unit < 0) continue;
        auto [it, fresh] = units.try_emplace(st.edges[e].unit, CFElem{e, -1, false});
        if (!fresh) it->second.e2 = e;
    }
    for (auto& [id, elem] : units) {
        if (elem.e2 < 0) throw InvariantError("half a dotted unit");
        elem.is_fork = !(cover.edges[elem.e1].from >= 0 && cover.edges[elem.e1].to >= 0);
        rho.dotted.push_back(elem);
    }
    if (!ctx.universal) {
        EvenComponents comps = even_components(cover, rho);
        for (int comp : comps.comp_ids) {
            Colour col = Colour::None;
            for (int e = 0; e < (int)st.edges.size(); ++e) {
                if (comps.comp_of_edge[e] != comp) continue;
                if (st.edges[e].colour == Colour::None)
                    throw InvariantError("uncoloured even edge in enhanced sweep output");
                if (col == Colour::None) col = st.edges[e].colour;
                if (col != st.edges[e].colour)
                    throw InvariantError("even component with two colours");
            }
            rho.colours.emplace_back(comp, col);
        }
    }

    CoverClass cls;
    cls.cover = std::move(cover);
    cls.rho = std::move(rho);
    cls.multiplicity = mult_enhanced(cls.cover, cls.rho);
    cls.key = canonical_key(cls.cover, cls.rho, /*with_colours=*/!ctx.universal);

    if (ctx.out_mutex) {
        std::lock_guard<std::mutex> lock(*ctx.out_mutex);
        auto [it, fresh] = ctx.out->emplace(cls.key, std::move(cls));
        if (!fresh) throw InvariantError("duplicate canonical key in sweep output");
    } else {
        auto [it, fresh] = ctx.out->emplace(cls.key, std::move(cls));
        if (!fresh) throw InvariantError("duplicate canonical key in sweep output");
    }
}

// Initial configurations: every way to pair up equal parts of lambda into
// dotted symmetric units; leftover odd parts enter black, even parts enter
// with their colour still unbound.
std::vector<State> initial_states(const Partition& lambda) {
    std::map<int, int> mult;
    for (int v : lambda.parts()) ++mult[v];
    std::vector<std::pair<int, int>> values(mult.begin(), mult.end());
    std::vector<State> out;
    std::vector<int> pair_counts(values.size(), 0);
    auto rec_vals = [&](auto&& self, size_t vi) -> void {
        if (vi == values.size()) {
            State st;
            for (size_t i = 0; i < values.size(); ++i) {
                auto [v, m] = values[i];
                for (int p = 0; p < pair_counts[i]; ++p) {
                    int unit = st.next_unit++;
                    int e1 = push_edge(st, kLeftEnd, v, Colour::None, unit);
                    int e2 = push_edge(st, kLeftEnd, v, Colour::None, unit);
                    st.actives.push_back(Active{v, AKind::Pair, kLeftEnd, false, e1, e2});
                }
                for (int s = 0; s < m - 2 * pair_counts[i]; ++s) {
                    int e = push_edge(st, kLeftEnd, v, Colour::None);
                    st.actives.push_back(Active{v, v % 2 ? AKind::Odd : AKind::Unbound, kLeftEnd,
                                                false, e, -1});
                }
            }
            out.push_back(std::move(st));
            return;
        }
        for (int p = 0; p <= values[vi].second / 2; ++p) {
            pair_counts[vi] = p;
            self(self, vi + 1);
        }
    };
    rec_vals(rec_vals, 0);
    return out;
}

std::vector<CoverClass> run_sweep(int g, const Partition& lambda, const Partition& mu,
                                  const SignSplitting* splitting, bool universal, int threads) {
    int r = branch_pair_count(g, lambda, mu);
    if (!universal && splitting->size() != r)
        throw DegenerateError("sign sequence has length " + std::to_string(splitting->size()) +
                              ", expected r = " + std::to_string(r));
    if (lambda.sum() > degree_cap()) throw DegenerateError("degree exceeds the safety cap");

    std::map<std::string, CoverClass> classes;
    Ctx ctx;
    ctx.g = g;
    ctx.r = r;
    ctx.lambda = lambda;
    ctx.mu = mu;
    ctx.splitting = splitting;
    ctx.universal = universal;
    ctx.out = &classes;

    std::vector<State> init = initial_states(lambda);
    if (threads <= 1 || init.size() < 2) {
        for (const State& st : init) rec(ctx, st, 0);
    } else {
        std::mutex m;
        ctx.out_mutex = &m;
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < init.size(); i = next.fetch_add(1))
                    rec(ctx, init[i], 0);
            });
        for (auto& th : pool) th.join();
    }
    std::vector<CoverClass> out;
    out.reserve(classes.size());
    for (auto& [key, cls] : classes) out.push_back(std::move(cls));
    return out;
}

} // namespace

std::vector<CoverClass> enumerate_enhanced_covers(int g, const Partition& lambda,
                                                  const Partition& mu,
                                                  const SignSplitting& splitting, int threads) {
    return run_sweep(g, lambda, mu, &splitting, /*universal=*/false, threads);
}

uint128 real_hurwitz_tropical(int g, const Partition& lambda, const Partition& mu,
                              const SignSplitting& splitting, int threads) {
    uint128 total = 0;
    for (const CoverClass& cls : enumerate_enhanced_covers(g, lambda, mu, splitting, threads))
        total = checked_add(total, cls.multiplicity);
    return total;
}

std::vector<CoverClass> enumerate_universal_covers(int g, const Partition& lambda,
                                                   const Partition& mu, int threads) {
    return run_sweep(g, lambda, mu, nullptr, /*universal=*/true, threads);
}

} // namespace hnum
