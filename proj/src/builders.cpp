#include "hnum/builders.hpp"

#include <algorithm>
#include <numeric>

#include "hnum/errors.hpp"
#include "hnum/oracle.hpp"

namespace hnum {

namespace {

// Incremental cover assembly.  Produced edges start as right ends and are
// re-pointed when a later vertex consumes them.
struct Builder {
    TropicalCover c;
    int nv = 0;

    int vertex() { return nv++; }
    int edge(int from, int to, int w) {
        c.edges.push_back(Edge{from, to, w});
        return (int)c.edges.size() - 1;
    }
    int open_edge(int from, int w) { return edge(from, kRightEnd, w); }
    void consume(int e, int v) { c.edges[e].to = v; }
    TropicalCover finish() {
        c.num_pairs = nv / 2;
        return c;
    }
};

} // namespace

TropicalCover build_nonvanishing_cover(int g, const Partition& lambda, const Partition& mu) {
    TailDecomposition tl = tail_decomposition(lambda);
    TailDecomposition tm = tail_decomposition(mu);
    if (tl.o.length() == 0 || tl.o.length() != tm.o.length() || tl.e.length() != 0 ||
        tm.e.length() != 0)
        throw DegenerateError("non-vanishing hypothesis not met");
    const int r = branch_pair_count(g, lambda, mu);
    const int k = tl.o.length();
    std::vector<int> lo = tl.o.parts(); // descending
    std::vector<int> mo = tm.o.parts();
    std::sort(lo.begin(), lo.end()); // ascending, entries distinct
    std::sort(mo.begin(), mo.end());

    std::vector<int> ltails = tl.oo.parts();
    for (int t : tl.ee.parts()) ltails.push_back(t);
    std::vector<int> mtails = tm.oo.parts();
    for (int t : tm.ee.parts()) mtails.push_back(t);

    if ((int)(ltails.size() + mtails.size()) + (k - 1) + g != r)
        throw InvariantError("non-vanishing construction built the wrong number of pairs");

    Builder b;
    // String S_1 starts with the largest distinct odd part of lambda.
    int w = lo[k - 1];
    int cur = b.open_edge(kLeftEnd, w);

    // Repeated parts of lambda enter as symmetric-fork tails on S_1.
    for (int t : ltails) {
        int v1 = b.vertex(), v2 = b.vertex();
        b.edge(kLeftEnd, v1, t);
        b.edge(kLeftEnd, v1, t);
        b.edge(v1, v2, 2 * t);
        b.consume(cur, v2);
        w += 2 * t;
        cur = b.open_edge(v2, w);
    }
    // Bridge from the last vertex of S_i to the first vertex of S_{i+1};
    // S_i terminates in the i-th smallest distinct odd part of mu.
    for (int i = 1; i <= k - 1; ++i) {
        int v1 = b.vertex(), v2 = b.vertex();
        b.consume(cur, v1);
        b.edge(v1, kRightEnd, mo[i - 1]);
        int bw = w - mo[i - 1];
        if (bw < 2 || bw % 2 != 0)
            throw InvariantError("non-vanishing bridge weight is not a positive even number");
        b.edge(v1, v2, bw);
        b.edge(kLeftEnd, v2, lo[k - 1 - i]);
        w = lo[k - 1 - i] + bw;
        cur = b.open_edge(v2, w);
    }
    // Genus: circle pairs on the last string.
    for (int j = 0; j < g; ++j) {
        if (w < 3)
            throw DegenerateError(
                "non-vanishing construction needs an odd string of weight >= 3 to carry genus");
        int v1 = b.vertex(), v2 = b.vertex();
        b.consume(cur, v1);
        b.edge(v1, v2, w - 2);
        b.edge(v1, v2, 2);
        cur = b.open_edge(v2, w);
    }
    // Repeated parts of mu leave as symmetric-fork tails from the last string.
    for (int t : mtails) {
        int v1 = b.vertex(), v2 = b.vertex();
        b.consume(cur, v1);
        int keep = b.open_edge(v1, w - 2 * t);
        b.edge(v1, v2, 2 * t);
        b.edge(v2, kRightEnd, t);
        b.edge(v2, kRightEnd, t);
        w -= 2 * t;
        cur = keep;
    }
    if (w != mo[k - 1])
        throw InvariantError("non-vanishing construction string does not close on mu");
    return b.finish();
}

namespace {

// One chain block of the asymptotic family: degree q in {4,5,6}, profile
// (1^q, 1^q), genus 0.  A fork tail feeds the top string, the strings
// cascade through even bridges, and a fork tail drains the bottom string.
struct BlockSlots {
    int upper_left_in = -1;  // edge slot consumed by the top-string join; -1 => fresh left end
    int upper_right_edge = -1; // produced weight-1 edges, open until glued
    int lower_right_edge = -1;
};

BlockSlots build_block(Builder& b, int q, int glued_upper_left, int glued_lower_left) {
    BlockSlots slots;
    const int strings = q - 2;
    // Fork tail joins the top string: 1 + 2 -> 3.
    int v1 = b.vertex(), v2 = b.vertex();
    b.edge(kLeftEnd, v1, 1);
    b.edge(kLeftEnd, v1, 1);
    b.edge(v1, v2, 2);
    if (glued_upper_left >= 0)
        b.consume(glued_upper_left, v2);
    else
        b.edge(kLeftEnd, v2, 1);
    int cur = b.open_edge(v2, 3);
    // Cascade: each string hands weight 2 down to the next.
    for (int s = 0; s + 1 < strings; ++s) {
        int u1 = b.vertex(), u2 = b.vertex();
        b.consume(cur, u1);
        int right = b.open_edge(u1, 1);
        if (s == 0) slots.upper_right_edge = right;
        b.edge(u1, u2, 2);
        bool last_string = s + 2 == strings;
        if (last_string && glued_lower_left >= 0)
            b.consume(glued_lower_left, u2);
        else
            b.edge(kLeftEnd, u2, 1);
        cur = b.open_edge(u2, 3);
    }
    // Fork tail drains the bottom string: 3 -> 1 + (1,1).
    int w1 = b.vertex(), w2 = b.vertex();
    b.consume(cur, w1);
    slots.lower_right_edge = b.open_edge(w1, 1);
    b.edge(w1, w2, 2);
    b.edge(w2, kRightEnd, 1);
    b.edge(w2, kRightEnd, 1);
    return slots;
}

} // namespace

std::vector<TropicalCover> build_block_family(int m) {
    if (m <= 3) throw DegenerateError("block family needs m > 3");
    const int n = (m - 1) / 3;
    const int residue = m - 3 * n; // 1, 2, or 3
    std::vector<int> block_q(n, 4);
    block_q[0] = 3 + residue;

    std::vector<TropicalCover> out;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0); // order[pos] = chain index
    do {
        std::vector<int> pos_of(n);
        for (int pos = 0; pos < n; ++pos) pos_of[order[pos]] = pos;

        Builder b;
        std::vector<BlockSlots> slots(n);
        std::vector<bool> built(n, false);
        for (int pos = 0; pos < n; ++pos) {
            int cb = order[pos];
            // Link cb-1 -- cb glues our top string when the left neighbour
            // in the chain sits earlier; link cb -- cb+1 glues our bottom
            // string when the right neighbour sits earlier.
            int glue_upper = -1, glue_lower = -1;
            if (cb > 0 && pos_of[cb - 1] < pos) {
                if (!built[cb - 1]) throw InvariantError("glue producer not built yet");
                glue_upper = slots[cb - 1].lower_right_edge;
            }
            if (cb + 1 < n && pos_of[cb + 1] < pos) {
                if (!built[cb + 1]) throw InvariantError("glue producer not built yet");
                glue_lower = slots[cb + 1].upper_right_edge;
            }
            slots[cb] = build_block(b, block_q[cb], glue_upper, glue_lower);
            built[cb] = true;
        }
        out.push_back(b.finish());
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

} // namespace hnum
