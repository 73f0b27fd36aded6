#include "hnum/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "hnum/errors.hpp"

namespace hnum {

int branch_pair_count(int g, const Partition& lambda, const Partition& mu) {
    if (g < 0) throw DegenerateError("genus must be non-negative");
    if (lambda.sum() != mu.sum()) throw DegenerateError("profiles have different degree");
    if ((lambda.length() + mu.length()) % 2 != 0)
        throw DegenerateError("parity mismatch: l(lambda) and l(mu) differ mod 2");
    int twice_r = lambda.length() + mu.length() + 2 * g - 2;
    if (twice_r <= 0) throw DegenerateError("degenerate branch data: r must be >= 1");
    return twice_r / 2;
}

namespace {

// gamma * x * gamma == x^-1, for an involution gamma: equivalent to
// (gamma*x)^2 == id pointwise.
inline bool reverses(const Perm& gamma, const Perm& x) {
    int d = x.degree();
    for (int p = 0; p < d; ++p)
        if (x(gamma(x(gamma(p)))) != p) return false;
    return true;
}

inline int cycle_count(const Perm& p) {
    int d = p.degree(), n = 0;
    bool seen[kMaxDegree] = {};
    for (int i = 0; i < d; ++i) {
        if (seen[i]) continue;
        ++n;
        for (int x = i; !seen[x]; x = p(x)) seen[x] = true;
    }
    return n;
}

struct SearchContext {
    int d = 0;
    int r = 0;
    Partition mu;
    int mu_len = 0;
    std::vector<Perm> triples;
    const SignSplitting* signs = nullptr;
    const std::function<void(const RealTuple&)>* visitor = nullptr;
};

// Transitivity of <sigma1, tau_1..tau_r>: union points along every
// generator's cycles (sigma2 lies in the same subgroup).
bool tuple_transitive(const Perm& sigma1, const std::vector<Perm>& taus, int d) {
    int parent[kMaxDegree];
    for (int i = 0; i < d; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int comps = d;
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    };
    for (int i = 0; i < d; ++i) unite(i, sigma1(i));
    for (const Perm& t : taus)
        for (int i = 0; i < d; ++i) unite(i, t(i));
    return comps == 1;
}

// Depth-first over tau_i with the per-level reality filter.
void real_dfs(const SearchContext& ctx, int level, const Perm& pi, const Perm& gamma_cur,
              const Perm& gamma_root, const Perm& sigma1, std::vector<Perm>& taus,
              uint128& count) {
    if (level == ctx.r) {
        if (!(pi.cycle_type() == ctx.mu)) return;
        if (!tuple_transitive(sigma1, taus, ctx.d)) return;
        count = checked_add(count, 1);
        if (ctx.visitor && *ctx.visitor) {
            RealTuple t{gamma_root, sigma1, taus, pi.inverse()};
            (*ctx.visitor)(t);
        }
        return;
    }
    int remaining = ctx.r - level;
    // Each 3-cycle changes the cycle count by -2, 0 or +2.
    if (std::abs(cycle_count(pi) - ctx.mu_len) > 2 * remaining) return;
    for (const Perm& tau : ctx.triples) {
        Perm next = tau * pi;
        if (!reverses(gamma_cur, next)) continue;
        taus.push_back(tau);
        if (level + 1 == ctx.r) {
            real_dfs(ctx, level + 1, next, gamma_cur, gamma_root, sigma1, taus, count);
        } else {
            Perm gamma_next =
                ctx.signs->sign(level + 1) == ctx.signs->sign(level) ? gamma_cur : gamma_cur * next;
            real_dfs(ctx, level + 1, next, gamma_next, gamma_root, sigma1, taus, count);
        }
        taus.pop_back();
    }
}

void complex_dfs(const SearchContext& ctx, int level, const Perm& pi, const Perm& sigma1,
                 std::vector<Perm>& taus, uint128& count) {
    if (level == ctx.r) {
        if (!(pi.cycle_type() == ctx.mu)) return;
        if (!tuple_transitive(sigma1, taus, ctx.d)) return;
        count = checked_add(count, 1);
        return;
    }
    int remaining = ctx.r - level;
    if (std::abs(cycle_count(pi) - ctx.mu_len) > 2 * remaining) return;
    for (const Perm& tau : ctx.triples) {
        taus.push_back(tau);
        complex_dfs(ctx, level + 1, tau * pi, sigma1, taus, count);
        taus.pop_back();
    }
}

void check_profiles(int d, const Partition& lambda, const Partition& mu) {
    if (lambda.sum() != d || mu.sum() != d) throw DegenerateError("profile degree mismatch");
    if (d > degree_cap())
        throw DegenerateError("degree " + std::to_string(d) + " exceeds the safety cap " +
                              std::to_string(degree_cap()));
}

// All involutions of S_d, id included (everything reverses the identity).
std::vector<Perm> all_involutions(int d) { return reversing_involutions(Perm(d)); }

uint128 count_real_tuples_slow(int g, const Partition& lambda, const Partition& mu,
                               const SignSplitting& signs) {
    int d = lambda.sum();
    int r = branch_pair_count(g, lambda, mu);
    if (signs.size() != r) throw DegenerateError("sign sequence length differs from r");
    uint128 count = 0;
    if (d < 3) return 0;
    std::vector<Perm> triples = three_cycles(d);
    std::vector<Perm> sigmas = permutations_of_type(d, lambda);
    std::vector<Perm> invs = all_involutions(d);
    std::vector<int> idx(r, 0);
    for (const Perm& sigma1 : sigmas) {
        for (const Perm& gamma : invs) {
            std::fill(idx.begin(), idx.end(), 0);
            while (true) {
                // Assemble the full sequence, then filter every condition.
                std::vector<Perm> taus;
                taus.reserve(r);
                for (int i = 0; i < r; ++i) taus.push_back(triples[idx[i]]);
                bool ok = reverses(gamma, sigma1) && gamma.is_involution();
                if (ok) {
                    Perm pi = sigma1;
                    Perm gcur = signs.sign(0) == 1 ? gamma : gamma * sigma1;
                    for (int i = 0; i < r && ok; ++i) {
                        pi = taus[i] * pi;
                        ok = reverses(gcur, pi);
                        if (i + 1 < r && signs.sign(i + 1) != signs.sign(i)) gcur = gcur * pi;
                    }
                    ok = ok && pi.cycle_type() == mu && tuple_transitive(sigma1, taus, d);
                    if (ok) count = checked_add(count, 1);
                }
                int k = r - 1;
                while (k >= 0 && idx[k] + 1 == (int)triples.size()) idx[k--] = 0;
                if (k < 0) break;
                ++idx[k];
            }
        }
    }
    return count;
}

} // namespace

uint128 count_real_tuples(int g, const Partition& lambda, const Partition& mu,
                          const SignSplitting& signs, const OracleOptions& opts) {
    int d = lambda.sum();
    check_profiles(d, lambda, mu);
    int r = branch_pair_count(g, lambda, mu);
    if (signs.size() != r)
        throw DegenerateError("sign sequence has length " + std::to_string(signs.size()) +
                              ", expected r = " + std::to_string(r));
    if (d < 3) return 0; // no 3-cycles exist
    if (opts.slow_reference) return count_real_tuples_slow(g, lambda, mu, signs);

    SearchContext ctx;
    ctx.d = d;
    ctx.r = r;
    ctx.mu = mu;
    ctx.mu_len = mu.length();
    ctx.triples = three_cycles(d);
    ctx.signs = &signs;
    ctx.visitor = &opts.visitor;

    struct Root {
        Perm sigma1, gamma;
    };
    std::vector<Root> roots;
    for (const Perm& sigma1 : permutations_of_type(d, lambda))
        for (const Perm& gamma : reversing_involutions(sigma1)) roots.push_back({sigma1, gamma});

    auto run_root = [&](const Root& root, uint128& acc) {
        Perm gamma1 = signs.sign(0) == 1 ? root.gamma : root.gamma * root.sigma1;
        std::vector<Perm> taus;
        taus.reserve(r);
        real_dfs(ctx, 0, root.sigma1, gamma1, root.gamma, root.sigma1, taus, acc);
    };

    int threads = opts.visitor ? 1 : std::max(1, opts.threads);
    if (threads == 1 || roots.size() < 2) {
        uint128 count = 0;
        for (const Root& root : roots) run_root(root, count);
        return count;
    }
    std::vector<uint128> partial(threads, 0);
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (size_t i = next.fetch_add(1); i < roots.size(); i = next.fetch_add(1))
                run_root(roots[i], partial[t]);
        });
    }
    for (auto& th : pool) th.join();
    uint128 count = 0;
    for (uint128 p : partial) count = checked_add(count, p);
    return count;
}

HurwitzCount real_hurwitz_oracle(int g, const Partition& lambda, const Partition& mu,
                                 const SignSplitting& signs, const OracleOptions& opts) {
    return HurwitzCount::make(count_real_tuples(g, lambda, mu, signs, opts), lambda.sum());
}

uint128 count_complex_tuples(int g, const Partition& lambda, const Partition& mu,
                             const OracleOptions& opts) {
    int d = lambda.sum();
    check_profiles(d, lambda, mu);
    int r = branch_pair_count(g, lambda, mu);
    if (d < 3) return 0;

    SearchContext ctx;
    ctx.d = d;
    ctx.r = r;
    ctx.mu = mu;
    ctx.mu_len = mu.length();
    ctx.triples = three_cycles(d);

    std::vector<Perm> sigmas = permutations_of_type(d, lambda);
    auto run_root = [&](const Perm& sigma1, uint128& acc) {
        std::vector<Perm> taus;
        taus.reserve(r);
        complex_dfs(ctx, 0, sigma1, sigma1, taus, acc);
    };

    int threads = std::max(1, opts.threads);
    if (threads == 1 || sigmas.size() < 2) {
        uint128 count = 0;
        for (const Perm& s : sigmas) run_root(s, count);
        return count;
    }
    std::vector<uint128> partial(threads, 0);
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (size_t i = next.fetch_add(1); i < sigmas.size(); i = next.fetch_add(1))
                run_root(sigmas[i], partial[t]);
        });
    for (auto& th : pool) th.join();
    uint128 count = 0;
    for (uint128 p : partial) count = checked_add(count, p);
    return count;
}

HurwitzCount complex_hurwitz_oracle(int g, const Partition& lambda, const Partition& mu,
                                    const OracleOptions& opts) {
    return HurwitzCount::make(count_complex_tuples(g, lambda, mu, opts), lambda.sum());
}

uint128 count_fixed_target_factorizations(int d) {
    if (d % 2 == 0) throw DegenerateError("degenerate branch data: d must be odd (r = (d-1)/2)");
    if (d < 3) throw DegenerateError("d must be >= 3");
    if (d > degree_cap()) throw DegenerateError("degree exceeds the safety cap");
    int r = (d - 1) / 2;
    std::vector<int> cyc(d);
    for (int i = 0; i < d; ++i) cyc[i] = i + 1;
    const Perm target = Perm::from_cycles(d, {cyc});
    const std::vector<Perm> triples = three_cycles(d);
    const Partition triple_type = Perm::from_cycles(d, {{1, 2, 3}}).cycle_type();

    uint128 count = 0;
    // The last factor is forced: tau_r = target * (tau_{r-1}...tau_1)^-1.
    auto rec = [&](auto&& self, int level, const Perm& prod) -> void {
        if (level == r - 1) {
            Perm last = target * prod.inverse();
            if (last.cycle_type() == triple_type) count = checked_add(count, 1);
            return;
        }
        for (const Perm& tau : triples) self(self, level + 1, tau * prod);
    };
    rec(rec, 0, Perm(d));
    return count;
}

std::pair<Perm, Perm> real_decompose_3cycle(const Perm& sigma, const Perm& gamma, const Perm& tau,
                                            int sign) {
    int d = sigma.degree();
    if (gamma.degree() != d || tau.degree() != d) throw DegenerateError("degree mismatch");
    if (!gamma.is_involution()) throw DegenerateError("gamma is not an involution");
    if (!reverses(gamma, sigma)) throw DegenerateError("gamma does not reverse sigma");
    // tau must be one 3-cycle plus fixed points.
    std::vector<int> supp;
    for (int i = 0; i < d; ++i)
        if (tau(i) != i) supp.push_back(i);
    if (supp.size() != 3 || tau(tau(tau(supp[0]))) != supp[0])
        throw DegenerateError("tau is not a 3-cycle");
    if (sign != 1 && sign != -1) throw DegenerateError("sign must be +1/-1");

    const Perm gamma_eff = sign == 1 ? gamma : gamma * sigma;
    if (!reverses(gamma_eff, tau * sigma))
        throw DegenerateError("tau * sigma is not reversed by the sign-appropriate involution");

    int a = supp[0];
    int b = tau(a);
    int c = tau(b);
    auto transposition = [&](int x, int y) {
        return Perm::from_cycles(d, {{x + 1, y + 1}});
    };
    // tau = (ac)o(ab) = (ab)o(bc) = (bc)o(ac): candidates listed as
    // (first factor, second factor).
    const std::pair<Perm, Perm> candidates[3] = {
        {transposition(a, b), transposition(a, c)},
        {transposition(b, c), transposition(a, b)},
        {transposition(a, c), transposition(b, c)},
    };
    const std::pair<Perm, Perm>* found = nullptr;
    for (const auto& cand : candidates) {
        if (reverses(gamma_eff, cand.first * sigma)) {
            if (found) throw InvariantError("lemma violation: two decompositions pass");
            found = &cand;
        }
    }
    if (!found) throw InvariantError("lemma violation: no decomposition passes");
    return *found;
}

const char* cycle_kind_name(CycleKind k) {
    switch (k) {
        case CycleKind::OddReal: return "odd";
        case CycleKind::EvenReal0Fix: return "even0";
        case CycleKind::EvenReal2Fix: return "even2";
        case CycleKind::ConjugatedPair: return "pair";
    }
    return "?";
}

CycleKind classify_cycle(const Perm& pi, const Perm& gamma, const std::vector<int>& cycle) {
    (void)pi;
    bool in_cycle[kMaxDegree] = {};
    for (int x : cycle) in_cycle[x] = true;
    bool real = true;
    int fixed = 0;
    for (int x : cycle) {
        if (!in_cycle[gamma(x)]) real = false;
        if (gamma(x) == x) ++fixed;
    }
    if (!real) {
        if (fixed != 0) throw InvariantError("conjugated cycle with a fixed entry");
        return CycleKind::ConjugatedPair;
    }
    if (cycle.size() % 2 == 1) {
        if (fixed != 1) throw InvariantError("odd real cycle without exactly one fixed entry");
        return CycleKind::OddReal;
    }
    if (fixed == 0) return CycleKind::EvenReal0Fix;
    if (fixed == 2) return CycleKind::EvenReal2Fix;
    throw InvariantError("even real cycle with " + std::to_string(fixed) + " fixed entries");
}

bool TransitionDescriptor::operator<(const TransitionDescriptor& o) const {
    if (sign != o.sign) return sign > o.sign;
    if (incoming != o.incoming) return incoming < o.incoming;
    return outgoing < o.outgoing;
}

bool TransitionDescriptor::operator==(const TransitionDescriptor& o) const {
    return sign == o.sign && incoming == o.incoming && outgoing == o.outgoing;
}

std::string TransitionDescriptor::str() const {
    auto side = [](const std::vector<std::pair<CycleKind, int>>& v) {
        std::string s = "{";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ' ';
            s += cycle_kind_name(v[i].first);
            s += '(';
            s += std::to_string(v[i].second);
            s += ')';
        }
        return s + "}";
    };
    return std::string(sign == 1 ? "+" : "-") + " " + side(incoming) + " -> " + side(outgoing);
}

namespace {

// Touched cycles of pi: those whose support meets supp, conjugated pairs
// reported once with the length of one member.
std::vector<std::pair<CycleKind, int>> touched_cycles(const Perm& pi, const Perm& gamma,
                                                      const std::vector<int>& supp) {
    auto cycles = pi.cycles();
    std::vector<int> cycle_of(pi.degree(), -1);
    for (size_t ci = 0; ci < cycles.size(); ++ci)
        for (int x : cycles[ci]) cycle_of[x] = (int)ci;
    std::vector<bool> touched(cycles.size(), false);
    for (int x : supp) touched[cycle_of[x]] = true;
    std::vector<bool> reported(cycles.size(), false);
    std::vector<std::pair<CycleKind, int>> out;
    for (size_t ci = 0; ci < cycles.size(); ++ci) {
        if (!touched[ci] || reported[ci]) continue;
        CycleKind kind = classify_cycle(pi, gamma, cycles[ci]);
        reported[ci] = true;
        if (kind == CycleKind::ConjugatedPair) {
            int partner = cycle_of[gamma(cycles[ci][0])];
            reported[partner] = true;
        }
        out.emplace_back(kind, (int)cycles[ci].size());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::map<TransitionDescriptor, long> local_multiplicity_census(const Perm& sigma,
                                                               const Perm& gamma, int sign) {
    int d = sigma.degree();
    if (gamma.degree() != d) throw DegenerateError("degree mismatch");
    if (!gamma.is_involution()) throw DegenerateError("gamma is not an involution");
    if (!reverses(gamma, sigma)) throw DegenerateError("gamma does not reverse sigma");
    if (sign != 1 && sign != -1) throw DegenerateError("sign must be +1/-1");
    const Perm gamma_eff = sign == 1 ? gamma : gamma * sigma;

    std::map<TransitionDescriptor, long> census;
    if (d < 3) return census;
    for (const Perm& tau : three_cycles(d)) {
        Perm next = tau * sigma;
        if (!reverses(gamma_eff, next)) continue;
        std::vector<int> supp;
        for (int i = 0; i < d; ++i)
            if (tau(i) != i) supp.push_back(i);
        TransitionDescriptor desc;
        desc.sign = sign;
        desc.incoming = touched_cycles(sigma, gamma_eff, supp);
        desc.outgoing = touched_cycles(next, gamma_eff, supp);
        ++census[desc];
    }
    return census;
}

} // namespace hnum
