#include "hnum/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "hnum/builders.hpp"
#include "hnum/errors.hpp"
#include "hnum/oracle.hpp"
#include "hnum/sweep.hpp"
#include "hnum/universal.hpp"

namespace hnum {

namespace {

struct Criterion {
    CriterionResult result;
    const std::function<void(const std::string&)>* sink;

    Criterion(int id, std::string name, const std::function<void(const std::string&)>& s)
        : sink(&s) {
        result.id = id;
        result.name = std::move(name);
    }
    void check(bool ok, const std::string& line) {
        ++result.cases;
        if (!ok) {
            ++result.failures;
            if (result.first_failure.empty()) result.first_failure = line;
        }
        (*sink)((ok ? "PASS c" : "FAIL c") + std::to_string(result.id) + " " + line);
    }
    CriterionResult close() {
        result.pass = result.failures == 0 && result.cases > 0;
        return result;
    }
};

struct BatteryCase {
    int g = 0;
    int r = 0;
    Partition lambda, mu;
};

std::vector<BatteryCase> correspondence_battery(int max_d, int max_r) {
    std::vector<BatteryCase> cases;
    for (int d = 1; d <= max_d; ++d) {
        std::vector<Partition> parts = partitions_of(d);
        for (const Partition& lambda : parts)
            for (const Partition& mu : parts) {
                if ((lambda.length() + mu.length()) % 2 != 0) continue;
                for (int r = 1; r <= max_r; ++r) {
                    int twice_g = 2 * r + 2 - lambda.length() - mu.length();
                    if (twice_g < 0 || twice_g % 2 != 0) continue;
                    cases.push_back(BatteryCase{twice_g / 2, r, lambda, mu});
                }
            }
    }
    return cases;
}

std::string case_tag(const BatteryCase& bc) {
    return "g=" + std::to_string(bc.g) + " l=" + bc.lambda.str() + " m=" + bc.mu.str();
}

// Per-case data shared by criteria 2, 3 and 4.
struct CaseData {
    BatteryCase bc;
    std::vector<SignSplitting> splittings;
    std::vector<uint128> oracle_raw;
    std::vector<uint128> tropical;
    uint128 enhanced = 0;
    std::string error;
};

CaseData run_case(const BatteryCase& bc) {
    CaseData data;
    data.bc = bc;
    try {
        data.splittings = SignSplitting::all(bc.r);
        for (const SignSplitting& s : data.splittings) {
            data.oracle_raw.push_back(count_real_tuples(bc.g, bc.lambda, bc.mu, s));
            data.tropical.push_back(real_hurwitz_tropical(bc.g, bc.lambda, bc.mu, s));
        }
        data.enhanced = enhanced_number(bc.g, bc.lambda, bc.mu);
    } catch (const std::exception& e) {
        data.error = e.what();
    }
    return data;
}

template <typename Fn>
void parallel_cases(const std::vector<BatteryCase>& cases, int threads, std::vector<CaseData>& out,
                    Fn&& progress) {
    out.resize(cases.size());
    if (threads <= 1) {
        for (size_t i = 0; i < cases.size(); ++i) {
            out[i] = run_case(cases[i]);
            progress();
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < cases.size(); i = next.fetch_add(1)) {
                out[i] = run_case(cases[i]);
                progress();
            }
        });
    for (auto& th : pool) th.join();
}

std::vector<Perm> all_perms(int d) {
    std::vector<int> img(d);
    for (int i = 0; i < d; ++i) img[i] = i;
    std::vector<Perm> out;
    do {
        out.push_back(Perm::from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

Partition ones(int m) { return Partition(std::vector<int>(m, 1)); }

uint128 small_factorial(int n) {
    uint128 f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// ---- criterion 6 fixtures -------------------------------------------------

struct CensusCase {
    const char* row;
    int d;
    const char* sigma;
    const char* gamma;
    std::vector<std::pair<CycleKind, int>> in, out;
    long expected;
};

std::vector<CensusCase> census_fixtures() {
    using K = CycleKind;
    return {
        // (i) 4k at k = 1 and k = 2: conjugated pair + even 0-fix join up.
        {"i.k1", 4, "(3 4)", "(1 2)(3 4)",
         {{K::EvenReal0Fix, 2}, {K::ConjugatedPair, 1}}, {{K::EvenReal0Fix, 4}}, 4},
        {"i.k2", 6, "(1 2)(3 4)(5 6)", "(1 3)(2 4)(5 6)",
         {{K::EvenReal0Fix, 2}, {K::ConjugatedPair, 2}}, {{K::EvenReal0Fix, 6}}, 8},
        // (ii) 2k: conjugated pair + odd real.
        {"ii.k1", 3, "id", "(1 2)", {{K::OddReal, 1}, {K::ConjugatedPair, 1}},
         {{K::OddReal, 3}}, 2},
        {"ii.k2", 5, "(1 2)(3 4)", "(1 3)(2 4)", {{K::OddReal, 1}, {K::ConjugatedPair, 2}},
         {{K::OddReal, 5}}, 4},
        // (iii) 2: even 0-fix cuts off a conjugated pair.
        {"iii", 4, "(1 2 3 4)", "(1 2)(3 4)", {{K::EvenReal0Fix, 4}},
         {{K::EvenReal0Fix, 2}, {K::ConjugatedPair, 1}}, 2},
        // (iv) 1: odd real cuts off a conjugated pair.
        {"iv", 3, "(1 2 3)", "(1 2)", {{K::OddReal, 3}},
         {{K::OddReal, 1}, {K::ConjugatedPair, 1}}, 1},
        // (v) 4: even cut, even join.
        {"v", 6, "(1 2 3 4)(5 6)", "(1 2)(3 4)(5 6)",
         {{K::EvenReal0Fix, 2}, {K::EvenReal0Fix, 4}},
         {{K::EvenReal0Fix, 2}, {K::EvenReal0Fix, 4}}, 4},
        // (vi) 4: even 2-fix cuts to odds, one joins the even 0-fix.
        {"vi", 6, "(1 2 3 4)(5 6)", "(1 3)(5 6)",
         {{K::EvenReal0Fix, 2}, {K::EvenReal2Fix, 4}}, {{K::OddReal, 1}, {K::OddReal, 5}}, 4},
        // (vii) 2: even 2-fix cuts to odds, one joins an odd.
        {"vii", 5, "(1 2 3 4)", "(1 3)", {{K::OddReal, 1}, {K::EvenReal2Fix, 4}},
         {{K::OddReal, 1}, {K::EvenReal2Fix, 4}}, 2},
        // (viii) 2: even 0-fix cuts to evens, one joins an odd.
        {"viii", 5, "(1 2 3 4)", "(1 2)(3 4)", {{K::OddReal, 1}, {K::EvenReal0Fix, 4}},
         {{K::EvenReal0Fix, 2}, {K::OddReal, 3}}, 2},
        // (ix) 2: odd cuts to even + odd, odd piece joins the even.
        {"ix", 5, "(1 2 3)(4 5)", "(1 2)(4 5)", {{K::EvenReal0Fix, 2}, {K::OddReal, 3}},
         {{K::EvenReal0Fix, 2}, {K::OddReal, 3}}, 2},
        // (x) 2: odd cuts to odd + even, even piece joins the even.
        {"x", 5, "(1 2 3)(4 5)", "(1 2)(4 5)", {{K::EvenReal0Fix, 2}, {K::OddReal, 3}},
         {{K::OddReal, 1}, {K::EvenReal0Fix, 4}}, 2},
        // (xi) 1: odd cuts, odd piece joins the other odd into an even 2-fix.
        {"xi", 4, "(1 2 3)", "(1 2)", {{K::OddReal, 1}, {K::OddReal, 3}},
         {{K::EvenReal0Fix, 2}, {K::EvenReal2Fix, 2}}, 1},
        // (xii) 1: odd cuts, even piece joins the other odd.
        {"xii", 4, "(1 2 3)", "(1 2)", {{K::OddReal, 1}, {K::OddReal, 3}},
         {{K::OddReal, 1}, {K::OddReal, 3}}, 1},
        // (xiii) 1: odd circle (weight 3 forces the 1+2 split).
        {"xiii", 3, "(1 2 3)", "(1 2)", {{K::OddReal, 3}}, {{K::OddReal, 3}}, 1},
        // (xiv) 4, and the bracketed 2 when both circle edges are equal.
        {"xiv.4", 6, "(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)", {{K::EvenReal0Fix, 6}},
         {{K::EvenReal0Fix, 6}}, 4},
        {"xiv.2", 4, "(1 2 3 4)", "(1 2)(3 4)", {{K::EvenReal0Fix, 4}},
         {{K::EvenReal0Fix, 4}}, 2},
    };
}

} // namespace

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts,
                                            const std::function<void(const std::string&)>& sink) {
    std::vector<CriterionResult> results;

    // 1. Fixed-target factorizations into 3-cycles: N = d^((d-3)/2).
    {
        Criterion c(1, "fixed-target factorizations", sink);
        for (int d : {3, 5, 7}) {
            uint128 expected = 1;
            for (int i = 0; i < (d - 3) / 2; ++i) expected *= (uint128)d;
            try {
                uint128 got = count_fixed_target_factorizations(d);
                c.check(got == expected, "fixed-target d=" + std::to_string(d) + " N=" +
                                             to_string_u128(got) + " expected=" +
                                             to_string_u128(expected));
            } catch (const std::exception& e) {
                c.check(false, "fixed-target d=" + std::to_string(d) + " error=" + e.what());
            }
        }
        results.push_back(c.close());
    }

    // Shared battery for criteria 2-4.
    std::vector<BatteryCase> battery = correspondence_battery(opts.max_d, opts.max_r);
    std::vector<CaseData> data;
    parallel_cases(battery, opts.threads, data, [] {});

    // 2. Correspondence: tropical sum equals oracle count / d!.
    {
        Criterion c(2, "correspondence theorem", sink);
        for (const CaseData& cd : data) {
            if (!cd.error.empty()) {
                c.check(false, case_tag(cd.bc) + " error=" + cd.error);
                continue;
            }
            uint128 dfact = factorial_u128(cd.bc.lambda.sum());
            for (size_t i = 0; i < cd.splittings.size(); ++i) {
                bool divisible = cd.oracle_raw[i] % dfact == 0;
                uint128 oracle = divisible ? cd.oracle_raw[i] / dfact : 0;
                bool ok = divisible && oracle == cd.tropical[i];
                c.check(ok, case_tag(cd.bc) + " signs=" + cd.splittings[i].str() + " oracle=" +
                                (divisible ? to_string_u128(oracle) : "non-integer") +
                                " tropical=" + to_string_u128(cd.tropical[i]));
            }
        }
        results.push_back(c.close());
    }

    // 3. Lower bound and parity: E_g <= H and E_g = H (mod 2) for every s.
    {
        Criterion c(3, "enhanced lower bound and parity", sink);
        for (const CaseData& cd : data) {
            if (!cd.error.empty()) {
                c.check(false, case_tag(cd.bc) + " error=" + cd.error);
                continue;
            }
            uint128 dfact = factorial_u128(cd.bc.lambda.sum());
            for (size_t i = 0; i < cd.splittings.size(); ++i) {
                if (cd.oracle_raw[i] % dfact != 0) continue; // flagged by criterion 2
                uint128 h = cd.oracle_raw[i] / dfact;
                bool ok = cd.enhanced <= h && (h - cd.enhanced) % 2 == 0;
                c.check(ok, case_tag(cd.bc) + " signs=" + cd.splittings[i].str() + " E=" +
                                to_string_u128(cd.enhanced) + " H=" + to_string_u128(h));
            }
        }
        results.push_back(c.close());
    }

    // 4. Sign-arrangement invariance of the oracle at fixed s.
    {
        Criterion c(4, "sign-arrangement invariance", sink);
        for (const CaseData& cd : data) {
            if (!cd.error.empty()) {
                c.check(false, case_tag(cd.bc) + " error=" + cd.error);
                continue;
            }
            std::map<int, uint128> by_s;
            bool ok = true;
            for (size_t i = 0; i < cd.splittings.size(); ++i) {
                int s = cd.splittings[i].positives();
                auto [it, fresh] = by_s.emplace(s, cd.oracle_raw[i]);
                if (!fresh && it->second != cd.oracle_raw[i]) ok = false;
            }
            c.check(ok, case_tag(cd.bc) + (ok ? " invariant" : " differs across arrangements"));
        }
        results.push_back(c.close());
    }

    // 5. Unique real decomposition, exhaustively.
    {
        Criterion c(5, "unique real decomposition", sink);
        for (int d = 3; d <= std::min(opts.decompose_max_d, degree_cap()); ++d) {
            long admissible = 0, violations = 0;
            std::string first;
            for (const Perm& sigma : all_perms(d)) {
                for (const Perm& gamma : reversing_involutions(sigma)) {
                    for (int sign : {1, -1}) {
                        Perm geff = sign == 1 ? gamma : gamma * sigma;
                        for (const Perm& tau : three_cycles(d)) {
                            Perm prod = tau * sigma;
                            Perm check = geff * prod * geff;
                            if (!(check == prod.inverse())) continue;
                            ++admissible;
                            try {
                                auto [t1, t2] = real_decompose_3cycle(sigma, gamma, tau, sign);
                                if (!(t2 * t1 == tau)) {
                                    ++violations;
                                    if (first.empty()) first = "recomposition failed";
                                }
                            } catch (const std::exception& e) {
                                ++violations;
                                if (first.empty()) first = e.what();
                            }
                        }
                    }
                }
            }
            c.check(violations == 0, "decomposition d=" + std::to_string(d) + " admissible=" +
                                         std::to_string(admissible) + " violations=" +
                                         std::to_string(violations) +
                                         (first.empty() ? "" : " first=" + first));
        }
        results.push_back(c.close());
    }

    // 6. Local multiplicity census against the tabulated values.
    {
        Criterion c(6, "local multiplicity census", sink);
        for (const CensusCase& cc : census_fixtures()) {
            try {
                Perm sigma = Perm::parse(cc.sigma, cc.d);
                Perm gamma = Perm::parse(cc.gamma, cc.d);
                auto census = local_multiplicity_census(sigma, gamma, 1);
                TransitionDescriptor desc;
                desc.sign = 1;
                desc.incoming = cc.in;
                desc.outgoing = cc.out;
                std::sort(desc.incoming.begin(), desc.incoming.end());
                std::sort(desc.outgoing.begin(), desc.outgoing.end());
                auto it = census.find(desc);
                long got = it == census.end() ? 0 : it->second;
                c.check(got == cc.expected, std::string("census row ") + cc.row + " got=" +
                                                std::to_string(got) + " expected=" +
                                                std::to_string(cc.expected));
            } catch (const std::exception& e) {
                c.check(false, std::string("census row ") + cc.row + " error=" + e.what());
            }
        }
        results.push_back(c.close());
    }

    // 7. Non-vanishing: the built cover exists in the universal enumeration.
    {
        Criterion c(7, "non-vanishing construction", sink);
        for (int d = 1; d <= opts.nonvanish_max_d; ++d) {
            std::vector<Partition> parts = partitions_of(d);
            for (const Partition& lambda : parts)
                for (const Partition& mu : parts) {
                    TailDecomposition tl = tail_decomposition(lambda);
                    TailDecomposition tm = tail_decomposition(mu);
                    if (tl.o.length() == 0 || tl.o.length() != tm.o.length()) continue;
                    if (tl.e.length() != 0 || tm.e.length() != 0) continue;
                    for (int g : {0, 1}) {
                        if (d == 1 && g >= 1) continue; // no odd string of weight >= 3 exists
                        int r;
                        try {
                            r = branch_pair_count(g, lambda, mu);
                        } catch (const DegenerateError&) {
                            continue;
                        }
                        (void)r;
                        std::string tag = "nonvanish g=" + std::to_string(g) + " l=" +
                                          lambda.str() + " m=" + mu.str();
                        try {
                            TropicalCover built = build_nonvanishing_cover(g, lambda, mu);
                            auto violation = validate_cover(built, g, lambda, mu);
                            bool universal = is_universally_enhanced(built);
                            RealStructure dots;
                            dots.dotted = universal_dotting(built);
                            std::string key = canonical_key(built, dots, false);
                            auto classes = enumerate_universal(g, lambda, mu, opts.threads);
                            bool member = false;
                            for (const CoverClass& cls : classes) member |= cls.key == key;
                            bool ok = !violation && universal && !classes.empty() && member;
                            c.check(ok, tag + " classes=" + std::to_string(classes.size()) +
                                            (violation ? " violation=" + violation->clause : "") +
                                            (universal ? "" : " not-universal") +
                                            (member ? " member" : " missing"));
                        } catch (const std::exception& e) {
                            c.check(false, tag + " error=" + e.what());
                        }
                    }
                }
        }
        results.push_back(c.close());
    }

    // 8. Asymptotic block family.
    {
        Criterion c(8, "block-gluing family", sink);
        for (int m = 4; m <= opts.family_max_m; ++m) {
            uint128 needed = small_factorial((m - 1) / 3);
            try {
                std::vector<TropicalCover> family = build_block_family(m);
                std::set<std::string> keys;
                bool all_ok = true;
                std::string why;
                for (const TropicalCover& cover : family) {
                    auto violation = validate_cover(cover, 0, ones(m), ones(m));
                    if (violation) {
                        all_ok = false;
                        why = "violation=" + violation->clause + " (" + violation->detail + ")";
                        break;
                    }
                    if (!is_universally_enhanced(cover)) {
                        all_ok = false;
                        why = "not universally enhanced";
                        break;
                    }
                    RealStructure dots;
                    dots.dotted = universal_dotting(cover);
                    keys.insert(canonical_key(cover, dots, false));
                }
                bool ok = all_ok && (uint128)keys.size() >= needed;
                c.check(ok, "family m=" + std::to_string(m) + " distinct=" +
                                std::to_string(keys.size()) + " needed=" +
                                to_string_u128(needed) + (why.empty() ? "" : " " + why));
            } catch (const std::exception& e) {
                c.check(false, "family m=" + std::to_string(m) + " error=" + e.what());
            }
        }
        for (int m = 4; m <= opts.family_enum_max_m; ++m) {
            uint128 needed = small_factorial((m - 1) / 3);
            try {
                uint128 e0 = enhanced_number(0, ones(m), ones(m), opts.threads);
                c.check(e0 >= needed, "family-enum m=" + std::to_string(m) + " E0=" +
                                          to_string_u128(e0) + " needed=" +
                                          to_string_u128(needed));
            } catch (const std::exception& e) {
                c.check(false, "family-enum m=" + std::to_string(m) + " error=" + e.what());
            }
        }
        results.push_back(c.close());
    }

    return results;
}

} // namespace hnum
