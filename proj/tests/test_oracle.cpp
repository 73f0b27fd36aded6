#include <doctest.h>

#include <algorithm>

#include "hnum/errors.hpp"
#include "hnum/oracle.hpp"

using namespace hnum;

namespace {

Perm P(const std::string& text, int d) { return Perm::parse(text, d); }
Partition Pt(const std::string& text) { return Partition::parse(text); }
SignSplitting S(const std::string& text) { return SignSplitting::parse(text); }

bool reverses(const Perm& g, const Perm& x) { return g * x * g == x.inverse(); }

std::vector<Perm> all_perms(int d) {
    std::vector<int> img(d);
    for (int i = 0; i < d; ++i) img[i] = i;
    std::vector<Perm> out;
    do {
        out.push_back(Perm::from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

} // namespace

TEST_CASE("branch pair count") {
    CHECK(branch_pair_count(0, Pt("3"), Pt("1,1,1")) == 1);
    CHECK(branch_pair_count(1, Pt("3"), Pt("1,1,1")) == 2);
    CHECK_THROWS_AS(branch_pair_count(0, Pt("3"), Pt("3")), DegenerateError);
    CHECK_THROWS_AS(branch_pair_count(0, Pt("3"), Pt("2,1")), DegenerateError);
    CHECK_THROWS_AS(branch_pair_count(0, Pt("3"), Pt("1,1,1,1")), DegenerateError);
}

TEST_CASE("real tuple counts for (0,(3),(1,1,1))") {
    // Exhaustive S_3 search: two 3-cycles sigma1, three reversing
    // involutions each, tau and sigma2 forced.
    CHECK(count_real_tuples(0, Pt("3"), Pt("1,1,1"), S("+")) == 6);
    CHECK(count_real_tuples(0, Pt("3"), Pt("1,1,1"), S("-")) == 6);
    CHECK(real_hurwitz_oracle(0, Pt("3"), Pt("1,1,1"), S("+")).value == Rational(1, 1));
    CHECK(real_hurwitz_oracle(0, Pt("3"), Pt("1,1,1"), S("-")).value == Rational(1, 1));
    CHECK_THROWS_AS(count_real_tuples(0, Pt("3"), Pt("3"), S("")), DegenerateError);
    CHECK_THROWS_AS(count_real_tuples(0, Pt("3"), Pt("1,1,1"), S("++")), DegenerateError);
}

TEST_CASE("slow reference agrees with the pruned search") {
    OracleOptions slow;
    slow.slow_reference = true;
    struct Case {
        int g;
        const char* l;
        const char* m;
        const char* s;
    } cases[] = {
        {0, "3", "1,1,1", "+"},  {0, "3", "1,1,1", "-"},  {1, "3", "3", "+"},
        {1, "3", "3", "-"},      {0, "2,1", "2,1", "+"},  {0, "2,1", "2,1", "-"},
        {1, "1,1,1", "3", "+-"}, {0, "4", "2,1,1", "+"},  {0, "2,2", "1,1,1,1", "+-"},
    };
    for (const Case& c : cases) {
        uint128 fast = count_real_tuples(c.g, Pt(c.l), Pt(c.m), S(c.s));
        uint128 ref = count_real_tuples(c.g, Pt(c.l), Pt(c.m), S(c.s), slow);
        CHECK(fast == ref);
    }
}

TEST_CASE("counts are identical across thread counts") {
    OracleOptions two;
    two.threads = 2;
    OracleOptions four;
    four.threads = 4;
    uint128 base = count_real_tuples(1, Pt("3,2"), Pt("3,2"), S("+-"));
    CHECK(base == count_real_tuples(1, Pt("3,2"), Pt("3,2"), S("+-"), two));
    CHECK(base == count_real_tuples(1, Pt("3,2"), Pt("3,2"), S("+-"), four));
    CHECK(count_complex_tuples(0, Pt("4"), Pt("2,1,1")) ==
          count_complex_tuples(0, Pt("4"), Pt("2,1,1"), four));
}

TEST_CASE("sign arrangement leaves the count unchanged") {
    struct Case {
        int g;
        const char* l;
        const char* m;
    } cases[] = {{1, "2,1", "2,1"}, {1, "3,1", "2,2"}, {1, "3", "1,1,1"}};
    for (const Case& c : cases) {
        int r = branch_pair_count(c.g, Pt(c.l), Pt(c.m));
        std::map<int, uint128> by_s;
        for (const SignSplitting& s : SignSplitting::all(r)) {
            uint128 n = count_real_tuples(c.g, Pt(c.l), Pt(c.m), s);
            auto [it, fresh] = by_s.emplace(s.positives(), n);
            if (!fresh) CHECK(it->second == n);
        }
    }
}

TEST_CASE("complex oracle") {
    CHECK(complex_hurwitz_oracle(0, Pt("3"), Pt("1,1,1")).value == Rational(1, 3));
    CHECK(complex_hurwitz_oracle(0, Pt("5"), Pt("1,1,1,1,1")).value == Rational(1, 1));
    CHECK_THROWS_AS(complex_hurwitz_oracle(0, Pt("3"), Pt("3")), DegenerateError);
}

TEST_CASE("fixed-target factorizations") {
    CHECK(count_fixed_target_factorizations(3) == 1);
    CHECK(count_fixed_target_factorizations(5) == 5);
    CHECK(count_fixed_target_factorizations(7) == 49);
    CHECK_THROWS_AS(count_fixed_target_factorizations(4), DegenerateError);
}

TEST_CASE("unique real decomposition of a 3-cycle") {
    // sigma = id, gamma = (12): only the first factor (12) keeps the product
    // reversed, so tau = (13) o (12).
    auto [t1, t2] = real_decompose_3cycle(Perm(3), P("(1 2)", 3), P("(1 2 3)", 3), 1);
    CHECK(t1 == P("(1 2)", 3));
    CHECK(t2 == P("(1 3)", 3));
    CHECK(t2 * t1 == P("(1 2 3)", 3));

    CHECK_THROWS_AS(real_decompose_3cycle(Perm(3), P("(1 2)", 3), P("(1 2)", 3), 1),
                    DegenerateError); // not a 3-cycle
    CHECK_THROWS_AS(real_decompose_3cycle(P("(1 2 3)", 3), Perm(3), P("(1 2 3)", 3), 1),
                    DegenerateError); // gamma does not reverse sigma
}

TEST_CASE("decomposition recomposes over the admissible domain, d <= 4") {
    for (int d = 3; d <= 4; ++d) {
        for (const Perm& sigma : all_perms(d)) {
            for (const Perm& gamma : reversing_involutions(sigma)) {
                for (int sign : {1, -1}) {
                    Perm geff = sign == 1 ? gamma : gamma * sigma;
                    for (const Perm& tau : three_cycles(d)) {
                        if (!reverses(geff, tau * sigma)) continue;
                        auto [t1, t2] = real_decompose_3cycle(sigma, gamma, tau, sign);
                        CHECK(t2 * t1 == tau);
                        CHECK(reverses(geff, t1 * sigma));
                    }
                }
            }
        }
    }
}

TEST_CASE("census totals count the admissible 3-cycles") {
    struct Config {
        int d;
        const char* sigma;
        const char* gamma;
    } configs[] = {
        {4, "(3 4)", "(1 2)(3 4)"}, {4, "(1 2 3 4)", "(1 2)(3 4)"}, {3, "(1 2 3)", "(1 2)"},
        {5, "(1 2 3)(4 5)", "(1 2)(4 5)"}, {6, "(1 2 3 4)(5 6)", "(1 3)(5 6)"},
    };
    for (const Config& cfg : configs) {
        Perm sigma = P(cfg.sigma, cfg.d);
        Perm gamma = P(cfg.gamma, cfg.d);
        for (int sign : {1, -1}) {
            Perm geff = sign == 1 ? gamma : gamma * sigma;
            long direct = 0;
            for (const Perm& tau : three_cycles(cfg.d))
                if (reverses(geff, tau * sigma)) ++direct;
            long total = 0;
            for (const auto& [desc, n] : local_multiplicity_census(sigma, gamma, sign)) {
                CHECK(desc.sign == sign);
                total += n;
            }
            CHECK(total == direct);
        }
    }
}

TEST_CASE("census: conjugated pair of 1-cycles plus an even 2-cycle gives row value 4") {
    Perm sigma = P("(3 4)", 4);
    Perm gamma = P("(1 2)(3 4)", 4);
    auto census = local_multiplicity_census(sigma, gamma, 1);
    TransitionDescriptor want;
    want.sign = 1;
    want.incoming = {{CycleKind::EvenReal0Fix, 2}, {CycleKind::ConjugatedPair, 1}};
    want.outgoing = {{CycleKind::EvenReal0Fix, 4}};
    std::sort(want.incoming.begin(), want.incoming.end());
    REQUIRE(census.count(want) == 1);
    CHECK(census.at(want) == 4);
}

TEST_CASE("negative rows live on the shifted involution") {
    // sigma = (34), gamma = (12): the shifted involution gamma o sigma is
    // (12)(34), under which the pair-join row appears with count 4.
    Perm sigma = P("(3 4)", 4);
    Perm gamma = P("(1 2)", 4);
    auto census = local_multiplicity_census(sigma, gamma, -1);
    TransitionDescriptor want;
    want.sign = -1;
    want.incoming = {{CycleKind::EvenReal0Fix, 2}, {CycleKind::ConjugatedPair, 1}};
    want.outgoing = {{CycleKind::EvenReal0Fix, 4}};
    std::sort(want.incoming.begin(), want.incoming.end());
    REQUIRE(census.count(want) == 1);
    CHECK(census.at(want) == 4);

    // With gamma = (12)(34) the shifted involution is (12), whose even cycle
    // carries two fixed entries and admits no 3-cycle at all.
    CHECK(local_multiplicity_census(sigma, P("(1 2)(3 4)", 4), -1).empty());
}

TEST_CASE("negative census is the positive census of the shifted involution") {
    Perm sigma = P("(1 2 3 4)(5 6)", 6);
    Perm gamma = P("(1 2)(3 4)(5 6)", 6);
    auto neg = local_multiplicity_census(sigma, gamma, -1);
    auto pos_shifted = local_multiplicity_census(sigma, gamma * sigma, 1);
    REQUIRE(neg.size() == pos_shifted.size());
    auto it = pos_shifted.begin();
    for (const auto& [desc, n] : neg) {
        CHECK(desc.incoming == it->first.incoming);
        CHECK(desc.outgoing == it->first.outgoing);
        CHECK(n == it->second);
        ++it;
    }
}

TEST_CASE("doubling a tuple satisfies the transposition-level chain") {
    // Collect every tuple of a small search and rebuild it from the unique
    // transposition decompositions with the doubled sign sequence.
    struct Case {
        int g;
        const char* l;
        const char* m;
        const char* s;
    } cases[] = {{1, "3", "1,1,1", "+-"}, {1, "3", "1,1,1", "++"}, {0, "2,2", "1,1,1,1", "-+"},
                 {1, "2,2", "2,2", "-+"}, {1, "3,2", "3,2", "+-"}, {0, "3,3", "3,1,1,1", "++"}};
    for (const Case& c : cases) {
        Partition lambda = Pt(c.l), mu = Pt(c.m);
        SignSplitting signs = S(c.s);
        SignSplitting doubled = signs.doubled();
        long checked = 0;
        OracleOptions opts;
        opts.visitor = [&](const RealTuple& t) {
            if (checked >= 40) return; // sample
            ++checked;
            // Decompose each 3-cycle against the chain involution in force
            // at its step.
            std::vector<Perm> trans;
            Perm pi = t.sigma1;
            Perm g3 = signs.sign(0) == 1 ? t.gamma : t.gamma * t.sigma1;
            for (size_t i = 0; i < t.taus.size(); ++i) {
                auto [t1, t2] = real_decompose_3cycle(pi, g3, t.taus[i], 1);
                trans.push_back(t1);
                trans.push_back(t2);
                pi = t.taus[i] * pi;
                if (i + 1 < t.taus.size() && signs.sign((int)i + 1) != signs.sign((int)i))
                    g3 = g3 * pi;
            }
            // Walk the doubled chain.
            Perm cur = t.sigma1;
            Perm gcur = doubled.sign(0) == 1 ? t.gamma : t.gamma * t.sigma1;
            for (size_t j = 0; j < trans.size(); ++j) {
                cur = trans[j] * cur;
                CHECK(reverses(gcur, cur));
                if (j + 1 < trans.size() && doubled.sign((int)j + 1) != doubled.sign((int)j))
                    gcur = gcur * cur;
            }
            CHECK(cur == t.sigma2.inverse());
        };
        count_real_tuples(c.g, lambda, mu, signs, opts);
        CHECK(checked > 0);
    }
}
