#include "support.hpp"

#include <gtest/gtest.h>

using namespace kclass;

namespace {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// choose 2k positions, match them, place the signs
long clan_count(int p, int q) {
    int N = p + q;
    long total = 0;
    for (int k = 0; 2 * k <= N; ++k) {
        int signs = N - 2 * k;
        if ((signs + p - q) % 2) continue;
        int plus = (signs + p - q) / 2;
        if (plus < 0 || plus > signs) continue;
        long matchings = 1;
        for (int j = 2 * k - 1; j > 1; j -= 2) matchings *= j;
        total += binom(N, 2 * k) * matchings * binom(signs, plus);
    }
    return total;
}

} // namespace

TEST(Clan, CountsMatchClosedForm) {
    for (int p = 0; p <= 7; ++p)
        for (int q = 0; p + q <= 7; ++q) {
            if (p + q == 0) continue;
            auto all = enumerate_clans(p, q);
            EXPECT_EQ(static_cast<long>(all.size()), clan_count(p, q)) << p << "," << q;
            EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
            EXPECT_TRUE(std::adjacent_find(all.begin(), all.end()) == all.end());
        }
    EXPECT_EQ(enumerate_clans(2, 2).size(), 21u);
}

TEST(Clan, CanonicalizeIsIdempotent) {
    for (auto& g : enumerate_clans(3, 3)) EXPECT_EQ(canonicalize(g.c), g);
    EXPECT_EQ(canonicalize({7, PLUS, 7, 3, MINUS, 3}), (Clan{{1, PLUS, 1, 2, MINUS, 2}}));
    EXPECT_THROW(canonicalize({1, PLUS, 2}), ClanError);
    EXPECT_THROW(canonicalize({1, 1, PLUS}, 1, 1), ClanError);
}

TEST(Clan, ParseAndPrint) {
    auto g = parse_clan("(+,1,1,-)");
    EXPECT_EQ(to_string(g), "(+,1,1,-)");
    EXPECT_EQ(parse_clan("+11-"), g);
    EXPECT_EQ(parse_clan("+ 2 2 -"), g);
    EXPECT_THROW(parse_clan("(+,a)"), ClanError);
    EXPECT_THROW(parse_clan("(1,+)"), ClanError);
}

TEST(Clan, MatesAndCounts) {
    auto g = parse_clan("(1,+,2,1,-,2)");
    EXPECT_EQ(g.mate(1), 4);
    EXPECT_EQ(g.mate(6), 3);
    EXPECT_EQ(g.mate(2), 0);
    EXPECT_EQ(g.plus(), 1);
    EXPECT_EQ(g.minus(), 1);
    EXPECT_EQ(g.pairs(), 2);
}

TEST(Clan, GammaStatistics) {
    auto g = parse_clan("(1,+,2,1,-,2)");
    EXPECT_EQ(gamma_plus(g, 4), 2);
    EXPECT_EQ(gamma_minus(g, 4), 1);
    EXPECT_EQ(gamma_minus(g, 6), 3);
    EXPECT_EQ(gamma_pair(g, 1, 3), 1);
    EXPECT_EQ(gamma_pair(g, 3, 4), 1);
    EXPECT_EQ(gamma_pair(g, 4, 5), 1);
    EXPECT_EQ(gamma_pair(g, 5, 6), 0);
    auto c = gamma_counts(g, 3, 5);
    EXPECT_EQ(c.plus, 1);
    EXPECT_EQ(c.pair, 1);
    EXPECT_THROW(gamma_pair(g, 3, 3), ContractError);
}

TEST(Clan, SymmetryPredicates) {
    for (auto& g : enumerate_clans(2, 3)) {
        if (is_symmetric(g)) { EXPECT_EQ(reversed(g), g); }
        EXPECT_EQ(reversed(reversed(g)), g);
        EXPECT_EQ(sign_flipped(sign_flipped(g)), g);
    }
    EXPECT_TRUE(is_symmetric(parse_clan("(1,+,-,-,+,1)")));
    EXPECT_FALSE(is_antireflexive(parse_clan("(1,+,-,-,+,1)")));
    EXPECT_TRUE(is_skew_symmetric(parse_clan("(+,1,1,-)")));
    EXPECT_TRUE(is_antireflexive(parse_clan("(1,2,1,2)")));
    auto sym = symmetry(parse_clan("(1,1,2,2)"));
    EXPECT_TRUE(sym.is_symmetric);
    EXPECT_TRUE(sym.is_skew_symmetric);
}

TEST(Clan, InvolutionAndPositionPermutation) {
    auto g = parse_clan("(1,+,1,-)");
    EXPECT_EQ(to_cycles(clan_to_involution(g)), "(1,3)");
    auto s = parse_oneline("2134", WeylType::A);
    EXPECT_EQ(permute_positions(g, s), parse_clan("(+,1,1,-)"));
}

TEST(Count, FibersMatchForAllFamilies) {
    for (auto fam : {CountFamily::B, CountFamily::C, CountFamily::DCompact, CountFamily::DUnequal})
        for (int n = 2; n <= 4; ++n) {
            auto r = count_fibers(fam, n);
            EXPECT_TRUE(r.ok()) << family_name(fam) << ":" << n;
            EXPECT_EQ(r.expected, r.clans);
            EXPECT_GT(r.involutions, 0u);
        }
}

TEST(Count, TypeBMirrorSwap) {
    auto r = count_fibers(CountFamily::B, 2);
    bool seen = false;
    for (auto& f : r.fibers)
        if (to_cycles(embed_as_permutation(f.tau, true)) == "(1,5)") {
            seen = true;
            EXPECT_EQ(f.actual, 2u);
            EXPECT_EQ(f.expected, 2u);
        }
    EXPECT_TRUE(seen);
}

TEST(Count, TypeCFiberSizes) {
    int n = 3;
    auto r = count_fibers(CountFamily::C, n);
    for (auto& f : r.fibers) {
        auto sigma = embed_as_permutation(f.tau, false);
        int k = 0;
        bool mirror = false;
        for (int i = 1; i <= n; ++i) {
            if (sigma(i) == i) ++k;
            if (sigma(i) == 2 * n + 1 - i) mirror = true;
        }
        EXPECT_EQ(f.actual, std::size_t{1} << (mirror ? k : k + 1)) << to_oneline(f.tau);
    }
}

TEST(Count, SpecParsing) {
    EXPECT_EQ(parse_count_spec("D-compact:3").first, CountFamily::DCompact);
    EXPECT_EQ(parse_count_spec("B:4").second, 4);
    EXPECT_THROW(parse_count_spec("E:2"), ContractError);
    EXPECT_THROW(parse_count_spec("B:x"), ContractError);
}
