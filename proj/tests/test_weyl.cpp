#include "support.hpp"

#include <gtest/gtest.h>

#include <queue>

using namespace kclass;

namespace {

const WeylType kTypes[] = {WeylType::A, WeylType::BC, WeylType::D};

// word length by breadth-first search over simple reflections
std::map<std::vector<int>, int> cayley_lengths(WeylType t, int n) {
    std::map<std::vector<int>, int> dist;
    auto id = WeylElement::identity(t, n);
    std::queue<WeylElement> todo;
    dist[id.img] = 0;
    todo.push(id);
    while (!todo.empty()) {
        auto w = todo.front();
        todo.pop();
        for (int i = 1; i <= rank_of(t, n); ++i) {
            auto v = compose(w, simple_reflection(t, n, i));
            if (dist.count(v.img)) continue;
            dist[v.img] = dist[w.img] + 1;
            todo.push(v);
        }
    }
    return dist;
}

} // namespace

TEST(Weyl, GroupOrders) {
    for (auto t : kTypes)
        for (int n = 2; n <= 4; ++n) {
            auto g = enumerate_group(t, n);
            EXPECT_EQ(g.size(), group_order(t, n));
            EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
            for (auto& w : g) EXPECT_TRUE(is_valid(w));
        }
    EXPECT_EQ(group_order(WeylType::BC, 3), 48u);
    EXPECT_EQ(group_order(WeylType::D, 4), 192u);
}

TEST(Weyl, PositiveRootCounts) {
    for (int n = 2; n <= 5; ++n) {
        EXPECT_EQ(positive_roots(WeylType::A, n).size(), static_cast<std::size_t>(n * (n - 1) / 2));
        EXPECT_EQ(positive_roots(WeylType::BC, n).size(), static_cast<std::size_t>(n * n));
        EXPECT_EQ(positive_roots(WeylType::BC, n, false).size(), static_cast<std::size_t>(n * (n - 1)));
        EXPECT_EQ(positive_roots(WeylType::D, n).size(), static_cast<std::size_t>(n * (n - 1)));
    }
}

TEST(Weyl, LengthMatchesWordLength) {
    for (auto t : kTypes)
        for (int n = 2; n <= 3; ++n) {
            auto dist = cayley_lengths(t, n);
            EXPECT_EQ(dist.size(), group_order(t, n));
            for (auto& w : enumerate_group(t, n)) EXPECT_EQ(length(w), dist.at(w.img)) << to_oneline(w);
        }
}

TEST(Weyl, LengthChangesByOneUnderGenerators) {
    for (auto t : kTypes)
        for (int n = 2; n <= 4; ++n)
            for (auto& w : enumerate_group(t, n))
                for (int i = 1; i <= rank_of(t, n); ++i)
                    EXPECT_EQ(std::abs(length(compose(w, simple_reflection(t, n, i))) - length(w)), 1);
}

TEST(Weyl, InverseAndComposition) {
    for (auto t : kTypes) {
        auto g = enumerate_group(t, 3);
        for (auto& a : g) {
            EXPECT_EQ(compose(a, inverse(a)), WeylElement::identity(t, 3));
            for (int i = 1; i <= 3; ++i) EXPECT_EQ(std::abs(inverse(a)(std::abs(a(i)))), i);
        }
    }
}

TEST(Weyl, EmbeddingIsHomomorphism) {
    for (bool odd : {false, true})
        for (int n = 1; n <= 3; ++n) {
            auto g = enumerate_group(WeylType::BC, n);
            for (auto& a : g)
                for (auto& b : g)
                    EXPECT_EQ(embed_as_permutation(compose(a, b), odd),
                              compose(embed_as_permutation(a, odd), embed_as_permutation(b, odd)));
        }
}

TEST(Weyl, EmbeddingCommutesWithMirror) {
    for (auto& w : enumerate_group(WeylType::BC, 3)) {
        auto s = embed_as_permutation(w, true);
        for (int i = 1; i <= 7; ++i) EXPECT_EQ(s(8 - i), 8 - s(i));
        EXPECT_EQ(s(4), 4);
    }
}

TEST(Weyl, LpConstantOnBlockCosets) {
    for (int n = 2; n <= 5; ++n)
        for (int p = 1; p < n; ++p) {
            auto g = enumerate_group(WeylType::A, n);
            std::vector<WeylElement> wk;
            for (auto& u : g) {
                bool ok = true;
                for (int i = 1; i <= p; ++i) ok = ok && u(i) <= p;
                if (ok) wk.push_back(u);
            }
            for (std::size_t k = 0; k < g.size(); k += 7)
                for (auto& u : wk) EXPECT_EQ(l_p(compose(u, g[k]), p), l_p(g[k], p));
        }
}

TEST(Weyl, FBParityConstantOnEvenBlockCosets) {
    for (int n = 2; n <= 4; ++n)
        for (int p = 1; p < n; ++p) {
            auto g = enumerate_group(WeylType::BC, n);
            std::vector<WeylElement> wk;
            for (auto& u : g) {
                bool ok = true;
                int flips = 0;
                for (int i = 1; i <= n; ++i) {
                    ok = ok && ((i <= p) == (std::abs(u(i)) <= p));
                    if (i <= p && u(i) < 0) ++flips;
                }
                if (ok && flips % 2 == 0) wk.push_back(u);
            }
            for (std::size_t k = 0; k < g.size(); k += 5)
                for (auto& u : wk) EXPECT_EQ(f_B(compose(u, g[k]), p) % 2, f_B(g[k], p) % 2);
        }
}

TEST(Weyl, SignStatistics) {
    auto w = parse_oneline("-31-2", WeylType::BC);
    auto st = sign_stats(w);
    EXPECT_EQ(st.neg, (std::vector<int>{1, 3}));
    EXPECT_EQ(st.f, 2);
    EXPECT_EQ(st.g, 2);
    EXPECT_EQ(f_B(w, 2), 1);
}

TEST(Weyl, UnequalRankStatsOnStandardRep) {
    auto st = unequal_rank_stats(parse_oneline("312", WeylType::A), 1);
    EXPECT_EQ(st.I, std::vector<int>{1});
    EXPECT_EQ(st.f, 1);
    EXPECT_EQ(unequal_rank_stats(parse_oneline("132", WeylType::A), 1).f, 0);
    EXPECT_THROW(unequal_rank_stats(parse_oneline("123", WeylType::A), 1), ContractError);
    EXPECT_THROW(unequal_rank_stats(parse_oneline("321", WeylType::A), 1), ContractError);
}

TEST(Weyl, NotationRoundTrips) {
    for (auto& w : enumerate_group(WeylType::BC, 3)) EXPECT_EQ(parse_oneline(to_oneline(w), WeylType::BC), w);
    for (auto& w : enumerate_group(WeylType::A, 5))
        if (is_involution(w)) { EXPECT_EQ(parse_cycles(to_cycles(w), 5), w); }
    EXPECT_EQ(to_cycles(WeylElement::identity(WeylType::A, 3)), "id");
    EXPECT_EQ(to_cycles(parse_oneline("4321", WeylType::A)), "(1,4)(2,3)");
    EXPECT_THROW(parse_cycles("(1,5)", 4), ContractError);
    EXPECT_THROW(parse_oneline("1-2", WeylType::A), ContractError);
    EXPECT_THROW(parse_oneline("-12", WeylType::D), ContractError);
}
