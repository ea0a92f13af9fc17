#ifndef KCLASS_COUNT_HPP
#define KCLASS_COUNT_HPP

#include "orbits.hpp"

#include <map>
#include <string>
#include <vector>

namespace kclass {

enum class CountFamily { B, C, DCompact, DUnequal };

struct FiberCheck {
    WeylElement tau;
    std::size_t expected = 0;
    std::size_t actual = 0;
};

struct CountReport {
    CountFamily family = CountFamily::B;
    int n = 0;
    std::size_t involutions = 0;
    std::size_t clans = 0;     // clans of the family, enumerated directly
    std::size_t expected = 0;  // sum of predicted fibers
    std::vector<FiberCheck> fibers;

    std::vector<FiberCheck> mismatches() const {
        std::vector<FiberCheck> out;
        for (auto& f : fibers)
            if (f.expected != f.actual) out.push_back(f);
        return out;
    }
    bool ok() const { return mismatches().empty() && expected == clans; }
};

inline std::string family_name(CountFamily f) {
    switch (f) {
    case CountFamily::B: return "B";
    case CountFamily::C: return "C";
    case CountFamily::DCompact: return "D-compact";
    default: return "D-unequal";
    }
}

inline std::pair<CountFamily, int> parse_count_spec(const std::string& spec) {
    auto colon = spec.rfind(':');
    if (colon == std::string::npos) throw ContractError("count spec must look like FAMILY:n");
    std::string fam = spec.substr(0, colon), num = spec.substr(colon + 1);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
        throw ContractError("count spec needs a positive integer n");
    int n = std::stoi(num);
    if (n < 1) throw ContractError("count spec needs n >= 1");
    if (fam == "B") return {CountFamily::B, n};
    if (fam == "C") return {CountFamily::C, n};
    if (fam == "D-compact") return {CountFamily::DCompact, n};
    if (fam == "D-unequal") return {CountFamily::DUnequal, n};
    throw ContractError("unknown count family '" + fam + "'");
}

namespace detail {

inline std::vector<WeylElement> signed_involutions(WeylType t, int n) {
    std::vector<WeylElement> out;
    for (auto& w : enumerate_group(WeylType::BC, n)) {
        if (!is_involution(w)) continue;
        int neg = 0;
        for (int v : w.img)
            if (v < 0) ++neg;
        if (t == WeylType::D && neg % 2) continue;
        out.push_back(w);
    }
    return out;
}

inline int fixed_in_first_half(const WeylElement& sigma, int n) {
    int k = 0;
    for (int i = 1; i <= n; ++i)
        if (sigma(i) == i) ++k;
    return k;
}

inline bool swaps_mirror(const WeylElement& sigma, int n) {
    for (int i = 1; i <= n; ++i)
        if (sigma(i) == 2 * n + 1 - i) return true;
    return false;
}

} // namespace detail

// fibers of clans over involutions of the small Weyl group, embedded as permutations of positions
inline CountReport count_fibers(CountFamily fam, int n) {
    CountReport rep;
    rep.family = fam;
    rep.n = n;
    std::vector<Clan> clans;
    auto add = [&](const SymmetricPair& P) {
        for (auto& q : enumerate_orbits(P)) clans.push_back(as_clan(q));
    };
    std::vector<WeylElement> taus;
    bool odd = fam == CountFamily::B;
    switch (fam) {
    case CountFamily::B:
        taus = detail::signed_involutions(WeylType::BC, n);
        for (int p = 0; p <= n; ++p) add(make_pair(Case::B_OO, p, n - p));
        break;
    case CountFamily::C:
        taus = detail::signed_involutions(WeylType::BC, n);
        for (int p = 0; p <= n; ++p) add(make_pair(Case::C_SpSp, p, n - p));
        add(make_pair(Case::C_GL, n));
        break;
    case CountFamily::DCompact:
        taus = detail::signed_involutions(WeylType::D, n);
        for (int p = 0; p <= n; ++p) {
            SymmetricPair P;
            P.kind = Case::D_OO_even;
            P.p = p;
            P.q = n - p;
            P.n = n;
            add(P);
        }
        // both conjugacy classes of GL(n): even and odd parity skew anti-reflexive clans
        for (auto& g : enumerate_clans(n, n))
            if (is_skew_symmetric(g) && is_antireflexive(g)) clans.push_back(g);
        break;
    case CountFamily::DUnequal:
        for (auto& w : detail::signed_involutions(WeylType::BC, n)) {
            int neg = 0;
            for (int v : w.img)
                if (v < 0) ++neg;
            if (neg % 2) taus.push_back(w);
        }
        for (int p = 0; p + 1 <= n; ++p) {
            SymmetricPair P;
            P.kind = Case::D_OO_odd;
            P.p = p;
            P.q = n - p;
            P.n = n;
            add(P);
        }
        break;
    }
    std::map<std::vector<int>, std::size_t> by_involution;
    for (auto& g : clans) ++by_involution[clan_to_involution(g).img];
    rep.involutions = taus.size();
    rep.clans = clans.size();
    for (auto& tau : taus) {
        auto sigma = embed_as_permutation(tau, odd);
        std::size_t expect;
        if (fam == CountFamily::DUnequal) {
            expect = std::size_t{1} << detail::fixed_in_first_half(tau, n);
        } else {
            int k = detail::fixed_in_first_half(sigma, n);
            if (fam == CountFamily::B || detail::swaps_mirror(sigma, n)) expect = std::size_t{1} << k;
            else expect = std::size_t{1} << (k + 1);
        }
        auto it = by_involution.find(sigma.img);
        std::size_t got = it == by_involution.end() ? 0 : it->second;
        rep.fibers.push_back({tau, expect, got});
        rep.expected += expect;
    }
    return rep;
}

} // namespace kclass

#endif
