#ifndef KCLASS_TEST_CHECKS_HPP
#define KCLASS_TEST_CHECKS_HPP

// whole-library checks shared by the acceptance runner and the unit tests

#include "support.hpp"

#include <sstream>

namespace kclass::testing {

struct CheckResult {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

inline CheckResult check_orbit_counts() {
    CheckResult r;
    const std::pair<const char*, std::size_t> expect[] = {
        {"A:glpq:2,2", 21}, {"A:so:5", 26},   {"A:so-even:4", 13}, {"A:sp:4", 3},  {"A:sp:6", 15},       {"B:oo:2,1", 25},
        {"C:spsp:2,1", 9},  {"C:gl:2", 11},   {"D:oo:2,1", 12},    {"D:gl:3", 10}, {"D:oo-odd:1,2", 13},
    };
    for (auto& [d, n] : expect) {
        auto P = parse_pair(d);
        auto got = enumerate_orbits(P).size();
        auto nodes = static_cast<std::size_t>(build_graph(P).size());
        if (got != n || nodes != n)
            r.fail(std::string(d) + ": expected " + std::to_string(n) + ", enumerated " + std::to_string(got) + ", graph " +
                   std::to_string(nodes));
    }
    return r;
}

inline CheckResult check_fixtures() {
    CheckResult r;
    auto files = list_fixtures();
    if (files.size() != 13) r.fail("expected 13 fixtures, found " + std::to_string(files.size()));
    for (auto& f : files) {
        auto fx = load_fixture(f);
        auto t = compute_classes(parse_pair(fx.pair_text));
        auto rep = verify_fixture(fx, t);
        if (!rep.ok())
            for (auto& row : rep.rows)
                if (!row.ok) r.fail(f + ":" + std::to_string(row.row.line) + ": " + row.detail);
    }
    return r;
}

inline CheckResult check_literal() {
    CheckResult r;
    {
        auto P = parse_pair("A:glpq:2,2");
        auto s = P.space();
        auto closed = parse_polynomial("(x1-y3)*(x1-y4)*(x2-y3)*(x2-y4)", s);
        auto want = parse_polynomial("(x1-y4)*(x2-y4)*(x1+x2-y2-y3)", s);
        if (divided_difference(closed, root_action(P, 2, s)) != want) r.fail("divided difference on (+,+,-,-) along root 2");
        if (compute_classes(P).of(parse_param(P, "(+,1,1,-)")) != want) r.fail("class of (+,1,1,-)");
    }
    for (auto name : {"tab-type-a-so3", "tab-type-a-sp4"}) {
        auto fx = load_fixture(resolve_fixture(name));
        auto rep = verify_fixture(fx, compute_classes(parse_pair(fx.pair_text)), true);
        if (!rep.literal || !rep.ok()) r.fail(std::string(name) + " does not reproduce literally");
    }
    {
        auto fx = load_fixture(resolve_fixture("tab-type-d-2"));
        auto P = parse_pair(fx.pair_text);
        const std::pair<const char*, const char*> reps[] = {
            {"(+,+,+,-,-,-)", "123"}, {"(-,-,+,-,+,+)", "-1-23"}, {"(-,+,-,+,-,+)", "-12-3"}, {"(+,-,-,+,+,-)", "1-2-3"}};
        for (auto& [param, w] : reps) {
            auto row = std::find_if(fx.rows.begin(), fx.rows.end(), [&](auto& x) { return x.param == param; });
            if (row == fx.rows.end()) {
                r.fail(std::string("missing row ") + param);
                continue;
            }
            auto got = class_from_rep(P, parse_oneline(w, WeylType::D));
            if (got != parse_polynomial(row->poly, P.space())) r.fail(std::string("determinant expansion for ") + param);
        }
    }
    return r;
}

inline CheckResult check_closed_oracle(int n) {
    CheckResult r;
    for (auto& d : small_pairs(n)) {
        auto P = parse_pair(d);
        Localizer loc(P);
        for (auto& c : closed_orbits(P)) {
            auto f = closed_orbit_class(P, c.param);
            for (std::size_t k = 0; k < loc.points().size(); ++k) {
                auto& w = loc.points()[k];
                if (loc.restrict_at(f, k) != closed_orbit_restriction(P, c.rep, w)) {
                    r.fail(d + " " + to_string(P, c.param) + " at " + to_oneline(w));
                    break;
                }
            }
        }
    }
    return r;
}

inline int coxeter_order(RootSystem rs, int m, int i, int j) {
    if (rs == RootSystem::D && std::max(i, j) == m) return std::min(i, j) == m - 2 ? 3 : 2;
    if (std::abs(i - j) > 1) return 2;
    if ((rs == RootSystem::B || rs == RootSystem::C) && std::max(i, j) == m) return 4;
    return 3;
}

inline CheckResult check_operator_laws(int samples) {
    CheckResult r;
    const std::pair<RootSystem, int> systems[] = {{RootSystem::A, 4}, {RootSystem::B, 3}, {RootSystem::C, 3}, {RootSystem::D, 4}};
    const char* names[] = {"A", "B", "C", "D"};
    for (auto [rs, m] : systems) {
        VariableSpace s(1, m);
        int rank = rs == RootSystem::A ? m - 1 : m;
        std::mt19937 rng(17 * m + static_cast<int>(rs));
        std::string tag = names[static_cast<int>(rs)];
        for (int k = 0; k < samples; ++k) {
            auto f = random_poly(s, rng, 4, 3), g = random_poly(s, rng, 3, 2);
            for (int i = 1; i <= rank; ++i) {
                auto act = simple_root_action(rs, i, s);
                auto di = [&](const Polynomial& h) { return divided_difference(h, act); };
                if (!di(di(f)).is_zero()) r.fail(tag + ": d_i^2 != 0");
                if (di(f * g) != di(f) * g + apply_reflection(f, act) * di(g)) r.fail(tag + ": twisted Leibniz");
                for (int j = i + 1; j <= rank; ++j) {
                    Polynomial a = f, b = f;
                    for (int t = 0; t < coxeter_order(rs, m, i, j); ++t) {
                        a = divided_difference(a, rs, t % 2 ? i : j);
                        b = divided_difference(b, rs, t % 2 ? j : i);
                    }
                    if (a != b) r.fail(tag + ": braid relation " + std::to_string(i) + "," + std::to_string(j));
                }
            }
        }
    }
    return r;
}

// Delta_n(X, eps X, id) over every sign vector, Delta_{n-1} over the even ones, plus symmetry
inline CheckResult check_delta_identities(int max_n) {
    CheckResult r;
    for (int n = 1; n <= max_n; ++n) {
        VariableSpace s(n, n);
        auto id = WeylElement::identity(WeylType::BC, n);
        auto full = delta_full(s, id);
        std::optional<Polynomial> half;
        if (n >= 2) half = delta_half(s, id);
        Polynomial prod_x(s, 1), pairs(s, 1);
        for (int i = 1; i <= n; ++i) prod_x *= Polynomial::x(s, i);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) pairs *= Polynomial::x(s, i) + Polynomial::x(s, j);
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<VarImage> im;
            for (int i = 1; i <= n; ++i) im.push_back({s.x(i), 1});
            for (int i = 1; i <= n; ++i) im.push_back({s.x(i), mask >> (i - 1) & 1 ? -1 : 1});
            Polynomial want_full = mask ? Polynomial(s) : Polynomial(s, 1 << n) * prod_x * pairs;
            if (full.rename(im, s) != want_full) r.fail("Delta_n, n=" + std::to_string(n) + ", signs " + std::to_string(mask));
            // type D only reaches sign vectors with an even number of -1's
            if (half && __builtin_popcount(mask) % 2 == 0 && half->rename(im, s) != (mask ? Polynomial(s) : pairs))
                r.fail("Delta_{n-1}, n=" + std::to_string(n) + ", signs " + std::to_string(mask));
        }
        // swapping two x's or two y's leaves both determinants alone
        for (int i = 1; i < n; ++i)
            for (bool ys : {false, true}) {
                std::vector<VarImage> im;
                for (int v = 0; v < s.size(); ++v) im.push_back({v, 1});
                int a = ys ? s.y(i) : s.x(i), b = ys ? s.y(i + 1) : s.x(i + 1);
                std::swap(im[a], im[b]);
                if (full.rename(im, s) != full) r.fail("Delta_n not symmetric, n=" + std::to_string(n));
                if (half && half->rename(im, s) != *half) r.fail("Delta_{n-1} not symmetric, n=" + std::to_string(n));
            }
    }
    return r;
}

inline CheckResult check_counting(int max_n) {
    CheckResult r;
    for (auto fam : {CountFamily::B, CountFamily::C, CountFamily::DCompact, CountFamily::DUnequal})
        for (int n = 2; n <= max_n; ++n) {
            auto rep = count_fibers(fam, n);
            if (!rep.ok())
                r.fail(family_name(fam) + ":" + std::to_string(n) + " clans " + std::to_string(rep.clans) + " vs fibers " +
                       std::to_string(rep.expected));
        }
    return r;
}

inline CheckResult check_so4_split() {
    CheckResult r;
    auto P = parse_pair("A:so-even:4");
    auto t = compute_classes(P);
    auto& g = t.graph;
    for (auto [from, to] : {std::pair{"+(1,4)(2,3)", "+(1,3)(2,4)"}, std::pair{"-(1,4)(2,3)", "-(1,3)(2,4)"}}) {
        int src = g.find(parse_param(P, from)), dst = g.find(parse_param(P, to));
        std::set<int> roots;
        for (int e : g.out[src])
            if (g.edges[e].dst == dst) roots.insert(g.edges[e].root);
        if (roots != std::set<int>{1, 3}) r.fail(std::string(from) + " does not reach " + to + " through roots 1 and 3");
    }
    // the plus closed class pushed along root 1 vanishes at the minus representative only
    auto s = P.space();
    auto pushed = divided_difference(t.of(parse_param(P, "+(1,4)(2,3)")), root_action(P, 1, s));
    auto plus_rep = split_fixed_point(parse_cycles("(1,3)(2,4)", 4), 1);
    auto minus_rep = split_fixed_point(parse_cycles("(1,3)(2,4)", 4), -1);
    if (restrict_at(P, pushed, plus_rep).is_zero()) r.fail("pushed class vanishes at the plus representative");
    if (!restrict_at(P, pushed, minus_rep).is_zero()) r.fail("pushed class survives at the minus representative");

    auto O = parse_pair("A:o:4");
    auto sum = t.of(parse_param(P, "+(1,4)(2,3)")) + t.of(parse_param(P, "-(1,4)(2,3)"));
    auto o4 = compute_classes(O).of(parse_param(O, "(1,4)(2,3)"));
    auto fx = load_fixture(resolve_fixture("tab-type-a-o4"));
    auto row = std::find_if(fx.rows.begin(), fx.rows.end(), [](auto& x) { return x.param == "(1,4)(2,3)"; });
    if (row == fx.rows.end()) {
        r.fail("O(4) closed row missing");
    } else {
        if (sum != parse_polynomial(row->poly, s)) r.fail("split closed classes do not add up to the O(4) table entry");
        if (o4 != parse_polynomial(row->poly, O.space())) r.fail("computed O(4) closed class differs from the table");
    }
    return r;
}

inline CheckResult check_chern_example() {
    CheckResult r;
    auto P = parse_pair("A:glpq:2,2");
    auto f = closed_orbit_class(P, parse_param(P, "(+,+,-,-)"));
    auto c = chern_rewrite_checked(P, f);
    auto t = c.poly.space();
    auto expanded = parse_polynomial("z2^2 - z1*z2*(y3+y4) + z2*(y3+y4)^2 - z1*y3*y4*(y3+y4) + (z1^2-2*z2)*y3*y4 + y3^2*y4^2", t);
    auto factored = parse_polynomial("(z1*y4 - z2 - y4^2)*(z1*y3 - z2 - y3^2)", t);
    if (c.poly != expanded) r.fail("rewrite gives " + c.poly.str());
    if (expanded != factored) r.fail("expanded and factored forms differ");
    return r;
}

inline CheckResult check_dominance(int max_n) {
    CheckResult r;
    for (int p = 0; p <= max_n; ++p)
        for (int q = 0; p + q <= max_n; ++q) {
            if (p + q == 0) continue;
            auto g = build_graph(make_pair(Case::A_GLpGLq, p, q));
            for (int e : dominance_violations(g))
                r.fail(g.pair.descriptor() + ": " + g.label(g.edges[e].src) + " -> " + g.label(g.edges[e].dst));
        }
    return r;
}

} // namespace kclass::testing

#endif
