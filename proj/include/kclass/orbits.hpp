#ifndef KCLASS_ORBITS_HPP
#define KCLASS_ORBITS_HPP

#include "clan.hpp"
#include "pair.hpp"

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace kclass {

struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// clan symbols, or images of an involution; tag is +1/-1 only for split SO(2n) orbits
struct OrbitParam {
    std::vector<int> data;
    int tag = 0;

    bool operator==(const OrbitParam& o) const { return data == o.data && tag == o.tag; }
    bool operator!=(const OrbitParam& o) const { return !(*this == o); }
    bool operator<(const OrbitParam& o) const { return data != o.data ? data < o.data : tag > o.tag; }
};

inline Clan as_clan(const OrbitParam& q) { return Clan{q.data}; }
inline WeylElement as_involution(const OrbitParam& q) { return WeylElement{WeylType::A, q.data}; }
inline OrbitParam from_clan(const Clan& g) { return OrbitParam{g.c, 0}; }
inline OrbitParam from_involution(const WeylElement& b, int tag = 0) { return OrbitParam{b.img, tag}; }

inline bool is_fixed_point_free(const WeylElement& b) {
    for (int i = 1; i <= b.n(); ++i)
        if (b(i) == i) return false;
    return true;
}

inline WeylElement transposition(int N, int a, int b) {
    WeylElement t = WeylElement::identity(WeylType::A, N);
    std::swap(t.img[a - 1], t.img[b - 1]);
    return t;
}

inline WeylElement longest_permutation(int N) {
    WeylElement w{WeylType::A, std::vector<int>(N)};
    for (int i = 0; i < N; ++i) w.img[i] = N - i;
    return w;
}

namespace detail {

inline void enum_involutions(std::vector<int>& img, int pos, std::vector<WeylElement>& out) {
    int N = static_cast<int>(img.size());
    while (pos < N && img[pos]) ++pos;
    if (pos == N) {
        out.push_back({WeylType::A, img});
        return;
    }
    img[pos] = pos + 1;
    enum_involutions(img, pos + 1, out);
    for (int j = pos + 1; j < N; ++j) {
        if (img[j]) continue;
        img[pos] = j + 1;
        img[j] = pos + 1;
        enum_involutions(img, pos + 1, out);
        img[j] = 0;
    }
    img[pos] = 0;
}

} // namespace detail

inline std::vector<WeylElement> enumerate_involutions(int N) {
    std::vector<WeylElement> out;
    std::vector<int> img(N, 0);
    detail::enum_involutions(img, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

// minus signs plus pairs lying entirely in 1..n
inline int gl_parity_count(const Clan& g, int n) {
    int c = 0;
    for (int i = 1; i <= n; ++i) {
        if (g[i] == MINUS) ++c;
        else if (!is_sign(g[i]) && g.mate(i) < i) ++c;
    }
    return c;
}

inline bool is_valid_clan_for(const SymmetricPair& P, const Clan& g) {
    if (!P.clan_case()) return false;
    auto [a, b] = P.clan_signature();
    if (g.size() != P.clan_length() || g.plus() - g.minus() != a - b) return false;
    switch (P.kind) {
    case Case::A_GLpGLq: return true;
    case Case::B_OO:
    case Case::D_OO_even:
    case Case::D_OO_odd: return is_symmetric(g);
    case Case::C_SpSp: return is_symmetric(g) && is_antireflexive(g);
    case Case::C_GL: return is_skew_symmetric(g);
    case Case::D_GL: return is_skew_symmetric(g) && is_antireflexive(g) && gl_parity_count(g, P.n) % 2 == 0;
    default: return false;
    }
}

inline bool is_valid_param(const SymmetricPair& P, const OrbitParam& q) {
    if (P.clan_case()) {
        if (q.tag) return false;
        try {
            Clan g = canonicalize(q.data);
            return g.c == q.data && is_valid_clan_for(P, g);
        } catch (const ClanError&) {
            return false;
        }
    }
    WeylElement b = as_involution(q);
    if (b.n() != P.N || !is_valid(b) || !is_involution(b)) return false;
    bool fpf = is_fixed_point_free(b);
    switch (P.kind) {
    case Case::A_Sp: return fpf && q.tag == 0;
    case Case::A_SO_even: return fpf ? (q.tag == 1 || q.tag == -1) : q.tag == 0;
    default: return q.tag == 0;
    }
}

inline std::string to_string(const SymmetricPair& P, const OrbitParam& q) {
    if (P.clan_case()) return to_string(as_clan(q));
    std::string prefix = q.tag > 0 ? "+" : q.tag < 0 ? "-" : "";
    return prefix + to_cycles(as_involution(q));
}

struct OrbitParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline OrbitParam parse_param(const SymmetricPair& P, const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    OrbitParam q;
    try {
        if (P.clan_case()) {
            q = from_clan(parse_clan(t));
        } else {
            if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
                q.tag = t[0] == '+' ? 1 : -1;
                t = t.substr(1);
            }
            q.data = parse_cycles(t, P.N).img;
        }
    } catch (const std::exception& e) {
        throw OrbitParseError("cannot parse orbit parameter '" + text + "': " + e.what());
    }
    if (!is_valid_param(P, q)) {
        if (P.kind == Case::A_SO_even && q.tag == 0 && is_fixed_point_free(as_involution(q)))
            throw OrbitParseError("'" + text + "' is split: prefix it with + or -");
        throw OrbitParseError("'" + text + "' is not an orbit parameter for " + P.descriptor());
    }
    return q;
}

inline std::vector<OrbitParam> enumerate_orbits(const SymmetricPair& P) {
    std::vector<OrbitParam> out;
    if (P.clan_case()) {
        auto [a, b] = P.clan_signature();
        for (auto& g : enumerate_clans(a, b))
            if (is_valid_clan_for(P, g)) out.push_back(from_clan(g));
    } else {
        for (auto& b : enumerate_involutions(P.N)) {
            bool fpf = is_fixed_point_free(b);
            if (P.kind == Case::A_Sp && !fpf) continue;
            if (P.kind == Case::A_SO_even && fpf) {
                out.push_back(from_involution(b, 1));
                out.push_back(from_involution(b, -1));
            } else {
                out.push_back(from_involution(b));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --- closed orbits ---------------------------------------------------------

struct ClosedOrbit {
    OrbitParam param;
    WeylElement rep;
};

namespace detail {

// + positions get 1..(#plus) in order, - positions the rest
inline std::vector<int> sign_reading(const Clan& g) {
    std::vector<int> s(g.size());
    int plus = 0, minus = g.plus();
    for (int i = 1; i <= g.size(); ++i) s[i - 1] = g[i] == PLUS ? ++plus : ++minus;
    return s;
}

} // namespace detail

inline std::vector<ClosedOrbit> closed_orbits(const SymmetricPair& P) {
    std::vector<ClosedOrbit> out;
    int n = P.n;
    switch (P.kind) {
    case Case::A_GLpGLq:
        for (auto& g : enumerate_clans(P.p, P.q))
            if (g.pairs() == 0) out.push_back({from_clan(g), {WeylType::A, detail::sign_reading(g)}});
        break;
    case Case::B_OO:
    case Case::C_SpSp:
    case Case::D_OO_even:
        for (auto& q : enumerate_orbits(P)) {
            Clan g = as_clan(q);
            if (g.pairs()) continue;
            WeylElement w{P.weyl_type(), std::vector<int>(n)};
            int plus = 0, minus = P.p;
            for (int i = 1; i <= n; ++i) w.img[i - 1] = g[i] == PLUS ? ++plus : ++minus;
            out.push_back({q, w});
        }
        break;
    case Case::C_GL:
    case Case::D_GL:
        for (auto& q : enumerate_orbits(P)) {
            Clan g = as_clan(q);
            if (g.pairs()) continue;
            auto s = detail::sign_reading(g);
            WeylElement w{P.weyl_type(), std::vector<int>(n)};
            for (int i = 0; i < n; ++i) w.img[i] = s[i] <= n ? s[i] : -(2 * n + 1 - s[i]);
            out.push_back({q, w});
        }
        break;
    case Case::D_OO_odd:
        for (auto& q : enumerate_orbits(P)) {
            Clan g = as_clan(q);
            if (g.pairs() != 1 || g.mate(n) != n + 1) continue;
            WeylElement w{WeylType::D, std::vector<int>(n)};
            int plus = 0, minus = P.p + 1;
            for (int i = 1; i < n; ++i) w.img[i - 1] = g[i] == PLUS ? ++plus : ++minus;
            w.img[n - 1] = P.p + 1;
            out.push_back({q, w});
        }
        break;
    case Case::A_SO_even: {
        auto w0 = longest_permutation(P.N);
        out.push_back({from_involution(w0, 1), WeylElement::identity(WeylType::A, P.N)});
        out.push_back({from_involution(w0, -1), transposition(P.N, n, n + 1)});
        break;
    }
    default:
        out.push_back({from_involution(longest_permutation(P.N)), WeylElement::identity(WeylType::A, P.N)});
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.param < b.param; });
    return out;
}

inline std::optional<WeylElement> closed_representative(const SymmetricPair& P, const OrbitParam& q) {
    for (auto& c : closed_orbits(P))
        if (c.param == q) return c.rep;
    return std::nullopt;
}

// --- representatives -------------------------------------------------------

// vectors v_1..v_N as integer coordinates in e_1..e_N
struct FlagRepresentative {
    int dim = 0;
    std::vector<std::vector<int>> v;
};

inline int flag_rank(const FlagRepresentative& f) {
    std::vector<std::vector<Rational>> a;
    for (auto& row : f.v) a.emplace_back(row.begin(), row.end());
    int rank = 0, rows = static_cast<int>(a.size());
    for (int col = 0; col < f.dim && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows && piv < 0; ++r)
            if (a[r][col] != 0) piv = r;
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            Rational k = a[r][col] / a[rank][col];
            for (int c = col; c < f.dim; ++c) a[r][c] -= k * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

inline std::string to_string(const FlagRepresentative& f) {
    std::string s = "<";
    for (std::size_t i = 0; i < f.v.size(); ++i) {
        if (i) s += ", ";
        std::string t;
        for (int k = 0; k < f.dim; ++k) {
            int c = f.v[i][k];
            if (!c) continue;
            if (c < 0) t += "-";
            else if (!t.empty()) t += "+";
            if (std::abs(c) != 1) t += std::to_string(std::abs(c));
            t += "e" + std::to_string(k + 1);
        }
        s += t.empty() ? "0" : t;
    }
    return s + ">";
}

namespace detail {

inline std::vector<int> unit(int N, int k) {
    std::vector<int> e(N, 0);
    e[k - 1] = 1;
    return e;
}

inline FlagRepresentative coordinate_flag(const WeylElement& sigma) {
    FlagRepresentative f{sigma.n(), {}};
    for (int i = 1; i <= sigma.n(); ++i) f.v.push_back(unit(sigma.n(), sigma(i)));
    return f;
}

} // namespace detail

// cycles by smaller element take e_k, e_{N+1-k}; with N odd the first fixed point takes the middle;
// remaining fixed points pair up as e_k +- e_{N+1-k}
inline FlagRepresentative involution_flag(const WeylElement& b) {
    int N = b.n();
    FlagRepresentative f{N, std::vector<std::vector<int>>(N)};
    int k = 0;
    for (int i = 1; i <= N; ++i) {
        if (b(i) <= i) continue;
        ++k;
        f.v[i - 1] = detail::unit(N, k);
        f.v[b(i) - 1] = detail::unit(N, N + 1 - k);
    }
    std::vector<int> fixed;
    for (int i = 1; i <= N; ++i)
        if (b(i) == i) fixed.push_back(i);
    std::size_t start = 0;
    if (N % 2 && !fixed.empty()) {
        f.v[fixed[0] - 1] = detail::unit(N, N / 2 + 1);
        start = 1;
    }
    for (std::size_t t = start; t + 1 < fixed.size(); t += 2) {
        ++k;
        auto plus = detail::unit(N, k), minus = detail::unit(N, k);
        plus[N - k] += 1;
        minus[N - k] -= 1;
        f.v[fixed[t] - 1] = plus;
        f.v[fixed[t + 1] - 1] = minus;
    }
    return f;
}

// S-fixed point of a split orbit: the plus component uses the procedure above,
// the minus component swaps e_n and e_{n+1}
inline WeylElement split_fixed_point(const WeylElement& b, int tag) {
    if (!is_fixed_point_free(b)) throw ContractError("split fixed point needs a fixed point free involution");
    auto f = involution_flag(b);
    int N = b.n();
    WeylElement w{WeylType::A, std::vector<int>(N)};
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k)
            if (f.v[i][k]) w.img[i] = k + 1;
    if (tag < 0) w = compose(transposition(N, N / 2, N / 2 + 1), w);
    return w;
}

// first occurrence of each pair counts as +, second as -
inline FlagRepresentative clan_flag(const Clan& g) {
    int N = g.size();
    std::vector<int> sigma(N);
    int plus = 0, minus = g.plus() + g.pairs();
    for (int i = 1; i <= N; ++i) {
        bool pos = g[i] == PLUS || (!is_sign(g[i]) && g.mate(i) > i);
        sigma[i - 1] = pos ? ++plus : ++minus;
    }
    FlagRepresentative f{N, std::vector<std::vector<int>>(N)};
    for (int i = 1; i <= N; ++i) {
        if (is_sign(g[i])) {
            f.v[i - 1] = detail::unit(N, sigma[i - 1]);
            continue;
        }
        int j = g.mate(i);
        if (j < i) continue;
        auto a = detail::unit(N, sigma[i - 1]), b = a;
        a[sigma[j - 1] - 1] += 1;
        b[sigma[j - 1] - 1] -= 1;
        f.v[i - 1] = a;
        f.v[j - 1] = b;
    }
    return f;
}

inline FlagRepresentative representative_flag(const SymmetricPair& P, const OrbitParam& q) {
    if (!is_valid_param(P, q)) throw ContractError("not an orbit of " + P.descriptor());
    if (P.kind == Case::A_GLpGLq) return clan_flag(as_clan(q));
    if (P.involution_case()) {
        auto f = involution_flag(as_involution(q));
        if (q.tag < 0)
            for (auto& v : f.v) std::swap(v[P.N / 2 - 1], v[P.N / 2]);
        return f;
    }
    auto rep = closed_representative(P, q);
    if (!rep) throw UnsupportedError("representative flags for " + P.descriptor() + " are only available for closed orbits");
    return detail::coordinate_flag(embed_as_permutation(*rep, P.kind == Case::B_OO));
}

// --- simple roots ----------------------------------------------------------

enum class RootKind { ComplexRaising, NoncompactI, NoncompactII, NoRaise };

inline const char* to_string(RootKind k) {
    switch (k) {
    case RootKind::ComplexRaising: return "complex";
    case RootKind::NoncompactI: return "noncompact-I";
    case RootKind::NoncompactII: return "noncompact-II";
    default: return "none";
    }
}

struct RootStatus {
    RootKind kind = RootKind::NoRaise;
    OrbitParam target;
    int degree = 0;
    // split SO(2n) target whose component is not decided combinatorially
    bool unresolved_split = false;

    bool raises() const { return kind != RootKind::NoRaise; }
};

// cross action: clans permute positions through the embedding, involutions are conjugated
inline OrbitParam cross_action(const SymmetricPair& P, const WeylElement& w, const OrbitParam& q) {
    if (P.clan_case()) {
        WeylElement sigma = P.type_a() ? w : embed_as_permutation(w, P.kind == Case::B_OO);
        return from_clan(permute_positions(as_clan(q), sigma));
    }
    auto b = as_involution(q);
    return from_involution(compose(compose(w, b), inverse(w)), q.tag);
}

namespace detail {

inline Clan swapped(const Clan& g, std::initializer_list<std::pair<int, int>> swaps) {
    std::vector<int> raw = g.c;
    for (auto [a, b] : swaps) std::swap(raw[a - 1], raw[b - 1]);
    return canonicalize(raw);
}

inline Clan paired(const Clan& g, std::initializer_list<std::pair<int, int>> prs) {
    std::vector<int> raw = g.c;
    int next = 1;
    for (int v : raw) next = std::max(next, v + 1);
    for (auto [a, b] : prs) {
        raw[a - 1] = raw[b - 1] = next++;
    }
    return canonicalize(raw);
}

enum class Move { None, Complex, Signs };

// type A rule at positions i, i+1
inline Move local_move(const Clan& g, int i) {
    int a = g[i], b = g[i + 1];
    if (is_sign(a) && is_sign(b)) return a != b ? Move::Signs : Move::None;
    if (is_sign(a)) return g.mate(i + 1) > i + 1 ? Move::Complex : Move::None;
    if (is_sign(b)) return g.mate(i) < i ? Move::Complex : Move::None;
    if (a == b) return Move::None;
    return g.mate(i) < g.mate(i + 1) ? Move::Complex : Move::None;
}

inline RootStatus raise_to(RootKind k, const Clan& t, int d) { return {k, from_clan(t), d, false}; }

inline RootStatus noncompact(const SymmetricPair& P, const Clan& g, int i, const Clan& t) {
    auto s = simple_reflection(P.weyl_type(), P.weyl_n(), i);
    bool fixed = cross_action(P, s, from_clan(g)) == from_clan(g);
    return raise_to(fixed ? RootKind::NoncompactII : RootKind::NoncompactI, t, fixed ? 2 : 1);
}

inline RootStatus type_a_clan_rule(const SymmetricPair& P, const Clan& g, int i) {
    switch (local_move(g, i)) {
    case Move::Complex: return raise_to(RootKind::ComplexRaising, swapped(g, {{i, i + 1}}), 1);
    case Move::Signs: return noncompact(P, g, i, paired(g, {{i, i + 1}}));
    default: return {};
    }
}

// roots alpha_i with i < n in types B, C, D
inline RootStatus mirrored_rule(const SymmetricPair& P, const Clan& g, int i, bool allow_crossing) {
    int L = g.size();
    auto mir = [L](int k) { return L + 1 - k; };
    int a = g[i], b = g[i + 1];
    if (!is_sign(a) && !is_sign(b) && a != b && g.mate(i) == mir(i + 1) && g.mate(i + 1) == mir(i)) {
        if (!allow_crossing) return {};
        return noncompact(P, g, i, swapped(g, {{i, i + 1}}));
    }
    switch (local_move(g, i)) {
    case Move::Complex: return raise_to(RootKind::ComplexRaising, swapped(g, {{i, i + 1}, {mir(i + 1), mir(i)}}), 1);
    case Move::Signs: return noncompact(P, g, i, paired(g, {{i, i + 1}, {mir(i + 1), mir(i)}}));
    default: return {};
    }
}

inline RootStatus type_b_last(const SymmetricPair& P, const Clan& g) {
    int n = P.n;
    int a = g[n], m = g[n + 1], c = g[n + 2];
    if (!is_sign(a) && !is_sign(c) && a != c) {
        if (g.mate(n) < g.mate(n + 2)) return raise_to(RootKind::ComplexRaising, swapped(g, {{n, n + 2}}), 1);
        return {};
    }
    if (is_sign(a) && is_sign(m) && a != m) {
        std::vector<int> raw = g.c;
        int next = 1;
        for (int v : raw) next = std::max(next, v + 1);
        raw[n - 1] = raw[n + 1] = next;
        raw[n] = m == PLUS ? MINUS : PLUS;
        return noncompact(P, g, n, canonicalize(raw));
    }
    return {};
}

inline RootStatus type_c_last(const SymmetricPair& P, const Clan& g) {
    int n = P.n;
    int a = g[n], b = g[n + 1];
    if (!is_sign(a) && !is_sign(b) && a != b) {
        if (g.mate(n) < g.mate(n + 1)) return raise_to(RootKind::ComplexRaising, swapped(g, {{n, n + 1}}), 1);
        return {};
    }
    if (P.kind == Case::C_GL && is_sign(a) && is_sign(b) && a != b) return noncompact(P, g, n, paired(g, {{n, n + 1}}));
    return {};
}

// alpha_n = Y_{n-1} + Y_n on positions n-1, n, n+1, n+2 of a symmetric clan
inline RootStatus type_d_last(const SymmetricPair& P, const Clan& g) {
    int n = P.n;
    int p1 = n - 1, p2 = n, p3 = n + 1, p4 = n + 2;
    int a = g[p1], b = g[p2], c = g[p3], d = g[p4];
    auto num = [](int v) { return !is_sign(v); };
    auto left = [&](int k) { return g.mate(k) < p1; };
    auto right = [&](int k) { return g.mate(k) > p4; };
    auto dist = [&](int k) { return std::abs(2 * k - 2 * n - 1); };
    auto complex_move = [&] { return raise_to(RootKind::ComplexRaising, swapped(g, {{p1, p3}, {p2, p4}}), 1); };

    if (is_sign(a) && is_sign(b)) {
        if (a != b) return noncompact(P, g, n, paired(g, {{p1, p3}, {p2, p4}}));
        return {};
    }
    if (is_sign(a) && num(b)) {
        if (b == c) return complex_move();
        if (left(p2) && right(p3)) return complex_move();
        return {};
    }
    if (num(a) && is_sign(b)) {
        if (a != d && left(p1) && right(p4)) return complex_move();
        return {};
    }
    // all four are numbers
    if (a == b && c == d) return noncompact(P, g, n, swapped(g, {{p1, p3}}));
    if (b == c && a != d) {
        if (left(p1) && right(p4)) return complex_move();
        return {};
    }
    if (a == d && b != c) {
        if (left(p2) && right(p3)) return complex_move();
        return {};
    }
    bool distinct = a != b && a != c && a != d && b != c && b != d && c != d;
    if (!distinct) return {};
    if (left(p1) && left(p2) && right(p3) && right(p4)) return complex_move();
    if (left(p1) && left(p3) && right(p2) && right(p4) && dist(g.mate(p1)) > dist(g.mate(p2))) return complex_move();
    if (left(p2) && left(p4) && right(p1) && right(p3) && dist(g.mate(p1)) < dist(g.mate(p2))) return complex_move();
    return {};
}

inline Clan flip_middle(const Clan& g, int n) { return swapped(g, {{n, n + 1}}); }

inline RootStatus type_d_gl_last(const SymmetricPair& P, const Clan& g) {
    int n = P.n;
    Clan f = flip_middle(g, n);
    auto st = mirrored_rule(P, f, n - 1, false);
    if (!st.raises()) return {};
    Clan t = flip_middle(as_clan(st.target), n);
    if (st.kind == RootKind::ComplexRaising) return raise_to(RootKind::ComplexRaising, t, 1);
    return noncompact(P, g, n, t);
}

inline RootStatus involution_rule(const SymmetricPair& P, const OrbitParam& q, int i) {
    auto b = as_involution(q);
    if (b(i) < b(i + 1)) return {};
    auto s = transposition(P.N, i, i + 1);
    auto c = compose(compose(s, b), s);
    bool split_source = P.kind == Case::A_SO_even && is_fixed_point_free(b);
    if (c != b) {
        RootStatus st{RootKind::ComplexRaising, from_involution(c), 1, false};
        if (split_source) st.unresolved_split = true;
        return st;
    }
    if (P.kind == Case::A_Sp) return {};
    auto t = compose(s, b);
    if (split_source) return {RootKind::NoncompactI, from_involution(t), 1, false};
    return {RootKind::NoncompactII, from_involution(t), 2, false};
}

} // namespace detail

inline RootStatus classify_simple_root(const SymmetricPair& P, const OrbitParam& q, int i) {
    if (i < 1 || i > P.rank()) throw ContractError("simple root index out of range");
    if (P.involution_case()) return detail::involution_rule(P, q, i);
    Clan g = as_clan(q);
    RootStatus st;
    int n = P.n;
    switch (P.kind) {
    case Case::A_GLpGLq: st = detail::type_a_clan_rule(P, g, i); break;
    case Case::B_OO: st = i < n ? detail::mirrored_rule(P, g, i, true) : detail::type_b_last(P, g); break;
    case Case::C_SpSp: st = i < n ? detail::mirrored_rule(P, g, i, false) : detail::type_c_last(P, g); break;
    case Case::C_GL: st = i < n ? detail::mirrored_rule(P, g, i, true) : detail::type_c_last(P, g); break;
    case Case::D_OO_even:
    case Case::D_OO_odd: st = i < n ? detail::mirrored_rule(P, g, i, true) : detail::type_d_last(P, g); break;
    case Case::D_GL: st = i < n ? detail::mirrored_rule(P, g, i, false) : detail::type_d_gl_last(P, g); break;
    default: break;
    }
    if (st.raises() && !is_valid_param(P, st.target))
        throw InternalError("root rule produced an invalid clan " + to_string(as_clan(st.target)) + " from " + to_string(g));
    return st;
}

// m(s_i) * a for twisted involutions of S_N, theta(w) = w0 w w0
inline WeylElement twisted_involution_action(const WeylElement& a, int i) {
    int N = a.n();
    auto w0 = longest_permutation(N);
    auto theta = [&](const WeylElement& w) { return compose(compose(w0, w), w0); };
    if (theta(a) != inverse(a)) throw ContractError("not a twisted involution");
    auto s = transposition(N, i, i + 1);
    auto sa = compose(s, a);
    if (length(sa) < length(a)) return a;
    auto star = compose(sa, inverse(theta(s)));
    if (star == a) return sa;
    return star;
}

// same action written on honest involutions b = a w0
inline WeylElement honest_involution_action(const WeylElement& b, int i) {
    auto w0 = longest_permutation(b.n());
    return compose(twisted_involution_action(compose(b, w0), i), w0);
}

// --- weak order graph ------------------------------------------------------

struct GraphEdge {
    int src = 0;
    int dst = 0;
    int root = 0;
    int degree = 1;
    RootKind kind = RootKind::ComplexRaising;
};

struct WeakOrderGraph {
    SymmetricPair pair;
    std::vector<OrbitParam> nodes;
    std::vector<int> level;
    std::map<OrbitParam, int> index;
    std::vector<GraphEdge> edges;
    std::vector<std::vector<int>> in, out;
    std::vector<int> closed;
    int dense = -1;

    int find(const OrbitParam& q) const {
        auto it = index.find(q);
        return it == index.end() ? -1 : it->second;
    }
    int size() const { return static_cast<int>(nodes.size()); }
    int depth() const { return level.empty() ? 0 : level.back(); }
    std::string label(int v) const { return to_string(pair, nodes[v]); }

    int add_node(const OrbitParam& q, int lvl) {
        int id = size();
        nodes.push_back(q);
        level.push_back(lvl);
        index[q] = id;
        in.emplace_back();
        out.emplace_back();
        return id;
    }
    void add_edge(const GraphEdge& e) {
        int id = static_cast<int>(edges.size());
        edges.push_back(e);
        out[e.src].push_back(id);
        in[e.dst].push_back(id);
    }
};

// picks the component tag (+1/-1) of a split target reached from src through root i
using SplitResolver = std::function<int(const WeakOrderGraph&, int src, int root, const OrbitParam& target)>;

inline WeakOrderGraph build_weak_order_graph(const SymmetricPair& P, const SplitResolver& resolve = nullptr) {
    WeakOrderGraph g;
    g.pair = P;
    for (auto& c : closed_orbits(P)) g.closed.push_back(g.add_node(c.param, 0));
    int start = 0;
    for (int lvl = 0;; ++lvl) {
        int end = g.size();
        struct Pending {
            int src;
            OrbitParam dst;
            RootStatus st;
            int root;
        };
        std::vector<Pending> pending;
        std::set<OrbitParam> next;
        for (int u = start; u < end; ++u) {
            for (int i = 1; i <= P.rank(); ++i) {
                RootStatus st = classify_simple_root(P, g.nodes[u], i);
                if (!st.raises()) continue;
                OrbitParam t = st.target;
                if (st.unresolved_split) {
                    if (!resolve) throw ContractError("split targets need a resolver for " + P.descriptor());
                    t.tag = resolve(g, u, i, t);
                }
                int known = g.find(t);
                if (known >= 0)
                    throw InternalError("edge " + g.label(u) + " -> " + to_string(P, t) + " does not raise the level");
                next.insert(t);
                pending.push_back({u, t, st, i});
            }
        }
        if (next.empty()) break;
        for (auto& t : next) g.add_node(t, lvl + 1);
        for (auto& e : pending) g.add_edge({e.src, g.find(e.dst), e.root, e.st.degree, e.st.kind});
        start = end;
    }
    auto all = enumerate_orbits(P);
    for (auto& q : all)
        if (g.find(q) < 0) throw InternalError("orbit " + to_string(P, q) + " is never reached in " + P.descriptor());
    if (static_cast<std::size_t>(g.size()) != all.size()) throw InternalError("graph has orbits outside the parametrization");
    for (int v = 0; v < g.size(); ++v)
        if (g.out[v].empty()) {
            if (g.dense >= 0) throw InternalError("more than one maximal orbit in " + P.descriptor());
            g.dense = v;
        }
    return g;
}

inline std::string to_dot(const WeakOrderGraph& g) {
    std::ostringstream os;
    os << "digraph \"" << g.pair.descriptor() << "\" {\n";
    for (int v = 0; v < g.size(); ++v) os << "  \"" << g.label(v) << "\";\n";
    for (auto& e : g.edges)
        os << "  \"" << g.label(e.src) << "\" -> \"" << g.label(e.dst) << "\" [label=" << e.root
           << ", color=" << (e.degree == 2 ? "blue" : "black") << "];\n";
    os << "}\n";
    return os.str();
}

// --- closure comparators ---------------------------------------------------

enum class Order { Less, Greater, Equal, Incomparable };

inline const char* to_string(Order o) {
    switch (o) {
    case Order::Less: return "<";
    case Order::Greater: return ">";
    case Order::Equal: return "=";
    default: return "incomparable";
    }
}

// a in the closure of b, by the gamma inequalities (conjectural for clans)
inline bool clan_dominated(const Clan& a, const Clan& b) {
    if (a.size() != b.size()) throw ContractError("clans of different length");
    int L = a.size();
    for (int i = 1; i <= L; ++i) {
        if (gamma_plus(a, i) < gamma_plus(b, i)) return false;
        if (gamma_minus(a, i) < gamma_minus(b, i)) return false;
        for (int j = i + 1; j <= L; ++j)
            if (gamma_pair(a, i, j) > gamma_pair(b, i, j)) return false;
    }
    return true;
}

// r_b(i,j) = #{k <= i : b(k) <= j}
inline std::vector<std::vector<int>> rank_numbers(const WeylElement& b) {
    int N = b.n();
    std::vector<std::vector<int>> r(N + 1, std::vector<int>(N + 1, 0));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) r[i][j] = r[i - 1][j] + (b(i) <= j ? 1 : 0);
    return r;
}

inline bool involution_dominated(const WeylElement& a, const WeylElement& b) {
    auto ra = rank_numbers(a), rb = rank_numbers(b);
    for (int i = 1; i <= a.n(); ++i)
        for (int j = 1; j <= a.n(); ++j)
            if (ra[i][j] > rb[i][j]) return false;
    return true;
}

inline Order closure_compare(const SymmetricPair& P, const OrbitParam& a, const OrbitParam& b) {
    if (a == b) return Order::Equal;
    bool le, ge;
    if (P.clan_case()) {
        le = clan_dominated(as_clan(a), as_clan(b));
        ge = clan_dominated(as_clan(b), as_clan(a));
    } else {
        if (a.data == b.data) return Order::Incomparable;
        le = involution_dominated(as_involution(a), as_involution(b));
        ge = involution_dominated(as_involution(b), as_involution(a));
    }
    if (le && !ge) return Order::Less;
    if (ge && !le) return Order::Greater;
    return Order::Incomparable;
}

// every edge source lies below its target
inline std::vector<int> dominance_violations(const WeakOrderGraph& g) {
    std::vector<int> bad;
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        auto& e = g.edges[k];
        if (closure_compare(g.pair, g.nodes[e.src], g.nodes[e.dst]) != Order::Less) bad.push_back(static_cast<int>(k));
    }
    return bad;
}

} // namespace kclass

#endif
