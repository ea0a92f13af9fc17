#ifndef KCLASS_PAIR_HPP
#define KCLASS_PAIR_HPP

#include "divided_difference.hpp"
#include "weyl.hpp"

#include <string>
#include <vector>

namespace kclass {

enum class Case { A_GLpGLq, A_SO_odd, A_O, A_SO_even, A_Sp, B_OO, C_SpSp, C_GL, D_OO_even, D_GL, D_OO_odd };

struct PairError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// N: matrix size for type A; n: half rank (BCD rank, p+q for glpq, N/2 rounded down otherwise)
struct SymmetricPair {
    Case kind = Case::A_GLpGLq;
    int n = 0;
    int p = 0;
    int q = 0;
    int N = 0;

    bool type_a() const { return kind <= Case::A_Sp; }
    bool involution_case() const { return kind == Case::A_SO_odd || kind == Case::A_O || kind == Case::A_SO_even || kind == Case::A_Sp; }
    bool clan_case() const { return !involution_case(); }

    WeylType weyl_type() const {
        if (type_a()) return WeylType::A;
        if (kind == Case::B_OO || kind == Case::C_SpSp || kind == Case::C_GL) return WeylType::BC;
        return WeylType::D;
    }
    // degree of the permutation domain of W
    int weyl_n() const { return type_a() ? N : n; }
    int rank() const { return rank_of(weyl_type(), weyl_n()); }

    RootSystem root_system() const {
        switch (kind) {
        case Case::B_OO: return RootSystem::B;
        case Case::C_SpSp:
        case Case::C_GL: return RootSystem::C;
        case Case::D_OO_even:
        case Case::D_GL:
        case Case::D_OO_odd: return RootSystem::D;
        default: return RootSystem::A;
        }
    }

    // clan length for clan cases
    int clan_length() const {
        switch (kind) {
        case Case::A_GLpGLq: return N;
        case Case::B_OO: return 2 * n + 1;
        default: return 2 * n;
        }
    }
    // signature of the clans parametrizing orbits
    std::pair<int, int> clan_signature() const {
        switch (kind) {
        case Case::A_GLpGLq: return {p, q};
        case Case::B_OO: return {2 * p, 2 * q + 1};
        case Case::C_SpSp:
        case Case::D_OO_even: return {2 * p, 2 * q};
        case Case::C_GL:
        case Case::D_GL: return {n, n};
        case Case::D_OO_odd: return {2 * p + 1, 2 * q - 1};
        default: return {0, 0};
        }
    }

    int x_count() const {
        switch (kind) {
        case Case::A_GLpGLq: return N;
        case Case::A_SO_odd:
        case Case::A_O:
        case Case::A_SO_even:
        case Case::A_Sp: return N / 2;
        case Case::D_OO_odd: return n - 1;
        default: return n;
        }
    }

    VariableSpace space() const {
        if (kind == Case::D_OO_odd) {
            std::vector<std::string> names;
            for (int k = 1; k <= n; ++k)
                if (k != p + 1) names.push_back("x" + std::to_string(k));
            return VariableSpace(n - 1, n, names);
        }
        return VariableSpace(x_count(), weyl_n());
    }

    // rho(Y_j) for j = 1..weyl_n(): x index (1-based) with sign, or target 0 for zero
    std::vector<VarImage> rho() const {
        int m = weyl_n();
        std::vector<VarImage> r(m + 1, VarImage{-1, 1});
        switch (kind) {
        case Case::A_SO_odd:
        case Case::A_O:
        case Case::A_SO_even:
        case Case::A_Sp: {
            int h = N / 2;
            for (int i = 1; i <= h; ++i) {
                r[i] = {i, 1};
                r[N + 1 - i] = {i, -1};
            }
            break;
        }
        case Case::D_OO_odd:
            for (int k = 1; k <= n; ++k)
                if (k <= p) r[k] = {k, 1};
                else if (k >= p + 2) r[k] = {k - 1, 1};
            break;
        default:
            for (int i = 1; i <= m; ++i) r[i] = {i, 1};
        }
        return r;
    }

    std::string descriptor() const {
        switch (kind) {
        case Case::A_GLpGLq: return "A:glpq:" + std::to_string(p) + "," + std::to_string(q);
        case Case::A_SO_odd: return "A:so:" + std::to_string(N);
        case Case::A_O: return "A:o:" + std::to_string(N);
        case Case::A_SO_even: return "A:so-even:" + std::to_string(N);
        case Case::A_Sp: return "A:sp:" + std::to_string(N);
        case Case::B_OO: return "B:oo:" + std::to_string(p) + "," + std::to_string(q);
        case Case::C_SpSp: return "C:spsp:" + std::to_string(p) + "," + std::to_string(q);
        case Case::C_GL: return "C:gl:" + std::to_string(n);
        case Case::D_OO_even: return "D:oo:" + std::to_string(p) + "," + std::to_string(q);
        case Case::D_GL: return "D:gl:" + std::to_string(n);
        case Case::D_OO_odd: return "D:oo-odd:" + std::to_string(p) + "," + std::to_string(q);
        }
        return "?";
    }

    std::string title() const {
        auto s = [](int k) { return std::to_string(k); };
        switch (kind) {
        case Case::A_GLpGLq: return "(SL" + s(N) + ", S(GL" + s(p) + " x GL" + s(q) + "))";
        case Case::A_SO_odd: return "(SL" + s(N) + ", SO" + s(N) + ")";
        case Case::A_O: return "(SL" + s(N) + ", O" + s(N) + ")";
        case Case::A_SO_even: return "(SL" + s(N) + ", SO" + s(N) + ")";
        case Case::A_Sp: return "(SL" + s(N) + ", Sp" + s(N) + ")";
        case Case::B_OO: return "(SO" + s(2 * n + 1) + ", S(O" + s(2 * p) + " x O" + s(2 * q + 1) + "))";
        case Case::C_SpSp: return "(Sp" + s(2 * n) + ", Sp" + s(2 * p) + " x Sp" + s(2 * q) + ")";
        case Case::C_GL: return "(Sp" + s(2 * n) + ", GL" + s(n) + ")";
        case Case::D_OO_even: return "(SO" + s(2 * n) + ", S(O" + s(2 * p) + " x O" + s(2 * q) + "))";
        case Case::D_GL: return "(SO" + s(2 * n) + ", GL" + s(n) + ")";
        case Case::D_OO_odd: return "(SO" + s(2 * n) + ", S(O" + s(2 * p + 1) + " x O" + s(2 * q - 1) + "))";
        }
        return "?";
    }
};

inline bool operator==(const SymmetricPair& a, const SymmetricPair& b) {
    return a.kind == b.kind && a.n == b.n && a.p == b.p && a.q == b.q && a.N == b.N;
}

namespace detail {

inline std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto comma = s.find(',', pos);
        std::string part = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw PairError("expected nonnegative integers, got '" + s + "'");
        out.push_back(std::stoi(part));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace detail

inline SymmetricPair make_pair(Case kind, int a, int b = -1) {
    SymmetricPair P;
    P.kind = kind;
    auto need = [](bool ok, const std::string& why) {
        if (!ok) throw PairError(why);
    };
    switch (kind) {
    case Case::A_GLpGLq:
        need(a >= 0 && b >= 0 && a + b >= 1, "glpq needs p,q >= 0 with p+q >= 1");
        P.p = a;
        P.q = b;
        P.N = P.n = a + b;
        break;
    case Case::A_SO_odd:
        need(a >= 1 && a % 2 == 1, "so needs an odd size N >= 1 (use so-even for even N)");
        P.N = a;
        P.n = a / 2;
        break;
    case Case::A_O:
        need(a >= 1, "o needs N >= 1");
        P.N = a;
        P.n = a / 2;
        break;
    case Case::A_SO_even:
    case Case::A_Sp:
        need(a >= 2 && a % 2 == 0, "so-even and sp need an even size N >= 2");
        P.N = a;
        P.n = a / 2;
        break;
    case Case::B_OO:
        need(a >= 0 && b >= 0 && a + b >= 1, "B:oo needs p,q >= 0 with p+q >= 1");
        P.p = a;
        P.q = b;
        P.n = a + b;
        break;
    case Case::C_SpSp:
        need(a >= 0 && b >= 0 && a + b >= 1, "C:spsp needs p,q >= 0 with p+q >= 1");
        P.p = a;
        P.q = b;
        P.n = a + b;
        break;
    case Case::C_GL:
        need(a >= 1, "C:gl needs n >= 1");
        P.n = a;
        break;
    case Case::D_OO_even:
        need(a >= 0 && b >= 0 && a + b >= 2, "D:oo needs p,q >= 0 with p+q >= 2");
        P.p = a;
        P.q = b;
        P.n = a + b;
        break;
    case Case::D_GL:
        need(a >= 2, "D:gl needs n >= 2");
        P.n = a;
        break;
    case Case::D_OO_odd:
        need(a >= 0 && b >= 1 && a + b >= 2, "D:oo-odd needs p >= 0, q >= 1, p+q >= 2");
        P.p = a;
        P.q = b;
        P.n = a + b;
        break;
    }
    return P;
}

inline SymmetricPair parse_pair(const std::string& text) {
    auto c1 = text.find(':');
    auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string::npos) throw PairError("pair descriptor must look like TYPE:KIND:PARAMS, got '" + text + "'");
    std::string type = text.substr(0, c1), kind = text.substr(c1 + 1, c2 - c1 - 1);
    std::vector<int> v = detail::parse_ints(text.substr(c2 + 1));
    auto args = [&](std::size_t k) {
        if (v.size() != k)
            throw PairError("'" + type + ":" + kind + "' takes " + std::to_string(k) + " parameter(s)");
    };
    if (type == "A") {
        if (kind == "glpq") { args(2); return make_pair(Case::A_GLpGLq, v[0], v[1]); }
        if (kind == "so") { args(1); return make_pair(Case::A_SO_odd, v[0]); }
        if (kind == "o") { args(1); return make_pair(Case::A_O, v[0]); }
        if (kind == "so-even") { args(1); return make_pair(Case::A_SO_even, v[0]); }
        if (kind == "sp") { args(1); return make_pair(Case::A_Sp, v[0]); }
    } else if (type == "B") {
        if (kind == "oo") { args(2); return make_pair(Case::B_OO, v[0], v[1]); }
    } else if (type == "C") {
        if (kind == "spsp") { args(2); return make_pair(Case::C_SpSp, v[0], v[1]); }
        if (kind == "gl") { args(1); return make_pair(Case::C_GL, v[0]); }
    } else if (type == "D") {
        if (kind == "oo") { args(2); return make_pair(Case::D_OO_even, v[0], v[1]); }
        if (kind == "gl") { args(1); return make_pair(Case::D_GL, v[0]); }
        if (kind == "oo-odd") { args(2); return make_pair(Case::D_OO_odd, v[0], v[1]); }
    }
    throw PairError("unknown pair descriptor '" + text + "'");
}

// y_j -> sign(w(j)) rho(Y_|w(j)|) as a renaming of the pair's space into itself
inline std::vector<VarImage> restriction_images(const SymmetricPair& P, const VariableSpace& s, const WeylElement& w) {
    auto r = P.rho();
    std::vector<VarImage> im(s.size());
    for (int v = 0; v < s.r(); ++v) im[v] = {v, 1};
    for (int j = 1; j <= s.m(); ++j) {
        int t = w(j);
        VarImage base = r[std::abs(t)];
        if (base.target < 0) {
            im[s.y(j)] = {-1, 1};
        } else {
            im[s.y(j)] = {s.x(base.target), t < 0 ? -base.sign : base.sign};
        }
    }
    return im;
}

inline SimpleRootAction root_action(const SymmetricPair& P, int i, const VariableSpace& s) {
    return simple_root_action(P.root_system(), i, s);
}

} // namespace kclass

#endif
