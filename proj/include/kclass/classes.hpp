#ifndef KCLASS_CLASSES_HPP
#define KCLASS_CLASSES_HPP

#include "determinant.hpp"
#include "orbits.hpp"
#include "parser.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#ifndef KCLASS_FIXTURE_DIR
#define KCLASS_FIXTURE_DIR "fixtures"
#endif

namespace kclass {

// --- closed orbit formulas -------------------------------------------------

// det(c(offset + j - 2i)) for i, j = 1..size
inline Polynomial toeplitz_determinant(const std::function<Polynomial(int)>& c, int size, int offset) {
    PolyMatrix m(size, std::vector<Polynomial>(size));
    for (int i = 1; i <= size; ++i)
        for (int j = 1; j <= size; ++j) m[i - 1][j - 1] = c(offset + j - 2 * i);
    return poly_determinant(m);
}

namespace detail {

inline Polynomial ortho_product(const VariableSpace& s, int n, int N) {
    Polynomial r(s, 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            r *= (Polynomial::y(s, i) + Polynomial::y(s, j)) * (Polynomial::y(s, i) + Polynomial::y(s, N + 1 - j));
    return r;
}

inline Polynomial block_product(const VariableSpace& s, int p, int n, const WeylElement& ainv) {
    Polynomial r(s, 1);
    for (int i = 1; i <= p; ++i)
        for (int j = p + 1; j <= n; ++j) {
            auto y = Polynomial::y(s, ainv(j));
            r *= (Polynomial::x(s, i) - y) * (Polynomial::x(s, i) + y);
        }
    return r;
}

inline int parity_sign(int k) { return k % 2 ? -1 : 1; }

inline std::vector<SignedVar> signed_ys(const VariableSpace& s, const WeylElement& winv) {
    std::vector<SignedVar> v;
    for (int k = 1; k <= winv.n(); ++k) v.push_back({s.y(std::abs(winv(k))), winv(k) < 0 ? -1 : 1});
    return v;
}

inline std::vector<SignedVar> plain_xs(const VariableSpace& s, int r) {
    std::vector<SignedVar> v;
    for (int i = 1; i <= r; ++i) v.push_back({s.x(i), 1});
    return v;
}

} // namespace detail

// Delta_n(x,y,w) = det(c_{n+1+j-2i}), c_k = e_k(x) + e_k(y_{w^-1(1)},...,y_{w^-1(n)}), signed y's
inline Polynomial delta_full(const VariableSpace& s, const WeylElement& w) {
    int n = w.n();
    auto xs = detail::plain_xs(s, n);
    auto ys = detail::signed_ys(s, inverse(w));
    auto c = [&](int k) {
        if (k < 0 || k > n) return Polynomial(s);
        return elementary_symmetric(k, xs, s) + elementary_symmetric(k, ys, s);
    };
    return toeplitz_determinant(c, n, n + 1);
}

// Delta_{n-1}(x,y,w) = det(c_{n+j-2i}) of size n-1, with halved c_k
inline Polynomial delta_half(const VariableSpace& s, const WeylElement& w) {
    int n = w.n();
    auto xs = detail::plain_xs(s, n);
    auto ys = detail::signed_ys(s, inverse(w));
    auto c = [&](int k) {
        if (k < 0 || k > n) return Polynomial(s);
        return (elementary_symmetric(k, xs, s) + elementary_symmetric(k, ys, s)) * Rational(1, 2);
    };
    return toeplitz_determinant(c, n - 1, n);
}

// closed orbit class written from a representative w (and component tag for split SO(2n))
inline Polynomial class_from_rep(const SymmetricPair& P, const WeylElement& w, int tag = 0) {
    VariableSpace s = P.space();
    int n = P.n, p = P.p;
    auto X = [&](int i) { return Polynomial::x(s, i); };
    auto Y = [&](int j) { return Polynomial::y(s, j); };
    Polynomial r(s, 1);
    switch (P.kind) {
    case Case::A_GLpGLq: {
        auto winv = inverse(w);
        for (int i = 1; i <= p; ++i)
            for (int j = p + 1; j <= P.N; ++j) r *= X(i) - Y(winv(j));
        return r * Rational(detail::parity_sign(l_p(w, p)));
    }
    case Case::A_SO_odd:
    case Case::A_O:
        if (P.N % 2) {
            for (int i = 1; i <= n; ++i) r *= (Y(i) + Y(n + 1)) * (Y(n + 1) + Y(2 * n + 2 - i));
            Rational k = 1;
            for (int i = 0; i < n; ++i) k *= -2;
            return r * detail::ortho_product(s, n, P.N) * k;
        } else {
            Rational k = 1;
            for (int i = 1; i <= n; ++i) {
                r *= Y(i);
                k *= 2;
            }
            return r * detail::ortho_product(s, n, P.N) * k;
        }
    case Case::A_SO_even: {
        if (tag != 1 && tag != -1) throw ContractError("split closed orbit needs a tag");
        Polynomial xs(s, 1), ys(s, 1);
        for (int i = 1; i <= n; ++i) {
            xs *= X(i);
            ys *= Y(i);
        }
        Rational k = 1;
        for (int i = 1; i < n; ++i) k *= 2;
        Polynomial euler = tag > 0 ? xs + ys : xs - ys;
        return euler * detail::ortho_product(s, n, P.N) * (tag > 0 ? k : Rational(-k));
    }
    case Case::A_Sp: return detail::ortho_product(s, n, P.N);
    case Case::B_OO: {
        auto a = absolute_value(w);
        auto ainv = inverse(a);
        for (int j = 1; j <= p; ++j) r *= Y(ainv(j));
        return r * detail::block_product(s, p, n, ainv) * Rational(detail::parity_sign(l_p(a, p)));
    }
    case Case::C_SpSp:
    case Case::D_OO_even: {
        auto a = absolute_value(w);
        return detail::block_product(s, p, n, inverse(a)) * Rational(detail::parity_sign(l_p(a, p)));
    }
    case Case::C_GL: {
        auto st = sign_stats(w);
        return delta_full(s, w) * Rational(detail::parity_sign(st.f + st.g));
    }
    case Case::D_GL: return delta_half(s, w) * Rational(detail::parity_sign(sign_stats(w).g));
    case Case::D_OO_odd: {
        WeylElement a{WeylType::A, w.img};
        auto stats = unequal_rank_stats(a, p);
        auto ainv = inverse(a);
        for (int j = 1; j < n; ++j) r *= Y(j);
        for (int i = 1; i <= p; ++i)
            for (int j = p + 2; j <= n; ++j) r *= (X(i) + Y(ainv(j))) * (X(i) - Y(ainv(j)));
        return r * Rational(detail::parity_sign(stats.f));
    }
    }
    throw ContractError("unknown pair");
}

inline Polynomial closed_orbit_class(const SymmetricPair& P, const OrbitParam& q) {
    auto rep = closed_representative(P, q);
    if (!rep) throw ContractError(to_string(P, q) + " is not a closed orbit of " + P.descriptor());
    return class_from_rep(P, *rep, q.tag);
}

// --- localization ----------------------------------------------------------

inline Polynomial restrict_at(const SymmetricPair& P, const Polynomial& f, const WeylElement& w) {
    return f.rename(restriction_images(P, f.space(), w), f.space());
}

class Localizer {
public:
    explicit Localizer(const SymmetricPair& P)
        : pair_(P), space_(P.space()), points_(enumerate_group(P.weyl_type(), P.weyl_n())) {
        for (auto& w : points_) images_.push_back(restriction_images(P, space_, w));
    }

    const SymmetricPair& pair() const { return pair_; }
    const std::vector<WeylElement>& points() const { return points_; }

    Polynomial restrict_at(const Polynomial& f, std::size_t k) const { return f.rename(images_[k], space_); }
    Polynomial restrict_at(const Polynomial& f, const WeylElement& w) const {
        auto it = std::lower_bound(points_.begin(), points_.end(), w);
        if (it == points_.end() || *it != w) throw ContractError("not a fixed point of " + pair_.descriptor());
        return restrict_at(f, static_cast<std::size_t>(it - points_.begin()));
    }

    // first fixed point where the two classes differ
    std::optional<WeylElement> witness(const Polynomial& a, const Polynomial& b) const {
        if (a == b) return std::nullopt;
        Polynomial d = a - b;
        for (std::size_t k = 0; k < points_.size(); ++k)
            if (!restrict_at(d, k).is_zero()) return points_[k];
        return std::nullopt;
    }
    bool equal(const Polynomial& a, const Polynomial& b) const { return !witness(a, b); }

private:
    SymmetricPair pair_;
    VariableSpace space_;
    std::vector<WeylElement> points_;
    std::vector<std::vector<VarImage>> images_;
};

// --- independent oracle for closed orbits ----------------------------------

inline bool in_weyl_k(const SymmetricPair& P, const WeylElement& u) {
    int N = P.N, n = P.n, p = P.p;
    auto mirror_compatible = [&] {
        for (int i = 1; i <= N; ++i)
            if (u(N + 1 - i) != N + 1 - u(i)) return false;
        return true;
    };
    auto block = [&](int lo, int hi) {
        for (int i = lo; i <= hi; ++i)
            if (std::abs(u(i)) < lo || std::abs(u(i)) > hi) return false;
        return true;
    };
    switch (P.kind) {
    case Case::A_GLpGLq: return block(1, p);
    case Case::A_SO_odd:
    case Case::A_O:
    case Case::A_Sp: return mirror_compatible();
    case Case::A_SO_even: {
        if (!mirror_compatible()) return false;
        int c = 0;
        for (int i = 1; i <= n; ++i)
            if (u(i) > n) ++c;
        return c % 2 == 0;
    }
    case Case::B_OO:
    case Case::C_SpSp:
    case Case::D_OO_even: return block(1, p);
    case Case::C_GL:
    case Case::D_GL:
        for (int v : u.img)
            if (v < 0) return false;
        return true;
    case Case::D_OO_odd: return block(1, p) && block(p + 1, p + 1);
    }
    return false;
}

// roots of K written in the x-coordinates
inline std::vector<std::vector<int>> compact_roots(const SymmetricPair& P) {
    int r = P.x_count();
    std::vector<std::vector<int>> out;
    auto add = [&](int i, int si, int j, int sj) {
        std::vector<int> v(r, 0);
        v[i - 1] += si;
        if (j) v[j - 1] += sj;
        out.push_back(v);
    };
    auto all_pm = [&](int lo, int hi, bool minus_only) {
        for (int i = lo; i <= hi; ++i)
            for (int j = lo; j <= hi; ++j) {
                if (i == j) continue;
                add(i, 1, j, -1);
                if (!minus_only && i < j) {
                    add(i, 1, j, 1);
                    add(i, -1, j, -1);
                }
            }
    };
    auto singles = [&](int lo, int hi, int k) {
        for (int i = lo; i <= hi; ++i) {
            add(i, k, 0, 0);
            add(i, -k, 0, 0);
        }
    };
    int n = P.n, p = P.p;
    switch (P.kind) {
    case Case::A_GLpGLq:
        all_pm(1, p, true);
        all_pm(p + 1, P.N, true);
        break;
    case Case::A_SO_odd:
    case Case::A_O:
    case Case::A_SO_even:
        all_pm(1, r, false);
        if (P.N % 2) singles(1, r, 1);
        break;
    case Case::A_Sp:
        all_pm(1, r, false);
        singles(1, r, 2);
        break;
    case Case::B_OO:
        all_pm(1, p, false);
        all_pm(p + 1, n, false);
        singles(p + 1, n, 1);
        break;
    case Case::C_SpSp:
        all_pm(1, p, false);
        all_pm(p + 1, n, false);
        singles(1, n, 2);
        break;
    case Case::C_GL:
    case Case::D_GL: all_pm(1, n, true); break;
    case Case::D_OO_even:
        all_pm(1, p, false);
        all_pm(p + 1, n, false);
        break;
    case Case::D_OO_odd:
        singles(1, r, 1);
        all_pm(1, p, false);
        all_pm(p + 1, r, false);
        break;
    }
    return out;
}

inline std::vector<std::vector<int>> ambient_positive_roots(const SymmetricPair& P) {
    if (P.type_a()) return positive_roots(WeylType::A, P.N);
    auto roots = positive_roots(P.weyl_type(), P.n, P.kind == Case::B_OO || P.root_system() == RootSystem::C);
    if (P.root_system() == RootSystem::C)
        for (auto& v : roots)
            if (std::count(v.begin(), v.end(), 0) == static_cast<long>(v.size()) - 1)
                for (int& c : v) c *= 2;
    return roots;
}

// product of normal weights at w for the closed orbit through rep, or zero off the orbit
inline Polynomial closed_orbit_restriction(const SymmetricPair& P, const WeylElement& rep, const WeylElement& w) {
    VariableSpace s = P.space();
    WeylElement u = compose(w, inverse(rep));
    if (!in_weyl_k(P, u)) return Polynomial(s);
    auto rho = P.rho();
    int r = P.x_count();
    std::vector<std::vector<int>> weights;
    for (auto& beta : ambient_positive_roots(P)) {
        auto v = act_on_vector(w, beta);
        std::vector<int> x(r, 0);
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (!v[j]) continue;
            auto im = rho[j + 1];
            if (im.target >= 1) x[im.target - 1] += im.sign * v[j];
        }
        weights.push_back(x);
    }
    for (auto& k : compact_roots(P)) {
        auto it = std::find(weights.begin(), weights.end(), k);
        if (it != weights.end()) weights.erase(it);
    }
    Polynomial out(s, 1);
    for (auto& x : weights) {
        Polynomial f(s);
        for (int i = 0; i < r; ++i)
            if (x[i]) f += Polynomial::x(s, i + 1) * Rational(x[i]);
        out *= f;
    }
    return out;
}

// --- propagation -----------------------------------------------------------

inline Polynomial push_along(const SymmetricPair& P, const GraphEdge& e, const Polynomial& src) {
    Polynomial h = divided_difference(src, root_action(P, e.root, src.space()));
    if (e.degree == 2) h *= Rational(1, 2);
    return h;
}

struct ClassTable {
    WeakOrderGraph graph;
    std::vector<Polynomial> cls;

    const Polynomial& of(const OrbitParam& q) const {
        int v = graph.find(q);
        if (v < 0) throw ContractError("unknown orbit");
        return cls[v];
    }
};

struct PropagateOptions {
    int jobs = 1;
    bool check_paths = true;
};

namespace detail {

inline void parallel_for(int begin, int end, int jobs, const std::function<void(int)>& body) {
    if (jobs <= 1 || end - begin <= 1) {
        for (int k = begin; k < end; ++k) body(k);
        return;
    }
    std::atomic<int> next{begin};
    std::exception_ptr err;
    std::mutex m;
    auto work = [&] {
        for (int k; (k = next++) < end;) {
            try {
                body(k);
            } catch (...) {
                std::lock_guard lock(m);
                if (!err) err = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min(jobs, end - begin); ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

} // namespace detail

// split targets: the class pushed along the edge survives at exactly one of the two fixed points
inline SplitResolver make_split_resolver(const SymmetricPair& P, std::shared_ptr<std::vector<std::optional<Polynomial>>> memo) {
    return [P, memo](const WeakOrderGraph& g, int src, int root, const OrbitParam& target) {
        std::function<const Polynomial&(int)> cls = [&](int v) -> const Polynomial& {
            if (static_cast<int>(memo->size()) < g.size()) memo->resize(g.size());
            auto& slot = (*memo)[v];
            if (!slot) {
                if (g.level[v] == 0) {
                    slot = closed_orbit_class(P, g.nodes[v]);
                } else {
                    auto& e = g.edges[g.in[v].front()];
                    Polynomial h = push_along(P, e, cls(e.src));
                    slot = h;
                }
            }
            return *slot;
        };
        GraphEdge e{src, -1, root, 1, RootKind::ComplexRaising};
        Polynomial h = push_along(P, e, cls(src));
        auto b = as_involution(target);
        bool plus = !restrict_at(P, h, split_fixed_point(b, 1)).is_zero();
        bool minus = !restrict_at(P, h, split_fixed_point(b, -1)).is_zero();
        if (plus == minus)
            throw InternalError("cannot decide the component of " + to_cycles(b) + " reached from " + g.label(src));
        return plus ? 1 : -1;
    };
}

inline WeakOrderGraph build_graph(const SymmetricPair& P) {
    if (P.kind == Case::A_SO_even)
        return build_weak_order_graph(P, make_split_resolver(P, std::make_shared<std::vector<std::optional<Polynomial>>>()));
    return build_weak_order_graph(P);
}

inline ClassTable compute_classes(const SymmetricPair& P, const PropagateOptions& opt = {}) {
    ClassTable t;
    t.graph = build_graph(P);
    auto& g = t.graph;
    t.cls.assign(g.size(), Polynomial(P.space()));
    std::optional<Localizer> loc;
    if (opt.check_paths) loc.emplace(P);
    int start = 0;
    while (start < g.size()) {
        int lvl = g.level[start], end = start;
        while (end < g.size() && g.level[end] == lvl) ++end;
        detail::parallel_for(start, end, opt.jobs, [&](int v) {
            if (lvl == 0) {
                t.cls[v] = closed_orbit_class(P, g.nodes[v]);
                return;
            }
            auto& first = g.edges[g.in[v].front()];
            t.cls[v] = push_along(P, first, t.cls[first.src]);
            if (!opt.check_paths) return;
            for (std::size_t k = 1; k < g.in[v].size(); ++k) {
                auto& e = g.edges[g.in[v][k]];
                Polynomial h = push_along(P, e, t.cls[e.src]);
                if (auto w = loc->witness(h, t.cls[v]))
                    throw InternalError("classes of " + g.label(v) + " disagree along roots " + std::to_string(first.root) +
                                        " and " + std::to_string(e.root) + " at " + to_oneline(*w));
            }
        });
        start = end;
    }
    return t;
}

// --- Chern rewrite ---------------------------------------------------------

struct ChernForm {
    Polynomial poly;
    std::vector<Polynomial> substitution;  // images of the new x-variables in the original space
};

inline ChernForm chern_rewrite(const SymmetricPair& P, const Polynomial& f) {
    VariableSpace s = f.space();
    int m = s.m();
    if (P.kind == Case::A_GLpGLq) {
        int p = P.p, N = P.N;
        std::vector<std::string> names;
        for (int k = 1; k <= N; ++k) names.push_back("z" + std::to_string(k));
        VariableSpace t(N, m, names);
        std::vector<SignedVar> b1, b2;
        for (int i = 1; i <= N; ++i) (i <= p ? b1 : b2).push_back({s.x(i), 1});
        std::vector<Polynomial> e1, e2, sub;
        for (int k = 0; k <= p; ++k) e1.push_back(elementary_symmetric(k, b1, s));
        for (int k = 0; k <= N - p; ++k) e2.push_back(elementary_symmetric(k, b2, s));
        for (int k = 1; k <= p; ++k) sub.push_back(e1[k]);
        for (int k = 1; k <= N - p; ++k) sub.push_back(e2[k]);
        Polynomial rest = f, out(t);
        while (!rest.is_zero()) {
            auto [ex, c] = *rest.terms().begin();
            Exponents z(t.size(), 0);
            Polynomial piece(s, c);
            auto block = [&](int lo, int hi, const std::vector<Polynomial>& e, int zoff) {
                for (int i = lo; i <= hi; ++i) {
                    int a = ex[i - 1], b = i < hi ? ex[i] : 0;
                    if (a < b) throw UnsupportedError("class is not symmetric in the K-block variables");
                    z[zoff + i - lo] = static_cast<std::uint16_t>(a - b);
                    piece *= e[i - lo + 1].pow(a - b);
                }
            };
            block(1, p, e1, 0);
            block(p + 1, N, e2, p);
            Exponents ye(s.size(), 0);
            for (int j = 1; j <= m; ++j) {
                z[t.y(j)] = ex[s.y(j)];
                ye[s.y(j)] = ex[s.y(j)];
            }
            Polynomial ymono(s);
            ymono.add_term(ye, 1);
            rest -= piece * ymono;
            out.add_term(z, c);
        }
        return {out, sub};
    }
    if (P.involution_case()) {
        int h = s.r();
        VariableSpace t(1, m, {"e"});
        Polynomial out(t);
        for (auto& [ex, c] : f.terms()) {
            for (int i = 1; i < h; ++i)
                if (ex[s.x(i)] != ex[s.x(1)]) throw UnsupportedError("x-part is not a power of the Euler class");
            Exponents z(t.size(), 0);
            if (h) z[0] = ex[s.x(1)];
            for (int j = 1; j <= m; ++j) z[t.y(j)] = ex[s.y(j)];
            out.add_term(z, c);
        }
        Polynomial euler(s, 1);
        for (int i = 1; i <= h; ++i) euler *= Polynomial::x(s, i);
        return {out, {euler}};
    }
    throw UnsupportedError("Chern rewriting is only available for type A pairs");
}

// substitutes the Chern classes back; used for the round trip check
inline Polynomial chern_expand(const ChernForm& c, const VariableSpace& s) {
    std::vector<Polynomial> images(c.substitution);
    for (int j = 1; j <= s.m(); ++j) images.push_back(Polynomial::y(s, j));
    return c.poly.compose(images, s);
}

inline ChernForm chern_rewrite_checked(const SymmetricPair& P, const Polynomial& f) {
    auto c = chern_rewrite(P, f);
    if (chern_expand(c, f.space()) != f) throw InternalError("Chern rewrite does not round trip");
    return c;
}

// --- fixtures --------------------------------------------------------------

struct FixtureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FixtureRow {
    int line = 0;
    std::string param;
    std::string poly;
};

struct Fixture {
    std::string path;
    std::string pair_text;
    bool literal = false;
    std::vector<FixtureRow> rows;
};

inline std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline Fixture parse_fixture(std::istream& in, const std::string& path = "<input>") {
    Fixture fx;
    fx.path = path;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto def = line.find(":=");
        if (def == std::string::npos) {
            auto colon = line.find(':');
            if (colon == std::string::npos) throw FixtureError(path + ":" + std::to_string(no) + ": expected 'param := poly'");
            std::string key = trim(line.substr(0, colon)), val = trim(line.substr(colon + 1));
            if (key == "pair") fx.pair_text = val;
            else if (key == "literal") fx.literal = val == "yes" || val == "true";
            else throw FixtureError(path + ":" + std::to_string(no) + ": unknown header '" + key + "'");
            continue;
        }
        fx.rows.push_back({no, trim(line.substr(0, def)), trim(line.substr(def + 2))});
    }
    if (fx.pair_text.empty()) throw FixtureError(path + ": missing 'pair:' header");
    return fx;
}

inline Fixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError("cannot open fixture " + path);
    return parse_fixture(in, path);
}

inline std::string fixture_dir() {
    if (const char* env = std::getenv("KCLASS_FIXTURES"); env && *env) return env;
    return KCLASS_FIXTURE_DIR;
}

// a path, or a name looked up in the fixture directory (".txt" optional)
inline std::string resolve_fixture(const std::string& name) {
    namespace fs = std::filesystem;
    if (fs::exists(name)) return name;
    fs::path base = fixture_dir();
    for (auto cand : {base / name, base / (name + ".txt")})
        if (fs::exists(cand)) return cand.string();
    throw FixtureError("fixture not found: " + name + " (searched " + base.string() + ")");
}

inline std::vector<std::string> list_fixtures() {
    namespace fs = std::filesystem;
    std::vector<std::string> out;
    if (!fs::is_directory(fixture_dir())) return out;
    for (auto& e : fs::directory_iterator(fixture_dir()))
        if (e.path().extension() == ".txt") out.push_back(e.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

struct RowResult {
    FixtureRow row;
    bool ok = false;
    std::string detail;
};

struct VerifyReport {
    SymmetricPair pair;
    std::vector<RowResult> rows;
    std::size_t orbits = 0;
    std::size_t covered = 0;
    bool literal = false;

    std::size_t failures() const {
        return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](auto& r) { return !r.ok; }));
    }
    bool ok() const { return !rows.empty() && failures() == 0; }
};

inline VerifyReport verify_fixture(const Fixture& fx, const ClassTable& t, bool literal = false) {
    VerifyReport rep;
    rep.pair = t.graph.pair;
    rep.orbits = t.graph.nodes.size();
    rep.literal = literal && fx.literal;
    if (parse_pair(fx.pair_text) != t.graph.pair) throw FixtureError("fixture is for " + fx.pair_text);
    Localizer loc(t.graph.pair);
    std::set<OrbitParam> seen;
    for (auto& row : fx.rows) {
        RowResult r{row, false, ""};
        try {
            OrbitParam q = parse_param(t.graph.pair, row.param);
            Polynomial expect = parse_polynomial(row.poly, t.graph.pair.space());
            const Polynomial& got = t.of(q);
            seen.insert(q);
            if (rep.literal) {
                r.ok = got == expect;
                if (!r.ok) r.detail = "computed " + got.str();
            } else if (auto w = loc.witness(got, expect)) {
                r.detail = "differs at fixed point " + to_oneline(*w) + "; computed " + got.str();
            } else {
                r.ok = true;
            }
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        rep.rows.push_back(r);
    }
    rep.covered = seen.size();
    return rep;
}

} // namespace kclass

#endif
