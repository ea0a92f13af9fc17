#ifndef KCLASS_WEYL_HPP
#define KCLASS_WEYL_HPP

#include "polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace kclass {

enum class WeylType { A, BC, D };

// w(1..n) as signed images; type A elements never carry signs
struct WeylElement {
    WeylType type = WeylType::A;
    std::vector<int> img;

    int n() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[i - 1]; }
    bool operator==(const WeylElement& o) const { return type == o.type && img == o.img; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }
    bool operator<(const WeylElement& o) const { return img < o.img; }

    static WeylElement identity(WeylType t, int n) {
        WeylElement w{t, std::vector<int>(n)};
        std::iota(w.img.begin(), w.img.end(), 1);
        return w;
    }
};

inline bool is_valid(const WeylElement& w) {
    std::vector<bool> seen(w.n() + 1, false);
    int neg = 0;
    for (int v : w.img) {
        int a = std::abs(v);
        if (a < 1 || a > w.n() || seen[a]) return false;
        seen[a] = true;
        if (v < 0) ++neg;
    }
    if (w.type == WeylType::A && neg) return false;
    if (w.type == WeylType::D && neg % 2) return false;
    return true;
}

// (a*b)(i) = a(b(i))
inline WeylElement compose(const WeylElement& a, const WeylElement& b) {
    if (a.n() != b.n()) throw ContractError("composing Weyl elements of different rank");
    WeylElement r{a.type, std::vector<int>(a.n())};
    for (int i = 0; i < a.n(); ++i) {
        int v = b.img[i];
        int u = a.img[std::abs(v) - 1];
        r.img[i] = v < 0 ? -u : u;
    }
    return r;
}

inline WeylElement inverse(const WeylElement& w) {
    WeylElement r{w.type, std::vector<int>(w.n())};
    for (int i = 0; i < w.n(); ++i) {
        int v = w.img[i];
        r.img[std::abs(v) - 1] = v < 0 ? -(i + 1) : (i + 1);
    }
    return r;
}

inline std::vector<WeylElement> enumerate_group(WeylType t, int n) {
    std::vector<WeylElement> out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        if (t == WeylType::A) {
            out.push_back({t, perm});
            continue;
        }
        for (int mask = 0; mask < (1 << n); ++mask) {
            if (t == WeylType::D && __builtin_popcount(mask) % 2) continue;
            WeylElement w{t, perm};
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) w.img[i] = -w.img[i];
            out.push_back(w);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::size_t group_order(WeylType t, int n) {
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    if (t == WeylType::BC) f <<= n;
    if (t == WeylType::D && n > 0) f <<= (n - 1);
    return f;
}

// positive roots as integer vectors in the e-basis
inline std::vector<std::vector<int>> positive_roots(WeylType t, int n, bool long_short_b = true) {
    std::vector<std::vector<int>> roots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> v(n, 0);
            v[i] = 1;
            v[j] = -1;
            roots.push_back(v);
            if (t != WeylType::A) {
                v[j] = 1;
                roots.push_back(v);
            }
        }
    if (t == WeylType::BC && long_short_b)
        for (int i = 0; i < n; ++i) {
            std::vector<int> v(n, 0);
            v[i] = 1;
            roots.push_back(v);
        }
    return roots;
}

inline std::vector<int> act_on_vector(const WeylElement& w, const std::vector<int>& v) {
    std::vector<int> r(v.size(), 0);
    for (int i = 0; i < w.n(); ++i) {
        int t = w.img[i];
        r[std::abs(t) - 1] = t < 0 ? -v[i] : v[i];
    }
    return r;
}

inline bool is_positive_vector(const std::vector<int>& v) {
    for (int c : v)
        if (c) return c > 0;
    return false;
}

inline int length(const WeylElement& w) {
    int l = 0;
    for (auto& r : positive_roots(w.type, w.n()))
        if (!is_positive_vector(act_on_vector(w, r))) ++l;
    return l;
}

// generators: s_i = (i,i+1) for i < n; last generator per type
inline WeylElement simple_reflection(WeylType t, int n, int i) {
    WeylElement s = WeylElement::identity(t, n);
    if (t == WeylType::A || i < n) {
        std::swap(s.img[i - 1], s.img[i]);
    } else if (t == WeylType::BC) {
        s.img[n - 1] = -n;
    } else {
        s.img[n - 2] = -n;
        s.img[n - 1] = -(n - 1);
    }
    return s;
}

inline int rank_of(WeylType t, int n) { return t == WeylType::A ? n - 1 : n; }

inline WeylElement absolute_value(const WeylElement& w) {
    WeylElement r{WeylType::A, w.img};
    for (int& v : r.img) v = std::abs(v);
    return r;
}

// signed element of S_{2n} (odd=false) or S_{2n+1}
inline WeylElement embed_as_permutation(const WeylElement& w, bool odd) {
    int n = w.n();
    int N = 2 * n + (odd ? 1 : 0);
    WeylElement s{WeylType::A, std::vector<int>(N)};
    for (int i = 1; i <= n; ++i) {
        int v = w(i);
        int si = v > 0 ? v : N + 1 - std::abs(v);
        s.img[i - 1] = si;
        s.img[N - i] = N + 1 - si;
    }
    if (odd) s.img[n] = n + 1;
    return s;
}

inline int l_p(const WeylElement& w, int p) {
    int c = 0;
    for (int i = 1; i <= w.n(); ++i)
        for (int j = i + 1; j <= w.n(); ++j)
            if (w(j) <= p && p < w(i)) ++c;
    return c;
}

struct SignStats {
    std::vector<int> neg;
    int f = 0;
    int g = 0;
};

inline SignStats sign_stats(const WeylElement& w) {
    SignStats s;
    for (int i = 1; i <= w.n(); ++i)
        if (w(i) < 0) {
            s.neg.push_back(i);
            s.g += w.n() - i;
        }
    s.f = static_cast<int>(s.neg.size());
    return s;
}

inline int f_B(const WeylElement& w, int p) {
    int c = 0;
    for (int v : w.img)
        if (v < 0 && -v <= p) ++c;
    return c;
}

struct UnequalRankStats {
    std::vector<int> I;
    std::vector<int> C;
    int f = 0;
};

inline bool is_standard_unequal_rep(const WeylElement& w, int p) {
    int n = w.n();
    if (w.type != WeylType::A || n < 1 || w(n) != p + 1) return false;
    int lo = 0, hi = p + 1;
    for (int i = 1; i < n; ++i) {
        int v = w(i);
        if (v <= p) {
            if (v < lo) return false;
            lo = v;
        } else {
            if (v < hi) return false;
            hi = v;
        }
    }
    return true;
}

// I_w = {i < n : w(i) > p+1}, C(i) = #{i < j < n : w(j) <= p}
inline UnequalRankStats unequal_rank_stats(const WeylElement& w, int p) {
    if (!is_standard_unequal_rep(w, p)) throw ContractError("not a standard representative");
    UnequalRankStats s;
    int n = w.n();
    for (int i = 1; i < n; ++i) {
        if (w(i) <= p + 1) continue;
        int c = 0;
        for (int j = i + 1; j < n; ++j)
            if (w(j) <= p) ++c;
        s.I.push_back(i);
        s.C.push_back(c);
        s.f += c;
    }
    return s;
}

inline std::string to_oneline(const WeylElement& w) {
    std::string s;
    bool wide = w.n() > 9;
    for (int i = 0; i < w.n(); ++i) {
        if (wide && i) s += " ";
        int v = w.img[i];
        if (v < 0) s += "-";
        s += std::to_string(std::abs(v));
    }
    return s;
}

// "13-2" or "1 3 -2"; the minus marks the following entry
inline WeylElement parse_oneline(const std::string& text, WeylType t) {
    WeylElement w{t, {}};
    bool space_sep = text.find(' ') != std::string::npos;
    int sign = 1;
    std::string num;
    auto flush = [&] {
        if (!num.empty()) {
            w.img.push_back(sign * std::stoi(num));
            num.clear();
            sign = 1;
        }
    };
    for (char c : text) {
        if (c == '-') {
            flush();
            sign = -1;
        } else if (c == ' ' || c == ',') {
            flush();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            num += c;
            if (!space_sep) flush();
        } else {
            throw ContractError(std::string("bad character in permutation: ") + c);
        }
    }
    flush();
    if (!is_valid(w)) throw ContractError("not a valid Weyl element: " + text);
    return w;
}

inline bool is_involution(const WeylElement& w) { return compose(w, w) == WeylElement::identity(w.type, w.n()); }

inline std::string to_cycles(const WeylElement& w) {
    std::string s;
    std::vector<bool> seen(w.n() + 1, false);
    for (int i = 1; i <= w.n(); ++i) {
        if (seen[i] || w(i) == i) continue;
        std::string c = "(";
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) c += ",";
            c += std::to_string(j);
            first = false;
            j = w(j);
        }
        s += c + ")";
    }
    return s.empty() ? "id" : s;
}

inline WeylElement parse_cycles(const std::string& text, int N) {
    WeylElement w = WeylElement::identity(WeylType::A, N);
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t == "id" || t.empty()) return w;
    std::size_t pos = 0;
    while (pos < t.size()) {
        if (t[pos] != '(') throw ContractError("bad cycle notation: " + text);
        auto close = t.find(')', pos);
        if (close == std::string::npos) throw ContractError("bad cycle notation: " + text);
        std::vector<int> cyc;
        std::string num;
        for (std::size_t k = pos + 1; k <= close; ++k) {
            if (t[k] == ',' || t[k] == ')') {
                if (num.empty()) throw ContractError("bad cycle notation: " + text);
                cyc.push_back(std::stoi(num));
                num.clear();
            } else if (std::isdigit(static_cast<unsigned char>(t[k]))) {
                num += t[k];
            } else {
                throw ContractError("bad cycle notation: " + text);
            }
        }
        WeylElement c = WeylElement::identity(WeylType::A, N);
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            if (cyc[k] < 1 || cyc[k] > N) throw ContractError("cycle entry out of range: " + text);
            c.img[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
        }
        if (!is_valid(c)) throw ContractError("bad cycle notation: " + text);
        w = compose(w, c);
        pos = close + 1;
    }
    return w;
}

} // namespace kclass

#endif
