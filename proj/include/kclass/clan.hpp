#ifndef KCLASS_CLAN_HPP
#define KCLASS_CLAN_HPP

#include "weyl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace kclass {

constexpr int PLUS = -1;
constexpr int MINUS = -2;

inline bool is_sign(int c) { return c < 0; }

// symbols: PLUS, MINUS or pair ids >= 1 numbered by first occurrence
struct Clan {
    std::vector<int> c;

    int size() const { return static_cast<int>(c.size()); }
    int operator[](int i) const { return c[i - 1]; }
    bool operator==(const Clan& o) const { return c == o.c; }
    bool operator!=(const Clan& o) const { return c != o.c; }
    bool operator<(const Clan& o) const { return c < o.c; }

    int plus() const { return static_cast<int>(std::count(c.begin(), c.end(), PLUS)); }
    int minus() const { return static_cast<int>(std::count(c.begin(), c.end(), MINUS)); }
    int pairs() const { return (size() - plus() - minus()) / 2; }

    // position of the other occurrence of the number at i, 0 for signs
    int mate(int i) const {
        int v = c[i - 1];
        if (is_sign(v)) return 0;
        for (int k = 1; k <= size(); ++k)
            if (k != i && c[k - 1] == v) return k;
        return 0;
    }
};

struct ClanError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Clan canonicalize(const std::vector<int>& raw) {
    std::map<int, int> count, rename;
    for (int v : raw)
        if (!is_sign(v)) ++count[v];
    for (auto& [v, k] : count)
        if (k != 2) throw ClanError("number " + std::to_string(v) + " appears " + std::to_string(k) + " times");
    Clan out;
    int next = 1;
    for (int v : raw) {
        if (is_sign(v)) {
            if (v != PLUS && v != MINUS) throw ClanError("bad clan symbol");
            out.c.push_back(v);
            continue;
        }
        auto it = rename.find(v);
        if (it == rename.end()) it = rename.emplace(v, next++).first;
        out.c.push_back(it->second);
    }
    return out;
}

inline Clan canonicalize(const std::vector<int>& raw, int p, int q) {
    Clan c = canonicalize(raw);
    if (c.size() != p + q || c.plus() - c.minus() != p - q)
        throw ClanError("clan does not have signature (" + std::to_string(p) + "," + std::to_string(q) + ")");
    return c;
}

inline std::string to_string(const Clan& c) {
    std::string s = "(";
    for (int i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        int v = c.c[i];
        s += v == PLUS ? "+" : v == MINUS ? "-" : std::to_string(v);
    }
    return s + ")";
}

// accepts "(+,1,1,-)", "+ 1 1 -", "+11-" (single digit numbers)
inline Clan parse_clan(const std::string& text) {
    std::vector<int> raw;
    bool separated = text.find(',') != std::string::npos || text.find(' ') != std::string::npos;
    std::string num;
    auto flush = [&] {
        if (!num.empty()) {
            raw.push_back(std::stoi(num));
            num.clear();
        }
    };
    for (char ch : text) {
        if (ch == '(' || ch == ')' || ch == ',' || ch == ' ') {
            flush();
        } else if (ch == '+') {
            flush();
            raw.push_back(PLUS);
        } else if (ch == '-') {
            flush();
            raw.push_back(MINUS);
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            num += ch;
            if (!separated) flush();
        } else {
            throw ClanError(std::string("bad character in clan: ") + ch);
        }
    }
    flush();
    if (raw.empty()) throw ClanError("empty clan");
    for (int v : raw)
        if (v == 0) throw ClanError("clan numbers start at 1");
    return canonicalize(raw);
}

namespace detail {

inline void enum_clans(int pos, int len, int plus_left, int minus_left, std::vector<int>& cur,
                       std::vector<int>& open, int next, std::vector<Clan>& out) {
    int remaining = len - pos;
    int open_count = static_cast<int>(open.size());
    // remaining slots must hold signs plus closings of open pairs; pairs opened later close later
    if (plus_left + minus_left + open_count > remaining) return;
    if ((remaining - plus_left - minus_left - open_count) % 2) return;
    if (pos == len) {
        out.push_back(canonicalize(cur));
        return;
    }
    if (plus_left) {
        cur.push_back(PLUS);
        enum_clans(pos + 1, len, plus_left - 1, minus_left, cur, open, next, out);
        cur.pop_back();
    }
    if (minus_left) {
        cur.push_back(MINUS);
        enum_clans(pos + 1, len, plus_left, minus_left - 1, cur, open, next, out);
        cur.pop_back();
    }
    for (int k = 0; k < open_count; ++k) {
        int v = open[k];
        open.erase(open.begin() + k);
        cur.push_back(v);
        enum_clans(pos + 1, len, plus_left, minus_left, cur, open, next, out);
        cur.pop_back();
        open.insert(open.begin() + k, v);
    }
    open.push_back(next);
    cur.push_back(next);
    enum_clans(pos + 1, len, plus_left, minus_left, cur, open, next + 1, out);
    cur.pop_back();
    open.pop_back();
}

} // namespace detail

// all (p,q)-clans, sorted
inline std::vector<Clan> enumerate_clans(int p, int q) {
    std::vector<Clan> out;
    if (p < 0 || q < 0) return out;
    int len = p + q;
    std::vector<int> cur, open;
    for (int k = 0; 2 * k <= len; ++k) {
        int signs = len - 2 * k;
        if ((signs + p - q) % 2) continue;
        int pl = (signs + p - q) / 2, mi = signs - pl;
        if (pl < 0 || mi < 0) continue;
        std::vector<Clan> part;
        // fixed number of pairs k: no pruning on pair count beyond length
        detail::enum_clans(0, len, pl, mi, cur, open, 1, part);
        for (auto& c : part)
            if (c.pairs() == k) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct GammaCounts {
    int plus = 0;
    int minus = 0;
    int pair = 0;
};

// gamma(i;+), gamma(i;-) count signs and complete pairs in c_1..c_i
inline int gamma_plus(const Clan& g, int i) {
    if (i < 0 || i > g.size()) throw ContractError("gamma index out of range");
    int c = 0;
    for (int k = 1; k <= i; ++k) {
        int v = g[k];
        if (v == PLUS) ++c;
        else if (!is_sign(v) && g.mate(k) < k) ++c;
    }
    return c;
}
inline int gamma_minus(const Clan& g, int i) {
    if (i < 0 || i > g.size()) throw ContractError("gamma index out of range");
    int c = 0;
    for (int k = 1; k <= i; ++k) {
        int v = g[k];
        if (v == MINUS) ++c;
        else if (!is_sign(v) && g.mate(k) < k) ++c;
    }
    return c;
}
// pairs s <= i < j < t
inline int gamma_pair(const Clan& g, int i, int j) {
    if (i < 1 || j > g.size() || i >= j) throw ContractError("gamma index out of range");
    int c = 0;
    for (int s = 1; s <= i; ++s) {
        int t = g.mate(s);
        if (t > j) ++c;
    }
    return c;
}

inline GammaCounts gamma_counts(const Clan& g, int i, int j) {
    GammaCounts r;
    r.plus = gamma_plus(g, i);
    r.minus = gamma_minus(g, i);
    if (j > i) r.pair = gamma_pair(g, i, j);
    return r;
}

inline Clan reversed(const Clan& g) {
    std::vector<int> raw(g.c.rbegin(), g.c.rend());
    return canonicalize(raw);
}

inline Clan sign_flipped(const Clan& g) {
    std::vector<int> raw = g.c;
    for (int& v : raw)
        if (v == PLUS) v = MINUS;
        else if (v == MINUS) v = PLUS;
    return canonicalize(raw);
}

inline bool is_symmetric(const Clan& g) { return reversed(g) == g; }
inline bool is_skew_symmetric(const Clan& g) { return sign_flipped(reversed(g)) == g; }

// no pair sits at mirrored positions i, L+1-i
inline bool is_antireflexive(const Clan& g) {
    int L = g.size();
    for (int i = 1; i <= L; ++i)
        if (!is_sign(g[i]) && g.mate(i) == L + 1 - i) return false;
    return true;
}

struct Symmetry {
    bool is_symmetric;
    bool is_skew_symmetric;
};
inline Symmetry symmetry(const Clan& g) { return {is_symmetric(g), is_skew_symmetric(g)}; }

// involution on positions: mates swapped, signs fixed
inline WeylElement clan_to_involution(const Clan& g) {
    WeylElement w = WeylElement::identity(WeylType::A, g.size());
    for (int i = 1; i <= g.size(); ++i)
        if (!is_sign(g[i])) w.img[i - 1] = g.mate(i);
    return w;
}

// permute positions: symbol at k moves to sigma(k)
inline Clan permute_positions(const Clan& g, const WeylElement& sigma) {
    std::vector<int> raw(g.size());
    for (int k = 1; k <= g.size(); ++k) raw[sigma(k) - 1] = g[k];
    return canonicalize(raw);
}

} // namespace kclass

#endif
