#ifndef KCLASS_POLYNOMIAL_HPP
#define KCLASS_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kclass {

using Rational = mpq_class;

struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// x_1..x_r then y_1..y_m; labels optionally rename the x's for printing
class VariableSpace {
public:
    VariableSpace() = default;
    VariableSpace(int r, int m) : r_(r), m_(m) {}
    VariableSpace(int r, int m, std::vector<std::string> xnames)
        : r_(r), m_(m), xnames_(std::make_shared<const std::vector<std::string>>(std::move(xnames))) {}

    int r() const { return r_; }
    int m() const { return m_; }
    int size() const { return r_ + m_; }
    int x(int i) const { return i - 1; }
    int y(int j) const { return r_ + j - 1; }
    bool is_x(int v) const { return v < r_; }

    std::string name(int v) const {
        if (v < r_) {
            if (xnames_) return (*xnames_)[v];
            return "x" + std::to_string(v + 1);
        }
        return "y" + std::to_string(v - r_ + 1);
    }
    const std::vector<std::string>* xnames() const { return xnames_.get(); }

    bool operator==(const VariableSpace& o) const { return r_ == o.r_ && m_ == o.m_; }
    bool operator!=(const VariableSpace& o) const { return !(*this == o); }

private:
    int r_ = 0, m_ = 0;
    std::shared_ptr<const std::vector<std::string>> xnames_;
};

using Exponents = std::vector<std::uint16_t>;

inline int total_degree(const Exponents& e) {
    int d = 0;
    for (auto k : e) d += k;
    return d;
}

// descending graded lex, variable 0 most significant; map order == print order
struct MonomialOrder {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

inline bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// signed renaming of one variable: target < 0 means the variable goes to zero
struct VarImage {
    int target = -1;
    int sign = 1;
};

class Polynomial {
public:
    using Terms = std::map<Exponents, Rational, MonomialOrder>;

    Polynomial() = default;
    explicit Polynomial(VariableSpace s) : space_(std::move(s)) {}
    Polynomial(VariableSpace s, const Rational& c) : space_(std::move(s)) {
        if (c != 0) terms_[Exponents(space_.size(), 0)] = c;
    }

    static Polynomial constant(const VariableSpace& s, const Rational& c) { return Polynomial(s, c); }
    static Polynomial var(const VariableSpace& s, int v, const Rational& c = 1) {
        Polynomial p(s);
        if (c != 0) {
            Exponents e(s.size(), 0);
            e[v] = 1;
            p.terms_[e] = c;
        }
        return p;
    }
    static Polynomial x(const VariableSpace& s, int i) { return var(s, s.x(i)); }
    static Polynomial y(const VariableSpace& s, int j) { return var(s, s.y(j)); }

    const VariableSpace& space() const { return space_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }
    Rational constant_term() const {
        auto it = terms_.find(Exponents(space_.size(), 0));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // -1 for zero or inhomogeneous
    int degree() const {
        if (terms_.empty()) return -1;
        int d = total_degree(terms_.begin()->first);
        for (auto& [e, c] : terms_)
            if (total_degree(e) != d) return -1;
        return d;
    }
    bool is_homogeneous() const { return terms_.empty() || degree() >= 0; }

    bool has_y() const {
        for (auto& [e, c] : terms_)
            for (int v = space_.r(); v < space_.size(); ++v)
                if (e[v]) return true;
        return false;
    }
    bool has_x() const {
        for (auto& [e, c] : terms_)
            for (int v = 0; v < space_.r(); ++v)
                if (e[v]) return true;
        return false;
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check(o);
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check(o);
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Polynomial& operator*=(const Rational& k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= k;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }
    friend Polynomial operator*(Polynomial a, const Rational& k) { return a *= k; }
    friend Polynomial operator*(const Rational& k, Polynomial a) { return a *= k; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        Polynomial r(a.space_);
        Exponents e(a.space_.size());
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(unsigned k) const {
        Polynomial r(space_, 1), b = *this;
        while (k) {
            if (k & 1) r *= b;
            k >>= 1;
            if (k) b = b * b;
        }
        return r;
    }

    bool operator==(const Polynomial& o) const { return space_ == o.space_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // images.size() == space().size(); result lives in `target`
    Polynomial rename(const std::vector<VarImage>& images, const VariableSpace& target) const {
        Polynomial r(target);
        Exponents e(target.size());
        for (auto& [ex, c] : terms_) {
            std::fill(e.begin(), e.end(), 0);
            int sign = 1;
            bool dead = false;
            for (std::size_t v = 0; v < ex.size() && !dead; ++v) {
                if (!ex[v]) continue;
                const VarImage& im = images[v];
                if (im.target < 0) {
                    dead = true;
                    break;
                }
                e[im.target] += ex[v];
                if (im.sign < 0 && (ex[v] & 1)) sign = -sign;
            }
            if (!dead) r.add_term(e, sign > 0 ? c : Rational(-c));
        }
        return r;
    }

    // substitute arbitrary polynomials for variables
    Polynomial compose(const std::vector<Polynomial>& images, const VariableSpace& target) const {
        Polynomial r(target);
        std::vector<std::vector<Polynomial>> powers(images.size());
        for (auto& [ex, c] : terms_) {
            Polynomial t(target, c);
            for (std::size_t v = 0; v < ex.size(); ++v) {
                if (!ex[v]) continue;
                auto& pw = powers[v];
                if (pw.empty()) pw.push_back(Polynomial(target, 1));
                while (pw.size() <= ex[v]) pw.push_back(pw.back() * images[v]);
                t *= pw[ex[v]];
            }
            r += t;
        }
        return r;
    }

    std::string str() const;

private:
    void check(const Polynomial& o) const {
        if (space_ != o.space_) throw ContractError("polynomials over different variable spaces");
    }

    VariableSpace space_;
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

inline std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::string mono;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (!e[v]) continue;
            if (!mono.empty()) mono += "*";
            mono += space_.name(static_cast<int>(v));
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        if (mono.empty()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << mono;
        }
    }
    return os.str();
}

// exact quotient f/g; throws InternalError on nonzero remainder
inline Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw InternalError("division by zero polynomial");
    if (f.space() != g.space()) throw ContractError("division across variable spaces");
    const VariableSpace& s = f.space();
    auto& [lg, cg] = *g.terms().begin();
    Polynomial q(s), rem = f;
    Exponents t(s.size());
    while (!rem.is_zero()) {
        auto& [lr, cr] = *rem.terms().begin();
        if (!divides(lg, lr)) throw InternalError("inexact polynomial division: " + f.str() + " / " + g.str());
        for (int i = 0; i < s.size(); ++i) t[i] = lr[i] - lg[i];
        Rational c = cr / cg;
        q.add_term(t, c);
        for (auto& [eg, cgg] : g.terms()) {
            Exponents e(s.size());
            for (int i = 0; i < s.size(); ++i) e[i] = eg[i] + t[i];
            rem.add_term(e, -c * cgg);
        }
    }
    return q;
}

// a signed variable: sign * var, with var an index into the space
struct SignedVar {
    int var;
    int sign = 1;
};

inline Polynomial elementary_symmetric(int k, const std::vector<SignedVar>& vars, const VariableSpace& s) {
    if (k < 0 || k > static_cast<int>(vars.size())) return Polynomial(s);
    // e[j] after processing a prefix
    std::vector<Polynomial> e(k + 1, Polynomial(s));
    e[0] = Polynomial(s, 1);
    for (auto& sv : vars) {
        Polynomial v = Polynomial::var(s, sv.var, sv.sign);
        for (int j = k; j >= 1; --j) e[j] += e[j - 1] * v;
    }
    return e[k];
}

} // namespace kclass

#endif
