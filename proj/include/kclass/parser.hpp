#ifndef KCLASS_PARSER_HPP
#define KCLASS_PARSER_HPP

#include "polynomial.hpp"

#include <cctype>
#include <string>

namespace kclass {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

class PolyParser {
public:
    PolyParser(const std::string& text, const VariableSpace& s) : t_(text), s_(s) {}

    Polynomial run() {
        Polynomial p = expr();
        skip();
        if (pos_ != t_.size()) fail("unexpected '" + std::string(1, t_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + why);
    }
    void skip() {
        while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < t_.size() && t_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial p = term();
        for (;;) {
            if (eat('+')) p += term();
            else if (eat('-')) p -= term();
            else return p;
        }
    }
    Polynomial term() {
        Polynomial p = unary();
        for (;;) {
            if (eat('*')) {
                p *= unary();
            } else if (eat('/')) {
                Polynomial d = unary();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
                p *= Rational(1) / d.constant_term();
            } else {
                return p;
            }
        }
    }
    Polynomial unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    Polynomial power() {
        Polynomial p = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent must be a nonnegative integer");
            p = p.pow(static_cast<unsigned>(std::stoul(t_.substr(start, pos_ - start))));
        }
        return p;
    }
    Polynomial atom() {
        skip();
        if (pos_ >= t_.size()) fail("unexpected end of input");
        char c = t_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!eat(')')) fail("missing ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
            return Polynomial(s_, Rational(mpz_class(t_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < t_.size() && std::isalnum(static_cast<unsigned char>(t_[pos_]))) ++pos_;
            return variable(t_.substr(start, pos_ - start));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Polynomial variable(const std::string& name) {
        if (auto* xn = s_.xnames()) {
            for (std::size_t i = 0; i < xn->size(); ++i)
                if ((*xn)[i] == name) return Polynomial::var(s_, static_cast<int>(i));
        }
        if (name.size() >= 2 && (name[0] == 'x' || name[0] == 'y')) {
            bool digits = true;
            for (std::size_t i = 1; i < name.size(); ++i)
                digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
            if (digits) {
                int k = std::stoi(name.substr(1));
                if (name[0] == 'y' && k >= 1 && k <= s_.m()) return Polynomial::y(s_, k);
                if (name[0] == 'x' && !s_.xnames() && k >= 1 && k <= s_.r()) return Polynomial::x(s_, k);
            }
        }
        fail("unknown variable '" + name + "'");
    }

    std::string t_;
    const VariableSpace& s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse_polynomial(const std::string& text, const VariableSpace& s) {
    return detail::PolyParser(text, s).run();
}

} // namespace kclass

#endif
