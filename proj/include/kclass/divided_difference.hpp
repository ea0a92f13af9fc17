#ifndef KCLASS_DIVIDED_DIFFERENCE_HPP
#define KCLASS_DIVIDED_DIFFERENCE_HPP

#include "polynomial.hpp"

namespace kclass {

enum class RootSystem { A, B, C, D };

// reflection s_alpha on y-variables plus the root alpha itself
struct SimpleRootAction {
    std::vector<VarImage> reflection;
    Polynomial alpha;
};

// y-variables are y_1..y_m; type A roots are y_i - y_{i+1}, i < m
inline SimpleRootAction simple_root_action(RootSystem rs, int i, const VariableSpace& s) {
    int m = s.m();
    int rank = rs == RootSystem::A ? m - 1 : m;
    if (i < 1 || i > rank) throw ContractError("simple root index out of range");
    SimpleRootAction a;
    a.reflection.resize(s.size());
    for (int v = 0; v < s.size(); ++v) a.reflection[v] = {v, 1};
    auto Y = [&](int j) { return s.y(j); };
    if (rs == RootSystem::A || i < m) {
        a.reflection[Y(i)] = {Y(i + 1), 1};
        a.reflection[Y(i + 1)] = {Y(i), 1};
        a.alpha = Polynomial::y(s, i) - Polynomial::y(s, i + 1);
        return a;
    }
    switch (rs) {
    case RootSystem::B:
        a.reflection[Y(m)] = {Y(m), -1};
        a.alpha = Polynomial::y(s, m);
        break;
    case RootSystem::C:
        a.reflection[Y(m)] = {Y(m), -1};
        a.alpha = Polynomial::y(s, m) * Rational(2);
        break;
    default:
        if (m < 2) throw ContractError("type D needs rank at least 2");
        a.reflection[Y(m - 1)] = {Y(m), -1};
        a.reflection[Y(m)] = {Y(m - 1), -1};
        a.alpha = Polynomial::y(s, m - 1) + Polynomial::y(s, m);
        break;
    }
    return a;
}

inline Polynomial apply_reflection(const Polynomial& f, const SimpleRootAction& a) {
    return f.rename(a.reflection, f.space());
}

inline Polynomial divided_difference(const Polynomial& f, const SimpleRootAction& a) {
    Polynomial num = f - apply_reflection(f, a);
    if (num.is_zero()) return num;
    return divide_exact(num, a.alpha);
}

inline Polynomial divided_difference(const Polynomial& f, RootSystem rs, int i) {
    return divided_difference(f, simple_root_action(rs, i, f.space()));
}

} // namespace kclass

#endif
