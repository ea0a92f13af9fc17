#ifndef KCLASS_DETERMINANT_HPP
#define KCLASS_DETERMINANT_HPP

#include "polynomial.hpp"

#include <vector>

namespace kclass {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

namespace detail {

inline Polynomial det_cofactor(const PolyMatrix& a, std::vector<int>& cols, int row) {
    int n = static_cast<int>(a.size());
    const VariableSpace& s = a[0][0].space();
    if (row == n) return Polynomial(s, 1);
    Polynomial r(s);
    int sign = 1;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        int c = cols[k];
        if (!a[row][c].is_zero()) {
            cols.erase(cols.begin() + k);
            Polynomial minor = det_cofactor(a, cols, row + 1);
            cols.insert(cols.begin() + k, c);
            if (!minor.is_zero()) {
                Polynomial t = a[row][c] * minor;
                if (sign > 0) r += t;
                else r -= t;
            }
        }
        sign = -sign;
    }
    return r;
}

} // namespace detail

inline void check_square(const PolyMatrix& a) {
    for (auto& row : a)
        if (row.size() != a.size()) throw ContractError("determinant of a non-square grid");
}

inline Polynomial det_by_cofactor(const PolyMatrix& a) {
    check_square(a);
    if (a.empty()) return Polynomial(VariableSpace(), 1);
    std::vector<int> cols(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) cols[i] = static_cast<int>(i);
    return detail::det_cofactor(a, cols, 0);
}

// fraction-free elimination; every division is exact
inline Polynomial det_by_bareiss(PolyMatrix a) {
    check_square(a);
    int n = static_cast<int>(a.size());
    if (n == 0) return Polynomial(VariableSpace(), 1);
    const VariableSpace s = a[0][0].space();
    Polynomial prev(s, 1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n && piv < 0; ++i)
                if (!a[i][k].is_zero()) piv = i;
            if (piv < 0) return Polynomial(s);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = divide_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

inline Polynomial poly_determinant(const PolyMatrix& a) {
    return a.size() <= 6 ? det_by_cofactor(a) : det_by_bareiss(a);
}

} // namespace kclass

#endif
