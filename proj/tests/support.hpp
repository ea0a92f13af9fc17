#ifndef KCLASS_TEST_SUPPORT_HPP
#define KCLASS_TEST_SUPPORT_HPP

#include "kclass/kclass.hpp"

#include <random>
#include <string>
#include <vector>

namespace kclass::testing {

inline Polynomial random_poly(const VariableSpace& s, std::mt19937& rng, int terms = 4, int max_exp = 2) {
    std::uniform_int_distribution<int> coef(-5, 5), ex(0, max_exp);
    Polynomial f(s);
    for (int t = 0; t < terms; ++t) {
        Exponents e(s.size());
        for (auto& v : e) v = static_cast<std::uint16_t>(ex(rng));
        int c = coef(rng);
        if (c) f.add_term(e, c);
    }
    return f;
}

// every descriptor with half-rank at most n (glpq uses p+q)
inline std::vector<std::string> small_pairs(int n) {
    std::vector<std::string> out;
    auto s = [](int k) { return std::to_string(k); };
    for (int p = 0; p <= n; ++p)
        for (int q = 0; p + q <= n; ++q) {
            if (p + q >= 1) {
                out.push_back("A:glpq:" + s(p) + "," + s(q));
                out.push_back("B:oo:" + s(p) + "," + s(q));
                out.push_back("C:spsp:" + s(p) + "," + s(q));
            }
            if (p + q >= 2) out.push_back("D:oo:" + s(p) + "," + s(q));
            if (q >= 1 && p + q >= 2) out.push_back("D:oo-odd:" + s(p) + "," + s(q));
        }
    for (int N = 1; N <= 2 * n + 1; ++N) {
        out.push_back("A:o:" + s(N));
        if (N % 2) out.push_back("A:so:" + s(N));
        else {
            out.push_back("A:so-even:" + s(N));
            out.push_back("A:sp:" + s(N));
        }
    }
    for (int k = 1; k <= n; ++k) {
        out.push_back("C:gl:" + s(k));
        if (k >= 2) out.push_back("D:gl:" + s(k));
    }
    return out;
}

} // namespace kclass::testing

#endif
