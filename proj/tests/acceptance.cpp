#include "checks.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

using namespace kclass::testing;

int main() {
    const std::pair<const char*, std::function<CheckResult()>> criteria[] = {
        {"orbit counts", check_orbit_counts},
        {"table reproduction", check_fixtures},
        {"literal reproduction", check_literal},
        {"closed-orbit oracle (n<=3)", [] { return check_closed_oracle(3); }},
        {"operator laws", [] { return check_operator_laws(100); }},
        {"determinant identities (n<=3)", [] { return check_delta_identities(3); }},
        {"fiber counting (n<=4)", [] { return check_counting(4); }},
        {"SO(4) component pairing", check_so4_split},
        {"Chern rewrite", check_chern_example},
        {"edge dominance (p+q<=6)", [] { return check_dominance(6); }},
    };
    int failed = 0, k = 0;
    for (auto& [name, run] : criteria) {
        ++k;
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = run();
        } catch (const std::exception& e) {
            r.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2d %s (%.2fs)%s%s\n", r.ok ? "PASS" : "FAIL", k, name, secs, r.ok ? "" : ": ", r.detail.c_str());
        if (!r.ok) ++failed;
    }
    return failed ? 1 : 0;
}
