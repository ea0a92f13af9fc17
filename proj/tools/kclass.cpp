#include "kclass/kclass.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>

using namespace kclass;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int max_n = 5;
int jobs = 1;

SymmetricPair load_pair(const std::string& text) {
    SymmetricPair P = parse_pair(text);
    if (P.n > max_n)
        throw UsageError(P.descriptor() + " has half-rank " + std::to_string(P.n) + " > --max-n " +
                         std::to_string(max_n) + "; raise --max-n to run it");
    return P;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

int cmd_orbits(const std::string& pair, const std::string& format) {
    auto P = load_pair(pair);
    auto g = build_graph(P);
    std::vector<OrbitParam> all = enumerate_orbits(P);
    std::set<int> closed(g.closed.begin(), g.closed.end());
    if (format == "json") {
        nlohmann::json j;
        j["pair"] = P.descriptor();
        j["title"] = P.title();
        j["orbits"] = nlohmann::json::array();
        for (auto& q : all) {
            int v = g.find(q);
            j["orbits"].push_back({{"param", to_string(P, q)},
                                   {"closed", closed.count(v) > 0},
                                   {"dense", v == g.dense},
                                   {"level", g.level[v]}});
        }
        j["count"] = all.size();
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    for (auto& q : all) {
        int v = g.find(q);
        std::cout << to_string(P, q);
        if (closed.count(v)) std::cout << "  closed";
        if (v == g.dense) std::cout << "  dense";
        std::cout << "\n";
    }
    std::cout << "count: " << all.size() << "\n";
    return kOk;
}

int cmd_graph(const std::string& pair) {
    std::cout << to_dot(build_graph(load_pair(pair)));
    return kOk;
}

int cmd_classes(const std::string& pair, const std::string& format) {
    auto P = load_pair(pair);
    auto t = compute_classes(P, {jobs, true});
    auto& g = t.graph;
    std::size_t width = 0;
    for (int v = 0; v < g.size(); ++v) width = std::max(width, g.label(v).size());
    if (format == "table") std::cout << P.title() << "\n";
    if (format == "csv") std::cout << "orbit,class\n";
    for (int v = 0; v < g.size(); ++v) {
        std::string label = g.label(v), poly = t.cls[v].str();
        if (format == "csv") std::cout << csv_quote(label) << "," << csv_quote(poly) << "\n";
        else if (format == "machine") std::cout << label << " := " << poly << "\n";
        else std::cout << std::left << std::setw(static_cast<int>(width) + 2) << label << poly << "\n";
    }
    return kOk;
}

int cmd_verify(const std::string& pair, const std::string& fixture, bool literal) {
    auto P = load_pair(pair);
    auto fx = load_fixture(resolve_fixture(fixture));
    if (parse_pair(fx.pair_text) != P) throw UsageError("fixture is for " + fx.pair_text + ", not " + P.descriptor());
    auto t = compute_classes(P, {jobs, true});
    auto rep = verify_fixture(fx, t, literal);
    for (auto& r : rep.rows) {
        std::cout << (r.ok ? "ok   " : "FAIL ") << r.row.param;
        if (!r.ok) std::cout << "  (line " << r.row.line << ": " << r.detail << ")";
        std::cout << "\n";
    }
    std::cout << rep.rows.size() - rep.failures() << "/" << rep.rows.size() << " rows agree"
              << (rep.literal ? " literally" : " under localization") << "; " << rep.covered << "/" << rep.orbits
              << " orbits covered\n";
    return rep.ok() ? kOk : kVerifyFailed;
}

int cmd_count(const std::string& spec) {
    auto [fam, n] = parse_count_spec(spec);
    if (n > max_n) throw UsageError("n = " + std::to_string(n) + " exceeds --max-n " + std::to_string(max_n));
    auto rep = count_fibers(fam, n);
    for (auto& f : rep.fibers)
        std::cout << to_oneline(f.tau) << "  clans " << f.actual << "  fiber " << f.expected
                  << (f.actual == f.expected ? "" : "  MISMATCH") << "\n";
    std::cout << family_name(fam) << ":" << n << "  involutions " << rep.involutions << "  clans " << rep.clans
              << "  fibers " << rep.expected << "  " << (rep.ok() ? "equal" : "NOT equal") << "\n";
    return rep.ok() ? kOk : kVerifyFailed;
}

int cmd_chern(const std::string& pair, const std::string& param) {
    auto P = load_pair(pair);
    if (!P.type_a()) throw UnsupportedError("chern rewriting is only available for type A pairs");
    auto q = parse_param(P, param);
    auto t = compute_classes(P, {jobs, false});
    std::cout << chern_rewrite_checked(P, t.of(q)).poly.str() << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant classes of K-orbit closures on flag varieties"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--max-n", max_n, "largest half-rank accepted")->check(CLI::PositiveNumber);
    app.add_option("--jobs", jobs, "threads for class propagation")->check(CLI::PositiveNumber);

    std::string pair, format, fixture, spec, param;
    bool literal = false;

    auto* orbits = app.add_subcommand("orbits", "list orbit parameters");
    orbits->add_option("pair", pair, "pair descriptor, e.g. A:glpq:2,2")->required();
    orbits->add_option("--format", format, "plain or json")->check(CLI::IsMember({"plain", "json"}))->default_val("plain");

    auto* graph = app.add_subcommand("graph", "weak order graph as DOT");
    graph->add_option("pair", pair)->required();

    auto* classes = app.add_subcommand("classes", "class of every orbit closure");
    classes->add_option("pair", pair)->required();
    classes->add_option("--format", format, "table, csv or machine")
        ->check(CLI::IsMember({"table", "csv", "machine"}))
        ->default_val("table");

    auto* verify = app.add_subcommand("verify", "check a fixture table");
    verify->add_option("pair", pair)->required();
    verify->add_option("fixture", fixture, "path, or name in the fixture directory")->required();
    verify->add_flag("--literal", literal, "exact comparison for fixtures marked literal");

    auto* count = app.add_subcommand("count", "clan fibers over twisted involutions");
    count->add_option("spec", spec, "B:n, C:n, D-compact:n or D-unequal:n")->required();

    auto* chern = app.add_subcommand("chern", "class in Chern classes of the K-bundles");
    chern->add_option("pair", pair)->required();
    chern->add_option("param", param)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*orbits) return cmd_orbits(pair, format);
        if (*graph) return cmd_graph(pair);
        if (*classes) return cmd_classes(pair, format);
        if (*verify) return cmd_verify(pair, fixture, literal);
        if (*count) return cmd_count(spec);
        if (*chern) return cmd_chern(pair, param);
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const PairError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const OrbitParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const FixtureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kUsage;
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
