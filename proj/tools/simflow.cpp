// simflow command-line tool.
//
// Exit codes: 0 success, 1 usage, 2 domain error, 3 cap refusal.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "simflow/error.hpp"
#include "simflow/fixtures.hpp"
#include "simflow/flows.hpp"
#include "simflow/homology.hpp"
#include "simflow/io.hpp"
#include "simflow/matroid.hpp"
#include "simflow/tutte.hpp"
#include "simflow/verify.hpp"

using namespace simflow;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitCap = 3;

struct Global {
    bool json = false;
    bool force = false;
    unsigned jobs = 1;

    ComputeOptions options() const
    {
        ComputeOptions o;
        o.force = force;
        o.jobs = jobs;
        return o;
    }
};

json big(const BigInt& v)
{
    if (fits_i64(v)) return to_i64(v);
    return v.get_str();
}

std::string read_input(const std::string& path)
{
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
    out << text << '\n';
}

void emit(const Global& g, const json& j, const std::string& text)
{
    if (g.json)
        std::cout << j.dump() << '\n';
    else
        std::cout << text << '\n';
}

std::string join(const std::vector<BigInt>& xs)
{
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].get_str();
    return s + "]";
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw CLI::ValidationError("--q-range", "expected A..B");
    try {
        const auto a = std::stoull(text.substr(0, dots));
        const auto b = std::stoull(text.substr(dots + 2));
        if (a < 1 || b < a) throw CLI::ValidationError("--q-range", "need 1 <= A <= B");
        return {a, b};
    } catch (const std::logic_error&) {
        throw CLI::ValidationError("--q-range", "expected A..B with integers");
    }
}

// Subcommand that reads one complex from a file argument or stdin.
CLI::App* complex_command(CLI::App& app, const std::string& name, const std::string& help, std::string& input)
{
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "complex document (default: stdin)");
    return sub;
}

void analyze(const Global& g, const SimplicialComplex& c, std::size_t k_max)
{
    const auto options = g.options();
    const HomologySummary h = homology_summary(c, FacetSubset::all(c.facet_count()));
    const auto bridge_list = bridges(c);
    const Connectivity conn = facet_connectivity(c, k_max);
    std::optional<std::size_t> coarb;
    std::string coarb_note;
    if (bridge_list.empty()) {
        coarb = coarboricity(c, options);
    } else {
        coarb_note = "none (has bridges)";
    }

    json j;
    j["dimension"] = c.dimension();
    j["vertices"] = c.vertex_count();
    j["facets"] = c.facet_count();
    j["ridges"] = c.ridge_count();
    j["betti"] = h.betti;
    json tors = json::array();
    for (const auto& t : h.torsion) {
        json row = json::array();
        for (const auto& m : t) row.push_back(big(m));
        tors.push_back(row);
    }
    j["torsion"] = tors;
    j["bridges"] = bridge_list;
    if (conn.value) {
        j["connectivity"] = {{"value", *conn.value}, {"witness", conn.witness->indices()}};
    } else {
        j["connectivity"] = {{"at_least", conn.at_least}};
    }
    j["coarboricity"] = coarb ? json(*coarb) : json(nullptr);

    std::ostringstream out;
    out << "dimension " << c.dimension() << ", " << c.vertex_count() << " vertices, " << c.facet_count()
        << " facets, " << c.ridge_count() << " ridges\n";
    for (std::size_t n = 0; n < h.betti.size(); ++n) {
        out << "beta_" << n << " = " << h.betti[n];
        if (n < h.torsion.size() && !h.torsion[n].empty()) out << ", torsion " << join(h.torsion[n]);
        out << '\n';
    }
    out << "bridges: " << bridge_list.size();
    for (auto b : bridge_list) out << ' ' << b;
    out << "\nconnectivity: ";
    if (conn.value) {
        out << *conn.value << " (cut:";
        for (auto i : conn.witness->indices()) out << ' ' << i;
        out << ")";
    } else {
        out << ">= " << conn.at_least;
    }
    out << "\ncoarboricity: " << (coarb ? std::to_string(*coarb) : coarb_note);
    emit(g, j, out.str());
}

void verify_suite(const Global& g, bool& all_pass)
{
    json rows = json::array();
    all_pass = true;
    run_acceptance_suite(g.options(), [&](const CriterionResult& r) {
        all_pass = all_pass && r.pass;
        if (g.json) {
            rows.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail},
                            {"seconds", r.seconds}});
        } else {
            std::printf("%-4s %2d  %-48s %7.1fs  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                        r.detail.c_str());
            std::fflush(stdout);
        }
    });
    if (g.json) std::cout << json{{"criteria", rows}, {"all_pass", all_pass}}.dump() << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Nowhere-zero flows, colorings and Tutte polynomials of simplicial complexes"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_flag("--force", g.force, "ignore the subset cap (SIMFLOW_SUBSET_CAP)");
    app.add_option("--jobs", g.jobs, "worker threads for subset sweeps")->check(CLI::Range(1u, 256u));

    std::string input;
    std::string output;
    std::uint64_t q = 0;
    std::uint64_t k = 0;
    std::string method = "auto";
    std::string kind;
    std::string convention = "complemented";
    bool jaeger = false;
    std::uint64_t q_max = 0;
    std::string fixture;
    std::map<std::string, std::size_t> params;
    std::size_t facet = 0;
    std::string suite;
    std::string q_range;
    bool csv = false;
    std::size_t k_max = 0;

    auto* analyze_cmd = complex_command(app, "analyze", "homology, bridges, connectivity, coarboricity", input);
    analyze_cmd->add_option("--k-max", k_max, "connectivity search bound (default d+2)");

    auto* flows_cmd = complex_command(app, "flows", "count nowhere-zero q-flows", input);
    flows_cmd->add_option("--q", q, "modulus")->required()->check(CLI::PositiveNumber);
    flows_cmd->add_option("--method", method, "auto | kernel | subsets")
        ->check(CLI::IsMember({"auto", "kernel", "subsets"}));

    auto* colorings_cmd = complex_command(app, "colorings", "count proper k-colorings of ridges", input);
    colorings_cmd->add_option("--k", k, "modulus")->required()->check(CLI::PositiveNumber);
    colorings_cmd->add_option("--method", method, "auto | brute | subsets")
        ->check(CLI::IsMember({"auto", "brute", "subsets"}));

    auto* tensions_cmd = complex_command(app, "tensions", "count nowhere-zero k-tensions", input);
    tensions_cmd->add_option("--k", k, "modulus")->required()->check(CLI::PositiveNumber);

    auto* poly_cmd = complex_command(app, "poly", "TKR, q-TKR, matroid Tutte or Bott polynomial", input);
    poly_cmd->add_option("--kind", kind, "tkr | qtkr | tutte | bott")
        ->required()
        ->check(CLI::IsMember({"tkr", "qtkr", "tutte", "bott"}));
    poly_cmd->add_option("--q", q, "modulus for qtkr")->check(CLI::PositiveNumber);
    poly_cmd->add_option("--convention", convention, "Bott sign: complemented | literal")
        ->check(CLI::IsMember({"complemented", "literal"}));

    auto* quasi_cmd = complex_command(app, "quasi", "flow quasipolynomial", input);

    auto* construct_cmd = complex_command(app, "construct", "build an explicit nowhere-zero flow", input);
    construct_cmd->add_flag("--jaeger", jaeger, "coforest-cover construction (modulus 2^c)")->required();

    auto* minq_cmd = complex_command(app, "min-q", "least q with a nowhere-zero q-flow", input);
    minq_cmd->add_option("--max", q_max, "largest modulus to try")->required()->check(CLI::Range(2, 1 << 20));

    auto* generate_cmd = app.add_subcommand("generate", "write a fixture complex");
    generate_cmd->add_option("--fixture", fixture, "cycle | complete | simplex_boundary | rp2 | rp2_disjoint_pair | petersen")
        ->required();
    for (const char* p : {"n", "k", "d"})
        generate_cmd->add_option_function<std::size_t>(std::string("--") + p,
                                                       [&params, p](std::size_t v) { params[p] = v; },
                                                       "fixture parameter");
    generate_cmd->add_option("-o,--output", output, "output file (default: stdout)");

    auto* suspend_cmd = complex_command(app, "suspend", "suspension of the input complex", input);
    suspend_cmd->add_option("-o,--output", output, "output file (default: stdout)");

    auto* subdivide_cmd = complex_command(app, "subdivide", "stellar subdivision of one facet", input);
    subdivide_cmd->add_option("--facet", facet, "facet index")->required();
    subdivide_cmd->add_option("-o,--output", output, "output file (default: stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
    verify_cmd->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember({"paper"}));

    auto* sweep_cmd = complex_command(app, "sweep", "flows, colorings and tensions over a range of moduli", input);
    sweep_cmd->add_option("--q-range", q_range, "A..B")->required();
    sweep_cmd->add_flag("--csv", csv, "CSV output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const auto options = g.options();
        auto load = [&] { return parse_complex(read_input(input)); };

        if (analyze_cmd->parsed()) {
            const auto c = load();
            analyze(g, c, k_max ? k_max : static_cast<std::size_t>(c.dimension()) + 2);
        } else if (flows_cmd->parsed()) {
            const auto m = method == "kernel"    ? FlowMethod::KernelEnum
                           : method == "subsets" ? FlowMethod::SubsetExpansion
                                                 : FlowMethod::Auto;
            const BigInt v = count_nz_flows(load(), q, m, options);
            emit(g, {{"q", q}, {"flows", big(v)}}, v.get_str());
        } else if (colorings_cmd->parsed()) {
            const auto m = method == "brute"     ? ColoringMethod::Brute
                           : method == "subsets" ? ColoringMethod::SubsetExpansion
                                                 : ColoringMethod::Auto;
            const BigInt v = count_proper_colorings(load(), k, m, options);
            emit(g, {{"k", k}, {"colorings", big(v)}}, v.get_str());
        } else if (tensions_cmd->parsed()) {
            const BigInt v = count_nz_tensions(load(), k, options);
            emit(g, {{"k", k}, {"tensions", big(v)}}, v.get_str());
        } else if (poly_cmd->parsed()) {
            const auto c = load();
            std::string text;
            if (kind == "bott") {
                const auto conv = convention == "literal" ? BottConvention::Literal : BottConvention::Complemented;
                text = bott_r_polynomial(c, conv, options).to_string("lambda");
            } else if (kind == "tkr") {
                text = tkr_polynomial(c, options).to_string();
            } else if (kind == "tutte") {
                text = matroid_tutte(RankOracle(c), options).to_string();
            } else {
                if (q == 0) throw CLI::RequiredError("--q");
                text = q_tkr_polynomial(c, q, options).to_string();
            }
            emit(g, {{"kind", kind}, {"polynomial", text}}, text);
        } else if (quasi_cmd->parsed()) {
            const Quasipolynomial p = flow_quasipolynomial(load(), options);
            json constituents = json::array();
            for (const auto& c : p.constituents()) constituents.push_back(c.to_string());
            emit(g, {{"period", p.period()}, {"constituents", constituents}},
                 "period " + std::to_string(p.period()) + "\nconstituents " + p.to_string());
        } else if (construct_cmd->parsed()) {
            const auto c = load();
            const JaegerResult r = jaeger_flow(c, options);
            json parts = json::array();
            for (const auto& p : r.cover.parts) parts.push_back(p.indices());
            std::ostringstream out;
            out << "coarboricity " << r.c << "\nmodulus " << r.flow.q << "\nvalues";
            for (auto v : r.flow.values) out << ' ' << v;
            emit(g, {{"c", r.c}, {"modulus", r.flow.q}, {"cover", parts}, {"words", r.group_flow.words},
                     {"values", r.flow.values}, {"nowhere_zero", r.flow.nowhere_zero()}},
                 out.str());
        } else if (minq_cmd->parsed()) {
            const auto found = min_flow_number(load(), q_max, options);
            emit(g, {{"max", q_max}, {"min_q", found ? json(*found) : json(nullptr)}},
                 found ? std::to_string(*found) : "none up to " + std::to_string(q_max));
        } else if (generate_cmd->parsed()) {
            const auto c = fixtures::by_name(fixture, params);
            write_output(output, serialize_complex(c, fixture));
        } else if (suspend_cmd->parsed()) {
            write_output(output, serialize_complex(suspension(load()).complex));
        } else if (subdivide_cmd->parsed()) {
            write_output(output, serialize_complex(subdivide_facet(load(), facet)));
        } else if (verify_cmd->parsed()) {
            bool all_pass = false;
            verify_suite(g, all_pass);
            return all_pass ? 0 : kExitDomain;
        } else if (sweep_cmd->parsed()) {
            const auto [a, b] = parse_range(q_range);
            const auto c = load();
            json rows = json::array();
            if (csv && !g.json) std::cout << "q,flows,colorings,tensions\n";
            for (std::uint64_t m = a; m <= b; ++m) {
                const BigInt f = count_nz_flows(c, m, FlowMethod::Auto, options);
                const BigInt x = count_proper_colorings(c, m, ColoringMethod::Auto, options);
                const BigInt t = count_nz_tensions(c, m, options);
                if (g.json)
                    rows.push_back({{"q", m}, {"flows", big(f)}, {"colorings", big(x)}, {"tensions", big(t)}});
                else if (csv)
                    std::cout << m << ',' << f << ',' << x << ',' << t << '\n';
                else
                    std::cout << "q=" << m << "  flows " << f << "  colorings " << x << "  tensions " << t << '\n';
            }
            if (g.json) std::cout << rows.dump() << '\n';
        }
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "simflow: " << e.what() << '\n';
        return e.kind() == ErrorKind::CapExceeded ? kExitCap : kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "simflow: " << e.what() << '\n';
        return kExitDomain;
    }
    return 0;
}
