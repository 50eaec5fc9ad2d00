#include "simflow/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "simflow/complex.hpp"
#include "simflow/error.hpp"
#include "simflow/fixtures.hpp"
#include "simflow/flows.hpp"
#include "simflow/homology.hpp"
#include "simflow/linalg.hpp"
#include "simflow/matroid.hpp"
#include "simflow/tutte.hpp"

namespace simflow {
namespace {

// Collects expectations; remembers the first failure.
class Checker {
public:
    void expect(bool ok, const std::string& what)
    {
        ++count_;
        if (!ok && failure_.empty()) failure_ = what;
    }
    bool ok() const { return failure_.empty(); }
    std::size_t count() const { return count_; }
    const std::string& failure() const { return failure_; }

private:
    std::size_t count_ = 0;
    std::string failure_;
};

std::string str(const BigInt& v) { return v.get_str(); }

BigInt falling_product(std::uint64_t q, std::uint64_t n)
{
    BigInt p = 1;
    for (std::uint64_t i = 1; i < n; ++i) p *= BigInt(from_u64(q)) - from_u64(i);
    return p;
}

std::string summary(const Checker& check, const std::string& evidence)
{
    if (!check.ok()) return check.failure();
    return std::to_string(check.count()) + " checks; " + evidence;
}

std::pair<bool, std::string> complete_flow_counts(const ComputeOptions& options)
{
    Checker check;
    for (std::uint64_t n : {4, 5, 6}) {
        const auto c = complete_complex(n, n - 2);
        for (std::uint64_t q = 2; q <= 8; ++q) {
            const BigInt expected = falling_product(q, n);
            const BigInt by_kernel = count_nz_flows(c, q, FlowMethod::KernelEnum, options);
            const BigInt by_subsets = count_nz_flows(c, q, FlowMethod::SubsetExpansion, options);
            const std::string at = "K_" + std::to_string(n) + "^" + std::to_string(n - 2) + " q=" + std::to_string(q);
            check.expect(by_kernel == expected, at + ": kernel count " + str(by_kernel) + " != " + str(expected));
            check.expect(by_subsets == expected, at + ": subset count " + str(by_subsets) + " != " + str(expected));
        }
    }
    return {check.ok(), summary(check, "Phi(K_6^4, 8) = " + str(falling_product(8, 6)))};
}

std::pair<bool, std::string> lower_bound(const ComputeOptions& options)
{
    Checker check;
    std::string evidence;
    for (std::uint64_t d : {1, 2, 3}) {
        const auto c = complete_complex(d + 3, d + 1);
        const auto found = min_flow_number(c, d + 2, options);
        const BigInt at_next = count_nz_flows(c, d + 3, FlowMethod::Auto, options);
        const std::string at = "d=" + std::to_string(d);
        check.expect(!found, at + ": unexpected flow at q=" + std::to_string(found.value_or(0)));
        check.expect(at_next == factorial(d + 2), at + ": Phi(d+3) = " + str(at_next));
        evidence += at + " Phi(" + std::to_string(d + 3) + ")=" + str(at_next) + " ";
    }
    return {check.ok(), summary(check, evidence)};
}

std::pair<bool, std::string> projective_plane_quasipolynomial(const ComputeOptions& options)
{
    Checker check;
    const auto c = fixtures::rp2();
    const Quasipolynomial quasi = flow_quasipolynomial(c, options);
    check.expect(quasi.period() == 2, "period " + std::to_string(quasi.period()));
    if (quasi.period() == 2) {
        check.expect(quasi.constituents()[0] == Polynomial({1}), "even constituent " + quasi.constituents()[0].to_string());
        check.expect(quasi.constituents()[1].is_zero(), "odd constituent " + quasi.constituents()[1].to_string());
    }
    for (std::uint64_t q = 2; q <= 9; ++q) {
        const BigInt direct = count_nz_flows(c, q, FlowMethod::KernelEnum, options);
        check.expect(direct == (q % 2 == 0 ? 1 : 0), "Phi(" + std::to_string(q) + ") = " + str(direct));
        check.expect(direct == quasi.evaluate(q), "quasipolynomial disagrees at q=" + std::to_string(q));
    }
    return {check.ok(), summary(check, "constituents " + quasi.to_string())};
}

std::pair<bool, std::string> petersen_flows(const ComputeOptions& options)
{
    Checker check;
    const auto c = fixtures::petersen();
    for (std::uint64_t q = 2; q <= 4; ++q) {
        const BigInt v = count_nz_flows(c, q, FlowMethod::KernelEnum, options);
        check.expect(v == 0, "Phi(" + std::to_string(q) + ") = " + str(v));
    }
    const BigInt five = count_nz_flows(c, 5, FlowMethod::KernelEnum, options);
    check.expect(five > 0, "Phi(5) = 0");
    check.expect(five == kPetersenFlows5, "Phi(5) = " + str(five) + " differs from the regression value");
    return {check.ok(), summary(check, "Phi(5) = " + str(five))};
}

std::pair<bool, std::string> specialisations(const ComputeOptions& options)
{
    Checker check;
    std::size_t identities = 0;
    for (const auto& [name, c] : fixtures::corpus()) {
        const IdentityReport report = check_specializations(c, {2, 3, 4, 5, 6}, options);
        for (const auto& item : report.checks) {
            if (!item.required) continue;
            ++identities;
            check.expect(item.pass, name + " q=" + std::to_string(item.q) + ": " + item.name + " (" + str(item.lhs) +
                                        " vs " + str(item.rhs) + ")");
        }
        check.expect(tkr_polynomial(c, options) == matroid_tutte(RankOracle(c), options),
                     name + ": TKR polynomial differs from the matroid Tutte polynomial");
    }
    return {check.ok(), summary(check, std::to_string(identities) + " identities")};
}

std::pair<bool, std::string> group_flows(const ComputeOptions& options)
{
    Checker check;
    const auto c = fixtures::rp2_disjoint_pair();
    const BigInt v4 = count_nz_group_flows_2r(c, 2, options);
    const BigInt modular = count_nz_flows(c, 4, FlowMethod::Auto, options);
    check.expect(v4 == 9, "Z_2^2 flows = " + str(v4));
    check.expect(modular == 1, "Z_4 flows = " + str(modular));
    return {check.ok(), summary(check, "Z_2^2: " + str(v4) + ", Z_4: " + str(modular))};
}

std::pair<bool, std::string> flow_construction(const ComputeOptions& options)
{
    Checker check;
    std::string evidence;
    for (const auto& [name, c] : fixtures::corpus()) {
        if (!bridges(c).empty()) continue;
        const JaegerResult result = jaeger_flow(c, options);
        check.expect(result.flow.q == (std::uint64_t{1} << result.c), name + ": modulus is not 2^c");
        check.expect(is_modular_flow(c, result.flow), name + ": output is not a flow");
        check.expect(result.flow.nowhere_zero(), name + ": output has a zero entry");
        const auto d = static_cast<std::size_t>(c.dimension());
        const bool connected = !facet_connectivity(c, d + 1).value.has_value();
        if (connected)
            check.expect(result.c <= d + 2, name + ": coarboricity " + std::to_string(result.c) + " > d+2");
        evidence += name + " c=" + std::to_string(result.c) + (connected ? "*" : "") + " ";
    }
    return {check.ok(), summary(check, evidence + "(* = (d+2)-facet-connected)")};
}

std::pair<bool, std::string> invariance(const ComputeOptions& options)
{
    Checker check;
    std::size_t complexes = 0;
    for (const auto& [name, c] : fixtures::corpus()) {
        if (c.facet_count() > 10) continue;
        std::vector<BigInt> base;
        for (std::uint64_t q = 2; q <= 6; ++q) base.push_back(count_nz_flows(c, q, FlowMethod::Auto, options));
        auto compare = [&](const SimplicialComplex& other, const std::string& label) {
            ++complexes;
            for (std::uint64_t q = 2; q <= 6; ++q) {
                const BigInt v = count_nz_flows(other, q, FlowMethod::Auto, options);
                check.expect(v == base[q - 2], name + " " + label + " q=" + std::to_string(q) + ": " + str(v) +
                                                   " != " + str(base[q - 2]));
            }
        };
        compare(suspension(c).complex, "suspension");
        for (std::size_t f = 0; f < c.facet_count(); ++f)
            compare(subdivide_facet(c, f), "subdivision of facet " + std::to_string(f));
    }
    return {check.ok(), summary(check, std::to_string(complexes) + " derived complexes")};
}

IntMatrix embed_block_form(const SimplicialComplex& link, const SimplicialComplex& rest)
{
    // [[-A, 0], [I, B]] with A = top boundary of `link`, B = top boundary of `rest`.
    const BoundaryMatrix a = boundary_matrix(link, link.dimension());
    const BoundaryMatrix b = boundary_matrix(rest, rest.dimension());
    IntMatrix out(a.rows + b.rows, a.cols + b.cols);
    for (std::size_t r = 0; r < a.rows; ++r)
        for (std::size_t c = 0; c < a.cols; ++c) out(r, c) = -a.at(r, c);
    for (std::size_t i = 0; i < a.cols; ++i) out(a.rows + i, i) = 1;
    for (std::size_t r = 0; r < b.rows; ++r)
        for (std::size_t c = 0; c < b.cols; ++c) out(a.rows + r, a.cols + c) = b.at(r, c);
    return out;
}

bool boundary_squares_to_zero(const SimplicialComplex& c)
{
    for (int n = 1; n <= c.dimension(); ++n) {
        const IntMatrix lower = boundary_matrix(c, n - 1).to_int_matrix();
        const IntMatrix upper = boundary_matrix(c, n).to_int_matrix();
        if (!(lower * upper).is_zero()) return false;
    }
    return true;
}

std::pair<bool, std::string> structural(const ComputeOptions&)
{
    Checker check;
    for (std::size_t n = 3; n <= 7; ++n) {
        for (std::size_t k = 2; k <= n - 1; ++k) {
            const auto c = complete_complex(n, k);
            const std::string at = "K_" + std::to_string(n) + "^" + std::to_string(k);
            const IntMatrix d = boundary_matrix(c, c.dimension()).to_int_matrix();
            const std::size_t r = rational_rank(d);
            check.expect(binomial(n - 1, k - 1) == r, at + ": rank " + std::to_string(r));
            check.expect(d == embed_block_form(complete_complex(n - 1, k - 1), complete_complex(n - 1, k)),
                         at + ": boundary is not in block form");
            check.expect(boundary_squares_to_zero(c), at + ": boundary squared is nonzero");
        }
        // Every ridge of K_m^(m-1) lies in exactly two facets.
        const auto sphere = complete_complex(n - 1, n - 2);
        const BoundaryMatrix d = boundary_matrix(sphere, sphere.dimension());
        for (std::size_t r = 0; r < d.rows; ++r) {
            std::size_t nonzero = 0;
            for (std::size_t c = 0; c < d.cols; ++c) nonzero += d.at(r, c) != 0;
            check.expect(nonzero == 2, "K_" + std::to_string(n - 1) + "^" + std::to_string(n - 2) + ": row " +
                                           std::to_string(r) + " has " + std::to_string(nonzero) + " nonzeros");
        }
    }
    for (const auto& [name, c] : fixtures::corpus())
        check.expect(boundary_squares_to_zero(c), name + ": boundary squared is nonzero");
    return {check.ok(), summary(check, "ranks, block form and boundary^2 = 0")};
}

std::vector<SimplicialComplex> bridged_fixtures()
{
    std::vector<SimplicialComplex> out;
    out.push_back(build_complex({{0, 1}, {1, 2}, {0, 2}, {2, 3}}));
    out.push_back(complete_complex(3, 3));
    auto k4 = complete_complex(4, 2).facet_lists();
    k4.push_back({3, 4});
    out.push_back(build_complex(k4));
    auto sphere = complete_complex(4, 3).facet_lists();
    sphere.push_back({2, 3, 4});
    out.push_back(build_complex(sphere));
    return out;
}

std::pair<bool, std::string> properties(const ComputeOptions& options)
{
    Checker check;
    // Kernel counts against brute force.
    std::mt19937 rng(20240611);
    std::size_t matrices = 0;
    while (matrices < 200) {
        const std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        const std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        const std::uint64_t q = std::uniform_int_distribution<std::uint64_t>(1, 7)(rng);
        std::uint64_t space = 1;
        for (std::size_t i = 0; i < cols; ++i) space *= q;
        if (space > 100000) continue;
        IntMatrix a(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) a(r, c) = std::uniform_int_distribution<long>(-9, 9)(rng);
        std::uint64_t brute = 0;
        std::vector<std::uint64_t> v(cols, 0);
        for (std::uint64_t idx = 0; idx < space; ++idx) {
            std::uint64_t rest = idx;
            for (std::size_t c = 0; c < cols; ++c, rest /= q) v[c] = rest % q;
            bool zero = true;
            for (std::size_t r = 0; r < rows && zero; ++r) {
                BigInt s = 0;
                for (std::size_t c = 0; c < cols; ++c) s += a(r, c) * from_u64(v[c]);
                zero = mod_u64(s, q) == 0;
            }
            brute += zero;
        }
        check.expect(kernel_count_mod_q(a, q) == from_u64(brute), "kernel count differs from brute force");
        ++matrices;
    }

    // Rank/nullity exchange over all pairs of subsets.
    std::size_t pairs = 0;
    for (const auto& [name, c] : fixtures::corpus()) {
        if (c.facet_count() > 8) continue;
        const SubsetTable& table = subset_table(c, options);
        const std::uint64_t total = std::uint64_t{1} << c.facet_count();
        for (std::uint64_t x = 0; x < total; ++x)
            for (std::uint64_t y = 0; y < total; ++y, ++pairs) {
                const auto lhs = static_cast<long>(std::popcount(y)) - static_cast<long>(std::popcount(x));
                const auto rhs = static_cast<long>(table.top_betti(y)) - static_cast<long>(table.codim_betti(y)) -
                                 static_cast<long>(table.top_betti(x)) + static_cast<long>(table.codim_betti(x));
                check.expect(lhs == rhs, name + ": exchange identity fails");
            }
    }

    // Bridges kill every flow on torsion-free complexes.
    std::size_t bridged = 0;
    for (const auto& c : bridged_fixtures()) {
        ++bridged;
        check.expect(!bridges(c).empty(), "constructed fixture has no bridge");
        check.expect(subset_table(c, options).torsion_entries().empty(), "constructed fixture has torsion");
        for (std::uint64_t q = 2; q <= 8; ++q) {
            check.expect(count_nz_flows(c, q, FlowMethod::KernelEnum, options) == 0, "bridged kernel count nonzero");
            check.expect(count_nz_flows(c, q, FlowMethod::SubsetExpansion, options) == 0,
                         "bridged subset count nonzero");
        }
    }
    return {check.ok(), summary(check, std::to_string(matrices) + " matrices, " + std::to_string(pairs) +
                                           " subset pairs, " + std::to_string(bridged) + " bridged complexes")};
}

struct Criterion {
    const char* title;
    std::pair<bool, std::string> (*run)(const ComputeOptions&);
};

const Criterion kCriteria[kCriterionCount] = {
    {"complete-complex flow counts, both methods", complete_flow_counts},
    {"no flow below d+3 on K_(d+3)^(d+1)", lower_bound},
    {"projective-plane flow quasipolynomial", projective_plane_quasipolynomial},
    {"Petersen graph: no 4-flow, has a 5-flow", petersen_flows},
    {"Tutte specialisations and rank-oracle equality", specialisations},
    {"group flows on two projective planes", group_flows},
    {"flows from coforest covers", flow_construction},
    {"suspension and subdivision invariance", invariance},
    {"structure of complete-complex boundaries", structural},
    {"randomised and exhaustive property suites", properties},
};

} // namespace

CriterionResult run_criterion(int id, const ComputeOptions& options)
{
    if (id < 1 || id > kCriterionCount) throw Error(ErrorKind::BadParams, "no criterion " + std::to_string(id));
    const Criterion& criterion = kCriteria[id - 1];
    CriterionResult result;
    result.id = id;
    result.title = criterion.title;
    const auto start = std::chrono::steady_clock::now();
    try {
        std::tie(result.pass, result.detail) = criterion.run(options);
    } catch (const std::exception& e) {
        result.pass = false;
        result.detail = std::string("threw ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<CriterionResult> run_acceptance_suite(const ComputeOptions& options, const CriterionCallback& on_result)
{
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) {
        out.push_back(run_criterion(id, options));
        if (on_result) on_result(out.back());
    }
    return out;
}

} // namespace simflow
