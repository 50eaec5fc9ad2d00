#include "simflow/tutte.hpp"

#include <algorithm>

#include "expansion.hpp"
#include "simflow/error.hpp"
#include "simflow/flows.hpp"
#include "simflow/homology.hpp"
#include "simflow/linalg.hpp"

namespace simflow {
namespace {

detail::Expansion tkr_expansion(const SubsetTable& table)
{
    const std::uint64_t all = FacetSubset::all(table.facet_count()).mask();
    const unsigned full = table.rank(all);
    return detail::expand(table, table.ridge_count() + 1, table.facet_count() + 1, detail::SubsetSign::None,
                          [&](std::uint64_t mask) {
                              return std::pair<std::size_t, std::size_t>{full - table.rank(mask),
                                                                         table.top_betti(mask)};
                          });
}

BivariatePolynomial weighted_tkr(const SimplicialComplex& complex, std::optional<std::uint64_t> q,
                                 const ComputeOptions& options)
{
    const detail::Expansion e = tkr_expansion(subset_table(complex, options));
    // Collapse kinds first so each (a, b) is expanded once.
    std::vector<BigInt> weights(e.dim_a * e.dim_b, 0);
    e.for_each([&](std::span<const BigInt> torsion, std::size_t a, std::size_t b, std::int64_t count) {
        BigInt w = from_i64(count);
        if (q) w *= detail::torsion_weight_of(torsion, *q);
        weights[a * e.dim_b + b] += w;
    });
    BivariatePolynomial out;
    for (std::size_t a = 0; a < e.dim_a; ++a)
        for (std::size_t b = 0; b < e.dim_b; ++b)
            out.add_shifted(static_cast<unsigned>(a), static_cast<unsigned>(b), weights[a * e.dim_b + b]);
    return out;
}

BigInt sign(long exponent) { return exponent % 2 == 0 ? BigInt(1) : BigInt(-1); }

// Phi by kernel enumeration and X by brute force when those fit the caps,
// falling back to subset expansion otherwise.
BigInt direct_flows(const SimplicialComplex& complex, std::uint64_t q, const ComputeOptions& options)
{
    const BigInt size = kernel_count_mod_q(boundary_matrix(complex, complex.dimension()).to_int_matrix(), q);
    const auto method = size <= from_u64(options.enumeration_cap) ? FlowMethod::KernelEnum : FlowMethod::Auto;
    return count_nz_flows(complex, q, method, options);
}

BigInt direct_colorings(const SimplicialComplex& complex, std::uint64_t k, const ComputeOptions& options)
{
    const BigInt space = big_pow(from_u64(k), complex.ridge_count());
    const auto method = space <= from_u64(options.enumeration_cap) ? ColoringMethod::Brute : ColoringMethod::Auto;
    return count_proper_colorings(complex, k, method, options);
}

IdentityCheck make_check(std::string name, std::uint64_t q, BigInt lhs, BigInt rhs, bool required = true)
{
    IdentityCheck c;
    c.name = std::move(name);
    c.q = q;
    c.pass = lhs == rhs;
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.required = required;
    return c;
}

} // namespace

BivariatePolynomial tkr_polynomial(const SimplicialComplex& complex, const ComputeOptions& options)
{
    return weighted_tkr(complex, std::nullopt, options);
}

BivariatePolynomial q_tkr_polynomial(const SimplicialComplex& complex, std::uint64_t q, const ComputeOptions& options)
{
    if (q < 1) throw Error(ErrorKind::BadModulus, "modulus must be at least 1");
    return weighted_tkr(complex, q, options);
}

BivariatePolynomial matroid_tutte(const RankOracle& oracle, const ComputeOptions& options)
{
    oracle.prefill(options);
    const std::size_t n = oracle.ground_size();
    const unsigned full = oracle.full_rank();
    std::vector<std::int64_t> counts((n + 1) * (n + 1), 0);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const FacetSubset x(mask);
        const unsigned r = oracle.rank(x);
        ++counts[(full - r) * (n + 1) + (x.size() - r)];
    }
    BivariatePolynomial out;
    for (std::size_t a = 0; a <= n; ++a)
        for (std::size_t b = 0; b <= n; ++b)
            out.add_shifted(static_cast<unsigned>(a), static_cast<unsigned>(b), from_i64(counts[a * (n + 1) + b]));
    return out;
}

Polynomial bott_r_polynomial(const SimplicialComplex& complex, BottConvention convention,
                             const ComputeOptions& options)
{
    const SubsetTable& table = subset_table(complex, options);
    const auto sign_rule =
        convention == BottConvention::Literal ? detail::SubsetSign::Size : detail::SubsetSign::CoSize;
    const detail::Expansion e = detail::expand(table, 1, table.facet_count() + 1, sign_rule, [&](std::uint64_t mask) {
        return std::pair<std::size_t, std::size_t>{0, table.top_betti(mask)};
    });
    std::vector<BigInt> coefficients(e.dim_b, 0);
    e.for_each([&](std::span<const BigInt>, std::size_t, std::size_t b, std::int64_t count) {
        coefficients[b] += from_i64(count);
    });
    return Polynomial(std::move(coefficients));
}

bool IdentityReport::all_required_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass || !c.required; });
}

IdentityReport check_specializations(const SimplicialComplex& complex, const std::vector<std::uint64_t>& q_list,
                                     const ComputeOptions& options)
{
    const SubsetTable& table = subset_table(complex, options);
    const std::uint64_t all = FacetSubset::all(complex.facet_count()).mask();
    const long facets = static_cast<long>(complex.facet_count());
    const long ridges = static_cast<long>(complex.ridge_count());
    const long beta_d = static_cast<long>(table.top_betti(all));
    const bool torsion_free = table.torsion_entries().empty();

    const BivariatePolynomial tkr = tkr_polynomial(complex, options);
    const Polynomial bott = bott_r_polynomial(complex, BottConvention::Complemented, options);
    const Polynomial bott_literal = bott_r_polynomial(complex, BottConvention::Literal, options);

    IdentityReport report;
    for (const std::uint64_t q : q_list) {
        const BigInt qq = from_u64(q);
        const BigInt flows = direct_flows(complex, q, options);
        const BigInt colorings = direct_colorings(complex, q, options);
        const BivariatePolynomial tq = q_tkr_polynomial(complex, q, options);
        const BigInt color_scale = sign(facets - beta_d) * big_pow(qq, static_cast<unsigned long>(ridges - facets + beta_d));

        report.checks.push_back(make_check("flows = (-1)^b_d T^q(0, 1-q)", q, flows,
                                           sign(beta_d) * tq.evaluate(0, 1 - qq)));
        report.checks.push_back(make_check("colorings = (-1)^(|F|-b_d) q^(|R|-|F|+b_d) T^q(1-q, 0)", q, colorings,
                                           color_scale * tq.evaluate(1 - qq, 0)));
        report.checks.push_back(make_check("flows = (-1)^b_d T(0, 1-q)", q, flows,
                                           sign(beta_d) * tkr.evaluate(0, 1 - qq), torsion_free));
        report.checks.push_back(make_check("colorings = (-1)^(|F|-b_d) q^(|R|-|F|+b_d) T(1-q, 0)", q, colorings,
                                           color_scale * tkr.evaluate(1 - qq, 0), torsion_free));
        report.checks.push_back(make_check("R(q) = (-1)^b_d T(0, 1-q), complemented sign", q, bott.evaluate(qq),
                                           sign(beta_d) * tkr.evaluate(0, 1 - qq)));
        report.checks.push_back(make_check("R(q) = (-1)^b_d T(0, 1-q), literal sign", q, bott_literal.evaluate(qq),
                                           sign(beta_d) * tkr.evaluate(0, 1 - qq), false));
        if (torsion_free)
            report.checks.push_back(make_check("flows = R(q)", q, flows, bott.evaluate(qq)));

        if (complex.dimension() == 1) {
            // Graph formulas use the unreduced component count.
            const long components = static_cast<long>(table.codim_betti(all)) + 1;
            report.checks.push_back(make_check("graph flows = (-1)^(|E|+|V|+k) T(0, 1-q)", q, flows,
                                               sign(facets + ridges + components) * tkr.evaluate(0, 1 - qq)));
            report.checks.push_back(make_check("graph colorings = (-1)^(|V|-k) q^k T(1-q, 0)", q, colorings,
                                               sign(ridges - components) *
                                                   big_pow(qq, static_cast<unsigned long>(components)) *
                                                   tkr.evaluate(1 - qq, 0)));
        }
    }
    return report;
}

bool DualitySwapReport::all_pass() const
{
    return tkr_swap && std::all_of(q_tkr_swap.begin(), q_tkr_swap.end(), [](const auto& p) { return p.second; }) &&
           std::all_of(scalar.begin(), scalar.end(), [](const IdentityCheck& c) { return c.pass; });
}

DualitySwapReport check_duality_swap(const SimplicialComplex& a, const SimplicialComplex& b,
                                     const std::vector<std::uint64_t>& q_list, const ComputeOptions& options)
{
    DualitySwapReport report;
    report.tkr_swap = tkr_polynomial(a, options) == tkr_polynomial(b, options).swapped();

    const auto all_a = FacetSubset::all(a.facet_count());
    const auto all_b = FacetSubset::all(b.facet_count());
    const long beta_a = static_cast<long>(top_betti(a, all_a));
    const long beta_b = static_cast<long>(top_betti(b, all_b));
    const long facets_b = static_cast<long>(b.facet_count());
    report.epsilon = facets_b - beta_b - beta_a;
    report.c = static_cast<long>(b.ridge_count()) - facets_b + beta_b;

    for (const std::uint64_t q : q_list) {
        report.q_tkr_swap.emplace_back(q, q_tkr_polynomial(a, q, options) == q_tkr_polynomial(b, q, options).swapped());
        const BigInt qq = from_u64(q);
        BigInt lhs = sign(report.epsilon) * count_nz_flows(a, q, FlowMethod::Auto, options);
        BigInt rhs = count_proper_colorings(b, q, ColoringMethod::Auto, options);
        if (report.c >= 0)
            lhs *= big_pow(qq, static_cast<unsigned long>(report.c));
        else
            rhs *= big_pow(qq, static_cast<unsigned long>(-report.c));
        report.scalar.push_back(make_check("(-1)^e q^c flows(A) = colorings(B)", q, lhs, rhs));
    }
    return report;
}

} // namespace simflow
