#include "simflow/flows.hpp"

#include <algorithm>
#include <unordered_map>

#include "expansion.hpp"
#include "simflow/error.hpp"
#include "simflow/homology.hpp"
#include "simflow/linalg.hpp"

namespace simflow {
namespace {

void check_modulus(std::uint64_t q)
{
    if (q < 1) throw Error(ErrorKind::BadModulus, "modulus must be at least 1");
}

bool use_subsets(const SimplicialComplex& complex, const ComputeOptions& options)
{
    return complex.facet_count() <= 64 && (options.force || complex.facet_count() <= options.subset_cap);
}

IntMatrix top_boundary(const SimplicialComplex& complex)
{
    return boundary_matrix(complex, complex.dimension()).to_int_matrix();
}

detail::Expansion flow_expansion(const SubsetTable& table)
{
    return detail::expand(table, 1, table.facet_count() + 1, detail::SubsetSign::CoSize, [&](std::uint64_t mask) {
        return std::pair<std::size_t, std::size_t>{0, table.top_betti(mask)};
    });
}

detail::Expansion coloring_expansion(const SubsetTable& table)
{
    return detail::expand(table, 1, table.ridge_count() + 1, detail::SubsetSign::Size, [&](std::uint64_t mask) {
        return std::pair<std::size_t, std::size_t>{0, table.ridge_count() - table.rank(mask)};
    });
}

// sum count * t_q * q^b over the expansion.
BigInt evaluate_expansion(const detail::Expansion& e, std::uint64_t q)
{
    const BigInt qq = from_u64(q);
    BigInt total = 0;
    e.for_each([&](std::span<const BigInt> torsion, std::size_t, std::size_t b, std::int64_t count) {
        total += from_i64(count) * detail::torsion_weight_of(torsion, q) * big_pow(qq, b);
    });
    return total;
}

BigInt flows_by_kernel(const SimplicialComplex& complex, std::uint64_t q, const ComputeOptions& options)
{
    KernelEnumerator kernel(top_boundary(complex), q, options.enumeration_cap);
    BigInt count = 0;
    while (kernel.next()) {
        const auto& v = kernel.current();
        if (std::none_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; })) ++count;
    }
    return count;
}

BigInt colorings_by_brute_force(const SimplicialComplex& complex, std::uint64_t k, const ComputeOptions& options)
{
    const std::size_t ridges = complex.ridge_count();
    const BigInt space = big_pow(from_u64(k), ridges);
    if (space > from_u64(options.enumeration_cap))
        throw Error(ErrorKind::CapExceeded,
                    "brute-force coloring space k^|R| = " + space.get_str() + " exceeds the enumeration cap " +
                        std::to_string(options.enumeration_cap),
                    space);

    // Facets incident to each ridge, with signs.
    const BoundaryMatrix d = boundary_matrix(complex, complex.dimension());
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> incident(ridges);
    for (std::size_t r = 0; r < d.rows; ++r)
        for (std::size_t c = 0; c < d.cols; ++c)
            if (d.at(r, c) != 0) incident[r].emplace_back(c, d.at(r, c));

    const auto kk = static_cast<std::int64_t>(k);
    std::vector<std::int64_t> facet_value(d.cols, 0);
    std::size_t zeros = d.cols;
    std::vector<std::uint64_t> digits(ridges, 0);
    BigInt count = 0;
    while (true) {
        if (zeros == 0) ++count;
        // Odometer step: each digit change adds the ridge's signs to its
        // facets (a wrap k-1 -> 0 is also +1 mod k).
        std::size_t i = 0;
        for (; i < ridges; ++i) {
            for (auto [c, sign] : incident[i]) {
                const bool was_zero = facet_value[c] == 0;
                facet_value[c] = ((facet_value[c] + sign) % kk + kk) % kk;
                zeros += (facet_value[c] == 0) - was_zero;
            }
            if (++digits[i] < k) break;
            digits[i] = 0;
        }
        if (i == ridges) break;
    }
    return count;
}

// Solves sum a_j rows[j] = target over GF(2); rows and target are bitmasks.
std::optional<std::uint64_t> solve_gf2(const std::vector<std::uint64_t>& rows, std::uint64_t target)
{
    std::vector<std::pair<std::uint64_t, std::uint64_t>> reduced; // (vector, combination)
    for (std::size_t j = 0; j < rows.size(); ++j) {
        std::uint64_t v = rows[j];
        std::uint64_t combo = std::uint64_t{1} << j;
        for (const auto& [w, wc] : reduced)
            if (v & (w & (~w + 1))) {
                v ^= w;
                combo ^= wc;
            }
        if (v == 0) continue;
        // Keep earlier rows reduced against the new pivot.
        const std::uint64_t pivot = v & (~v + 1);
        for (auto& [w, wc] : reduced)
            if (w & pivot) {
                w ^= v;
                wc ^= combo;
            }
        reduced.emplace_back(v, combo);
    }
    std::uint64_t combo = 0;
    for (const auto& [w, wc] : reduced)
        if (target & (w & (~w + 1))) {
            target ^= w;
            combo ^= wc;
        }
    if (target != 0) return std::nullopt;
    return combo;
}

BigInt l1_norm(const std::vector<BigInt>& v)
{
    BigInt s = 0;
    for (const auto& x : v) s += abs(x);
    return s;
}

} // namespace

bool ModularFlow::nowhere_zero() const
{
    return std::none_of(values.begin(), values.end(), [](std::uint64_t v) { return v == 0; });
}

bool is_modular_flow(const SimplicialComplex& complex, const ModularFlow& flow)
{
    if (flow.q < 1 || flow.values.size() != complex.facet_count()) return false;
    if (std::any_of(flow.values.begin(), flow.values.end(), [&](std::uint64_t v) { return v >= flow.q; }))
        return false;
    const BoundaryMatrix d = boundary_matrix(complex, complex.dimension());
    for (std::size_t r = 0; r < d.rows; ++r) {
        BigInt s = 0;
        for (std::size_t c = 0; c < d.cols; ++c)
            if (d.at(r, c) != 0) s += from_i64(d.at(r, c)) * from_u64(flow.values[c]);
        if (mod_u64(s, flow.q) != 0) return false;
    }
    return true;
}

bool GroupFlow2r::nowhere_zero() const
{
    return std::none_of(words.begin(), words.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<std::uint8_t> GroupFlow2r::layer(unsigned k) const
{
    std::vector<std::uint8_t> out(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) out[i] = static_cast<std::uint8_t>((words[i] >> k) & 1u);
    return out;
}

bool is_group_flow(const SimplicialComplex& complex, const GroupFlow2r& flow)
{
    if (flow.r < 1 || flow.r > 63 || flow.words.size() != complex.facet_count()) return false;
    for (auto w : flow.words)
        if (w >> flow.r) return false;
    for (unsigned k = 0; k < flow.r; ++k) {
        ModularFlow layer{2, {}};
        for (auto bit : flow.layer(k)) layer.values.push_back(bit);
        if (!is_modular_flow(complex, layer)) return false;
    }
    return true;
}

BigInt count_nz_flows(const SimplicialComplex& complex, std::uint64_t q, FlowMethod method,
                      const ComputeOptions& options)
{
    check_modulus(q);
    if (q == 1) return complex.facet_count() == 0 ? 1 : 0;
    if (method == FlowMethod::Auto)
        method = use_subsets(complex, options) ? FlowMethod::SubsetExpansion : FlowMethod::KernelEnum;
    if (method == FlowMethod::KernelEnum) return flows_by_kernel(complex, q, options);
    return evaluate_expansion(flow_expansion(subset_table(complex, options)), q);
}

BigInt count_proper_colorings(const SimplicialComplex& complex, std::uint64_t k, ColoringMethod method,
                              const ComputeOptions& options)
{
    check_modulus(k);
    if (method == ColoringMethod::Auto)
        method = use_subsets(complex, options) ? ColoringMethod::SubsetExpansion : ColoringMethod::Brute;
    if (method == ColoringMethod::Brute) return colorings_by_brute_force(complex, k, options);
    return evaluate_expansion(coloring_expansion(subset_table(complex, options)), k);
}

BigInt count_nz_tensions_direct(const SimplicialComplex& complex, std::uint64_t k, const ComputeOptions& options)
{
    check_modulus(k);
    const auto found = circuits(complex, options);
    IntMatrix relations(found.size(), complex.facet_count());
    for (std::size_t i = 0; i < found.size(); ++i) {
        const auto v = circuit_vector(complex, found[i]);
        for (std::size_t j = 0; j < v.size(); ++j) relations(i, j) = v[j];
    }
    KernelEnumerator kernel(relations, k, options.enumeration_cap);
    BigInt count = 0;
    while (kernel.next()) {
        const auto& w = kernel.current();
        if (std::none_of(w.begin(), w.end(), [](std::uint64_t x) { return x == 0; })) ++count;
    }
    return count;
}

std::optional<BigInt> tensions_from_colorings(const SimplicialComplex& complex, std::uint64_t k,
                                              const ComputeOptions& options)
{
    check_modulus(k);
    const SubsetTable& table = subset_table(complex, options);
    const std::uint64_t all = FacetSubset::all(complex.facet_count()).mask();
    const BigInt colorings = count_proper_colorings(complex, k, ColoringMethod::SubsetExpansion, options);
    // t_k C = k^(r(F) - |R|) X, with r(F) <= |R|.
    const BigInt divisor =
        table.torsion_weight(all, k) * big_pow(from_u64(k), table.ridge_count() - table.rank(all));
    if (colorings % divisor != 0) return std::nullopt;
    return BigInt(colorings / divisor);
}

BigInt count_nz_tensions(const SimplicialComplex& complex, std::uint64_t k, const ComputeOptions& options)
{
    const BigInt direct = count_nz_tensions_direct(complex, k, options);
    const auto relation = tensions_from_colorings(complex, k, options);
    if (!relation || *relation != direct)
        throw Error(ErrorKind::RelationMismatch,
                    "direct tension count " + direct.get_str() + " disagrees with the coloring relation (" +
                        (relation ? relation->get_str() : std::string("non-integral")) + ") at k=" +
                        std::to_string(k));
    return direct;
}

Quasipolynomial flow_quasipolynomial(const SimplicialComplex& complex, const ComputeOptions& options)
{
    const SubsetTable& table = subset_table(complex, options);
    const detail::Expansion expansion = flow_expansion(table);
    BigInt period = 1;
    for (const auto& torsion : expansion.kinds)
        for (const auto& m : torsion) period = big_lcm(period, m);
    if (!period.fits_ulong_p() || period > 100000)
        throw Error(ErrorKind::CapExceeded, "quasipolynomial period " + period.get_str() + " is too large", period);
    const std::uint64_t L = period.get_ui();
    const std::size_t degree = table.top_betti(FacetSubset::all(complex.facet_count()).mask());

    std::vector<Polynomial> constituents;
    for (std::uint64_t residue = 0; residue < L; ++residue) {
        std::vector<BigInt> xs;
        std::vector<BigInt> ys;
        std::uint64_t q = residue == 0 ? L : residue;
        for (std::size_t i = 0; i < degree + 3; ++i, q += L) {
            xs.push_back(from_u64(q));
            ys.push_back(evaluate_expansion(expansion, q));
        }
        const std::vector<BigInt> fit_x(xs.begin(), xs.end() - 2);
        const std::vector<BigInt> fit_y(ys.begin(), ys.end() - 2);
        bool integral = false;
        Polynomial p = interpolate(fit_x, fit_y, integral);
        if (!integral)
            throw Error(ErrorKind::RelationMismatch,
                        "constituent " + std::to_string(residue) + " has a non-integral coefficient");
        for (std::size_t i = xs.size() - 2; i < xs.size(); ++i)
            if (p.evaluate(xs[i]) != ys[i])
                throw Error(ErrorKind::RelationMismatch, "constituent " + std::to_string(residue) +
                                                             " disagrees with the count at q=" + xs[i].get_str());
        constituents.push_back(std::move(p));
    }
    return Quasipolynomial(std::move(constituents));
}

BigInt count_nz_group_flows_2r(const SimplicialComplex& complex, unsigned r, const ComputeOptions& options)
{
    if (r < 1) throw Error(ErrorKind::BadParams, "exponent r must be at least 1");
    if (complex.facet_count() > 64) throw Error(ErrorKind::CapExceeded, "group flows need at most 64 facets");
    const IntMatrix d = top_boundary(complex);
    const BigInt kernel_size = kernel_count_mod_q(d, 2);
    const BigInt tuples = big_pow(kernel_size, r);
    if (tuples > from_u64(options.enumeration_cap))
        throw Error(ErrorKind::CapExceeded,
                    "(mod-2 kernel size)^r = " + tuples.get_str() + " exceeds the enumeration cap " +
                        std::to_string(options.enumeration_cap),
                    tuples);

    std::vector<std::uint64_t> kernel;
    KernelEnumerator it(d, 2, options.enumeration_cap);
    while (it.next()) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < it.current().size(); ++i)
            if (it.current()[i]) mask |= std::uint64_t{1} << i;
        kernel.push_back(mask);
    }
    // ways[m] = number of tuples so far whose facetwise OR is exactly m.
    std::unordered_map<std::uint64_t, std::uint64_t> ways{{0, 1}};
    for (unsigned step = 0; step < r; ++step) {
        std::unordered_map<std::uint64_t, std::uint64_t> next;
        for (const auto& [m, w] : ways)
            for (auto v : kernel) next[m | v] += w;
        ways = std::move(next);
    }
    auto full = ways.find(FacetSubset::all(complex.facet_count()).mask());
    return full == ways.end() ? BigInt(0) : from_u64(full->second);
}

std::vector<BigInt> odd_integral_lift(const SimplicialComplex& complex, FacetSubset support)
{
    const auto picked = support.indices();
    const auto basis = integer_kernel_basis(restrict_columns(complex, support).to_int_matrix());
    std::vector<std::uint64_t> parity;
    for (const auto& b : basis) {
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < b.size(); ++i)
            if (mpz_odd_p(b[i].get_mpz_t())) bits |= std::uint64_t{1} << i;
        parity.push_back(bits);
    }
    const std::uint64_t ones = picked.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << picked.size()) - 1;
    const auto combo = solve_gf2(parity, ones);
    if (!combo)
        throw Error(ErrorKind::LiftFailed, "layer is not the reduction of an integral cycle on its support");

    std::vector<BigInt> z(picked.size(), 0);
    for (std::size_t j = 0; j < basis.size(); ++j)
        if ((*combo >> j) & 1u)
            for (std::size_t i = 0; i < z.size(); ++i) z[i] += basis[j][i];

    // Even moves keep every entry odd; take any that shrink the l1 norm.
    for (bool improved = true; improved;) {
        improved = false;
        for (const auto& b : basis) {
            for (int s : {2, -2}) {
                std::vector<BigInt> trial = z;
                for (std::size_t i = 0; i < z.size(); ++i) trial[i] += s * b[i];
                if (l1_norm(trial) < l1_norm(z)) {
                    z = std::move(trial);
                    improved = true;
                }
            }
        }
    }
    std::vector<BigInt> out(complex.facet_count(), 0);
    for (std::size_t i = 0; i < picked.size(); ++i) out[picked[i]] = z[i];
    return out;
}

ModularFlow lift_z2r_flow(const SimplicialComplex& complex, const GroupFlow2r& flow)
{
    if (!is_group_flow(complex, flow)) throw Error(ErrorKind::NotAFlow, "input is not a Z_2^r flow of this complex");
    const BigInt modulus = big_pow(2, flow.r);
    std::vector<BigInt> y(complex.facet_count(), 0);
    for (unsigned k = 0; k < flow.r; ++k) {
        FacetSubset support;
        const auto bits = flow.layer(k);
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i]) support = support.with(i);
        if (support.empty()) continue;
        const auto z = odd_integral_lift(complex, support);
        const BigInt scale = big_pow(2, k);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += z[i] * scale;
    }
    ModularFlow out{std::uint64_t{1} << flow.r, {}};
    for (const auto& v : y) out.values.push_back(mod_u64(v, out.q));
    return out;
}

JaegerResult jaeger_flow(const SimplicialComplex& complex, const ComputeOptions& options)
{
    const auto bridge_list = bridges(complex);
    if (!bridge_list.empty())
        throw Error(ErrorKind::HasBridge, "facet " + std::to_string(bridge_list.front()) + " is a bridge");

    JaegerResult out;
    out.c = coarboricity(complex, options);
    out.cover = coforest_cover(complex, out.c, options);
    if (out.c > 63) throw Error(ErrorKind::CapExceeded, "2^c does not fit in 64 bits");

    const RankOracle primal(complex);
    primal.prefill(options);
    const std::size_t n = complex.facet_count();
    out.group_flow.r = static_cast<unsigned>(out.c);
    out.group_flow.words.assign(n, 0);
    for (std::size_t i = 0; i < out.c; ++i) {
        FacetSubset cobase = out.cover.parts[i];
        for (std::size_t f = 0; f < n; ++f)
            if (!cobase.contains(f) && is_coindependent(primal, cobase.with(f))) cobase = cobase.with(f);
        const FacetSubset base = cobase.complement(n);
        out.bases.push_back(base);

        std::uint64_t layer = 0;
        for (auto f : out.cover.parts[i].indices()) {
            const auto z = circuit_vector(complex, fundamental_circuit(complex, base, f));
            for (std::size_t j = 0; j < n; ++j)
                if (mpz_odd_p(z[j].get_mpz_t())) layer ^= std::uint64_t{1} << j;
        }
        for (std::size_t j = 0; j < n; ++j)
            if ((layer >> j) & 1u) out.group_flow.words[j] |= std::uint64_t{1} << i;
    }
    out.flow = lift_z2r_flow(complex, out.group_flow);
    if (!is_modular_flow(complex, out.flow) || !out.flow.nowhere_zero())
        throw Error(ErrorKind::LiftFailed, "constructed flow failed verification");
    return out;
}

std::optional<std::uint64_t> min_flow_number(const SimplicialComplex& complex, std::uint64_t q_max,
                                             const ComputeOptions& options)
{
    if (q_max < 2) throw Error(ErrorKind::BadParams, "q_max must be at least 2");
    for (std::uint64_t q = 2; q <= q_max; ++q)
        if (count_nz_flows(complex, q, FlowMethod::Auto, options) > 0) return q;
    return std::nullopt;
}

} // namespace simflow
