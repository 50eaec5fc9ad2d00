#include "simflow/matroid.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "cache.hpp"
#include "simflow/error.hpp"
#include "simflow/homology.hpp"
#include "simflow/linalg.hpp"

namespace simflow {
namespace {

unsigned bareiss_mask_rank(const SimplicialComplex& complex, std::uint64_t mask)
{
    thread_local std::vector<std::int64_t> buffer;
    const std::size_t rows = complex.ridge_count();
    const std::size_t cols = detail::fill_restricted(complex.cache(), rows, mask, buffer);
    return static_cast<unsigned>(bareiss_rank(buffer, rows, cols));
}

void check_facet(const SimplicialComplex& complex, std::size_t facet)
{
    if (facet >= complex.facet_count())
        throw Error(ErrorKind::IndexOutOfRange,
                    "facet " + std::to_string(facet) + " of " + std::to_string(complex.facet_count()));
}

void check_subset(const SimplicialComplex& complex, FacetSubset subset)
{
    if ((subset.mask() & ~FacetSubset::all(complex.facet_count()).mask()) != 0)
        throw Error(ErrorKind::IndexOutOfRange, "facet subset refers to facets beyond " +
                                                    std::to_string(complex.facet_count()));
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

} // namespace

RankOracle::RankOracle(const SimplicialComplex& complex, bool dual)
    : complex_(&complex), dual_(dual), memo_(std::make_shared<Memo>())
{
    std::lock_guard lock(complex.cache().rank_mutex);
    table_ = complex.cache().rank_table;
}

RankOracle RankOracle::dual() const
{
    RankOracle out(*complex_, !dual_);
    out.memo_ = memo_;
    if (!out.table_) out.table_ = table_;
    return out;
}

unsigned RankOracle::primal_rank(std::uint64_t mask) const
{
    if (table_) return (*table_)[mask];
    std::lock_guard lock(memo_->mutex);
    auto it = memo_->ranks.find(mask);
    if (it != memo_->ranks.end()) return it->second;
    const unsigned r = bareiss_mask_rank(*complex_, mask);
    memo_->ranks.emplace(mask, r);
    return r;
}

unsigned RankOracle::rank(FacetSubset subset) const
{
    check_subset(*complex_, subset);
    if (!dual_) return primal_rank(subset.mask());
    const auto all = FacetSubset::all(ground_size());
    return static_cast<unsigned>(subset.size() + primal_rank(subset.complement(ground_size()).mask()) -
                                 primal_rank(all.mask()));
}

void RankOracle::prefill(const ComputeOptions& options) const
{
    if (table_) return;
    require_subset_cap(ground_size(), options);
    auto& cache = complex_->cache();
    std::lock_guard lock(cache.rank_mutex);
    if (!cache.rank_table) {
        const std::uint64_t total = std::uint64_t{1} << ground_size();
        auto table = std::make_shared<std::vector<std::uint8_t>>(total);
        parallel_ranges(options.jobs, 0, total, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
            for (std::uint64_t mask = lo; mask < hi; ++mask)
                (*table)[mask] = static_cast<std::uint8_t>(bareiss_mask_rank(*complex_, mask));
        });
        cache.rank_table = std::move(table);
    }
    table_ = cache.rank_table;
}

std::size_t matroid_rank(const SimplicialComplex& complex, FacetSubset subset)
{
    return subset.size() - top_betti(complex, subset);
}

std::size_t matroid_corank(const SimplicialComplex& complex, FacetSubset subset)
{
    const std::size_t n = complex.facet_count();
    return subset.size() + codim_betti(complex, FacetSubset::all(n)) - codim_betti(complex, subset.complement(n));
}

bool is_bridge(const SimplicialComplex& complex, std::size_t facet)
{
    check_facet(complex, facet);
    const auto all = FacetSubset::all(complex.facet_count());
    return codim_betti(complex, all.without(facet)) == codim_betti(complex, all) + 1;
}

std::vector<std::size_t> bridges(const SimplicialComplex& complex)
{
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < complex.facet_count(); ++f)
        if (is_bridge(complex, f)) out.push_back(f);
    return out;
}

Connectivity facet_connectivity(const SimplicialComplex& complex, std::size_t k_max)
{
    if (k_max < 1) throw Error(ErrorKind::BadParams, "connectivity search bound must be at least 1");
    const RankOracle oracle(complex);
    const std::size_t n = complex.facet_count();
    const unsigned full = oracle.full_rank();
    const std::uint64_t all = FacetSubset::all(n).mask();

    Connectivity out;
    for (std::size_t k = 1; k <= std::min(k_max, n); ++k) {
        // Gosper's hack: k-subsets in increasing numeric order.
        std::uint64_t x = (std::uint64_t{1} << k) - 1;
        while (x <= all) {
            if (oracle.rank(FacetSubset(all & ~x)) < full) {
                out.value = k;
                out.witness = FacetSubset(x);
                return out;
            }
            if (k == 64) break;
            const std::uint64_t c = x & (~x + 1);
            const std::uint64_t r = x + c;
            if (r == 0) break;
            x = (((r ^ x) >> 2) / c) | r;
        }
    }
    out.at_least = k_max + 1;
    return out;
}

ForestClass classify_forest(const SimplicialComplex& complex, FacetSubset subset)
{
    const auto all = FacetSubset::all(complex.facet_count());
    const std::size_t ambient = codim_betti(complex, all);
    const std::size_t codim = codim_betti(complex, subset);
    ForestClass out;
    out.forest = top_betti(complex, subset) == 0;
    out.maximal = out.forest && codim == ambient;
    out.tree = out.forest && codim == 0;
    out.spanning_tree = out.tree && ambient == 0;
    return out;
}

std::vector<BigInt> circuit_vector(const SimplicialComplex& complex, FacetSubset circuit)
{
    check_subset(complex, circuit);
    const auto picked = circuit.indices();
    const auto basis = integer_kernel_basis(restrict_columns(complex, circuit).to_int_matrix());
    if (basis.size() != 1)
        throw Error(ErrorKind::BadParams, "facet set has a " + std::to_string(basis.size()) +
                                              "-dimensional cycle space, expected 1");
    BigInt g = 0;
    for (const auto& v : basis.front()) g = big_gcd(g, v);
    std::vector<BigInt> out(complex.facet_count(), 0);
    bool flip = false;
    bool seen = false;
    for (std::size_t i = 0; i < picked.size(); ++i) {
        const BigInt& v = basis.front()[i];
        if (!seen && v != 0) {
            flip = v < 0;
            seen = true;
        }
        out[picked[i]] = v / g;
    }
    if (flip)
        for (auto& v : out) v = -v;
    return out;
}

FacetSubset fundamental_circuit(const SimplicialComplex& complex, FacetSubset base, std::size_t facet)
{
    check_facet(complex, facet);
    check_subset(complex, base);
    if (base.contains(facet)) throw Error(ErrorKind::FacetInBase, "facet " + std::to_string(facet) + " is in the base");
    if (!classify_forest(complex, base).maximal) throw Error(ErrorKind::NotABase, "subset is not a maximal forest");
    const auto v = circuit_vector(complex, base.with(facet));
    FacetSubset support;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) support = support.with(i);
    return support;
}

std::vector<FacetSubset> circuits(const SimplicialComplex& complex, const ComputeOptions& options)
{
    const RankOracle oracle(complex);
    oracle.prefill(options);
    const std::uint64_t total = std::uint64_t{1} << complex.facet_count();
    std::vector<FacetSubset> out;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        const FacetSubset x(mask);
        const std::size_t size = x.size();
        if (oracle.rank(x) + 1 != size) continue;
        bool minimal = true;
        for (std::uint64_t m = mask; m != 0 && minimal; m &= m - 1)
            minimal = oracle.rank(FacetSubset(mask & ~(m & (~m + 1)))) + 1 == size;
        if (minimal) out.push_back(x);
    }
    return out;
}

std::size_t edmonds_covering_number(const RankOracle& oracle, const ComputeOptions& options)
{
    oracle.prefill(options);
    const std::size_t n = oracle.ground_size();
    for (std::size_t e = 0; e < n; ++e)
        if (oracle.rank(FacetSubset::of({e})) == 0)
            throw Error(ErrorKind::Infeasible, "element " + std::to_string(e) + " has rank zero and cannot be covered" +
                                                   (oracle.is_dual() ? " (it is a bridge)" : ""));
    std::size_t c = n == 0 ? 0 : 1;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        const FacetSubset x(mask);
        c = std::max(c, ceil_div(x.size(), oracle.rank(x)));
    }
    return c;
}

std::size_t coarboricity(const SimplicialComplex& complex, const ComputeOptions& options)
{
    return edmonds_covering_number(RankOracle(complex, true), options);
}

bool is_coindependent(const RankOracle& primal, FacetSubset subset)
{
    return primal.rank(subset.complement(primal.ground_size())) == primal.full_rank();
}

CoforestCover coforest_cover(const SimplicialComplex& complex, std::size_t parts, const ComputeOptions& options)
{
    const RankOracle primal(complex);
    primal.prefill(options);
    const std::size_t bound = coarboricity(complex, options);
    if (parts < bound)
        throw Error(ErrorKind::Infeasible, "cover needs at least " + std::to_string(bound) + " coforests, got " +
                                               std::to_string(parts));

    const std::size_t n = complex.facet_count();
    std::vector<FacetSubset> cover(parts);
    std::function<bool(std::size_t, std::size_t)> place = [&](std::size_t facet, std::size_t used) {
        if (facet == n) return true;
        for (std::size_t p = 0; p < std::min(used + 1, parts); ++p) {
            const FacetSubset grown = cover[p].with(facet);
            if (!is_coindependent(primal, grown)) continue;
            const FacetSubset saved = cover[p];
            cover[p] = grown;
            if (place(facet + 1, std::max(used, p + 1))) return true;
            cover[p] = saved;
        }
        return false;
    };
    if (!place(0, 0)) throw Error(ErrorKind::Infeasible, "no cover by " + std::to_string(parts) + " coforests");
    return {cover, parts == bound};
}

CoforestCover greedy_coforest_cover(const SimplicialComplex& complex, const ComputeOptions& options)
{
    const RankOracle primal(complex);
    primal.prefill(options);
    CoforestCover out;
    out.minimal = false;
    for (std::size_t f = 0; f < complex.facet_count(); ++f) {
        bool placed = false;
        for (auto& part : out.parts) {
            if (is_coindependent(primal, part.with(f))) {
                part = part.with(f);
                placed = true;
                break;
            }
        }
        if (placed) continue;
        if (!is_coindependent(primal, FacetSubset::of({f})))
            throw Error(ErrorKind::Infeasible, "facet " + std::to_string(f) + " is a bridge");
        out.parts.push_back(FacetSubset::of({f}));
    }
    return out;
}

} // namespace simflow
