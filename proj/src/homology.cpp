#include "simflow/homology.hpp"

#include <mutex>

#include "cache.hpp"
#include "simflow/error.hpp"
#include "simflow/linalg.hpp"

namespace simflow {
namespace {

const detail::SkeletonHomology& skeleton(const SimplicialComplex& complex)
{
    auto& cache = complex.cache();
    std::call_once(cache.skeleton_once, [&] {
        for (int n = 0; n <= complex.dimension(); ++n) {
            const SNFResult snf = smith_normal_form(boundary_matrix(complex, n).to_int_matrix());
            std::vector<BigInt> torsion;
            for (const auto& d : snf.diagonal)
                if (d > 1) torsion.push_back(d);
            cache.skeleton.boundary_rank.push_back(snf.rank);
            cache.skeleton.boundary_torsion.push_back(std::move(torsion));
        }
    });
    return cache.skeleton;
}

std::size_t ridge_cycle_rank(const SimplicialComplex& complex)
{
    const int d = complex.dimension();
    if (d == 0) return 1;
    return complex.ridge_count() - skeleton(complex).boundary_rank[static_cast<std::size_t>(d - 1)];
}

void check_subset(const SimplicialComplex& complex, FacetSubset subset)
{
    const auto all = FacetSubset::all(complex.facet_count()).mask();
    if ((subset.mask() & ~all) != 0)
        throw Error(ErrorKind::IndexOutOfRange, "facet subset refers to facets beyond " +
                                                    std::to_string(complex.facet_count()));
}

Invariants restricted_invariants(const SimplicialComplex& complex, std::uint64_t mask)
{
    thread_local std::vector<std::int64_t> buffer;
    const std::size_t cols = detail::fill_restricted(complex.cache(), complex.ridge_count(), mask, buffer);
    return snf_invariants(buffer, complex.ridge_count(), cols);
}

} // namespace

HomologySummary homology_summary(const SimplicialComplex& complex, FacetSubset subset)
{
    check_subset(complex, subset);
    const int d = complex.dimension();
    const auto& skel = skeleton(complex);
    const Invariants top = restricted_invariants(complex, subset.mask());

    HomologySummary out;
    out.betti.resize(static_cast<std::size_t>(d) + 1);
    out.torsion.resize(static_cast<std::size_t>(d));
    for (int n = 0; n + 1 < d; ++n) {
        const auto un = static_cast<std::size_t>(n);
        out.betti[un] = complex.faces(n).size() - skel.boundary_rank[un] - skel.boundary_rank[un + 1];
        out.torsion[un] = skel.boundary_torsion[un + 1];
    }
    if (d >= 1) {
        out.betti[static_cast<std::size_t>(d - 1)] = ridge_cycle_rank(complex) - top.rank;
        out.torsion[static_cast<std::size_t>(d - 1)] = top.torsion;
    }
    out.betti[static_cast<std::size_t>(d)] = subset.size() - top.rank;
    return out;
}

BigInt torsion_weight(const SimplicialComplex& complex, FacetSubset subset, std::uint64_t q)
{
    if (q < 1) throw Error(ErrorKind::BadModulus, "modulus must be at least 1");
    check_subset(complex, subset);
    const Invariants top = restricted_invariants(complex, subset.mask());
    const BigInt qq = from_u64(q);
    BigInt weight = 1;
    for (const auto& m : top.torsion) weight *= big_gcd(m, qq);
    return weight;
}

std::size_t top_betti(const SimplicialComplex& complex, FacetSubset subset)
{
    check_subset(complex, subset);
    return subset.size() - restricted_invariants(complex, subset.mask()).rank;
}

std::size_t codim_betti(const SimplicialComplex& complex, FacetSubset subset)
{
    check_subset(complex, subset);
    return ridge_cycle_rank(complex) - restricted_invariants(complex, subset.mask()).rank;
}

std::span<const BigInt> SubsetTable::torsion(std::uint64_t mask) const
{
    auto it = torsion_.find(mask);
    if (it == torsion_.end()) return {};
    return it->second;
}

BigInt SubsetTable::torsion_weight(std::uint64_t mask, std::uint64_t q) const
{
    BigInt weight = 1;
    auto it = torsion_.find(mask);
    if (it == torsion_.end()) return weight;
    const BigInt qq = from_u64(q);
    for (const auto& m : it->second) weight *= big_gcd(m, qq);
    return weight;
}

std::shared_ptr<SubsetTable> SubsetTable::build(const SimplicialComplex& complex, unsigned jobs)
{
    auto table = std::make_shared<SubsetTable>();
    table->facet_count_ = complex.facet_count();
    table->ridge_count_ = complex.ridge_count();
    table->ridge_cycles_ = ridge_cycle_rank(complex);
    const std::uint64_t total = std::uint64_t{1} << table->facet_count_;
    table->rank_.assign(total, 0);

    std::mutex merge_mutex;
    parallel_ranges(jobs, 0, total, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
        std::unordered_map<std::uint64_t, std::vector<BigInt>> local;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            Invariants inv = restricted_invariants(complex, mask);
            table->rank_[mask] = static_cast<std::uint8_t>(inv.rank);
            if (!inv.torsion.empty()) local.emplace(mask, std::move(inv.torsion));
        }
        std::lock_guard lock(merge_mutex);
        table->torsion_.merge(local);
    });
    return table;
}

const SubsetTable& subset_table(const SimplicialComplex& complex, const ComputeOptions& options)
{
    require_subset_cap(complex.facet_count(), options);
    auto& cache = complex.cache();
    std::lock_guard lock(cache.subset_mutex);
    if (!cache.subset_table) cache.subset_table = SubsetTable::build(complex, options.jobs);
    return *cache.subset_table;
}

} // namespace simflow
