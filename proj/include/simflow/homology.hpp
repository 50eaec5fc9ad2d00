#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "simflow/bigint.hpp"
#include "simflow/complex.hpp"
#include "simflow/options.hpp"

namespace simflow {

/// Reduced homology of X united with the full (d-1)-skeleton.
struct HomologySummary {
    /// betti[n] for n = 0..d.
    std::vector<std::size_t> betti;
    /// torsion[n] for n = 0..d-1: invariant factors >= 2, ascending.
    std::vector<std::vector<BigInt>> torsion;
};

HomologySummary homology_summary(const SimplicialComplex& complex, FacetSubset subset);

/// |Tor(H_{d-1}(X), Z_q)| = prod gcd(m, q) over the torsion factors of H_{d-1}(X).
BigInt torsion_weight(const SimplicialComplex& complex, FacetSubset subset, std::uint64_t q);

/// Top and codimension-one Betti numbers of a single subset.
std::size_t top_betti(const SimplicialComplex& complex, FacetSubset subset);
std::size_t codim_betti(const SimplicialComplex& complex, FacetSubset subset);

/// Rank and H_{d-1} torsion of the restricted top boundary for every subset of F.
///
/// Built once per complex (all 2^|F| SNFs); every subset expansion reads from it.
class SubsetTable {
public:
    std::size_t facet_count() const noexcept { return facet_count_; }
    std::size_t ridge_count() const noexcept { return ridge_count_; }
    /// dim ker of the (d-1) boundary: beta_{d-1}(X) = ridge_cycles - rank(X).
    std::size_t ridge_cycles() const noexcept { return ridge_cycles_; }

    unsigned rank(std::uint64_t mask) const { return rank_[mask]; }
    std::size_t top_betti(std::uint64_t mask) const
    {
        return static_cast<std::size_t>(std::popcount(mask)) - rank_[mask];
    }
    std::size_t codim_betti(std::uint64_t mask) const { return ridge_cycles_ - rank_[mask]; }

    /// Invariant factors >= 2 of H_{d-1}(X); empty for torsion-free subsets.
    std::span<const BigInt> torsion(std::uint64_t mask) const;
    BigInt torsion_weight(std::uint64_t mask, std::uint64_t q) const;

    const std::unordered_map<std::uint64_t, std::vector<BigInt>>& torsion_entries() const noexcept
    {
        return torsion_;
    }

    static std::shared_ptr<SubsetTable> build(const SimplicialComplex& complex, unsigned jobs);

private:
    std::size_t facet_count_ = 0;
    std::size_t ridge_count_ = 0;
    std::size_t ridge_cycles_ = 0;
    std::vector<std::uint8_t> rank_;
    std::unordered_map<std::uint64_t, std::vector<BigInt>> torsion_;
};

/// Cached subset table; throws CapExceeded when |F| is over the subset cap.
const SubsetTable& subset_table(const SimplicialComplex& complex, const ComputeOptions& options = {});

} // namespace simflow
