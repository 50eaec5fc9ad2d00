#pragma once

// The simplicial matroid: the column matroid of the top boundary over Q.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "simflow/bigint.hpp"
#include "simflow/complex.hpp"
#include "simflow/options.hpp"

namespace simflow {

/// Memoised rank function of M(complex), or of its dual.
///
/// Ranks come from fraction-free elimination on the restricted columns and
/// never touch the homology code. `prefill` computes all 2^|F| ranks at once
/// (shared per complex); otherwise single queries are memoised.
class RankOracle {
public:
    explicit RankOracle(const SimplicialComplex& complex, bool dual = false);

    const SimplicialComplex& complex() const noexcept { return *complex_; }
    bool is_dual() const noexcept { return dual_; }
    std::size_t ground_size() const noexcept { return complex_->facet_count(); }

    unsigned rank(FacetSubset subset) const;
    unsigned full_rank() const { return rank(FacetSubset::all(ground_size())); }

    /// The same complex with the other orientation (primal <-> dual).
    RankOracle dual() const;

    /// Fills the whole table; throws CapExceeded beyond the subset cap.
    void prefill(const ComputeOptions& options = {}) const;
    bool prefilled() const noexcept { return table_ != nullptr; }

private:
    unsigned primal_rank(std::uint64_t mask) const;

    const SimplicialComplex* complex_;
    bool dual_;
    mutable std::shared_ptr<const std::vector<std::uint8_t>> table_;
    struct Memo {
        std::mutex mutex;
        std::unordered_map<std::uint64_t, unsigned> ranks;
    };
    std::shared_ptr<Memo> memo_;
};

/// |X| - beta_d(X).
std::size_t matroid_rank(const SimplicialComplex& complex, FacetSubset subset);

/// |X| + beta_{d-1}(complex) - beta_{d-1}(complex \ X).
std::size_t matroid_corank(const SimplicialComplex& complex, FacetSubset subset);

bool is_bridge(const SimplicialComplex& complex, std::size_t facet);

/// Indices of all bridges, ascending.
std::vector<std::size_t> bridges(const SimplicialComplex& complex);

struct Connectivity {
    /// Size of the smallest cut, or nullopt when none has size <= k_max.
    std::optional<std::size_t> value;
    /// When value is empty: every cut has at least this many facets.
    std::size_t at_least = 0;
    std::optional<FacetSubset> witness;
};

/// Smallest X whose removal raises beta_{d-1}. Sizes are tried upward and,
/// within a size, masks in increasing numeric order.
Connectivity facet_connectivity(const SimplicialComplex& complex, std::size_t k_max);

struct ForestClass {
    bool forest = false;
    bool maximal = false;
    bool tree = false;
    bool spanning_tree = false;
};

ForestClass classify_forest(const SimplicialComplex& complex, FacetSubset subset);

/// Primitive integer vector (indexed by all facets) spanning the rational
/// kernel of the top boundary restricted to `circuit`. Throws BadParams if
/// that kernel is not one-dimensional.
std::vector<BigInt> circuit_vector(const SimplicialComplex& complex, FacetSubset circuit);

/// Support of the kernel of base + f. Throws NotABase, FacetInBase,
/// IndexOutOfRange.
FacetSubset fundamental_circuit(const SimplicialComplex& complex, FacetSubset base, std::size_t facet);

/// All circuits of M(complex), in increasing mask order.
std::vector<FacetSubset> circuits(const SimplicialComplex& complex, const ComputeOptions& options = {});

/// Least c with c * r(X) >= |X| for every X. Throws Infeasible when some
/// element has rank zero (a loop can never be covered) and CapExceeded.
std::size_t edmonds_covering_number(const RankOracle& oracle, const ComputeOptions& options = {});

/// Covering number of the dual matroid.
std::size_t coarboricity(const SimplicialComplex& complex, const ComputeOptions& options = {});

struct CoforestCover {
    std::vector<FacetSubset> parts;
    /// False for greedy covers, which may use more parts than necessary.
    bool minimal = true;
};

/// Exact backtracking cover by `parts` coforests. Throws Infeasible.
CoforestCover coforest_cover(const SimplicialComplex& complex, std::size_t parts,
                             const ComputeOptions& options = {});

/// First-fit cover; fast, not necessarily minimal. Throws Infeasible when a
/// facet is a bridge.
CoforestCover greedy_coforest_cover(const SimplicialComplex& complex, const ComputeOptions& options = {});

bool is_coindependent(const RankOracle& primal, FacetSubset subset);

} // namespace simflow
