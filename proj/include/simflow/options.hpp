#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace simflow {

inline constexpr std::size_t kDefaultSubsetCap = 24;
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Subset cap from SIMFLOW_SUBSET_CAP, or kDefaultSubsetCap when unset/invalid.
std::size_t default_subset_cap();

/// Knobs shared by every exponential-time operation.
struct ComputeOptions {
    std::size_t subset_cap = default_subset_cap();
    std::uint64_t enumeration_cap = kDefaultEnumerationCap;
    bool force = false;
    unsigned jobs = 1;
};

/// Throws CapExceeded unless |F| fits the subset cap (or `force` is set).
/// Bitmask subsets never go beyond 64 facets, force or not.
void require_subset_cap(std::size_t facet_count, const ComputeOptions& options);

/// Runs `body(lo, hi)` over disjoint chunks of [begin, end) on `jobs` threads.
void parallel_ranges(unsigned jobs, std::uint64_t begin, std::uint64_t end,
                     const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& body);

} // namespace simflow
