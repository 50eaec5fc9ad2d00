#pragma once

// Per-complex lazily computed data shared by the homology and matroid modules.

#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "simflow/bigint.hpp"

namespace simflow {

class SubsetTable;

namespace detail {

struct SkeletonHomology {
    /// rank of boundary_matrix(n), n = 0..d (n = 0 is the augmentation row).
    std::vector<std::size_t> boundary_rank;
    /// Non-unit SNF factors of boundary_matrix(n).
    std::vector<std::vector<BigInt>> boundary_torsion;
};

struct ComplexCache {
    /// Top boundary columns as (row, sign) pairs, one list per facet.
    std::vector<std::vector<std::pair<std::uint32_t, std::int8_t>>> columns;

    std::once_flag skeleton_once;
    SkeletonHomology skeleton;

    std::mutex subset_mutex;
    std::shared_ptr<const SubsetTable> subset_table;

    std::mutex rank_mutex;
    std::shared_ptr<const std::vector<std::uint8_t>> rank_table;
};

// Row-major rows x popcount(mask) copy of the top boundary restricted to mask.
inline std::size_t fill_restricted(const ComplexCache& cache, std::size_t rows, std::uint64_t mask,
                                   std::vector<std::int64_t>& out)
{
    const auto cols = static_cast<std::size_t>(std::popcount(mask));
    out.assign(rows * cols, 0);
    std::size_t c = 0;
    for (std::uint64_t m = mask; m != 0; m &= m - 1, ++c) {
        for (auto [row, sign] : cache.columns[static_cast<std::size_t>(std::countr_zero(m))])
            out[row * cols + c] = sign;
    }
    return cols;
}

} // namespace detail
} // namespace simflow
