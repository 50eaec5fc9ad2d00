#pragma once

// Bucketed subset expansions over a SubsetTable.
//
// Every sum over X in F used by the flow and Tutte code has the shape
//   sum_X sign(X) * t_q(X) * u^a(X) * v^b(X)
// so subsets are grouped by (torsion kind, a, b) with a signed multiplicity.

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "simflow/bigint.hpp"
#include "simflow/homology.hpp"

namespace simflow::detail {

enum class SubsetSign { None, Size, CoSize };

struct Expansion {
    std::size_t dim_a = 1;
    std::size_t dim_b = 1;
    /// kinds[0] is the torsion-free kind.
    std::vector<std::vector<BigInt>> kinds{{}};
    std::vector<std::int64_t> counts;

    std::int64_t& at(std::size_t kind, std::size_t a, std::size_t b) { return counts[(kind * dim_a + a) * dim_b + b]; }

    template <class Fn>
    void for_each(Fn&& fn) const
    {
        for (std::size_t k = 0; k < kinds.size(); ++k)
            for (std::size_t a = 0; a < dim_a; ++a)
                for (std::size_t b = 0; b < dim_b; ++b) {
                    const std::int64_t c = counts[(k * dim_a + a) * dim_b + b];
                    if (c != 0) fn(std::span<const BigInt>(kinds[k]), a, b, c);
                }
    }
};

inline BigInt torsion_weight_of(std::span<const BigInt> torsion, std::uint64_t q)
{
    BigInt w = 1;
    const BigInt qq = from_u64(q);
    for (const auto& m : torsion) w *= big_gcd(m, qq);
    return w;
}

/// `exponents(mask)` returns (a, b) with a < dim_a and b < dim_b.
template <class Exponents>
Expansion expand(const SubsetTable& table, std::size_t dim_a, std::size_t dim_b, SubsetSign sign,
                 Exponents&& exponents)
{
    Expansion out;
    out.dim_a = dim_a;
    out.dim_b = dim_b;

    std::map<std::vector<BigInt>, std::size_t> kind_index;
    std::vector<std::pair<std::uint64_t, std::size_t>> torsion_masks;
    for (const auto& [mask, torsion] : table.torsion_entries()) {
        auto [it, inserted] = kind_index.try_emplace(torsion, out.kinds.size());
        if (inserted) out.kinds.push_back(torsion);
        torsion_masks.emplace_back(mask, it->second);
    }
    out.counts.assign(out.kinds.size() * dim_a * dim_b, 0);

    const std::size_t n = table.facet_count();
    const std::uint64_t total = std::uint64_t{1} << n;
    auto signed_one = [&](std::uint64_t mask) -> std::int64_t {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        switch (sign) {
        case SubsetSign::Size: return size % 2 == 0 ? 1 : -1;
        case SubsetSign::CoSize: return (n - size) % 2 == 0 ? 1 : -1;
        default: return 1;
        }
    };
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const auto [a, b] = exponents(mask);
        out.at(0, a, b) += signed_one(mask);
    }
    // Move torsion subsets from the free bucket to their own kind.
    for (const auto& [mask, kind] : torsion_masks) {
        const auto [a, b] = exponents(mask);
        out.at(0, a, b) -= signed_one(mask);
        out.at(kind, a, b) += signed_one(mask);
    }
    return out;
}

} // namespace simflow::detail
