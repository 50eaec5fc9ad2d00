#pragma once

#include <vector>

#include "simflow/bigint.hpp"
#include "simflow/complex.hpp"
#include "simflow/int_matrix.hpp"

namespace testing {

// Index of a facet given by its (dense) vertices.
inline std::size_t facet_index(const simflow::SimplicialComplex& c, std::vector<simflow::Vertex> vs)
{
    return *c.face_index(simflow::Simplex(std::move(vs)));
}

// Number of v in Z_q^cols with A v = 0 (mod q), by exhaustive search.
inline std::uint64_t brute_kernel_count(const simflow::IntMatrix& a, std::uint64_t q)
{
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < a.cols(); ++i) space *= q;
    std::uint64_t count = 0;
    std::vector<std::uint64_t> v(a.cols());
    for (std::uint64_t idx = 0; idx < space; ++idx) {
        std::uint64_t rest = idx;
        for (auto& x : v) {
            x = rest % q;
            rest /= q;
        }
        bool zero = true;
        for (std::size_t r = 0; r < a.rows() && zero; ++r) {
            simflow::BigInt s = 0;
            for (std::size_t c = 0; c < a.cols(); ++c) s += a(r, c) * simflow::from_u64(v[c]);
            zero = simflow::mod_u64(s, q) == 0;
        }
        count += zero;
    }
    return count;
}

} // namespace testing
