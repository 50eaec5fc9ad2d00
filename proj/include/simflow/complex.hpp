#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "simflow/int_matrix.hpp"

namespace simflow {

using Vertex = std::uint32_t;

/// A simplex as a strictly increasing vertex list.
class Simplex {
public:
    Simplex() = default;
    /// Sorts the vertices; duplicates throw InvalidSimplex.
    explicit Simplex(std::vector<Vertex> vertices);

    int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const noexcept { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }

    /// The face with the i-th smallest vertex removed.
    Simplex without(std::size_t i) const;
    bool contains(Vertex v) const;

    friend auto operator<=>(const Simplex&, const Simplex&) = default;
    friend bool operator==(const Simplex&, const Simplex&) = default;

private:
    std::vector<Vertex> vertices_;
};

/// Set of facet indices of a fixed complex, as a 64-bit mask.
class FacetSubset {
public:
    constexpr FacetSubset() = default;
    constexpr explicit FacetSubset(std::uint64_t mask) : mask_(mask) {}

    static FacetSubset all(std::size_t facet_count);
    static FacetSubset of(std::initializer_list<std::size_t> indices);

    constexpr std::uint64_t mask() const noexcept { return mask_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }
    bool empty() const noexcept { return mask_ == 0; }
    bool contains(std::size_t i) const noexcept { return i < 64 && ((mask_ >> i) & 1u); }

    FacetSubset with(std::size_t i) const { return FacetSubset(mask_ | (std::uint64_t{1} << i)); }
    FacetSubset without(std::size_t i) const { return FacetSubset(mask_ & ~(std::uint64_t{1} << i)); }
    FacetSubset complement(std::size_t facet_count) const { return FacetSubset(all(facet_count).mask_ & ~mask_); }

    std::vector<std::size_t> indices() const;

    friend constexpr bool operator==(FacetSubset, FacetSubset) = default;

private:
    std::uint64_t mask_ = 0;
};

/// Boundary map with entries in {-1, 0, +1}, row-major.
struct BoundaryMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int8_t> entries;

    int at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
    IntMatrix to_int_matrix() const;
};

namespace detail {
struct ComplexCache;
}

/// Pure simplicial complex with its face lattice.
///
/// Vertices are dense labels 0..V-1; `original_labels()[v]` is the id the
/// caller supplied for v. Facets are sorted and distinct, and faces(n) holds
/// every n-face of a facet exactly once in lexicographic order. Instances are
/// immutable and may be shared across threads.
class SimplicialComplex {
public:
    int dimension() const noexcept { return dimension_; }
    const std::vector<Simplex>& facets() const noexcept { return faces_.back(); }
    const std::vector<Simplex>& faces(int n) const { return faces_.at(static_cast<std::size_t>(n)); }

    std::size_t facet_count() const noexcept { return facets().size(); }
    /// |faces(d-1)|, or 1 for d = 0 where the augmentation row stands in.
    std::size_t ridge_count() const noexcept { return dimension_ == 0 ? 1 : faces_[dimension_ - 1].size(); }
    std::size_t vertex_count() const noexcept { return faces_.front().size(); }

    const std::vector<std::uint64_t>& original_labels() const noexcept { return original_labels_; }

    std::optional<std::size_t> face_index(const Simplex& s) const;

    /// Facet vertex lists in the caller's original labels.
    std::vector<std::vector<std::uint64_t>> facet_lists(bool original = true) const;

    detail::ComplexCache& cache() const { return *cache_; }

private:
    friend SimplicialComplex build_complex(const std::vector<std::vector<std::uint64_t>>&);

    int dimension_ = 0;
    std::vector<std::vector<Simplex>> faces_;
    std::vector<std::uint64_t> original_labels_;
    std::shared_ptr<detail::ComplexCache> cache_;
};

/// Canonicalises facet lists (sorted vertices, sorted distinct facets, dense labels).
/// Throws EmptyInput, NotPure or InvalidSimplex.
SimplicialComplex build_complex(const std::vector<std::vector<std::uint64_t>>& facet_lists);

/// All k-subsets of {0..n-1}: K_n^k, of dimension k-1.
SimplicialComplex complete_complex(std::size_t n, std::size_t k);

/// n-th boundary map; n = 0 gives the single augmentation row of ones.
BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int n);

/// Top boundary map restricted to the facets in `subset`; rows stay the full ridge set.
BoundaryMatrix restrict_columns(const SimplicialComplex& complex, FacetSubset subset);

struct Suspension {
    SimplicialComplex complex;
    /// relabel[v] is the suspension label of original vertex v.
    std::vector<Vertex> relabel;
    Vertex top = 0;
    Vertex bottom = 0;
};

/// Join with two apexes: `top` = 0 below every vertex, `bottom` above them.
Suspension suspension(const SimplicialComplex& complex);

/// Stellar subdivision of one facet with a fresh vertex labelled vertex_count().
SimplicialComplex subdivide_facet(const SimplicialComplex& complex, std::size_t facet);

/// Reduced Euler characteristic sum_n (-1)^n |faces(n)| - 1.
long reduced_euler_characteristic(const SimplicialComplex& complex);

} // namespace simflow
