#include "simflow/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cache.hpp"
#include "simflow/error.hpp"

namespace simflow {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices))
{
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw Error(ErrorKind::InvalidSimplex, "simplex has a repeated vertex");
}

Simplex Simplex::without(std::size_t i) const
{
    Simplex out;
    out.vertices_.reserve(vertices_.size() - 1);
    for (std::size_t k = 0; k < vertices_.size(); ++k)
        if (k != i) out.vertices_.push_back(vertices_[k]);
    return out;
}

bool Simplex::contains(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

FacetSubset FacetSubset::all(std::size_t facet_count)
{
    if (facet_count >= 64) return FacetSubset(~std::uint64_t{0});
    return FacetSubset((std::uint64_t{1} << facet_count) - 1);
}

FacetSubset FacetSubset::of(std::initializer_list<std::size_t> indices)
{
    FacetSubset out;
    for (auto i : indices) out = out.with(i);
    return out;
}

std::vector<std::size_t> FacetSubset::indices() const
{
    std::vector<std::size_t> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return out;
}

IntMatrix BoundaryMatrix::to_int_matrix() const
{
    IntMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) out(r, c) = at(r, c);
    return out;
}

std::optional<std::size_t> SimplicialComplex::face_index(const Simplex& s) const
{
    const int n = s.dimension();
    if (n < 0 || n > dimension_) return std::nullopt;
    const auto& list = faces_[static_cast<std::size_t>(n)];
    auto it = std::lower_bound(list.begin(), list.end(), s);
    if (it == list.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - list.begin());
}

std::vector<std::vector<std::uint64_t>> SimplicialComplex::facet_lists(bool original) const
{
    std::vector<std::vector<std::uint64_t>> out;
    out.reserve(facet_count());
    for (const auto& f : facets()) {
        std::vector<std::uint64_t> row;
        for (Vertex v : f.vertices()) row.push_back(original ? original_labels_[v] : v);
        out.push_back(std::move(row));
    }
    return out;
}

SimplicialComplex build_complex(const std::vector<std::vector<std::uint64_t>>& facet_lists)
{
    if (facet_lists.empty()) throw Error(ErrorKind::EmptyInput, "complex has no facets");
    const std::size_t width = facet_lists.front().size();
    for (const auto& f : facet_lists) {
        if (f.empty()) throw Error(ErrorKind::InvalidSimplex, "empty facet");
        if (f.size() != width)
            throw Error(ErrorKind::NotPure, "facets of sizes " + std::to_string(width) + " and " +
                                                std::to_string(f.size()));
    }

    std::vector<std::uint64_t> labels;
    for (const auto& f : facet_lists) labels.insert(labels.end(), f.begin(), f.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto dense = [&](std::uint64_t v) {
        return static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin());
    };

    std::set<Simplex> facets;
    for (const auto& f : facet_lists) {
        std::vector<Vertex> vs;
        vs.reserve(f.size());
        for (auto v : f) vs.push_back(dense(v));
        facets.insert(Simplex(std::move(vs)));
    }

    SimplicialComplex out;
    out.dimension_ = static_cast<int>(width) - 1;
    out.original_labels_ = std::move(labels);
    out.faces_.resize(width);
    out.faces_.back().assign(facets.begin(), facets.end());

    // Downward closure one dimension at a time.
    for (int n = out.dimension_; n > 0; --n) {
        std::set<Simplex> lower;
        for (const auto& s : out.faces_[static_cast<std::size_t>(n)])
            for (std::size_t i = 0; i < s.size(); ++i) lower.insert(s.without(i));
        out.faces_[static_cast<std::size_t>(n - 1)].assign(lower.begin(), lower.end());
    }

    out.cache_ = std::make_shared<detail::ComplexCache>();
    if (out.dimension_ == 0) {
        out.cache_->columns.assign(out.facet_count(), {{0u, std::int8_t{1}}});
    } else {
        for (const auto& f : out.facets()) {
            std::vector<std::pair<std::uint32_t, std::int8_t>> col;
            for (std::size_t i = 0; i < f.size(); ++i) {
                const auto row = *out.face_index(f.without(i));
                col.emplace_back(static_cast<std::uint32_t>(row), static_cast<std::int8_t>(i % 2 == 0 ? 1 : -1));
            }
            out.cache_->columns.push_back(std::move(col));
        }
    }
    return out;
}

SimplicialComplex complete_complex(std::size_t n, std::size_t k)
{
    if (k < 1 || k > n)
        throw Error(ErrorKind::BadParams, "complete complex needs 1 <= k <= n (got n=" + std::to_string(n) +
                                              ", k=" + std::to_string(k) + ")");
    std::vector<std::vector<std::uint64_t>> facets;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<std::uint64_t> f;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) f.push_back(i);
        facets.push_back(std::move(f));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return build_complex(facets);
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int n)
{
    if (n < 0 || n > complex.dimension())
        throw Error(ErrorKind::BadParams, "boundary dimension " + std::to_string(n) + " outside 0.." +
                                              std::to_string(complex.dimension()));
    const auto& cols = complex.faces(n);
    BoundaryMatrix m;
    m.cols = cols.size();
    if (n == 0) {
        m.rows = 1;
        m.entries.assign(m.cols, 1);
        return m;
    }
    const auto& rows = complex.faces(n - 1);
    m.rows = rows.size();
    m.entries.assign(m.rows * m.cols, 0);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (std::size_t i = 0; i < cols[c].size(); ++i) {
            const auto r = *complex.face_index(cols[c].without(i));
            m.entries[r * m.cols + c] = static_cast<std::int8_t>(i % 2 == 0 ? 1 : -1);
        }
    }
    return m;
}

BoundaryMatrix restrict_columns(const SimplicialComplex& complex, FacetSubset subset)
{
    const BoundaryMatrix full = boundary_matrix(complex, complex.dimension());
    const auto picked = subset.indices();
    for (auto i : picked)
        if (i >= complex.facet_count())
            throw Error(ErrorKind::IndexOutOfRange, "facet subset refers to facet " + std::to_string(i));
    BoundaryMatrix m;
    m.rows = full.rows;
    m.cols = picked.size();
    m.entries.assign(m.rows * m.cols, 0);
    for (std::size_t c = 0; c < picked.size(); ++c)
        for (std::size_t r = 0; r < m.rows; ++r) m.entries[r * m.cols + c] = full.entries[r * full.cols + picked[c]];
    return m;
}

Suspension suspension(const SimplicialComplex& complex)
{
    Suspension out;
    const auto n = static_cast<Vertex>(complex.vertex_count());
    out.top = 0;
    out.bottom = n + 1;
    out.relabel.resize(n);
    for (Vertex v = 0; v < n; ++v) out.relabel[v] = v + 1;

    std::vector<std::vector<std::uint64_t>> facets;
    for (const auto& f : complex.facets()) {
        std::vector<std::uint64_t> upper{out.top};
        std::vector<std::uint64_t> lower;
        for (Vertex v : f.vertices()) {
            upper.push_back(out.relabel[v]);
            lower.push_back(out.relabel[v]);
        }
        lower.push_back(out.bottom);
        facets.push_back(std::move(upper));
        facets.push_back(std::move(lower));
    }
    out.complex = build_complex(facets);
    return out;
}

SimplicialComplex subdivide_facet(const SimplicialComplex& complex, std::size_t facet)
{
    if (facet >= complex.facet_count())
        throw Error(ErrorKind::IndexOutOfRange, "facet " + std::to_string(facet) + " of " +
                                                    std::to_string(complex.facet_count()));
    const auto fresh = static_cast<std::uint64_t>(complex.vertex_count());
    std::vector<std::vector<std::uint64_t>> facets;
    for (std::size_t i = 0; i < complex.facet_count(); ++i) {
        const auto& f = complex.facets()[i];
        if (i != facet) {
            facets.emplace_back(f.vertices().begin(), f.vertices().end());
            continue;
        }
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            std::vector<std::uint64_t> g;
            for (std::size_t k = 0; k < f.size(); ++k)
                if (k != drop) g.push_back(f[k]);
            g.push_back(fresh);
            facets.push_back(std::move(g));
        }
    }
    return build_complex(facets);
}

long reduced_euler_characteristic(const SimplicialComplex& complex)
{
    long chi = -1;
    for (int n = 0; n <= complex.dimension(); ++n) {
        const long count = static_cast<long>(complex.faces(n).size());
        chi += (n % 2 == 0) ? count : -count;
    }
    return chi;
}

} // namespace simflow
