#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "simflow/error.hpp"
#include "simflow/fixtures.hpp"
#include "simflow/homology.hpp"
#include "simflow/matroid.hpp"

using namespace simflow;

namespace {

ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::ParseError;
}

std::uint64_t full_mask(const SimplicialComplex& c) { return FacetSubset::all(c.facet_count()).mask(); }

} // namespace

TEST_CASE("rank oracle agrees with homology rank")
{
    for (const auto& [name, c] : fixtures::corpus()) {
        if (c.facet_count() > 12) continue;
        CAPTURE(name);
        RankOracle lazy(c);
        RankOracle table(c);
        table.prefill();
        CHECK(table.prefilled());
        CHECK_FALSE(lazy.prefilled());
        for (std::uint64_t mask = 0; mask <= full_mask(c); ++mask) {
            const FacetSubset x(mask);
            const unsigned r = lazy.rank(x);
            CHECK(r == matroid_rank(c, x));
            CHECK(r == table.rank(x));
        }
    }
}

TEST_CASE("rank axioms")
{
    const auto c = fixtures::complete(5, 3);
    RankOracle m(c);
    m.prefill();
    CHECK(m.full_rank() == 6);
    for (std::uint64_t x = 0; x <= full_mask(c); ++x) {
        const FacetSubset a(x);
        CHECK(m.rank(a) <= a.size());
        for (std::size_t e = 0; e < c.facet_count(); ++e) {
            const unsigned grow = m.rank(a.with(e)) - m.rank(a);
            CHECK(grow <= 1);
        }
    }
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 2000; ++trial) {
        const FacetSubset a(rng() & full_mask(c));
        const FacetSubset b(rng() & full_mask(c));
        const FacetSubset u(a.mask() | b.mask());
        const FacetSubset i(a.mask() & b.mask());
        CHECK(m.rank(u) + m.rank(i) <= m.rank(a) + m.rank(b));
        CHECK(m.rank(i) <= m.rank(a));
    }
}

TEST_CASE("dual rank")
{
    for (const auto& [name, c] : fixtures::corpus()) {
        if (c.facet_count() > 12) continue;
        CAPTURE(name);
        RankOracle primal(c);
        RankOracle dual = primal.dual();
        CHECK(dual.is_dual());
        CHECK(dual.dual().is_dual() == false);
        const std::size_t n = c.facet_count();
        CHECK(primal.full_rank() + dual.full_rank() == n);
        for (std::uint64_t mask = 0; mask <= full_mask(c); ++mask) {
            const FacetSubset x(mask);
            CHECK(dual.rank(x) == x.size() + primal.rank(x.complement(n)) - primal.full_rank());
            CHECK(dual.rank(x) == matroid_corank(c, x));
        }
    }
}

TEST_CASE("bridges")
{
    CHECK(bridges(fixtures::cycle(4)).empty());
    CHECK(bridges(fixtures::petersen()).empty());
    CHECK(bridges(fixtures::complete(5, 3)).empty());
    const auto pendant = build_complex({{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    CHECK(bridges(pendant) == std::vector<std::size_t>{testing::facet_index(pendant, {2, 3})});
    CHECK(is_bridge(pendant, testing::facet_index(pendant, {2, 3})));
    CHECK_FALSE(is_bridge(pendant, 0));
    CHECK(bridges(build_complex({{0, 1, 2}})) == std::vector<std::size_t>{0});
    // Over Q every facet of the projective plane is a bridge.
    CHECK(bridges(fixtures::rp2()).size() == 10);
    CHECK(kind_of([&] { is_bridge(pendant, 4); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("facet connectivity")
{
    SUBCASE("cycles need two cuts")
    {
        const auto k = facet_connectivity(fixtures::cycle(5), 3);
        REQUIRE(k.value);
        CHECK(*k.value == 2);
        REQUIRE(k.witness);
        CHECK(k.witness->mask() == 0b11);
    }
    SUBCASE("K4 and Petersen are 3-connected")
    {
        CHECK(facet_connectivity(fixtures::complete(4, 2), 4).value == 3u);
        CHECK(facet_connectivity(fixtures::petersen(), 4).value == 3u);
    }
    SUBCASE("bridge")
    {
        const auto pendant = build_complex({{0, 1}, {1, 2}, {0, 2}, {2, 3}});
        const auto k = facet_connectivity(pendant, 2);
        CHECK(k.value == 1u);
    }
    SUBCASE("search bound")
    {
        const auto k = facet_connectivity(fixtures::cycle(4), 1);
        CHECK_FALSE(k.value);
        CHECK_FALSE(k.witness);
        CHECK(k.at_least == 2);
        CHECK(facet_connectivity(fixtures::simplex_boundary(2), 3).value == 2u);
    }
    CHECK(kind_of([] { facet_connectivity(fixtures::cycle(3), 0); }) == ErrorKind::BadParams);
}

TEST_CASE("forest classification")
{
    const auto k4 = fixtures::complete(4, 2);
    // edges 01 02 03 12 13 23 are facets 0..5
    const auto star = classify_forest(k4, FacetSubset::of({0, 1, 2}));
    CHECK(star.forest);
    CHECK(star.maximal);
    CHECK(star.tree);
    CHECK(star.spanning_tree);
    const auto triangle = classify_forest(k4, FacetSubset::of({0, 1, 3}));
    CHECK_FALSE(triangle.forest);
    const auto path = classify_forest(k4, FacetSubset::of({0, 3}));
    CHECK(path.forest);
    CHECK_FALSE(path.maximal);
    CHECK_FALSE(path.spanning_tree);
    const auto empty = classify_forest(k4, FacetSubset{});
    CHECK(empty.forest);
    CHECK_FALSE(empty.maximal);

    // Maximal forests are exactly the bases: count = T(1, 1) = 16.
    std::size_t bases = 0;
    for (std::uint64_t m = 0; m < 64; ++m) bases += classify_forest(k4, FacetSubset(m)).maximal;
    CHECK(bases == 16);

    // The projective plane is acyclic over Q, so F itself is a spanning tree
    // even though H_1 has torsion.
    const auto rp2 = classify_forest(fixtures::rp2(), FacetSubset::all(10));
    CHECK(rp2.forest);
    CHECK(rp2.maximal);
    CHECK(rp2.spanning_tree);
    CHECK_FALSE(classify_forest(fixtures::rp2(), FacetSubset::all(10).without(0)).maximal);
}

TEST_CASE("circuit vectors")
{
    const auto c3 = fixtures::cycle(3);
    const auto v = circuit_vector(c3, FacetSubset::all(3));
    REQUIRE(v.size() == 3);
    CHECK(v[0] > 0);
    for (const auto& x : v) CHECK(abs(x) == 1);

    const auto sphere = fixtures::simplex_boundary(2);
    const auto w = circuit_vector(sphere, FacetSubset::all(4));
    for (const auto& x : w) CHECK(abs(x) == 1);

    CHECK(kind_of([&] { circuit_vector(c3, FacetSubset::of({0, 1})); }) == ErrorKind::BadParams);
    const auto k4 = fixtures::complete(4, 2);
    CHECK(kind_of([&] { circuit_vector(k4, FacetSubset::all(6)); }) == ErrorKind::BadParams);

    // Circuit vectors are cycles.
    for (const auto& [name, c] : fixtures::corpus()) {
        if (c.facet_count() > 12) continue;
        CAPTURE(name);
        const auto d = boundary_matrix(c, c.dimension()).to_int_matrix();
        for (const auto& circuit : circuits(c)) {
            const auto z = circuit_vector(c, circuit);
            for (std::size_t r = 0; r < d.rows(); ++r) {
                BigInt s = 0;
                for (std::size_t f = 0; f < d.cols(); ++f) s += d(r, f) * z[f];
                CHECK(s == 0);
            }
            for (std::size_t f = 0; f < d.cols(); ++f) CHECK((z[f] != 0) == circuit.contains(f));
        }
    }
}

TEST_CASE("circuits")
{
    CHECK(circuits(fixtures::cycle(4)) == std::vector<FacetSubset>{FacetSubset::all(4)});
    // K4 has 4 triangles and 3 four-cycles.
    CHECK(circuits(fixtures::complete(4, 2)).size() == 7);
    CHECK(circuits(fixtures::rp2()).empty());

    const auto k53 = fixtures::complete(5, 3);
    RankOracle m(k53);
    for (const auto& circuit : circuits(k53)) {
        CHECK(m.rank(circuit) + 1 == circuit.size());
        for (const std::size_t e : circuit.indices()) CHECK(m.rank(circuit.without(e)) == circuit.size() - 1);
    }
}

TEST_CASE("fundamental circuits")
{
    const auto k4 = fixtures::complete(4, 2);
    const auto star = FacetSubset::of({0, 1, 2});
    CHECK(fundamental_circuit(k4, star, 3) == FacetSubset::of({0, 1, 3}));
    CHECK(fundamental_circuit(k4, star, 5) == FacetSubset::of({1, 2, 5}));
    CHECK(kind_of([&] { fundamental_circuit(k4, star, 0); }) == ErrorKind::FacetInBase);
    CHECK(kind_of([&] { fundamental_circuit(k4, FacetSubset::of({0, 1}), 3); }) == ErrorKind::NotABase);
    CHECK(kind_of([&] { fundamental_circuit(k4, star, 9); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("covering numbers")
{
    CHECK(coarboricity(fixtures::cycle(3)) == 3);
    CHECK(coarboricity(fixtures::cycle(5)) == 5);
    CHECK(coarboricity(fixtures::complete(4, 2)) == 2);
    CHECK(coarboricity(fixtures::complete(5, 3)) == 3);
    CHECK(coarboricity(fixtures::simplex_boundary(2)) == 4);
    CHECK(coarboricity(fixtures::petersen()) == 3);

    // K4 has arboricity 2.
    CHECK(edmonds_covering_number(RankOracle(fixtures::complete(4, 2))) == 2);

    const auto pendant = build_complex({{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    CHECK(kind_of([&] { coarboricity(pendant); }) == ErrorKind::Infeasible);
}

TEST_CASE("coforest covers")
{
    for (const auto& [name, c] : fixtures::corpus()) {
        if (c.facet_count() > 16 || !bridges(c).empty()) continue;
        CAPTURE(name);
        const std::size_t k = coarboricity(c);
        const auto cover = coforest_cover(c, k);
        CHECK(cover.minimal);
        CHECK(cover.parts.size() == k);
        RankOracle primal(c);
        std::uint64_t seen = 0;
        for (const auto part : cover.parts) {
            CHECK(is_coindependent(primal, part));
            CHECK((seen & part.mask()) == 0);
            seen |= part.mask();
        }
        CHECK(seen == full_mask(c));
        if (k > 1) CHECK(kind_of([&] { coforest_cover(c, k - 1); }) == ErrorKind::Infeasible);

        const auto greedy = greedy_coforest_cover(c);
        CHECK_FALSE(greedy.minimal);
        CHECK(greedy.parts.size() >= k);
        std::uint64_t covered = 0;
        for (const auto part : greedy.parts) {
            CHECK(is_coindependent(primal, part));
            covered |= part.mask();
        }
        CHECK(covered == full_mask(c));
    }
}
