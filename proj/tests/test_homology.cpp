#include <doctest.h>

#include "simflow/error.hpp"
#include "simflow/fixtures.hpp"
#include "simflow/homology.hpp"
#include "simflow/linalg.hpp"
#include "simflow/matroid.hpp"

using namespace simflow;

namespace {

using Betti = std::vector<std::size_t>;

HomologySummary full(const SimplicialComplex& c) { return homology_summary(c, FacetSubset::all(c.facet_count())); }

} // namespace

TEST_CASE("reduced homology examples")
{
    SUBCASE("3-cycle")
    {
        const auto h = full(fixtures::cycle(3));
        CHECK(h.betti == Betti{0, 1});
        CHECK(h.torsion[0].empty());
    }
    SUBCASE("tetrahedron boundary")
    {
        const auto h = full(fixtures::simplex_boundary(2));
        CHECK(h.betti == Betti{0, 0, 1});
    }
    SUBCASE("projective plane")
    {
        const auto h = full(fixtures::rp2());
        CHECK(h.betti == Betti{0, 0, 0});
        CHECK(h.torsion[1] == std::vector<BigInt>{2});
        CHECK(h.torsion[0].empty());
    }
    SUBCASE("two projective planes")
    {
        const auto h = full(fixtures::rp2_disjoint_pair());
        CHECK(h.betti == Betti{1, 0, 0});
        CHECK(h.torsion[1] == std::vector<BigInt>{2, 2});
    }
    SUBCASE("empty subset keeps the skeleton")
    {
        const auto c = fixtures::cycle(4);
        const auto h = homology_summary(c, FacetSubset{});
        CHECK(h.betti == Betti{3, 0});
        CHECK(codim_betti(c, FacetSubset{}) == 3);
        CHECK(top_betti(c, FacetSubset{}) == 0);
    }
    SUBCASE("Petersen")
    {
        const auto h = full(fixtures::petersen());
        CHECK(h.betti == Betti{0, 6});
    }
}

TEST_CASE("torsion weights")
{
    const auto rp2 = fixtures::rp2();
    const auto all = FacetSubset::all(rp2.facet_count());
    CHECK(torsion_weight(rp2, all, 2) == 2);
    CHECK(torsion_weight(rp2, all, 3) == 1);
    CHECK(torsion_weight(rp2, all, 6) == 2);
    const auto pair = fixtures::rp2_disjoint_pair();
    CHECK(torsion_weight(pair, FacetSubset::all(pair.facet_count()), 4) == 4);
    CHECK(torsion_weight(fixtures::cycle(3), FacetSubset::all(3), 2) == 1);
}

TEST_CASE("Euler characteristic identity on every subset")
{
    for (const auto& [name, c] : fixtures::corpus()) {
        if (c.facet_count() > 12) continue;
        CAPTURE(name);
        const long base = reduced_euler_characteristic(c) - (c.dimension() % 2 == 0 ? 1L : -1L) *
                                                                  static_cast<long>(c.facet_count());
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c.facet_count()); ++mask) {
            const FacetSubset x(mask);
            const auto h = homology_summary(c, x);
            long alt = 0;
            for (std::size_t n = 0; n < h.betti.size(); ++n)
                alt += (n % 2 == 0 ? 1 : -1) * static_cast<long>(h.betti[n]);
            // chi of skeleton + X equals alternating Betti sum.
            const long chi = base + (c.dimension() % 2 == 0 ? 1L : -1L) * static_cast<long>(x.size());
            CHECK(alt == chi);
        }
    }
}

TEST_CASE("rank from top Betti agrees with direct rank")
{
    for (const auto& [name, c] : fixtures::corpus()) {
        if (c.facet_count() > 12) continue;
        CAPTURE(name);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c.facet_count()); ++mask) {
            const FacetSubset x(mask);
            CHECK(x.size() - top_betti(c, x) == rational_rank(restrict_columns(c, x).to_int_matrix()));
        }
    }
}

TEST_CASE("universal coefficients: kernel count mod q")
{
    for (const auto& [name, c] : fixtures::corpus()) {
        CAPTURE(name);
        const auto all = FacetSubset::all(c.facet_count());
        const auto d = boundary_matrix(c, c.dimension()).to_int_matrix();
        for (std::uint64_t q = 2; q <= 6; ++q) {
            const BigInt expected = big_pow(BigInt(from_u64(q)), top_betti(c, all)) * torsion_weight(c, all, q);
            CHECK(kernel_count_mod_q(d, q) == expected);
        }
    }
}

TEST_CASE("subset table agrees with per-subset homology")
{
    for (const auto& [name, c] : fixtures::corpus()) {
        if (c.facet_count() > 12) continue;
        CAPTURE(name);
        const auto& table = subset_table(c);
        CHECK(table.facet_count() == c.facet_count());
        CHECK(table.ridge_count() == c.ridge_count());
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c.facet_count()); ++mask) {
            const FacetSubset x(mask);
            const auto h = homology_summary(c, x);
            CHECK(table.top_betti(mask) == h.betti.back());
            CHECK(table.codim_betti(mask) == h.betti[h.betti.size() - 2]);
            const auto t = table.torsion(mask);
            CHECK(std::vector<BigInt>(t.begin(), t.end()) == h.torsion.back());
            CHECK(table.torsion_weight(mask, 4) == torsion_weight(c, x, 4));
        }
    }
}

TEST_CASE("subset table is the same with several threads")
{
    const auto c = fixtures::rp2();
    const auto serial = SubsetTable::build(c, 1);
    const auto threaded = SubsetTable::build(c, 4);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c.facet_count()); ++mask) {
        CHECK(serial->rank(mask) == threaded->rank(mask));
        CHECK(serial->torsion_weight(mask, 2) == threaded->torsion_weight(mask, 2));
    }
}

TEST_CASE("subset cap")
{
    ComputeOptions options;
    options.subset_cap = 20;
    try {
        subset_table(complete_complex(7, 3), options);
        FAIL("expected CapExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CapExceeded);
    }
    options.subset_cap = 10;
    options.force = false;
    CHECK_NOTHROW(subset_table(fixtures::cycle(5), options));
}
