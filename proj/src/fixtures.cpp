#include "simflow/fixtures.hpp"

#include <stdexcept>

#include "simflow/error.hpp"
#include "simflow/homology.hpp"

namespace simflow::fixtures {
namespace {

// Minimal triangulation of RP^2 (antipodal quotient of the icosahedron).
const std::vector<std::vector<std::uint64_t>> kRp2Facets = {
    {0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
    {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5},
};

} // namespace

SimplicialComplex cycle(std::size_t n)
{
    if (n < 3) throw Error(ErrorKind::BadParams, "cycle needs n >= 3");
    std::vector<std::vector<std::uint64_t>> edges;
    for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return build_complex(edges);
}

SimplicialComplex complete(std::size_t n, std::size_t k) { return complete_complex(n, k); }

SimplicialComplex simplex_boundary(std::size_t d) { return complete_complex(d + 2, d + 1); }

SimplicialComplex rp2() { return build_complex(kRp2Facets); }

SimplicialComplex rp2_disjoint_pair()
{
    auto facets = kRp2Facets;
    for (const auto& f : kRp2Facets) facets.push_back({f[0] + 6, f[1] + 6, f[2] + 6});
    return build_complex(facets);
}

SimplicialComplex petersen()
{
    std::vector<std::vector<std::uint64_t>> edges;
    for (std::uint64_t i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, i + 5});
        edges.push_back({i + 5, (i + 2) % 5 + 5});
    }
    return build_complex(edges);
}

bool validate(const std::string& name, const SimplicialComplex& complex)
{
    const auto all = FacetSubset::all(complex.facet_count());
    if (name == "rp2" || name == "rp2_disjoint_pair") {
        const std::size_t copies = name == "rp2" ? 1 : 2;
        const HomologySummary h = homology_summary(complex, all);
        const std::vector<BigInt> torsion(copies, BigInt(2));
        return complex.dimension() == 2 && complex.vertex_count() == 6 * copies &&
               complex.faces(1).size() == 15 * copies && complex.facet_count() == 10 * copies &&
               h.betti[1] == 0 && h.betti[2] == 0 && h.betti[0] == copies - 1 && h.torsion[1] == torsion &&
               h.torsion[0].empty();
    }
    if (name == "petersen") {
        if (complex.dimension() != 1 || complex.vertex_count() != 10 || complex.facet_count() != 15) return false;
        std::vector<int> degree(10, 0);
        for (const auto& e : complex.facets())
            for (Vertex v : e.vertices()) ++degree[v];
        for (int d : degree)
            if (d != 3) return false;
        return true;
    }
    return complex.facet_count() > 0;
}

SimplicialComplex by_name(const std::string& name, const std::map<std::string, std::size_t>& params)
{
    auto need = [&](const char* key) {
        auto it = params.find(key);
        if (it == params.end())
            throw Error(ErrorKind::BadParams, "fixture '" + name + "' needs --" + std::string(key));
        return it->second;
    };
    if (name == "cycle") return cycle(need("n"));
    if (name == "complete") return complete(need("n"), need("k"));
    if (name == "simplex_boundary") return simplex_boundary(need("d"));
    auto checked = [&](SimplicialComplex c) {
        if (!validate(name, c)) throw std::logic_error("fixture '" + name + "' failed validation");
        return c;
    };
    if (name == "rp2") return checked(rp2());
    if (name == "rp2_disjoint_pair") return checked(rp2_disjoint_pair());
    if (name == "petersen") return checked(petersen());
    throw Error(ErrorKind::BadParams, "unknown fixture '" + name + "'");
}

std::vector<std::string> names()
{
    return {"cycle", "complete", "simplex_boundary", "rp2", "rp2_disjoint_pair", "petersen"};
}

std::vector<NamedFixture> corpus()
{
    return {
        {"cycle(3)", cycle(3)},
        {"cycle(4)", cycle(4)},
        {"cycle(5)", cycle(5)},
        {"complete(4,2)", complete(4, 2)},
        {"complete(5,3)", complete(5, 3)},
        {"simplex_boundary(2)", simplex_boundary(2)},
        {"simplex_boundary(3)", simplex_boundary(3)},
        {"rp2", rp2()},
        {"rp2_disjoint_pair", rp2_disjoint_pair()},
        {"petersen", petersen()},
    };
}

} // namespace simflow::fixtures
