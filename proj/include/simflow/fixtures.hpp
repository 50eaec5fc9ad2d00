#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "simflow/complex.hpp"

namespace simflow::fixtures {

/// n-cycle graph C_n (n >= 3).
SimplicialComplex cycle(std::size_t n);

/// K_n^k, every k-subset of n vertices.
SimplicialComplex complete(std::size_t n, std::size_t k);

/// Boundary of the (d+1)-simplex, a d-sphere: K_{d+2}^{d+1}.
SimplicialComplex simplex_boundary(std::size_t d);

/// Six-vertex, ten-triangle real projective plane.
SimplicialComplex rp2();

/// Two vertex-disjoint copies of rp2().
SimplicialComplex rp2_disjoint_pair();

/// Petersen graph: outer 5-cycle, spokes, inner pentagram.
SimplicialComplex petersen();

struct NamedFixture {
    std::string name;
    SimplicialComplex complex;
};

/// Builds a fixture by name with integer parameters ("n", "k", "d").
/// Throws BadParams for unknown names or missing parameters.
SimplicialComplex by_name(const std::string& name, const std::map<std::string, std::size_t>& params);

std::vector<std::string> names();

/// Structural checks for the hardcoded fixtures: rp2 has 6 vertices, 15
/// edges, 10 triangles, beta_1 = beta_2 = 0 and H_1 torsion [2] (the pair is
/// two such components); petersen has 10 vertices, 15 edges and is 3-regular.
/// Other names only need a nonempty complex. by_name runs this on every load.
bool validate(const std::string& name, const SimplicialComplex& complex);

/// cycle(3..5), complete(4,2), complete(5,3), simplex_boundary(2..3), rp2,
/// rp2_disjoint_pair, petersen.
std::vector<NamedFixture> corpus();

} // namespace simflow::fixtures
