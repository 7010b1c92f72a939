#pragma once

#include "strat/space.hpp"

namespace strat::corpus {

// Shipped triangulations. Every complex is validated on construction; the
// heavier certificates (homology ranks, manifold links) live in the tests
// and in the SSD loader.

SimplicialComplex point();
SimplicialComplex two_points();            // S^0
SimplicialComplex boundary_simplex(int n);  // boundary of the n-simplex, an (n-1)-sphere
SimplicialComplex torus();                 // 7-vertex T^2
SimplicialComplex projective_plane();      // 6-vertex RP^2
SimplicialComplex cp2();                   // 9-vertex CP^2, oriented so sigma = +1
SimplicialComplex point_and_circle();      // {pt} disjoint union S^1

// atom descriptions (trivially stratified)
DescPtr pt_desc();
DescPtr s0_desc();
DescPtr sphere_desc(int dim);  // S^dim as the boundary of a simplex
DescPtr t2_desc();
DescPtr rp2_desc();
DescPtr cp2_desc();

// resolves the named atoms used by the SSD format ("pt","S0","S1",...,"CP2")
DescPtr named_atom(const std::string& name);
std::vector<std::string> named_atoms();

}  // namespace strat::corpus
