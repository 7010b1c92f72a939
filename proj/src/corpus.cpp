#include "strat/corpus.hpp"

#include "strat/errors.hpp"

namespace strat::corpus {

SimplicialComplex point() { return SimplicialComplex::from_facets(1, {{0}}); }

SimplicialComplex two_points() { return SimplicialComplex::from_facets(2, {{0}, {1}}); }

SimplicialComplex boundary_simplex(int n) {
    if (n < 1) throw ValidationError("boundary_simplex needs n >= 1");
    std::vector<Simplex> facets;
    for (int skip = 0; skip <= n; ++skip) {
        Simplex f;
        for (int v = 0; v <= n; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(n + 1, facets);
}

SimplicialComplex torus() {
    // Moebius-Kantor torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7
    std::vector<Simplex> facets;
    for (int i = 0; i < 7; ++i) {
        Simplex a{i, (i + 1) % 7, (i + 3) % 7};
        Simplex b{i, (i + 2) % 7, (i + 3) % 7};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        facets.push_back(a);
        facets.push_back(b);
    }
    return SimplicialComplex::from_facets(7, facets);
}

SimplicialComplex projective_plane() {
    // 6-vertex RP^2 (icosahedron antipodal quotient)
    std::vector<Simplex> facets = {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5},
                                   {0, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 5},
                                   {2, 4, 5}, {3, 4, 5}};
    return SimplicialComplex::from_facets(6, facets);
}

SimplicialComplex cp2() {
    // 9-vertex complex projective plane (Kuehnel type), invariant under the
    // Z3 x Z3 row/column shifts of the vertex array. With the orientation
    // propagated from +1 on the first facet, the middle cup-product form
    // evaluates to +1.
    std::vector<Simplex> facets = {
        {0, 1, 2, 3, 7}, {0, 1, 2, 3, 8}, {0, 1, 2, 4, 6}, {0, 1, 2, 4, 8},
        {0, 1, 2, 5, 6}, {0, 1, 2, 5, 7}, {0, 1, 3, 4, 6}, {0, 1, 3, 4, 8},
        {0, 1, 3, 6, 7}, {0, 1, 5, 6, 7}, {0, 2, 3, 5, 7}, {0, 2, 3, 5, 8},
        {0, 2, 4, 6, 8}, {0, 2, 5, 6, 8}, {0, 3, 4, 5, 7}, {0, 3, 4, 5, 8},
        {0, 3, 4, 6, 7}, {0, 4, 5, 7, 8}, {0, 4, 6, 7, 8}, {0, 5, 6, 7, 8},
        {1, 2, 3, 7, 8}, {1, 2, 4, 5, 6}, {1, 2, 4, 5, 7}, {1, 2, 4, 7, 8},
        {1, 3, 4, 5, 6}, {1, 3, 4, 5, 8}, {1, 3, 5, 6, 8}, {1, 3, 6, 7, 8},
        {1, 4, 5, 7, 8}, {1, 5, 6, 7, 8}, {2, 3, 4, 5, 6}, {2, 3, 4, 5, 7},
        {2, 3, 4, 6, 7}, {2, 3, 5, 6, 8}, {2, 3, 6, 7, 8}, {2, 4, 6, 7, 8}};
    return SimplicialComplex::from_facets(9, facets);
}

SimplicialComplex point_and_circle() {
    // {pt} disjoint union with the boundary of a triangle
    return SimplicialComplex::from_facets(4, {{0}, {1, 2}, {1, 3}, {2, 3}});
}

namespace {
DescPtr trivial_atom(const std::string& name, SimplicialComplex k) {
    return SpaceDesc::make_atom(name, FilteredComplex::trivial(std::move(k)));
}
}  // namespace

DescPtr pt_desc() { return trivial_atom("pt", point()); }
DescPtr s0_desc() { return trivial_atom("S0", two_points()); }
DescPtr sphere_desc(int dim) {
    return trivial_atom("S" + std::to_string(dim), boundary_simplex(dim + 1));
}
DescPtr t2_desc() { return trivial_atom("T2", torus()); }
DescPtr rp2_desc() { return trivial_atom("RP2", projective_plane()); }
DescPtr cp2_desc() { return trivial_atom("CP2", cp2()); }

DescPtr named_atom(const std::string& name) {
    if (name == "pt") return pt_desc();
    if (name == "S0") return s0_desc();
    if (name == "S1") return sphere_desc(1);
    if (name == "S2") return sphere_desc(2);
    if (name == "S3") return sphere_desc(3);
    if (name == "S4") return sphere_desc(4);
    if (name == "T2") return t2_desc();
    if (name == "RP2") return rp2_desc();
    if (name == "CP2") return cp2_desc();
    if (name == "pt+S1") return trivial_atom("pt+S1", point_and_circle());
    throw ValidationError("unknown named atom '" + name + "'");
}

std::vector<std::string> named_atoms() {
    return {"pt", "S0", "S1", "S2", "S3", "S4", "T2", "RP2", "CP2", "pt+S1"};
}

}  // namespace strat::corpus
