#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "strat/poset.hpp"
#include "strat/sparse.hpp"

namespace strat {

// A simplex is a strictly increasing list of vertex ids. The global vertex
// order (the ids themselves) is the total order used by product
// triangulations and the cup product.
using Simplex = std::vector<int>;

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : s) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // closes the facet list under taking faces
    static SimplicialComplex from_facets(int num_vertices, const std::vector<Simplex>& facets);
    // requires the set to already be closed under faces
    static SimplicialComplex from_simplices(int num_vertices, std::vector<Simplex> simplices);

    int num_vertices() const { return num_vertices_; }
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    const std::vector<Simplex>& simplices(int d) const;
    const std::vector<std::vector<Simplex>>& all() const { return by_dim_; }
    bool contains(const Simplex& s) const;
    int index_of(const Simplex& s) const;  // index within its dimension, -1 if absent
    std::size_t size() const;              // total number of simplices
    std::vector<int> f_vector() const;
    long long euler_characteristic() const;

    CSCMatrix boundary_matrix(int d) const;

private:
    int num_vertices_ = 0;
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::unordered_map<Simplex, int, SimplexHash>> index_;
    void build_index();
};

std::vector<int> homology_ranks(const SimplicialComplex& k);
std::vector<int> reduced_homology_ranks(const SimplicialComplex& k);

// link of a vertex, with vertex ids kept from the ambient complex
SimplicialComplex link_of_vertex(const SimplicialComplex& k, int v,
                                 std::vector<int>* vertex_map = nullptr);

// Simplicial complex together with a stratification-compatible filtration.
// stratum(d, i) is the poset element labelling the i-th d-simplex.
class FilteredComplex {
public:
    FilteredComplex() = default;
    FilteredComplex(SimplicialComplex k, Poset poset,
                    std::vector<std::vector<int>> stratum);

    // everything in one stratum labelled `label` (a one-element poset)
    static FilteredComplex trivial(SimplicialComplex k, const std::string& label = "reg");

    const SimplicialComplex& complex() const { return k_; }
    const Poset& poset() const { return poset_; }
    int stratum(int d, int i) const { return stratum_[d][i]; }
    int stratum_of(const Simplex& s) const;
    // dimension of the open part of the stratum: max dim of its simplices
    int stratum_dim(int elt) const;
    bool stratum_empty(int elt) const { return stratum_dim(elt) < 0; }
    std::vector<int> singular_elements() const;  // non-maximal poset elements
    bool is_trivially_stratified() const;

    // subcomplex / frontier-compatibility of the labelling; throws on failure
    void validate() const;

    // closed set: union of closures of all strata of dimension <= j
    std::vector<char> closed_skeleton_mask(int j) const;  // per (d,i) flattened
    int flat_index(int d, int i) const { return offsets_[d] + i; }
    std::size_t flat_size() const { return flat_count_; }

private:
    SimplicialComplex k_;
    Poset poset_;
    std::vector<std::vector<int>> stratum_;
    std::vector<int> offsets_;
    std::size_t flat_count_ = 0;
    mutable std::vector<int> stratum_dim_cache_;
    void finish_init();
};

FilteredComplex barycentric(const FilteredComplex& k);

// link of the complex at a vertex, filtered by the labels of the cofaces
FilteredComplex link_at_vertex(const FilteredComplex& k, int v);

// link at an arbitrary simplex; for a top-dimensional simplex of a stratum
// this is the transverse link of the stratum
FilteredComplex link_at_simplex(const FilteredComplex& k, const Simplex& s);

// Transverse link along a stratum: one barycentric subdivision guarantees
// the stratum has top-dimensional simplices; the links at all of them must
// have equal homology ranks (NonUniformLink otherwise). Returns the link at
// the canonical one.
FilteredComplex link_at_stratum(const FilteredComplex& k, const std::string& label);

// Top-degree cycle with +-1 coefficients on the regular top simplices.
struct FundamentalCycle {
    int degree = 0;
    std::vector<int> signs;  // per top-dimensional simplex, +-1
};

FundamentalCycle orient(const FilteredComplex& k);

// Barycentric subdivision together with the fundamental cycle transported
// from the input orientation: each full flag chain inherits the sign of its
// top simplex times the parity of the vertex-insertion order.
std::pair<FilteredComplex, FundamentalCycle> barycentric_oriented(const FilteredComplex& k,
                                                                  const FundamentalCycle& c);

}  // namespace strat
