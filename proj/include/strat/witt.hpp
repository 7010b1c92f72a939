#pragma once

#include "strat/intersection.hpp"
#include "strat/space.hpp"

namespace strat {

struct WittStratumEntry {
    std::string stratum;
    int link_dim = -1;
    bool link_even = false;
    int middle_rank = -1;  // rank IH^m_{l/2}(link), only when l is even
    bool ok = false;
};

struct WittReport {
    std::vector<WittStratumEntry> entries;
    bool overall = true;
};

// Witt condition: every even-dimensional link has vanishing middle-degree
// lower-middle-perversity intersection homology over Q.
WittReport witt_check(const DescPtr& d);
WittReport witt_check(const FilteredComplex& k);

// Symmetric matrix of the middle cup-product pairing over Q.
struct IntersectionForm {
    std::vector<std::vector<Rational>> matrix;
    std::string provenance;
};

// Q(a, b) = <a cup b, [M]> on a basis of middle cohomology of a closed
// oriented 4k-manifold complex, via the Alexander-Whitney cup product in the
// global vertex order.
IntersectionForm signature_form(const FilteredComplex& k, const FundamentalCycle& orientation);

// n_+ - n_- of a symmetric rational matrix, by exact congruence
// diagonalization
int signature_of_form(const IntersectionForm& f);

// Signature of a description: manifold atoms in dimension 4k via the cup
// product form, products multiplicatively, 0 off dimensions 4k.
int signature(const DescPtr& d);

}  // namespace strat
