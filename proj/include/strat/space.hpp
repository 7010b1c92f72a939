#pragma once

#include <memory>
#include <string>
#include <vector>

#include "strat/simplicial.hpp"

namespace strat {

struct SpaceDesc;
using DescPtr = std::shared_ptr<const SpaceDesc>;

// Recursive structural description of a compact stratified space.
//
// Cone means the compact cone C_[0,1]. Suspension is kept as its own variant
// with the join-with-S^0 semantics: two new minimal point strata, and the
// inner strata (equator included) absorbed into the cylinder part. A Join
// whose operand is a one- or two-point trivially stratified atom normalizes
// to Cone/Suspension, so Join(S^0, X) and Suspension(X) are the same value.
struct SpaceDesc {
    enum class Kind { Empty, Atom, Cone, Suspension, Join, Product };

    Kind kind = Kind::Empty;
    std::string atom_name;                        // Atom
    std::shared_ptr<const FilteredComplex> atom;  // Atom
    DescPtr left;                                 // Cone/Suspension inner; Join/Product left
    DescPtr right;                                // Join/Product right

    static DescPtr empty();
    static DescPtr make_atom(std::string name, FilteredComplex complex);
    static DescPtr cone(DescPtr inner);
    static DescPtr suspension(DescPtr inner);
    static DescPtr join(DescPtr a, DescPtr b);
    static DescPtr product(DescPtr a, DescPtr b);
};

bool desc_equal(const DescPtr& a, const DescPtr& b);
std::string desc_to_string(const DescPtr& d);

// dimension of the regular part; -1 for the empty description
int dim(const DescPtr& d);

Poset strat_poset_of(const DescPtr& d);

// dimension of each stratum, aligned with strat_poset_of(d) element order
std::vector<int> stratum_dims(const DescPtr& d);

struct StratumRef {
    DescPtr desc;
    std::string label;
};

// labels of the structure strata introduced by each constructor
std::string cone_star_label(const DescPtr& inner);
void susp_pole_labels(const DescPtr& inner, std::string& p0, std::string& p1);
void join_star_labels(const DescPtr& join_desc, std::string& star_left, std::string& star_right);

// link of a stratum; the regular stratum has the empty link (error)
DescPtr link_of(const StratumRef& s);
DescPtr link_of(const DescPtr& d, const std::string& label);

// closure of a stratum, as a description of a stratified space in which the
// named stratum has become the regular part
DescPtr closure_of(const DescPtr& d, const std::string& label);

struct PseudomanifoldReport {
    bool ok = true;
    std::string detail;  // names the offending stratum when !ok
};

PseudomanifoldReport is_pseudomanifold(const DescPtr& d);

// simplicial realization with the stratification labels of strat_poset_of(d)
FilteredComplex realize(const DescPtr& d);

}  // namespace strat
