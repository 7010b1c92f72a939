#include "strat/space.hpp"

#include <algorithm>
#include <set>

#include "strat/errors.hpp"

namespace strat {

namespace {

bool atom_is_points(const SpaceDesc& d, int count) {
    // trivially stratified atom consisting of `count` isolated vertices
    if (d.kind != SpaceDesc::Kind::Atom) return false;
    const FilteredComplex& fc = *d.atom;
    return fc.poset().size() == 1 && fc.complex().dim() == 0 &&
           static_cast<int>(fc.complex().simplices(0).size()) == count;
}

}  // namespace

DescPtr SpaceDesc::empty() {
    auto d = std::make_shared<SpaceDesc>();
    d->kind = Kind::Empty;
    return d;
}

DescPtr SpaceDesc::make_atom(std::string name, FilteredComplex complex) {
    if (complex.complex().size() == 0) throw ValidationError("atom '" + name + "' is empty");
    complex.validate();
    auto d = std::make_shared<SpaceDesc>();
    d->kind = Kind::Atom;
    d->atom_name = std::move(name);
    d->atom = std::make_shared<const FilteredComplex>(std::move(complex));
    return d;
}

DescPtr SpaceDesc::cone(DescPtr inner) {
    auto d = std::make_shared<SpaceDesc>();
    d->kind = Kind::Cone;
    d->left = std::move(inner);
    return d;
}

DescPtr SpaceDesc::suspension(DescPtr inner) {
    if (!inner || inner->kind == Kind::Empty)
        throw ValidationError("suspension of the empty description");
    auto d = std::make_shared<SpaceDesc>();
    d->kind = Kind::Suspension;
    d->left = std::move(inner);
    return d;
}

DescPtr SpaceDesc::join(DescPtr a, DescPtr b) {
    if (!a || a->kind == Kind::Empty) return b;
    if (!b || b->kind == Kind::Empty) return a;
    // joins with tiny trivial atoms are cones and suspensions
    if (atom_is_points(*a, 1)) return cone(std::move(b));
    if (atom_is_points(*b, 1)) return cone(std::move(a));
    if (atom_is_points(*a, 2)) return suspension(std::move(b));
    if (atom_is_points(*b, 2)) return suspension(std::move(a));
    auto d = std::make_shared<SpaceDesc>();
    d->kind = Kind::Join;
    d->left = std::move(a);
    d->right = std::move(b);
    return d;
}

DescPtr SpaceDesc::product(DescPtr a, DescPtr b) {
    if (!a || a->kind == Kind::Empty || !b || b->kind == Kind::Empty)
        throw ValidationError("product with the empty description");
    // a trivial point factor drops out
    if (atom_is_points(*a, 1)) return b;
    if (atom_is_points(*b, 1)) return a;
    auto d = std::make_shared<SpaceDesc>();
    d->kind = Kind::Product;
    d->left = std::move(a);
    d->right = std::move(b);
    return d;
}

bool desc_equal(const DescPtr& a, const DescPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case SpaceDesc::Kind::Empty:
            return true;
        case SpaceDesc::Kind::Atom: {
            const FilteredComplex& x = *a->atom;
            const FilteredComplex& y = *b->atom;
            if (x.complex().f_vector() != y.complex().f_vector()) return false;
            if (x.poset().labels() != y.poset().labels()) return false;
            for (int d = 0; d <= x.complex().dim(); ++d) {
                if (x.complex().simplices(d) != y.complex().simplices(d)) return false;
                for (std::size_t i = 0; i < x.complex().simplices(d).size(); ++i)
                    if (x.stratum(d, static_cast<int>(i)) != y.stratum(d, static_cast<int>(i)))
                        return false;
            }
            return true;
        }
        case SpaceDesc::Kind::Cone:
        case SpaceDesc::Kind::Suspension:
            return desc_equal(a->left, b->left);
        case SpaceDesc::Kind::Join:
        case SpaceDesc::Kind::Product:
            return desc_equal(a->left, b->left) && desc_equal(a->right, b->right);
    }
    return false;
}

std::string desc_to_string(const DescPtr& d) {
    if (!d || d->kind == SpaceDesc::Kind::Empty) return "Empty";
    switch (d->kind) {
        case SpaceDesc::Kind::Atom:
            return d->atom_name;
        case SpaceDesc::Kind::Cone:
            return "Cone(" + desc_to_string(d->left) + ")";
        case SpaceDesc::Kind::Suspension:
            return "Susp(" + desc_to_string(d->left) + ")";
        case SpaceDesc::Kind::Join:
            return "Join(" + desc_to_string(d->left) + "," + desc_to_string(d->right) + ")";
        case SpaceDesc::Kind::Product:
            return "Prod(" + desc_to_string(d->left) + "," + desc_to_string(d->right) + ")";
        default:
            return "Empty";
    }
}

int dim(const DescPtr& d) {
    if (!d || d->kind == SpaceDesc::Kind::Empty) return -1;
    switch (d->kind) {
        case SpaceDesc::Kind::Atom: {
            const SimplicialComplex& k = d->atom->complex();
            // facets = simplices that are not proper faces of others
            std::vector<std::vector<char>> is_face(k.dim() + 1);
            for (int dd = 0; dd <= k.dim(); ++dd)
                is_face[dd].assign(k.simplices(dd).size(), 0);
            for (int dd = 1; dd <= k.dim(); ++dd)
                for (const Simplex& s : k.simplices(dd)) {
                    const int n = static_cast<int>(s.size());
                    for (int m = 1; m < (1 << n) - 1; ++m) {
                        Simplex f;
                        for (int b = 0; b < n; ++b)
                            if (m >> b & 1) f.push_back(s[b]);
                        is_face[f.size() - 1][k.index_of(f)] = 1;
                    }
                }
            int lo = k.dim(), hi = -1;
            for (int dd = 0; dd <= k.dim(); ++dd)
                for (std::size_t i = 0; i < k.simplices(dd).size(); ++i)
                    if (!is_face[dd][i]) {
                        lo = std::min(lo, dd);
                        hi = std::max(hi, dd);
                    }
            if (lo != hi)
                throw ValidationError("atom '" + d->atom_name + "' has mixed-dimension facets");
            return hi;
        }
        case SpaceDesc::Kind::Cone:
            return dim(d->left) + 1;
        case SpaceDesc::Kind::Suspension:
            return dim(d->left) + 1;
        case SpaceDesc::Kind::Join:
            return dim(d->left) + dim(d->right) + 1;
        case SpaceDesc::Kind::Product:
            return dim(d->left) + dim(d->right);
        default:
            return -1;
    }
}

namespace {

// poset of a suspension: two new minimal pole elements below everything
Poset susp_poset(const Poset& inner, std::string* pole0, std::string* pole1) {
    std::vector<std::string> labels = inner.labels();
    std::string p0 = make_unique_label("*s0", labels);
    labels.push_back(p0);
    std::string p1 = make_unique_label("*s1", labels);
    labels.pop_back();
    if (pole0) *pole0 = p0;
    if (pole1) *pole1 = p1;
    std::vector<std::string> all{p0, p1};
    for (auto& l : labels) all.push_back(l);
    std::vector<std::pair<std::string, std::string>> rels;
    for (auto& l : labels) {
        rels.push_back({p0, l});
        rels.push_back({p1, l});
        for (auto& m : labels)
            if (inner.leq(l, m)) rels.push_back({l, m});
    }
    return Poset::from_relations(all, rels);
}

// poset of a join: cone(A1) x cone(A2) minus the pair of cone points.
// Element order: row-major over (cone(A1), cone(A2)) skipping (\*, \*).
Poset join_poset(const Poset& a, const Poset& b, std::string* star_a, std::string* star_b) {
    Poset ca = cone_poset(a, star_a);
    Poset cb = cone_poset(b, star_b);
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> rels;
    auto lab = [&](int i, int j) {
        return "(" + ca.label(i) + "," + cb.label(j) + ")";
    };
    for (int i = 0; i < ca.size(); ++i)
        for (int j = 0; j < cb.size(); ++j) {
            if (i == 0 && j == 0) continue;
            labels.push_back(lab(i, j));
        }
    for (int i = 0; i < ca.size(); ++i)
        for (int j = 0; j < cb.size(); ++j) {
            if (i == 0 && j == 0) continue;
            for (int k = 0; k < ca.size(); ++k)
                for (int l = 0; l < cb.size(); ++l) {
                    if (k == 0 && l == 0) continue;
                    if (ca.leq(i, k) && cb.leq(j, l)) rels.push_back({lab(i, j), lab(k, l)});
                }
        }
    return Poset::from_relations(labels, rels);
}

std::pair<std::string, std::string> split_pair_label(const std::string& l) {
    if (l.size() < 3 || l.front() != '(' || l.back() != ')')
        throw ValidationError("not a pair label: '" + l + "'");
    int depth = 0;
    for (std::size_t i = 1; i + 1 < l.size(); ++i) {
        if (l[i] == '(') ++depth;
        if (l[i] == ')') --depth;
        if (l[i] == ',' && depth == 0)
            return {l.substr(1, i - 1), l.substr(i + 1, l.size() - i - 2)};
    }
    throw ValidationError("not a pair label: '" + l + "'");
}

}  // namespace

Poset strat_poset_of(const DescPtr& d) {
    if (!d || d->kind == SpaceDesc::Kind::Empty) return Poset();
    switch (d->kind) {
        case SpaceDesc::Kind::Atom:
            return d->atom->poset();
        case SpaceDesc::Kind::Cone:
            return cone_poset(strat_poset_of(d->left));
        case SpaceDesc::Kind::Suspension:
            return susp_poset(strat_poset_of(d->left), nullptr, nullptr);
        case SpaceDesc::Kind::Join:
            return join_poset(strat_poset_of(d->left), strat_poset_of(d->right), nullptr, nullptr);
        case SpaceDesc::Kind::Product:
            return product(strat_poset_of(d->left), strat_poset_of(d->right));
        default:
            return Poset();
    }
}

std::vector<int> stratum_dims(const DescPtr& d) {
    switch (d->kind) {
        case SpaceDesc::Kind::Empty:
            return {};
        case SpaceDesc::Kind::Atom: {
            const FilteredComplex& fc = *d->atom;
            std::vector<int> out(fc.poset().size());
            for (int i = 0; i < fc.poset().size(); ++i) out[i] = fc.stratum_dim(i);
            return out;
        }
        case SpaceDesc::Kind::Cone: {
            std::vector<int> inner = stratum_dims(d->left);
            std::vector<int> out{0};  // cone point first, matching cone_poset order
            for (int v : inner) out.push_back(v < 0 ? v : v + 1);
            return out;
        }
        case SpaceDesc::Kind::Suspension: {
            std::vector<int> inner = stratum_dims(d->left);
            std::vector<int> out{0, 0};
            for (int v : inner) out.push_back(v < 0 ? v : v + 1);
            return out;
        }
        case SpaceDesc::Kind::Join: {
            std::vector<int> da = stratum_dims(d->left);
            std::vector<int> db = stratum_dims(d->right);
            // cone dims: index 0 = cone point (dim of end copy handled per case)
            std::vector<int> out;
            const int na = static_cast<int>(da.size()) + 1;
            const int nb = static_cast<int>(db.size()) + 1;
            for (int i = 0; i < na; ++i)
                for (int j = 0; j < nb; ++j) {
                    if (i == 0 && j == 0) continue;
                    if (i == 0)
                        out.push_back(db[j - 1]);  // copy of a right stratum
                    else if (j == 0)
                        out.push_back(da[i - 1]);  // copy of a left stratum
                    else if (da[i - 1] < 0 || db[j - 1] < 0)
                        out.push_back(-1);
                    else
                        out.push_back(da[i - 1] + db[j - 1] + 1);
                }
            return out;
        }
        case SpaceDesc::Kind::Product: {
            std::vector<int> da = stratum_dims(d->left);
            std::vector<int> db = stratum_dims(d->right);
            std::vector<int> out;
            for (int x : da)
                for (int y : db) out.push_back(x < 0 || y < 0 ? -1 : x + y);
            return out;
        }
    }
    return {};
}

std::string cone_star_label(const DescPtr& inner) {
    std::string star;
    cone_poset(strat_poset_of(inner), &star);
    return star;
}

void susp_pole_labels(const DescPtr& inner, std::string& p0, std::string& p1) {
    susp_poset(strat_poset_of(inner), &p0, &p1);
}

void join_star_labels(const DescPtr& join_desc, std::string& star_left,
                      std::string& star_right) {
    if (join_desc->kind != SpaceDesc::Kind::Join)
        throw ValidationError("join_star_labels on a non-join description");
    join_poset(strat_poset_of(join_desc->left), strat_poset_of(join_desc->right), &star_left,
               &star_right);
}

DescPtr link_of(const StratumRef& s) { return link_of(s.desc, s.label); }

DescPtr link_of(const DescPtr& d, const std::string& label) {
    Poset p = strat_poset_of(d);
    int elt = p.index_of(label);
    if (p.is_maximal(elt))
        throw ValidationError("link of regular stratum '" + label + "' is empty by convention");
    switch (d->kind) {
        case SpaceDesc::Kind::Atom: {
            FilteredComplex lk = link_at_stratum(*d->atom, label);
            return SpaceDesc::make_atom(d->atom_name + "-link-" + label, std::move(lk));
        }
        case SpaceDesc::Kind::Cone: {
            std::string star;
            cone_poset(strat_poset_of(d->left), &star);
            if (label == star) return d->left;
            return link_of(d->left, label);
        }
        case SpaceDesc::Kind::Suspension: {
            std::string p0, p1;
            susp_poset(strat_poset_of(d->left), &p0, &p1);
            if (label == p0 || label == p1) return d->left;
            return link_of(d->left, label);
        }
        case SpaceDesc::Kind::Product: {
            auto [la, lb] = split_pair_label(label);
            Poset pa = strat_poset_of(d->left);
            Poset pb = strat_poset_of(d->right);
            DescPtr linka = pa.is_maximal(pa.index_of(la)) ? SpaceDesc::empty()
                                                           : link_of(d->left, la);
            DescPtr linkb = pb.is_maximal(pb.index_of(lb)) ? SpaceDesc::empty()
                                                           : link_of(d->right, lb);
            return SpaceDesc::join(linka, linkb);
        }
        case SpaceDesc::Kind::Join: {
            auto [la, lb] = split_pair_label(label);
            std::string star_a, star_b;
            join_poset(strat_poset_of(d->left), strat_poset_of(d->right), &star_a, &star_b);
            Poset pa = strat_poset_of(d->left);
            Poset pb = strat_poset_of(d->right);
            DescPtr linka, linkb;
            if (la == star_a)
                linka = d->left;  // link of the cone point direction is the whole factor
            else if (pa.is_maximal(pa.index_of(la)))
                linka = SpaceDesc::empty();
            else
                linka = link_of(d->left, la);
            if (lb == star_b)
                linkb = d->right;
            else if (pb.is_maximal(pb.index_of(lb)))
                linkb = SpaceDesc::empty();
            else
                linkb = link_of(d->right, lb);
            return SpaceDesc::join(linka, linkb);
        }
        default:
            throw ValidationError("link of stratum of empty description");
    }
}

namespace {

DescPtr point_desc() {
    SimplicialComplex pt = SimplicialComplex::from_facets(1, {{0}});
    return SpaceDesc::make_atom("pt", FilteredComplex::trivial(std::move(pt)));
}

}  // namespace

DescPtr closure_of(const DescPtr& d, const std::string& label) {
    switch (d->kind) {
        case SpaceDesc::Kind::Atom: {
            const FilteredComplex& fc = *d->atom;
            int elt = fc.poset().index_of(label);
            // facets of the closure: all simplices labelled by the stratum
            std::vector<Simplex> facets;
            const SimplicialComplex& k = fc.complex();
            std::size_t in_stratum = 0;
            for (int dd = 0; dd <= k.dim(); ++dd)
                for (std::size_t i = 0; i < k.simplices(dd).size(); ++i)
                    if (fc.stratum(dd, static_cast<int>(i)) == elt) {
                        facets.push_back(k.simplices(dd)[i]);
                        ++in_stratum;
                    }
            if (facets.empty()) throw ValidationError("closure of empty stratum '" + label + "'");
            if (fc.poset().size() == 1 && in_stratum == fc.flat_size()) return d;
            // compact vertices
            std::set<int> verts;
            for (auto& s : facets)
                for (int v : s) verts.insert(v);
            std::vector<int> vmap(verts.begin(), verts.end());
            std::unordered_map<int, int> inv;
            for (std::size_t i = 0; i < vmap.size(); ++i) inv[vmap[i]] = static_cast<int>(i);
            std::vector<Simplex> f2 = facets;
            for (auto& s : f2)
                for (int& v : s) v = inv[v];
            SimplicialComplex sub =
                SimplicialComplex::from_facets(static_cast<int>(vmap.size()), f2);
            // induced labels (faces keep their ambient labels)
            Poset down = fc.poset().down_set(elt);
            std::vector<std::vector<int>> strata(sub.dim() + 1);
            for (int dd = 0; dd <= sub.dim(); ++dd)
                strata[dd].assign(sub.simplices(dd).size(), -1);
            for (int dd = 0; dd <= sub.dim(); ++dd)
                for (std::size_t i = 0; i < sub.simplices(dd).size(); ++i) {
                    Simplex orig = sub.simplices(dd)[i];
                    for (int& v : orig) v = vmap[v];
                    int amb = fc.stratum_of(orig);
                    strata[dd][static_cast<int>(i)] =
                        down.index_of(fc.poset().label(amb));
                }
            return SpaceDesc::make_atom(d->atom_name + "-cl-" + label,
                                        FilteredComplex(std::move(sub), std::move(down),
                                                        std::move(strata)));
        }
        case SpaceDesc::Kind::Cone: {
            std::string star;
            cone_poset(strat_poset_of(d->left), &star);
            if (label == star) return point_desc();
            return SpaceDesc::cone(closure_of(d->left, label));
        }
        case SpaceDesc::Kind::Suspension: {
            std::string p0, p1;
            susp_poset(strat_poset_of(d->left), &p0, &p1);
            if (label == p0 || label == p1) return point_desc();
            return SpaceDesc::suspension(closure_of(d->left, label));
        }
        case SpaceDesc::Kind::Product: {
            auto [la, lb] = split_pair_label(label);
            return SpaceDesc::product(closure_of(d->left, la), closure_of(d->right, lb));
        }
        case SpaceDesc::Kind::Join: {
            auto [la, lb] = split_pair_label(label);
            std::string star_a, star_b;
            join_poset(strat_poset_of(d->left), strat_poset_of(d->right), &star_a, &star_b);
            if (la == star_a) return closure_of(d->right, lb);
            if (lb == star_b) return closure_of(d->left, la);
            return SpaceDesc::join(closure_of(d->left, la), closure_of(d->right, lb));
        }
        default:
            throw ValidationError("closure of stratum of empty description");
    }
}

PseudomanifoldReport is_pseudomanifold(const DescPtr& d) {
    PseudomanifoldReport rep;
    int n;
    try {
        n = dim(d);
    } catch (const ValidationError& e) {
        rep.ok = false;
        rep.detail = e.what();
        return rep;
    }
    if (n < 0) {
        rep.ok = false;
        rep.detail = "empty description";
        return rep;
    }
    Poset p = strat_poset_of(d);
    std::vector<int> dims = stratum_dims(d);
    for (int i = 0; i < p.size(); ++i) {
        if (dims[i] < 0) continue;  // unused label
        if (p.is_maximal(i)) {
            if (dims[i] != n) {
                rep.ok = false;
                rep.detail = "regular stratum '" + p.label(i) + "' has dimension " +
                             std::to_string(dims[i]) + " != " + std::to_string(n);
                return rep;
            }
        } else if (n - dims[i] < 2) {
            rep.ok = false;
            rep.detail = "singular stratum '" + p.label(i) + "' has codimension " +
                         std::to_string(n - dims[i]) + " < 2";
            return rep;
        }
    }
    return rep;
}

}  // namespace strat
