#include <algorithm>

#include "strat/errors.hpp"
#include "strat/space.hpp"

namespace strat {

namespace {

struct Realization {
    SimplicialComplex k;
    Poset poset;
    std::vector<std::vector<int>> strata;
};

Realization realize_rec(const DescPtr& d);

Realization realize_atom(const SpaceDesc& d) {
    const FilteredComplex& fc = *d.atom;
    Realization r;
    r.k = fc.complex();
    r.poset = fc.poset();
    r.strata.assign(r.k.dim() + 1, {});
    for (int dd = 0; dd <= r.k.dim(); ++dd) {
        r.strata[dd].resize(r.k.simplices(dd).size());
        for (std::size_t i = 0; i < r.k.simplices(dd).size(); ++i)
            r.strata[dd][i] = fc.stratum(dd, static_cast<int>(i));
    }
    return r;
}

Realization realize_cone(const DescPtr& inner_desc) {
    if (!inner_desc || inner_desc->kind == SpaceDesc::Kind::Empty) {
        // C(empty) is a single point labelled by the cone point
        Realization r;
        r.k = SimplicialComplex::from_facets(1, {{0}});
        r.poset = cone_poset(Poset());
        r.strata = {{0}};
        return r;
    }
    Realization in = realize_rec(inner_desc);
    const int apex = in.k.num_vertices();
    std::vector<Simplex> simps;
    std::vector<int> labels;
    simps.push_back({apex});
    labels.push_back(0);  // cone point is element 0 of cone_poset
    for (int dd = 0; dd <= in.k.dim(); ++dd)
        for (std::size_t i = 0; i < in.k.simplices(dd).size(); ++i) {
            const Simplex& s = in.k.simplices(dd)[i];
            int lab = in.strata[dd][i] + 1;  // shifted past the cone point
            simps.push_back(s);
            labels.push_back(lab);
            Simplex c = s;
            c.push_back(apex);
            std::sort(c.begin(), c.end());
            simps.push_back(std::move(c));
            labels.push_back(lab);
        }
    Realization r;
    r.k = SimplicialComplex::from_simplices(apex + 1, simps);
    r.poset = cone_poset(in.poset);
    r.strata.assign(r.k.dim() + 1, {});
    for (int dd = 0; dd <= r.k.dim(); ++dd) r.strata[dd].assign(r.k.simplices(dd).size(), -1);
    for (std::size_t c = 0; c < simps.size(); ++c)
        r.strata[simps[c].size() - 1][r.k.index_of(simps[c])] = labels[c];
    return r;
}

Realization realize_susp(const DescPtr& inner_desc) {
    Realization in = realize_rec(inner_desc);
    const int p0 = in.k.num_vertices();
    const int p1 = p0 + 1;
    std::vector<Simplex> simps;
    std::vector<int> labels;
    simps.push_back({p0});
    labels.push_back(0);
    simps.push_back({p1});
    labels.push_back(1);
    for (int dd = 0; dd <= in.k.dim(); ++dd)
        for (std::size_t i = 0; i < in.k.simplices(dd).size(); ++i) {
            const Simplex& s = in.k.simplices(dd)[i];
            int lab = in.strata[dd][i] + 2;  // shifted past the two poles
            simps.push_back(s);
            labels.push_back(lab);
            for (int pole : {p0, p1}) {
                Simplex c = s;
                c.push_back(pole);
                simps.push_back(std::move(c));
                labels.push_back(lab);
            }
        }
    Realization r;
    r.k = SimplicialComplex::from_simplices(p1 + 1, simps);
    // rebuild the suspension poset over the inner poset
    {
        std::vector<std::string> inner_labels = in.poset.labels();
        std::vector<std::string> all;
        std::string q0 = make_unique_label("*s0", inner_labels);
        all.push_back(q0);
        inner_labels.push_back(q0);
        std::string q1 = make_unique_label("*s1", inner_labels);
        inner_labels.pop_back();
        all.push_back(q1);
        for (auto& l : inner_labels) all.push_back(l);
        std::vector<std::pair<std::string, std::string>> rels;
        for (auto& l : inner_labels) {
            rels.push_back({q0, l});
            rels.push_back({q1, l});
            for (auto& m : inner_labels)
                if (in.poset.leq(l, m)) rels.push_back({l, m});
        }
        r.poset = Poset::from_relations(all, rels);
    }
    r.strata.assign(r.k.dim() + 1, {});
    for (int dd = 0; dd <= r.k.dim(); ++dd) r.strata[dd].assign(r.k.simplices(dd).size(), -1);
    for (std::size_t c = 0; c < simps.size(); ++c)
        r.strata[simps[c].size() - 1][r.k.index_of(simps[c])] = labels[c];
    return r;
}

Realization realize_join(const DescPtr& dl, const DescPtr& dr) {
    Realization a = realize_rec(dl);
    Realization b = realize_rec(dr);
    const int va = a.k.num_vertices();
    const int nb = b.poset.size() + 1;  // cone(B) size, for pair indexing
    // pair (i,j) over cone(A) x cone(B), row-major, skipping (0,0)
    auto pair_index = [&](int i, int j) { return i * nb + j - 1; };

    std::vector<Simplex> simps;
    std::vector<int> labels;
    for (int dd = 0; dd <= a.k.dim(); ++dd)
        for (std::size_t i = 0; i < a.k.simplices(dd).size(); ++i) {
            simps.push_back(a.k.simplices(dd)[i]);
            labels.push_back(pair_index(a.strata[dd][i] + 1, 0));
        }
    for (int dd = 0; dd <= b.k.dim(); ++dd)
        for (std::size_t i = 0; i < b.k.simplices(dd).size(); ++i) {
            Simplex s = b.k.simplices(dd)[i];
            for (int& v : s) v += va;
            simps.push_back(std::move(s));
            labels.push_back(pair_index(0, b.strata[dd][i] + 1));
        }
    for (int da_ = 0; da_ <= a.k.dim(); ++da_)
        for (std::size_t i = 0; i < a.k.simplices(da_).size(); ++i)
            for (int db_ = 0; db_ <= b.k.dim(); ++db_)
                for (std::size_t j = 0; j < b.k.simplices(db_).size(); ++j) {
                    Simplex s = a.k.simplices(da_)[i];
                    for (int v : b.k.simplices(db_)[j]) s.push_back(v + va);
                    simps.push_back(std::move(s));
                    labels.push_back(pair_index(a.strata[da_][i] + 1, b.strata[db_][j] + 1));
                }
    Realization r;
    r.k = SimplicialComplex::from_simplices(va + b.k.num_vertices(), simps);
    r.poset = [&] {
        // rebuild the join poset in the same (i,j) order
        Poset ca = cone_poset(a.poset);
        Poset cb = cone_poset(b.poset);
        std::vector<std::string> labs;
        std::vector<std::pair<std::string, std::string>> rels;
        auto lab = [&](int i, int j) { return "(" + ca.label(i) + "," + cb.label(j) + ")"; };
        for (int i = 0; i < ca.size(); ++i)
            for (int j = 0; j < cb.size(); ++j) {
                if (i == 0 && j == 0) continue;
                labs.push_back(lab(i, j));
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
        return Poset::from_relations(labs, rels);
    }();
    r.strata.assign(r.k.dim() + 1, {});
    for (int dd = 0; dd <= r.k.dim(); ++dd) r.strata[dd].assign(r.k.simplices(dd).size(), -1);
    for (std::size_t c = 0; c < simps.size(); ++c)
        r.strata[simps[c].size() - 1][r.k.index_of(simps[c])] = labels[c];
    return r;
}

Realization realize_product(const DescPtr& dl, const DescPtr& dr) {
    Realization a = realize_rec(dl);
    Realization b = realize_rec(dr);
    const int vb = b.k.num_vertices();
    auto vid = [&](int u, int w) { return u * vb + w; };

    // staircase triangulation: simplices of |K x L| are the chains of the
    // componentwise order on sigma x tau whose projections are exactly
    // (sigma, tau); collecting those over all simplex pairs covers every
    // cell once
    std::vector<Simplex> simps;
    std::vector<int> labels;
    for (int da_ = 0; da_ <= a.k.dim(); ++da_)
        for (std::size_t i = 0; i < a.k.simplices(da_).size(); ++i) {
            const Simplex& sa = a.k.simplices(da_)[i];
            for (int db_ = 0; db_ <= b.k.dim(); ++db_)
                for (std::size_t j = 0; j < b.k.simplices(db_).size(); ++j) {
                    const Simplex& sb = b.k.simplices(db_)[j];
                    const int g = static_cast<int>(sa.size());
                    const int h = static_cast<int>(sb.size());
                    int label = a.strata[da_][i] * b.poset.size() + b.strata[db_][j];
                    // Chains of the grid poset on sigma x tau whose
                    // projections hit every row and column: exactly the
                    // lattice paths from (0,0) to (g-1,h-1) with steps
                    // (1,0), (0,1), (1,1). Each product cell simplex is
                    // emitted once, at its exact carrier pair.
                    std::vector<std::pair<int, int>> chain{{0, 0}};
                    auto emit = [&]() {
                        Simplex s;
                        for (auto [u, w] : chain) s.push_back(vid(sa[u], sb[w]));
                        std::sort(s.begin(), s.end());
                        simps.push_back(std::move(s));
                        labels.push_back(label);
                    };
                    auto rec = [&](auto&& self, int u, int w) -> void {
                        if (u == g - 1 && w == h - 1) {
                            emit();
                            return;
                        }
                        const std::pair<int, int> steps[3] = {{1, 0}, {0, 1}, {1, 1}};
                        for (auto [du, dw] : steps) {
                            int nu = u + du, nw = w + dw;
                            if (nu >= g || nw >= h) continue;
                            chain.push_back({nu, nw});
                            self(self, nu, nw);
                            chain.pop_back();
                        }
                    };
                    rec(rec, 0, 0);
                }
        }

    Realization r;
    r.k = SimplicialComplex::from_simplices(a.k.num_vertices() * vb, simps);
    r.poset = product(a.poset, b.poset);
    r.strata.assign(r.k.dim() + 1, {});
    for (int dd = 0; dd <= r.k.dim(); ++dd) r.strata[dd].assign(r.k.simplices(dd).size(), -1);
    for (std::size_t c = 0; c < simps.size(); ++c)
        r.strata[simps[c].size() - 1][r.k.index_of(simps[c])] = labels[c];
    return r;
}

Realization realize_rec(const DescPtr& d) {
    if (!d) throw ValidationError("realize: null description");
    switch (d->kind) {
        case SpaceDesc::Kind::Atom:
            return realize_atom(*d);
        case SpaceDesc::Kind::Cone:
            return realize_cone(d->left);
        case SpaceDesc::Kind::Suspension:
            return realize_susp(d->left);
        case SpaceDesc::Kind::Join:
            return realize_join(d->left, d->right);
        case SpaceDesc::Kind::Product:
            return realize_product(d->left, d->right);
        default:
            throw ValidationError("realize: empty description");
    }
}

}  // namespace

FilteredComplex realize(const DescPtr& d) {
    Realization r = realize_rec(d);
    FilteredComplex fc(std::move(r.k), std::move(r.poset), std::move(r.strata));
    fc.validate();
    return fc;
}

}  // namespace strat
