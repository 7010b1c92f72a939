#include "strat/witt.hpp"

#include <algorithm>

#include "strat/errors.hpp"

namespace strat {

namespace {

WittStratumEntry check_link(const std::string& stratum, const FilteredComplex& link_fc) {
    WittStratumEntry e;
    e.stratum = stratum;
    e.link_dim = link_fc.complex().dim();
    e.link_even = e.link_dim % 2 == 0;
    if (!e.link_even) {
        e.ok = true;
        return e;
    }
    std::vector<int> ranks = ih_ranks(link_fc, Perversity::lower_middle(e.link_dim));
    e.middle_rank = ranks[e.link_dim / 2];
    e.ok = e.middle_rank == 0;
    return e;
}

}  // namespace

WittReport witt_check(const DescPtr& d) {
    PseudomanifoldReport pm = is_pseudomanifold(d);
    if (!pm.ok) throw NotPseudomanifold(pm.detail);
    WittReport rep;
    Poset p = strat_poset_of(d);
    std::vector<int> dims = stratum_dims(d);
    for (int i = 0; i < p.size(); ++i) {
        if (p.is_maximal(i) || dims[i] < 0) continue;
        DescPtr link = link_of(d, p.label(i));
        FilteredComplex link_fc = realize(link);
        WittStratumEntry e = check_link(p.label(i), link_fc);
        rep.overall = rep.overall && e.ok;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

WittReport witt_check(const FilteredComplex& fc) {
    const int n = fc.complex().dim();
    for (int e : fc.singular_elements())
        if (n - fc.stratum_dim(e) < 2)
            throw NotPseudomanifold("stratum '" + fc.poset().label(e) +
                                    "' has codimension < 2");
    WittReport rep;
    for (int e : fc.singular_elements()) {
        FilteredComplex link = link_at_stratum(fc, fc.poset().label(e));
        WittStratumEntry entry = check_link(fc.poset().label(e), link);
        rep.overall = rep.overall && entry.ok;
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

namespace {

CSCMatrix coboundary_matrix(const SimplicialComplex& k, int m) {
    // delta: C^m -> C^{m+1}, the transpose of the boundary in degree m+1
    CSCMatrix bd = k.boundary_matrix(m + 1);
    CSCMatrix out;
    out.rows = static_cast<int>(k.simplices(m + 1).size());
    out.col.assign(k.simplices(m).size(), {});
    out.cols = static_cast<int>(out.col.size());
    for (int c = 0; c < bd.cols; ++c)
        for (auto [r, v] : bd.col[c]) out.col[r].push_back({c, v});
    for (auto& col : out.col) std::sort(col.begin(), col.end());
    return out;
}

std::vector<std::vector<Rational>> middle_cocycle_basis(const SimplicialComplex& k, int m) {
    // representatives of H^m: kernel vectors of delta_m that are independent
    // modulo the image of delta_{m-1}
    auto kernel = sparse_kernel_basis(coboundary_matrix(k, m));
    IncrementalEchelon ech;
    if (m >= 1) {
        CSCMatrix prev = coboundary_matrix(k, m - 1);
        for (const auto& col : prev.col) {
            SparseVecQ v;
            for (auto [r, val] : col) v.push_back({r, Rational(val)});
            ech.add(std::move(v));
        }
    }
    std::vector<std::vector<Rational>> reps;
    const std::size_t nm = k.simplices(m).size();
    for (const auto& v : kernel) {
        if (!ech.add(v)) continue;
        std::vector<Rational> dense(nm, Rational(0));
        for (auto [i, val] : v) dense[i] = val;
        reps.push_back(std::move(dense));
    }
    return reps;
}

}  // namespace

IntersectionForm signature_form(const FilteredComplex& fc, const FundamentalCycle& orientation) {
    const SimplicialComplex& k = fc.complex();
    const int n = k.dim();
    if (n % 4 != 0) throw WrongDimension("signature form needs dimension 0 mod 4");
    if (!fc.is_trivially_stratified())
        throw ValidationError("signature form needs an empty singular set");
    if (static_cast<int>(orientation.signs.size()) != static_cast<int>(k.simplices(n).size()))
        throw ValidationError("orientation does not match the complex");
    // homological manifold audit: vertex links are homology spheres
    if (n >= 1) {
        std::vector<int> sphere(n, 0);
        sphere[0] = 1;
        sphere[n - 1] += 1;
        for (int v = 0; v < k.num_vertices(); ++v)
            if (homology_ranks(link_of_vertex(k, v)) != sphere)
                throw ValidationError("vertex link is not a homology sphere");
    }

    const int m = n / 2;
    auto reps = middle_cocycle_basis(k, m);
    const auto& tops = k.simplices(n);

    auto cup_eval = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        Rational total = 0;
        for (std::size_t t = 0; t < tops.size(); ++t) {
            const Simplex& s = tops[t];
            Simplex front(s.begin(), s.begin() + m + 1);
            Simplex back(s.begin() + m, s.end());
            const Rational& av = a[k.index_of(front)];
            if (av == 0) continue;
            const Rational& bv = b[k.index_of(back)];
            if (bv == 0) continue;
            total += Rational(orientation.signs[t]) * av * bv;
        }
        return total;
    };

    IntersectionForm form;
    form.provenance = "middle Alexander-Whitney cup form, rank " + std::to_string(reps.size());
    form.matrix.assign(reps.size(), std::vector<Rational>(reps.size(), Rational(0)));
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j)
            form.matrix[i][j] = cup_eval(reps[i], reps[j]);
    // the pairing of middle cocycles against a cycle is symmetric
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (form.matrix[i][j] != form.matrix[j][i])
                throw std::logic_error("cup form failed to be symmetric");
    return form;
}

int signature_of_form(const IntersectionForm& f) {
    std::vector<std::vector<Rational>> a = f.matrix;
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(a[i].size()) != n)
            throw ValidationError("form matrix is not square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (a[i][j] != a[j][i]) throw ValidationError("form matrix is not symmetric");

    std::vector<char> active(n, 1);
    int pos = 0, neg = 0;
    while (true) {
        int piv = -1;
        for (int i = 0; i < n; ++i)
            if (active[i] && a[i][i] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) {
            // all active diagonal entries vanish; split a hyperbolic pair
            int bi = -1, bj = -1;
            for (int i = 0; i < n && bi < 0; ++i)
                if (active[i])
                    for (int j = i + 1; j < n; ++j)
                        if (active[j] && a[i][j] != 0) {
                            bi = i;
                            bj = j;
                            break;
                        }
            if (bi < 0) break;  // zero form on the rest
            // congruence e_i -> e_i + e_j, e_j -> e_i - e_j makes both
            // diagonal entries nonzero (2b and -2b)
            for (int c = 0; c < n; ++c) {
                Rational x = a[bi][c], y = a[bj][c];
                a[bi][c] = x + y;
                a[bj][c] = x - y;
            }
            for (int r = 0; r < n; ++r) {
                Rational x = a[r][bi], y = a[r][bj];
                a[r][bi] = x + y;
                a[r][bj] = x - y;
            }
            continue;
        }
        if (a[piv][piv] > 0)
            ++pos;
        else
            ++neg;
        active[piv] = 0;
        for (int r = 0; r < n; ++r) {
            if (!active[r] || a[r][piv] == 0) continue;
            Rational factor = a[r][piv] / a[piv][piv];
            for (int c = 0; c < n; ++c) a[r][c] -= factor * a[piv][c];
            for (int c = 0; c < n; ++c) a[c][r] = a[r][c];
        }
    }
    return pos - neg;
}

int signature(const DescPtr& d) {
    WittReport w = witt_check(d);
    if (!w.overall) throw NotWitt("description fails the Witt condition");
    const int n = dim(d);
    switch (d->kind) {
        case SpaceDesc::Kind::Atom: {
            if (!d->atom->is_trivially_stratified())
                throw DescNotSupported("no signature rule for stratified atoms");
            FilteredComplex fc = realize(d);
            FundamentalCycle cycle = orient(fc);  // also certifies closedness
            if (n % 4 != 0) return 0;
            return signature_of_form(signature_form(fc, cycle));
        }
        case SpaceDesc::Kind::Product:
            return signature(d->left) * signature(d->right);
        case SpaceDesc::Kind::Suspension:
        case SpaceDesc::Kind::Join: {
            if (n % 4 == 0)
                throw DescNotSupported(
                    "no structural signature rule for joins/suspensions in dimension 4k");
            FilteredComplex fc = realize(d);
            orient(fc);
            return 0;
        }
        case SpaceDesc::Kind::Cone:
            throw DescNotSupported("cones have boundary; signature undefined");
        default:
            throw ValidationError("signature of the empty description");
    }
}

}  // namespace strat
