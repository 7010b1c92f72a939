#include "strat/intersection.hpp"

#include <algorithm>

#include "strat/errors.hpp"

namespace strat {

Perversity::Perversity(int n, std::vector<int> values) : n_(n), values_(std::move(values)) {
    if (n_ < 2) throw ValidationError("perversity needs ambient dimension >= 2");
    if (static_cast<int>(values_.size()) != n_ - 1)
        throw ValidationError("perversity needs values p(2..n)");
    if (values_[0] != 0) throw ValidationError("perversity requires p(2) = 0");
    for (std::size_t i = 1; i < values_.size(); ++i) {
        int step = values_[i] - values_[i - 1];
        if (step != 0 && step != 1)
            throw ValidationError("perversity increments must be 0 or 1");
    }
}

Perversity Perversity::lower_middle(int n) {
    std::vector<int> v;
    for (int k = 2; k <= n; ++k) v.push_back((k - 2) / 2);
    return Perversity(n, std::move(v));
}

Perversity Perversity::zero(int n) {
    return Perversity(n, std::vector<int>(n - 1, 0));
}

Perversity Perversity::top(int n) {
    std::vector<int> v;
    for (int k = 2; k <= n; ++k) v.push_back(k - 2);
    return Perversity(n, std::move(v));
}

int Perversity::operator()(int k) const {
    if (k < 2 || k > n_) throw ValidationError("perversity evaluated outside [2, n]");
    return values_[k - 2];
}

namespace {

// masks of the closed skeleta X_{n-c} for c = 2..n, indexed by flat simplex id
std::vector<std::vector<char>> skeleton_masks(const FilteredComplex& k, int n) {
    std::vector<std::vector<char>> masks(n + 1);
    for (int c = 2; c <= n; ++c) masks[c] = k.closed_skeleton_mask(n - c);
    return masks;
}

// maximal face of sigma inside the masked subcomplex; returns its dimension
// or -1 when empty; NotFull when the vertex span is not a face there
int face_dim_in(const FilteredComplex& fc, const std::vector<char>& mask, const Simplex& s) {
    const SimplicialComplex& k = fc.complex();
    Simplex w;
    for (int v : s)
        if (mask[fc.flat_index(0, k.index_of({v}))]) w.push_back(v);
    if (w.empty()) return -1;
    int idx = k.index_of(w);
    if (idx < 0 || !mask[fc.flat_index(static_cast<int>(w.size()) - 1, idx)])
        throw NotFull("simplex meets a closed stratum skeleton in a non-face");
    return static_cast<int>(w.size()) - 1;
}

}  // namespace

bool is_full(const FilteredComplex& fc) {
    const int n = fc.complex().dim();
    auto masks = skeleton_masks(fc, n);
    try {
        for (int c = 2; c <= n; ++c) {
            const auto& mask = masks[c];
            bool nonempty = std::any_of(mask.begin(), mask.end(), [](char x) { return x; });
            if (!nonempty) continue;
            for (int d = 0; d <= n; ++d)
                for (const Simplex& s : fc.complex().simplices(d)) face_dim_in(fc, mask, s);
        }
    } catch (const NotFull&) {
        return false;
    }
    return true;
}

std::vector<char> allowable_mask(const FilteredComplex& fc, const Perversity& p, int degree) {
    const int n = fc.complex().dim();
    if (p.ambient_dim() != n)
        throw ValidationError("perversity dimension does not match the complex");
    auto masks = skeleton_masks(fc, n);
    const auto& simps = fc.complex().simplices(degree);
    std::vector<char> out(simps.size(), 1);
    for (int c = 2; c <= n; ++c) {
        const auto& mask = masks[c];
        if (std::none_of(mask.begin(), mask.end(), [](char x) { return x; })) continue;
        for (std::size_t i = 0; i < simps.size(); ++i) {
            if (!out[i]) continue;
            int fdim = face_dim_in(fc, mask, simps[i]);
            // empty intersection never violates the condition
            if (fdim >= 0 && fdim > degree - c + p(c)) out[i] = 0;
        }
    }
    return out;
}

std::vector<Simplex> allowable_simplices(const FilteredComplex& fc, const Perversity& p,
                                         int degree) {
    std::vector<char> mask = allowable_mask(fc, p, degree);
    std::vector<Simplex> out;
    const auto& simps = fc.complex().simplices(degree);
    for (std::size_t i = 0; i < simps.size(); ++i)
        if (mask[i]) out.push_back(simps[i]);
    return out;
}

std::vector<int> allowable_counts(const FilteredComplex& fc, const Perversity& p) {
    std::vector<int> out;
    for (int i = 0; i <= fc.complex().dim(); ++i) {
        auto mask = allowable_mask(fc, p, i);
        out.push_back(static_cast<int>(std::count(mask.begin(), mask.end(), 1)));
    }
    return out;
}

std::vector<int> ih_ranks(const FilteredComplex& fc_in, const Perversity& p) {
    const int n = fc_in.complex().dim();
    if (p.ambient_dim() != n)
        throw ValidationError("perversity dimension does not match the complex");
    // pseudomanifold precondition: no codimension-one singular strata
    for (int e : fc_in.singular_elements())
        if (n - fc_in.stratum_dim(e) < 2)
            throw NotPseudomanifold("stratum '" + fc_in.poset().label(e) +
                                    "' has codimension < 2");

    const FilteredComplex* fc = &fc_in;
    FilteredComplex subdivided;
    if (!is_full(fc_in)) {
        subdivided = barycentric(fc_in);
        fc = &subdivided;
        if (!is_full(*fc)) throw NotFull("complex not full after one barycentric subdivision");
    }

    // per degree: allowable columns of the boundary matrix, with
    //   r_full = rank over all rows, r_out = rank over non-allowable rows;
    // dim I^pC_i = |A_i| - r_out(i); the boundary has rank
    // r_full(i) - r_out(i) on I^pC_i and r_full(i+1) - r_out(i+1) into it
    std::vector<std::vector<char>> allow(n + 1);
    for (int i = 0; i <= n; ++i) allow[i] = allowable_mask(*fc, p, i);

    std::vector<int> r_full(n + 2, 0), r_out(n + 2, 0), na(n + 2, 0);
    for (int i = 0; i <= n; ++i)
        na[i] = static_cast<int>(std::count(allow[i].begin(), allow[i].end(), 1));

    for (int i = 1; i <= n; ++i) {
        const auto& simps = fc->complex().simplices(i);
        CSCMatrix full, outm;
        full.rows = static_cast<int>(fc->complex().simplices(i - 1).size());
        outm.rows = full.rows;
        for (std::size_t col = 0; col < simps.size(); ++col) {
            if (!allow[i][col]) continue;
            const Simplex& s = simps[col];
            std::vector<std::pair<int, int>> f_entries, o_entries;
            Simplex face(s.size() - 1);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                for (std::size_t j = 0, w = 0; j < s.size(); ++j)
                    if (j != drop) face[w++] = s[j];
                int r = fc->complex().index_of(face);
                int val = drop % 2 == 0 ? 1 : -1;
                f_entries.push_back({r, val});
                if (!allow[i - 1][r]) o_entries.push_back({r, val});
            }
            full.add_column(std::move(f_entries));
            outm.add_column(std::move(o_entries));
        }
        r_full[i] = sparse_rank(full);
        r_out[i] = sparse_rank(outm);
    }

    std::vector<int> ranks(n + 1);
    for (int i = 0; i <= n; ++i) {
        int dim_i = na[i] - r_out[i];
        ranks[i] = dim_i - (r_full[i] - r_out[i]) - (r_full[i + 1] - r_out[i + 1]);
    }
    return ranks;
}

}  // namespace strat
