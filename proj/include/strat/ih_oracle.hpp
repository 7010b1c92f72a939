#pragma once

// Brute-force intersection-homology oracle: builds the allowable subspaces
// I^p C_i explicitly as kernel bases and takes homology ranks of the
// resulting boundary maps. Independent of the rank-arithmetic production
// pipeline in strat::ih_ranks (shared code stops at the sparse kernel/echelon
// primitives).

#include <algorithm>
#include <vector>

#include "strat/simplicial.hpp"

namespace strat::oracle {

// dimension (or -1) of the maximal face of s inside the masked subcomplex
inline int face_dim_in(const strat::FilteredComplex& fc, const std::vector<char>& vmask,
                       const strat::Simplex& s) {
    strat::Simplex w;
    for (int v : s)
        if (vmask[v]) w.push_back(v);
    return static_cast<int>(w.size()) - 1;
}

inline std::vector<int> ih_ranks_bruteforce(const strat::FilteredComplex& fc,
                                            const std::vector<int>& perv /* p(2..n) */) {
    using namespace strat;
    const SimplicialComplex& k = fc.complex();
    const int n = k.dim();

    // closed skeleta as vertex masks plus simplex masks, recomputed from the
    // definition: all faces of simplices whose stratum has dim <= j
    auto skeleton = [&](int j) {
        std::vector<std::vector<char>> mask(n + 1);
        for (int d = 0; d <= n; ++d) mask[d].assign(k.simplices(d).size(), 0);
        for (int d = 0; d <= n; ++d)
            for (std::size_t i = 0; i < k.simplices(d).size(); ++i) {
                if (fc.stratum_dim(fc.stratum(d, static_cast<int>(i))) > j) continue;
                const Simplex& s = k.simplices(d)[i];
                const int m = static_cast<int>(s.size());
                for (int b = 1; b < (1 << m); ++b) {
                    Simplex f;
                    for (int t = 0; t < m; ++t)
                        if (b >> t & 1) f.push_back(s[t]);
                    mask[f.size() - 1][k.index_of(f)] = 1;
                }
            }
        return mask;
    };

    std::vector<std::vector<std::vector<char>>> skel(n + 1);
    std::vector<char> skel_nonempty(n + 1, 0);
    for (int c = 2; c <= n; ++c) {
        skel[c] = skeleton(n - c);
        for (auto& row : skel[c])
            for (char x : row) skel_nonempty[c] |= x;
    }

    auto allowable = [&](int degree, const Simplex& s) {
        for (int c = 2; c <= n; ++c) {
            if (!skel_nonempty[c]) continue;
            std::vector<char> vmask(k.num_vertices(), 0);
            for (std::size_t i = 0; i < k.simplices(0).size(); ++i)
                if (skel[c][0][i]) vmask[k.simplices(0)[i][0]] = 1;
            int fdim = face_dim_in(fc, vmask, s);
            if (fdim >= 0 && fdim > degree - c + perv[c - 2]) return false;
        }
        return true;
    };

    std::vector<std::vector<int>> allowed(n + 1);  // indices of allowable simplices
    for (int d = 0; d <= n; ++d)
        for (std::size_t i = 0; i < k.simplices(d).size(); ++i)
            if (allowable(d, k.simplices(d)[i])) allowed[d].push_back(static_cast<int>(i));

    // I^p C_i = kernel of (boundary restricted to allowable columns,
    // non-allowable rows); basis vectors are coefficient vectors over the
    // allowable i-simplices
    std::vector<std::vector<SparseVecQ>> basis(n + 2);
    for (int i = 0; i <= n; ++i) {
        if (i == 0) {
            for (std::size_t c = 0; c < allowed[0].size(); ++c)
                basis[0].push_back({{static_cast<int>(c), Rational(1)}});
            continue;
        }
        CSCMatrix b;
        b.rows = static_cast<int>(k.simplices(i - 1).size());
        std::vector<char> allow_prev(k.simplices(i - 1).size(), 0);
        for (int r : allowed[i - 1]) allow_prev[r] = 1;
        for (int ci : allowed[i]) {
            const Simplex& s = k.simplices(i)[ci];
            std::vector<std::pair<int, int>> col;
            Simplex face(s.size() - 1);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                for (std::size_t j = 0, w = 0; j < s.size(); ++j)
                    if (j != drop) face[w++] = s[j];
                int r = k.index_of(face);
                if (!allow_prev[r]) col.push_back({r, drop % 2 == 0 ? 1 : -1});
            }
            b.add_column(std::move(col));
        }
        basis[i] = sparse_kernel_basis(b);
    }

    // boundary of a basis vector, as a chain over all (i-1)-simplices
    auto boundary_of = [&](int i, const SparseVecQ& v) {
        std::vector<Rational> out(k.simplices(i - 1).size(), Rational(0));
        for (auto [ci, coeff] : v) {
            const Simplex& s = k.simplices(i)[allowed[i][ci]];
            Simplex face(s.size() - 1);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                for (std::size_t j = 0, w = 0; j < s.size(); ++j)
                    if (j != drop) face[w++] = s[j];
                out[k.index_of(face)] += coeff * Rational(drop % 2 == 0 ? 1 : -1);
            }
        }
        SparseVecQ sparse;
        for (std::size_t r = 0; r < out.size(); ++r)
            if (out[r] != 0) sparse.push_back({static_cast<int>(r), out[r]});
        return sparse;
    };

    std::vector<int> bd_rank(n + 2, 0);
    for (int i = 1; i <= n; ++i) {
        IncrementalEchelon ech;
        for (const auto& v : basis[i])
            if (!v.empty()) ech.add(boundary_of(i, v));
        bd_rank[i] = ech.rank();
    }

    std::vector<int> ranks(n + 1);
    for (int i = 0; i <= n; ++i)
        ranks[i] = static_cast<int>(basis[i].size()) - bd_rank[i] - bd_rank[i + 1];
    return ranks;
}

}  // namespace strat::oracle
