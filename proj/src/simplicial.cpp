#include "strat/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "strat/errors.hpp"

namespace strat {

namespace {

std::vector<Simplex> proper_faces(const Simplex& s) {
    std::vector<Simplex> out;
    const int n = static_cast<int>(s.size());
    for (int mask = 1; mask < (1 << n) - 1; ++mask) {
        Simplex f;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) f.push_back(s[i]);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

void SimplicialComplex::build_index() {
    index_.assign(by_dim_.size(), {});
    for (std::size_t d = 0; d < by_dim_.size(); ++d) {
        index_[d].reserve(by_dim_[d].size() * 2);
        for (std::size_t i = 0; i < by_dim_[d].size(); ++i)
            index_[d][by_dim_[d][i]] = static_cast<int>(i);
    }
}

SimplicialComplex SimplicialComplex::from_facets(int num_vertices,
                                                 const std::vector<Simplex>& facets) {
    std::set<Simplex> all;
    for (const Simplex& f : facets) {
        Simplex s = f;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw ValidationError("facet has a repeated vertex");
        for (int v : s)
            if (v < 0 || v >= num_vertices) throw ValidationError("facet vertex out of range");
        all.insert(s);
        for (auto& t : proper_faces(s)) all.insert(std::move(t));
    }
    std::vector<Simplex> simplices(all.begin(), all.end());
    return from_simplices(num_vertices, std::move(simplices));
}

SimplicialComplex SimplicialComplex::from_simplices(int num_vertices,
                                                    std::vector<Simplex> simplices) {
    SimplicialComplex k;
    k.num_vertices_ = num_vertices;
    int dim = -1;
    for (auto& s : simplices) dim = std::max(dim, static_cast<int>(s.size()) - 1);
    k.by_dim_.assign(dim + 1, {});
    for (auto& s : simplices) k.by_dim_[s.size() - 1].push_back(std::move(s));
    for (auto& v : k.by_dim_) std::sort(v.begin(), v.end());
    k.build_index();
    // face closure check
    for (int d = 1; d <= dim; ++d)
        for (const Simplex& s : k.by_dim_[d])
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex f;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != i) f.push_back(s[j]);
                if (!k.contains(f)) throw ValidationError("simplex set not closed under faces");
            }
    return k;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
    static const std::vector<Simplex> empty;
    if (d < 0 || d > dim()) return empty;
    return by_dim_[d];
}

bool SimplicialComplex::contains(const Simplex& s) const { return index_of(s) >= 0; }

int SimplicialComplex::index_of(const Simplex& s) const {
    int d = static_cast<int>(s.size()) - 1;
    if (d < 0 || d > dim()) return -1;
    auto it = index_[d].find(s);
    return it == index_[d].end() ? -1 : it->second;
}

std::size_t SimplicialComplex::size() const {
    std::size_t n = 0;
    for (auto& v : by_dim_) n += v.size();
    return n;
}

std::vector<int> SimplicialComplex::f_vector() const {
    std::vector<int> f;
    for (auto& v : by_dim_) f.push_back(static_cast<int>(v.size()));
    return f;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    for (int d = 0; d <= dim(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(by_dim_[d].size());
    return chi;
}

CSCMatrix SimplicialComplex::boundary_matrix(int d) const {
    CSCMatrix m;
    m.rows = d >= 1 && d <= dim() ? static_cast<int>(by_dim_[d - 1].size()) : 0;
    if (d < 1 || d > dim()) {
        m.cols = d == 0 ? static_cast<int>(by_dim_[0].size()) : 0;
        m.col.assign(m.cols, {});
        return m;
    }
    for (const Simplex& s : by_dim_[d]) {
        std::vector<std::pair<int, int>> col;
        Simplex f(s.size() - 1);
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = 0, w = 0; j < s.size(); ++j)
                if (j != i) f[w++] = s[j];
            col.push_back({index_[d - 1].at(f), i % 2 == 0 ? 1 : -1});
        }
        m.add_column(std::move(col));
    }
    return m;
}

std::vector<int> homology_ranks(const SimplicialComplex& k) {
    const int n = k.dim();
    if (n < 0) throw ValidationError("homology of the empty complex");
    std::vector<int> bd_rank(n + 2, 0);
    for (int d = 1; d <= n; ++d) bd_rank[d] = sparse_rank(k.boundary_matrix(d));
    std::vector<int> out(n + 1);
    for (int i = 0; i <= n; ++i)
        out[i] = static_cast<int>(k.simplices(i).size()) - bd_rank[i] - bd_rank[i + 1];
    return out;
}

std::vector<int> reduced_homology_ranks(const SimplicialComplex& k) {
    std::vector<int> h = homology_ranks(k);
    h[0] -= 1;
    return h;
}

SimplicialComplex link_of_vertex(const SimplicialComplex& k, int v,
                                 std::vector<int>* vertex_map) {
    std::vector<Simplex> simps;
    std::set<int> verts;
    for (int d = 1; d <= k.dim(); ++d)
        for (const Simplex& s : k.simplices(d)) {
            if (!std::binary_search(s.begin(), s.end(), v)) continue;
            Simplex f;
            for (int w : s)
                if (w != v) f.push_back(w);
            simps.push_back(f);
            for (int w : f) verts.insert(w);
        }
    // compact the vertex ids, preserving order
    std::vector<int> vmap(verts.begin(), verts.end());
    std::unordered_map<int, int> inv;
    for (std::size_t i = 0; i < vmap.size(); ++i) inv[vmap[i]] = static_cast<int>(i);
    for (auto& s : simps)
        for (auto& w : s) w = inv[w];
    if (vertex_map) *vertex_map = vmap;
    return SimplicialComplex::from_simplices(static_cast<int>(vmap.size()), std::move(simps));
}

FilteredComplex::FilteredComplex(SimplicialComplex k, Poset poset,
                                 std::vector<std::vector<int>> stratum)
    : k_(std::move(k)), poset_(std::move(poset)), stratum_(std::move(stratum)) {
    finish_init();
}

void FilteredComplex::finish_init() {
    offsets_.assign(k_.dim() + 1, 0);
    flat_count_ = 0;
    for (int d = 0; d <= k_.dim(); ++d) {
        offsets_[d] = static_cast<int>(flat_count_);
        flat_count_ += k_.simplices(d).size();
    }
    if (static_cast<int>(stratum_.size()) != k_.dim() + 1)
        throw ValidationError("stratum table has wrong number of dimensions");
    for (int d = 0; d <= k_.dim(); ++d)
        if (stratum_[d].size() != k_.simplices(d).size())
            throw ValidationError("stratum table has wrong size in dimension " +
                                  std::to_string(d));
}

FilteredComplex FilteredComplex::trivial(SimplicialComplex k, const std::string& label) {
    Poset p = Poset::antichain({label});
    std::vector<std::vector<int>> strata(k.dim() + 1);
    for (int d = 0; d <= k.dim(); ++d) strata[d].assign(k.simplices(d).size(), 0);
    return FilteredComplex(std::move(k), std::move(p), std::move(strata));
}

int FilteredComplex::stratum_of(const Simplex& s) const {
    int i = k_.index_of(s);
    if (i < 0) throw ValidationError("simplex not in complex");
    return stratum_[s.size() - 1][i];
}

int FilteredComplex::stratum_dim(int elt) const {
    if (stratum_dim_cache_.empty()) {
        stratum_dim_cache_.assign(poset_.size(), -1);
        for (int d = 0; d <= k_.dim(); ++d)
            for (int s : stratum_[d]) stratum_dim_cache_[s] = std::max(stratum_dim_cache_[s], d);
    }
    return stratum_dim_cache_[elt];
}

std::vector<int> FilteredComplex::singular_elements() const {
    std::vector<int> out;
    for (int i = 0; i < poset_.size(); ++i)
        if (!poset_.is_maximal(i) && !stratum_empty(i)) out.push_back(i);
    return out;
}

bool FilteredComplex::is_trivially_stratified() const {
    return singular_elements().empty();
}

void FilteredComplex::validate() const {
    // Labels must be monotone along faces: every face of s carries a label
    // <= label(s). That makes each X_{<=a} a subcomplex and gives the
    // label-level frontier condition.
    for (int d = 1; d <= k_.dim(); ++d) {
        const auto& simps = k_.simplices(d);
        for (std::size_t i = 0; i < simps.size(); ++i) {
            const Simplex& s = simps[i];
            Simplex f(s.size() - 1);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                for (std::size_t j = 0, w = 0; j < s.size(); ++j)
                    if (j != drop) f[w++] = s[j];
                int fs = stratum_[d - 1][k_.index_of(f)];
                if (!poset_.leq(fs, stratum_[d][i]))
                    throw ValidationError(
                        "filtration violates the subcomplex/frontier condition: face of a '" +
                        poset_.label(stratum_[d][i]) + "' simplex is labelled '" +
                        poset_.label(fs) + "'");
            }
        }
    }
    // top simplices must sit in the regular part (maximal labels)
    for (std::size_t i = 0; i < k_.simplices(k_.dim()).size(); ++i) {
        int s = stratum_[k_.dim()][i];
        if (!poset_.is_maximal(s))
            throw ValidationError("top-dimensional simplex labelled by non-maximal stratum '" +
                                  poset_.label(s) + "'");
    }
}

std::vector<char> FilteredComplex::closed_skeleton_mask(int j) const {
    // closure of the union of strata with dim <= j: all faces of simplices
    // whose stratum has dimension <= j
    std::vector<char> mask(flat_count_, 0);
    for (int d = 0; d <= k_.dim(); ++d) {
        const auto& simps = k_.simplices(d);
        for (std::size_t i = 0; i < simps.size(); ++i) {
            if (stratum_dim(stratum_[d][i]) > j) continue;
            // mark s and all faces
            const Simplex& s = simps[i];
            const int n = static_cast<int>(s.size());
            for (int m = 1; m < (1 << n); ++m) {
                Simplex f;
                for (int b = 0; b < n; ++b)
                    if (m >> b & 1) f.push_back(s[b]);
                mask[flat_index(static_cast<int>(f.size()) - 1, k_.index_of(f))] = 1;
            }
        }
    }
    return mask;
}

FilteredComplex barycentric(const FilteredComplex& fc) {
    const SimplicialComplex& k = fc.complex();
    const int dim = k.dim();
    // new vertex ids: simplices ordered by (dim, lex), i.e. flat order
    std::vector<int> vertex_id(fc.flat_size());
    int next = 0;
    for (int d = 0; d <= dim; ++d)
        for (std::size_t i = 0; i < k.simplices(d).size(); ++i)
            vertex_id[fc.flat_index(d, static_cast<int>(i))] = next++;

    // chains of the face poset; chains_at[flat] lists chains with top = flat,
    // each chain stored as increasing vertex ids
    std::vector<std::vector<Simplex>> chains_at(fc.flat_size());
    std::vector<Simplex> all_chains;
    std::vector<int> chain_label;
    for (int d = 0; d <= dim; ++d) {
        for (std::size_t i = 0; i < k.simplices(d).size(); ++i) {
            const Simplex& s = k.simplices(d)[static_cast<int>(i)];
            int flat = fc.flat_index(d, static_cast<int>(i));
            int vid = vertex_id[flat];
            std::vector<Simplex> mine;
            mine.push_back({vid});
            const int n = static_cast<int>(s.size());
            for (int m = 1; m < (1 << n) - 1; ++m) {
                Simplex f;
                for (int b = 0; b < n; ++b)
                    if (m >> b & 1) f.push_back(s[b]);
                int fflat = fc.flat_index(static_cast<int>(f.size()) - 1, k.index_of(f));
                for (const Simplex& c : chains_at[fflat]) {
                    Simplex e = c;
                    e.push_back(vid);
                    mine.push_back(std::move(e));
                }
            }
            for (const Simplex& c : mine) {
                all_chains.push_back(c);
                chain_label.push_back(fc.stratum(d, static_cast<int>(i)));
            }
            chains_at[flat] = std::move(mine);
        }
    }
    SimplicialComplex sub = SimplicialComplex::from_simplices(next, all_chains);
    std::vector<std::vector<int>> strata(sub.dim() + 1);
    for (int d = 0; d <= sub.dim(); ++d) strata[d].assign(sub.simplices(d).size(), -1);
    for (std::size_t c = 0; c < all_chains.size(); ++c) {
        const Simplex& s = all_chains[c];
        strata[s.size() - 1][sub.index_of(s)] = chain_label[c];
    }
    return FilteredComplex(std::move(sub), fc.poset(), std::move(strata));
}

FilteredComplex link_at_simplex(const FilteredComplex& fc, const Simplex& sigma) {
    const SimplicialComplex& k = fc.complex();
    if (!k.contains(sigma)) throw ValidationError("link at a simplex not in the complex");
    std::vector<Simplex> simps;
    std::vector<int> labels;
    std::set<int> verts;
    const int sd = static_cast<int>(sigma.size());
    for (int d = sd; d <= k.dim(); ++d)
        for (std::size_t i = 0; i < k.simplices(d).size(); ++i) {
            const Simplex& s = k.simplices(d)[i];
            if (!std::includes(s.begin(), s.end(), sigma.begin(), sigma.end())) continue;
            Simplex f;
            for (int w : s)
                if (!std::binary_search(sigma.begin(), sigma.end(), w)) f.push_back(w);
            if (f.empty()) continue;
            simps.push_back(f);
            // transverse-sphere convention: the link simplex inherits the
            // stratum of the coface through sigma
            labels.push_back(fc.stratum(d, static_cast<int>(i)));
            for (int w : f) verts.insert(w);
        }
    std::vector<int> vmap(verts.begin(), verts.end());
    std::unordered_map<int, int> inv;
    for (std::size_t i = 0; i < vmap.size(); ++i) inv[vmap[i]] = static_cast<int>(i);
    for (auto& s : simps)
        for (auto& w : s) w = inv[w];
    SimplicialComplex lk = SimplicialComplex::from_simplices(static_cast<int>(vmap.size()), simps);
    std::vector<std::vector<int>> strata(lk.dim() + 1);
    for (int d = 0; d <= lk.dim(); ++d) strata[d].assign(lk.simplices(d).size(), -1);
    for (std::size_t c = 0; c < simps.size(); ++c)
        strata[simps[c].size() - 1][lk.index_of(simps[c])] = labels[c];
    // restrict the poset to the labels that occur
    std::set<int> used;
    for (auto& row : strata)
        for (int s : row) used.insert(s);
    std::vector<std::string> keep_labels;
    std::unordered_map<int, int> relab;
    for (int u : used) {
        relab[u] = static_cast<int>(keep_labels.size());
        keep_labels.push_back(fc.poset().label(u));
    }
    std::vector<std::pair<std::string, std::string>> rels;
    for (int a : used)
        for (int b : used)
            if (a != b && fc.poset().leq(a, b))
                rels.push_back({fc.poset().label(a), fc.poset().label(b)});
    Poset sub = Poset::from_relations(keep_labels, rels);
    for (auto& row : strata)
        for (int& s : row) s = relab[s];
    return FilteredComplex(std::move(lk), std::move(sub), std::move(strata));
}

FilteredComplex link_at_vertex(const FilteredComplex& fc, int v) {
    return link_at_simplex(fc, {v});
}

std::pair<FilteredComplex, FundamentalCycle> barycentric_oriented(const FilteredComplex& fc,
                                                                  const FundamentalCycle& c) {
    const SimplicialComplex& k = fc.complex();
    const int n = k.dim();
    if (static_cast<int>(c.signs.size()) != static_cast<int>(k.simplices(n).size()))
        throw ValidationError("orientation does not match the complex");
    FilteredComplex sub = barycentric(fc);

    // decode subdivision vertex ids back to the carrier simplices
    std::vector<const Simplex*> id_to_simplex;
    id_to_simplex.reserve(fc.flat_size());
    for (int d = 0; d <= n; ++d)
        for (const Simplex& s : k.simplices(d)) id_to_simplex.push_back(&s);

    FundamentalCycle out;
    out.degree = n;
    const auto& tops = sub.complex().simplices(n);
    out.signs.assign(tops.size(), 0);
    for (std::size_t t = 0; t < tops.size(); ++t) {
        const Simplex& chain = tops[t];  // ascending ids = ascending dims
        // vertex-insertion order along the flag
        std::vector<int> order;
        std::vector<char> seen;
        const Simplex* top = id_to_simplex[chain.back()];
        seen.assign(top->size(), 0);
        auto pos_in_top = [&](int v) {
            return static_cast<int>(std::lower_bound(top->begin(), top->end(), v) -
                                    top->begin());
        };
        for (int id : chain) {
            const Simplex* s = id_to_simplex[id];
            for (int v : *s) {
                int pos = pos_in_top(v);
                if (!seen[pos]) {
                    seen[pos] = 1;
                    order.push_back(pos);
                }
            }
        }
        // parity of the insertion order as a permutation of the sorted top
        int sgn = 1;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t j = i + 1; j < order.size(); ++j)
                if (order[i] > order[j]) sgn = -sgn;
        out.signs[t] = c.signs[k.index_of(*top)] * sgn;
    }
    return {std::move(sub), std::move(out)};
}

FilteredComplex link_at_stratum(const FilteredComplex& fc, const std::string& label) {
    int elt = fc.poset().index_of(label);
    if (fc.stratum_empty(elt)) throw ValidationError("stratum '" + label + "' is empty");
    const int sdim = fc.stratum_dim(elt);
    // one subdivision guarantees the stratum contains top-dimensional
    // simplices whose links are the transverse links
    FilteredComplex sub = barycentric(fc);
    std::vector<Simplex> carriers;
    for (std::size_t i = 0; i < sub.complex().simplices(sdim).size(); ++i)
        if (sub.stratum(sdim, static_cast<int>(i)) == elt)
            carriers.push_back(sub.complex().simplices(sdim)[i]);
    if (carriers.empty()) throw ValidationError("stratum has no carrier after subdivision");
    FilteredComplex first = link_at_simplex(sub, carriers[0]);
    std::vector<int> ranks = homology_ranks(first.complex());
    for (std::size_t i = 1; i < carriers.size(); ++i) {
        FilteredComplex other = link_at_simplex(sub, carriers[i]);
        if (homology_ranks(other.complex()) != ranks)
            throw NonUniformLink("links along stratum '" + label +
                                 "' have differing homology ranks");
    }
    return first;
}

FundamentalCycle orient(const FilteredComplex& fc) {
    const SimplicialComplex& k = fc.complex();
    const int n = k.dim();
    const auto& tops = k.simplices(n);
    if (tops.empty()) throw ValidationError("orient: empty complex");

    // regular part must be pure-dimensional: every maximal-labelled simplex
    // is a face of a top simplex; here we check the top labels are maximal
    for (std::size_t i = 0; i < tops.size(); ++i)
        if (!fc.poset().is_maximal(fc.stratum(n, static_cast<int>(i))))
            throw NotPseudomanifold("top simplex in a singular stratum");

    // codim-1 adjacency between top simplices
    const auto& faces = k.simplices(n - 1);
    std::vector<std::vector<int>> cofaces(faces.size());
    for (std::size_t i = 0; i < tops.size(); ++i) {
        const Simplex& s = tops[i];
        Simplex f(s.size() - 1);
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            for (std::size_t j = 0, w = 0; j < s.size(); ++j)
                if (j != drop) f[w++] = s[j];
            cofaces[k.index_of(f)].push_back(static_cast<int>(i));
        }
    }
    for (std::size_t f = 0; f < faces.size(); ++f)
        if (cofaces[f].size() != 2)
            throw NotPseudomanifold("codim-1 face with " + std::to_string(cofaces[f].size()) +
                                    " top cofaces");

    auto incidence = [&](int top, const Simplex& face) {
        const Simplex& s = tops[top];
        for (std::size_t j = 0; j < s.size(); ++j)
            if (!std::binary_search(face.begin(), face.end(), s[j]))
                return j % 2 == 0 ? 1 : -1;
        return 0;
    };

    std::vector<int> sign(tops.size(), 0);
    for (std::size_t seed = 0; seed < tops.size(); ++seed) {
        if (sign[seed] != 0) continue;
        sign[seed] = 1;
        std::vector<int> stack{static_cast<int>(seed)};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            const Simplex& s = tops[i];
            Simplex f(s.size() - 1);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                for (std::size_t j = 0, w = 0; j < s.size(); ++j)
                    if (j != drop) f[w++] = s[j];
                for (int j : cofaces[k.index_of(f)]) {
                    if (j == i) continue;
                    int want = -sign[i] * incidence(i, f) * incidence(j, f);
                    if (sign[j] == 0) {
                        sign[j] = want;
                        stack.push_back(j);
                    } else if (sign[j] != want) {
                        throw NonOrientable("orientation propagation hits a sign contradiction");
                    }
                }
            }
        }
    }

    // the boundary of the signed top chain must vanish
    std::vector<long long> bd(faces.size(), 0);
    for (std::size_t i = 0; i < tops.size(); ++i) {
        const Simplex& s = tops[i];
        Simplex f(s.size() - 1);
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            for (std::size_t j = 0, w = 0; j < s.size(); ++j)
                if (j != drop) f[w++] = s[j];
            bd[k.index_of(f)] += sign[i] * (drop % 2 == 0 ? 1 : -1);
        }
    }
    for (long long v : bd)
        if (v != 0) throw NotPseudomanifold("oriented top chain has nonzero boundary");

    FundamentalCycle out;
    out.degree = n;
    out.signs = std::move(sign);
    return out;
}

}  // namespace strat
