#include "strat/poset.hpp"

#include <algorithm>
#include <numeric>

namespace strat {

void Poset::rebuild_index() {
    index_.clear();
    for (int i = 0; i < size(); ++i) {
        if (index_.count(labels_[i]))
            throw ValidationError("duplicate poset label '" + labels_[i] + "'");
        index_[labels_[i]] = i;
    }
}

void Poset::close_and_check() {
    const int n = size();
    for (int i = 0; i < n; ++i) leq_[i][i] = 1;  // reflexive
    // Floyd-Warshall style transitive closure
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (leq_[i][k])
                for (int j = 0; j < n; ++j)
                    if (leq_[k][j]) leq_[i][j] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (leq_[i][j] && leq_[j][i])
                throw ValidationError("relation has a cycle through '" + labels_[i] +
                                      "' and '" + labels_[j] + "'");
}

Poset Poset::from_relations(std::vector<std::string> labels,
                            const std::vector<std::pair<std::string, std::string>>& relations) {
    Poset p;
    p.labels_ = std::move(labels);
    p.rebuild_index();
    p.leq_.assign(p.size(), std::vector<char>(p.size(), 0));
    for (auto& [lo, hi] : relations) {
        auto a = p.index_.find(lo);
        auto b = p.index_.find(hi);
        if (a == p.index_.end() || b == p.index_.end())
            throw ValidationError("relation mentions unknown label");
        p.leq_[a->second][b->second] = 1;
    }
    p.close_and_check();
    return p;
}

Poset Poset::antichain(std::vector<std::string> labels) {
    return from_relations(std::move(labels), {});
}

Poset Poset::chain(std::vector<std::string> labels) {
    std::vector<std::pair<std::string, std::string>> rel;
    for (std::size_t i = 0; i + 1 < labels.size(); ++i) rel.push_back({labels[i], labels[i + 1]});
    return from_relations(std::move(labels), rel);
}

int Poset::index_of(const std::string& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) throw ValidationError("unknown poset label '" + l + "'");
    return it->second;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (is_maximal(i)) out.push_back(i);
    return out;
}

bool Poset::is_maximal(int i) const {
    for (int j = 0; j < size(); ++j)
        if (j != i && leq_[i][j]) return false;
    return true;
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        bool minimal = true;
        for (int j = 0; j < size(); ++j)
            if (j != i && leq_[j][i]) minimal = false;
        if (minimal) out.push_back(i);
    }
    return out;
}

int Poset::depth_below(int i) const {
    // longest chain ending at i, computed by memoized descent
    std::vector<int> memo(size(), -1);
    auto rec = [&](auto&& self, int x) -> int {
        if (memo[x] >= 0) return memo[x];
        int best = 0;
        for (int j = 0; j < size(); ++j)
            if (j != x && leq_[j][x]) best = std::max(best, self(self, j) + 1);
        return memo[x] = best;
    };
    return rec(rec, i);
}

int Poset::depth() const {
    if (empty()) throw ValidationError("depth of empty poset");
    int best = 0;
    for (int i = 0; i < size(); ++i) best = std::max(best, depth_below(i));
    return best;
}

std::vector<std::pair<int, int>> Poset::hasse_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b) {
            if (a == b || !leq_[a][b]) continue;
            bool cover = true;
            for (int c = 0; c < size(); ++c)
                if (c != a && c != b && leq_[a][c] && leq_[c][b]) cover = false;
            if (cover) out.push_back({a, b});
        }
    return out;
}

int Poset::strict_relation_count() const {
    int n = 0;
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b)
            if (a != b && leq_[a][b]) ++n;
    return n;
}

Poset product(const Poset& a, const Poset& b) {
    Poset p;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j)
            p.labels_.push_back("(" + a.label(i) + "," + b.label(j) + ")");
    p.rebuild_index();
    const int n = p.size();
    p.leq_.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j)
            for (int k = 0; k < a.size(); ++k)
                for (int l = 0; l < b.size(); ++l)
                    if (a.leq(i, k) && b.leq(j, l)) p.leq_[i * b.size() + j][k * b.size() + l] = 1;
    return p;
}

std::string make_unique_label(const std::string& base, const std::vector<std::string>& taken) {
    auto used = [&](const std::string& s) {
        return std::find(taken.begin(), taken.end(), s) != taken.end();
    };
    if (!used(base)) return base;
    for (int k = 2;; ++k) {
        std::string cand = base + "." + std::to_string(k);
        if (!used(cand)) return cand;
    }
}

Poset cone_poset(const Poset& a, std::string* star_label_out) {
    std::string star = make_unique_label("*", a.labels());
    if (star_label_out) *star_label_out = star;
    Poset p;
    p.labels_ = a.labels();
    p.labels_.insert(p.labels_.begin(), star);
    p.rebuild_index();
    const int n = p.size();
    p.leq_.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) p.leq_[0][i] = 1;
    p.leq_[0][0] = 1;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (a.leq(i, j)) p.leq_[i + 1][j + 1] = 1;
    for (int i = 0; i < n; ++i) p.leq_[i][i] = 1;
    return p;
}

Poset Poset::down_set(int top) const {
    std::vector<std::string> keep;
    std::vector<int> old_index;
    for (int i = 0; i < size(); ++i)
        if (leq_[i][top]) {
            keep.push_back(labels_[i]);
            old_index.push_back(i);
        }
    Poset p;
    p.labels_ = keep;
    p.rebuild_index();
    const int n = p.size();
    p.leq_.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (leq_[old_index[i]][old_index[j]]) p.leq_[i][j] = 1;
    return p;
}

bool Poset::is_isomorphic_to(const Poset& other) const {
    if (size() != other.size()) return false;
    if (strict_relation_count() != other.strict_relation_count()) return false;
    std::vector<int> perm(size());
    std::iota(perm.begin(), perm.end(), 0);
    // fine for the small posets this is used on in tests
    do {
        bool ok = true;
        for (int i = 0; i < size() && ok; ++i)
            for (int j = 0; j < size() && ok; ++j)
                if (leq(i, j) != other.leq(perm[i], perm[j])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool is_upward_closed(const UpwardSet& s) {
    const Poset& p = *s.poset;
    for (const auto& m : s.members)
        if (!p.contains(m)) throw ValidationError("upward set member not in poset");
    for (const auto& m : s.members) {
        int i = p.index_of(m);
        for (int j = 0; j < p.size(); ++j)
            if (p.leq(i, j) && !s.members.count(p.label(j))) return false;
    }
    return true;
}

}  // namespace strat
