#pragma once

#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "strat/errors.hpp"

namespace strat {

// Finite poset with opaque string labels. Construction computes the
// reflexive-transitive closure of the given relation and rejects cycles, so
// leq queries are O(1) afterwards.
class Poset {
public:
    Poset() = default;

    // relations are (lower, upper) pairs over the given labels
    static Poset from_relations(std::vector<std::string> labels,
                                const std::vector<std::pair<std::string, std::string>>& relations);
    static Poset antichain(std::vector<std::string> labels);
    static Poset chain(std::vector<std::string> labels);  // labels[0] < labels[1] < ...

    int size() const { return static_cast<int>(labels_.size()); }
    bool empty() const { return labels_.empty(); }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool contains(const std::string& l) const { return index_.count(l) > 0; }
    int index_of(const std::string& l) const;

    bool leq(int a, int b) const { return leq_[a][b] != 0; }
    bool leq(const std::string& a, const std::string& b) const {
        return leq(index_of(a), index_of(b));
    }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

    std::vector<int> maximal_elements() const;
    std::vector<int> minimal_elements() const;
    bool is_maximal(int i) const;

    // length of the longest strictly ascending chain; errors on the empty poset
    int depth() const;
    // longest strictly ascending chain ending at i (0 for minimal elements)
    int depth_below(int i) const;

    // covering relations (a, b) with a < b and nothing strictly between
    std::vector<std::pair<int, int>> hasse_edges() const;
    int strict_relation_count() const;

    // elements are pairs "(x,y)"; (x,x') <= (y,y') iff x <= y and x' <= y'
    friend Poset product(const Poset& a, const Poset& b);
    // adjoins a new smallest element; its label is "*" made unique if needed
    friend Poset cone_poset(const Poset& a, std::string* star_label_out);

    // restriction to {x : x <= top}, keeping label names
    Poset down_set(int top) const;

    bool is_isomorphic_to(const Poset& other) const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<char>> leq_;

    void rebuild_index();
    void close_and_check();
};

Poset product(const Poset& a, const Poset& b);
Poset cone_poset(const Poset& a, std::string* star_label_out = nullptr);

// Subset of poset elements intended to be upward closed.
struct UpwardSet {
    const Poset* poset;
    std::set<std::string> members;
};

bool is_upward_closed(const UpwardSet& s);

std::string make_unique_label(const std::string& base, const std::vector<std::string>& taken);

}  // namespace strat
