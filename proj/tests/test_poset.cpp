#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strat/poset.hpp"

using namespace strat;

namespace {

Poset two_chain() { return Poset::chain({"0", "1"}); }  // the poset [1]

// all posets on the labels {a, b, c, ...} up to n elements, by brute force
std::vector<Poset> all_posets_up_to(int n) {
    std::vector<Poset> out;
    std::vector<std::string> names{"a", "b", "c"};
    for (int k = 1; k <= n; ++k) {
        std::vector<std::string> labels(names.begin(), names.begin() + k);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (i != j) pairs.push_back({i, j});
        const int m = static_cast<int>(pairs.size());
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<std::pair<std::string, std::string>> rel;
            for (int b = 0; b < m; ++b)
                if (mask >> b & 1) rel.push_back({labels[pairs[b].first], labels[pairs[b].second]});
            try {
                Poset p = Poset::from_relations(labels, rel);
                // dedupe: only keep if the closed relation set is new
                bool fresh = true;
                for (const Poset& q : out) {
                    if (q.size() != p.size()) continue;
                    bool same = true;
                    for (int i = 0; i < k && same; ++i)
                        for (int j = 0; j < k && same; ++j)
                            if (q.leq(i, j) != p.leq(i, j)) same = false;
                    if (same) {
                        fresh = false;
                        break;
                    }
                }
                if (fresh) out.push_back(std::move(p));
            } catch (const ValidationError&) {
                // cyclic relation, skip
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("construction computes transitive closure and rejects cycles") {
    Poset p = Poset::from_relations({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(p.leq("a", "c"));
    CHECK(!p.leq("c", "a"));
    CHECK(p.depth() == 2);
    CHECK_THROWS_AS(Poset::from_relations({"a", "b"}, {{"a", "b"}, {"b", "a"}}),
                    ValidationError);
}

TEST_CASE("product of [1] with [1] is the diamond") {
    Poset d = product(two_chain(), two_chain());
    CHECK(d.size() == 4);
    CHECK(d.leq("(0,0)", "(0,1)"));
    CHECK(d.leq("(0,0)", "(1,0)"));
    CHECK(d.leq("(0,0)", "(1,1)"));
    CHECK(d.leq("(0,1)", "(1,1)"));
    CHECK(d.leq("(1,0)", "(1,1)"));
    CHECK(!d.leq("(0,1)", "(1,0)"));
    CHECK(!d.leq("(1,0)", "(0,1)"));
}

TEST_CASE("product with a point is an isomorphic copy") {
    Poset a = Poset::from_relations({"x", "y", "z"}, {{"x", "y"}});
    Poset p = product(a, Poset::antichain({"pt"}));
    CHECK(p.is_isomorphic_to(a));
}

TEST_CASE("product of [1] with a 3-chain, against brute-force pair enumeration") {
    Poset a = two_chain();
    Poset b = Poset::chain({"0", "1", "2"});
    Poset p = product(a, b);
    CHECK(p.size() == 6);
    // oracle: count ordered strict pairs componentwise
    int strict = 0;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j)
            for (int k = 0; k < a.size(); ++k)
                for (int l = 0; l < b.size(); ++l)
                    if ((i != k || j != l) && a.leq(i, k) && b.leq(j, l)) ++strict;
    CHECK(strict == 12);
    CHECK(p.strict_relation_count() == strict);
}

TEST_CASE("cone adjoins a smallest element") {
    Poset c0 = cone_poset(Poset());
    CHECK(c0.size() == 1);  // C(empty) is a single point
    Poset c1 = cone_poset(two_chain());
    CHECK(c1.size() == 3);
    CHECK(c1.leq("*", "0"));
    CHECK(c1.leq("*", "1"));
    CHECK(c1.depth() == 2);
    Poset c2 = cone_poset(Poset::antichain({"p", "q"}));
    CHECK(c2.size() == 3);
    CHECK(c2.leq("*", "p"));
    CHECK(c2.leq("*", "q"));
    CHECK(!c2.comparable(c2.index_of("p"), c2.index_of("q")));
    // nested cones keep labels unique
    std::string star2;
    Poset c3 = cone_poset(c1, &star2);
    CHECK(star2 != "*");
    CHECK(c3.leq(star2, "*"));
}

TEST_CASE("depth") {
    CHECK(Poset::antichain({"x"}).depth() == 0);
    CHECK(two_chain().depth() == 1);
    CHECK_THROWS_AS(Poset().depth(), ValidationError);
    // depth(cone(A)) = depth(A) + 1 for nonempty A, exhaustive on <= 3 elements
    for (const Poset& p : all_posets_up_to(3))
        CHECK(cone_poset(p).depth() == p.depth() + 1);
}

TEST_CASE("upward closed sets") {
    Poset p = two_chain();
    CHECK(is_upward_closed({&p, {"1"}}));
    CHECK(!is_upward_closed({&p, {"0"}}));
    CHECK(is_upward_closed({&p, {"0", "1"}}));
    CHECK(is_upward_closed({&p, {}}));

    // over the diamond: exhaustive over the 16 subsets; complements of
    // upward-closed sets are downward closed, and the family is closed
    // under union and intersection
    Poset d = product(two_chain(), two_chain());
    std::vector<std::set<std::string>> closed;
    for (int mask = 0; mask < 16; ++mask) {
        std::set<std::string> s;
        for (int i = 0; i < 4; ++i)
            if (mask >> i & 1) s.insert(d.label(i));
        UpwardSet u{&d, s};
        if (is_upward_closed(u)) {
            closed.push_back(s);
            // complement is downward closed
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    if (d.leq(j, i) && !s.count(d.label(i))) CHECK(!s.count(d.label(j)));
        }
    }
    for (const auto& s1 : closed)
        for (const auto& s2 : closed) {
            std::set<std::string> uni = s1, inter;
            uni.insert(s2.begin(), s2.end());
            for (const auto& x : s1)
                if (s2.count(x)) inter.insert(x);
            CHECK(is_upward_closed({&d, uni}));
            CHECK(is_upward_closed({&d, inter}));
        }
}

TEST_CASE("product is associative and commutative up to isomorphism") {
    auto posets = all_posets_up_to(2);
    for (const Poset& a : posets)
        for (const Poset& b : posets) {
            CHECK(product(a, b).is_isomorphic_to(product(b, a)));
            for (const Poset& c : posets)
                CHECK(product(product(a, b), c).is_isomorphic_to(product(a, product(b, c))));
        }
}

TEST_CASE("depth of a product is the sum of depths") {
    auto posets = all_posets_up_to(3);
    for (const Poset& a : posets)
        for (const Poset& b : posets)
            CHECK(product(a, b).depth() == a.depth() + b.depth());
}

TEST_CASE("hasse edges of a chain") {
    Poset c = Poset::chain({"0", "1", "2"});
    auto h = c.hasse_edges();
    CHECK(h.size() == 2);
}
