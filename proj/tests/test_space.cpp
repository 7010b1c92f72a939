#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "strat/corpus.hpp"
#include "strat/space.hpp"

using namespace strat;

TEST_CASE("dim follows the structural rules") {
    CHECK(dim(corpus::sphere_desc(2)) == 2);  // boundary of the tetrahedron
    CHECK(dim(SpaceDesc::join(corpus::sphere_desc(1), corpus::sphere_desc(1))) == 3);
    CHECK(dim(SpaceDesc::product(SpaceDesc::suspension(corpus::t2_desc()),
                                 corpus::sphere_desc(2))) == 5);
    CHECK(dim(SpaceDesc::cone(corpus::t2_desc())) == 3);
    // mixed-dimension atom errors
    CHECK_THROWS_AS(dim(corpus::named_atom("pt+S1")), ValidationError);
}

TEST_CASE("strat poset of a cone over a manifold is a chain") {
    Poset p = strat_poset_of(SpaceDesc::cone(corpus::t2_desc()));
    CHECK(p.size() == 2);
    CHECK(p.leq("*", "reg"));
    CHECK(p.depth() == 1);
}

TEST_CASE("strat poset of a product of cones is the diamond") {
    DescPtr d = SpaceDesc::product(SpaceDesc::cone(corpus::sphere_desc(2)),
                                   SpaceDesc::cone(corpus::sphere_desc(2)));
    Poset p = strat_poset_of(d);
    CHECK(p.size() == 4);
    CHECK(p.is_isomorphic_to(product(Poset::chain({"0", "1"}), Poset::chain({"0", "1"}))));
}

TEST_CASE("suspension has two incomparable cone points below the regular part") {
    Poset p = strat_poset_of(SpaceDesc::suspension(corpus::t2_desc()));
    CHECK(p.size() == 3);
    int p0 = p.index_of("*s0");
    int p1 = p.index_of("*s1");
    int reg = p.index_of("reg");
    CHECK(!p.comparable(p0, p1));
    CHECK(p.leq(p0, reg));
    CHECK(p.leq(p1, reg));
    // join with an explicit two-point atom is the same description
    DescPtr via_join = SpaceDesc::join(corpus::s0_desc(), corpus::t2_desc());
    CHECK(via_join->kind == SpaceDesc::Kind::Suspension);
}

TEST_CASE("strat poset of a product is the product of strat posets") {
    DescPtr x = SpaceDesc::suspension(corpus::sphere_desc(2));
    DescPtr y = SpaceDesc::cone(corpus::sphere_desc(1));
    Poset px = strat_poset_of(x);
    Poset py = strat_poset_of(y);
    Poset pxy = strat_poset_of(SpaceDesc::product(x, y));
    CHECK(pxy.is_isomorphic_to(product(px, py)));
}

TEST_CASE("links of strata") {
    // cone point of Cone(T2) -> T2
    DescPtr ct2 = SpaceDesc::cone(corpus::t2_desc());
    CHECK(desc_equal(link_of(ct2, "*"), corpus::t2_desc()));
    CHECK_THROWS_AS(link_of(ct2, "reg"), ValidationError);

    // (cone pt, cone pt) in Cone(S2) x Cone(S2) -> Join(S2, S2)
    DescPtr d = SpaceDesc::product(SpaceDesc::cone(corpus::sphere_desc(2)),
                                   SpaceDesc::cone(corpus::sphere_desc(2)));
    DescPtr lk = link_of(d, "(*,*)");
    CHECK(lk->kind == SpaceDesc::Kind::Join);
    CHECK(desc_equal(lk->left, corpus::sphere_desc(2)));
    CHECK(desc_equal(lk->right, corpus::sphere_desc(2)));
    CHECK(dim(lk) == 5);

    // (cone pt, reg) in Cone(S2) x S1 -> S2 (join with the empty link)
    DescPtr d2 = SpaceDesc::product(SpaceDesc::cone(corpus::sphere_desc(2)),
                                    corpus::sphere_desc(1));
    DescPtr lk2 = link_of(d2, "(*,reg)");
    CHECK(desc_equal(lk2, corpus::sphere_desc(2)));

    // suspension poles
    DescPtr st2 = SpaceDesc::suspension(corpus::t2_desc());
    CHECK(desc_equal(link_of(st2, "*s0"), corpus::t2_desc()));
    CHECK(desc_equal(link_of(st2, "*s1"), corpus::t2_desc()));
}

TEST_CASE("pseudomanifold detection") {
    CHECK(is_pseudomanifold(SpaceDesc::suspension(corpus::t2_desc())).ok);
    CHECK(is_pseudomanifold(SpaceDesc::product(SpaceDesc::suspension(corpus::sphere_desc(2)),
                                               corpus::sphere_desc(1)))
              .ok);
    // suspension of {pt} u S1: the regular part has mixed dimension
    PseudomanifoldReport rep =
        is_pseudomanifold(SpaceDesc::suspension(corpus::named_atom("pt+S1")));
    CHECK(!rep.ok);
    CHECK(!rep.detail.empty());
}

TEST_CASE("realize cone over a triangle boundary") {
    FilteredComplex fc = realize(SpaceDesc::cone(SpaceDesc::make_atom(
        "S1", FilteredComplex::trivial(corpus::boundary_simplex(2)))));
    CHECK(fc.complex().num_vertices() == 4);
    CHECK(fc.complex().f_vector() == std::vector<int>{4, 6, 3});
    // apex is labelled by the cone point
    CHECK(fc.poset().label(fc.stratum(0, fc.complex().index_of({3}))) == "*");
    CHECK(homology_ranks(fc.complex()) == std::vector<int>{1, 0, 0});
}

TEST_CASE("realize join of two circles is S^3") {
    FilteredComplex fc =
        realize(SpaceDesc::join(corpus::sphere_desc(1), corpus::sphere_desc(1)));
    CHECK(fc.complex().num_vertices() == 6);
    CHECK(fc.complex().simplices(3).size() == 9);
    CHECK(homology_ranks(fc.complex()) == std::vector<int>{1, 0, 0, 1});
}

TEST_CASE("realize product of two 2-spheres") {
    FilteredComplex fc =
        realize(SpaceDesc::product(corpus::sphere_desc(2), corpus::sphere_desc(2)));
    CHECK(homology_ranks(fc.complex()) == std::vector<int>{1, 0, 2, 0, 1});
    // euler characteristic multiplies exactly
    CHECK(fc.complex().euler_characteristic() == 4);
}

TEST_CASE("realize suspension of the 2-sphere") {
    FilteredComplex fc = realize(SpaceDesc::suspension(corpus::sphere_desc(2)));
    CHECK(homology_ranks(fc.complex()) == std::vector<int>{1, 0, 0, 1});
    FundamentalCycle c = orient(fc);
    CHECK(c.degree == 3);
}

TEST_CASE("realize suspension of the torus orients") {
    FilteredComplex fc = realize(SpaceDesc::suspension(corpus::t2_desc()));
    CHECK(homology_ranks(fc.complex()) == std::vector<int>{1, 0, 2, 1});
    FundamentalCycle c = orient(fc);
    CHECK(c.degree == 3);
    CHECK(c.signs.size() == fc.complex().simplices(3).size());
}

TEST_CASE("links are compatible with realization on small descriptions") {
    // simplicial link of a realized stratum has the homology of the
    // realization of the structural link
    std::vector<DescPtr> descs = {
        SpaceDesc::cone(corpus::t2_desc()),
        SpaceDesc::suspension(corpus::sphere_desc(2)),
        SpaceDesc::product(SpaceDesc::cone(corpus::sphere_desc(1)), corpus::sphere_desc(1)),
    };
    for (const DescPtr& d : descs) {
        FilteredComplex fc = realize(d);
        fc.validate();
        Poset p = strat_poset_of(d);
        for (int i = 0; i < p.size(); ++i) {
            if (p.is_maximal(i)) continue;
            DescPtr structural = link_of(d, p.label(i));
            FilteredComplex realized_link = realize(structural);
            FilteredComplex simplicial_link = link_at_stratum(fc, p.label(i));
            CHECK(homology_ranks(simplicial_link.complex()) ==
                  homology_ranks(realized_link.complex()));
        }
    }
}

TEST_CASE("depth of the strat poset matches cone and join nesting") {
    std::mt19937 rng(4242);
    std::vector<DescPtr> atoms = {corpus::sphere_desc(1), corpus::sphere_desc(2),
                                  corpus::t2_desc()};
    for (int trial = 0; trial < 25; ++trial) {
        DescPtr d = atoms[rng() % atoms.size()];
        int depth = 0;
        int ops = static_cast<int>(rng() % 3);
        for (int i = 0; i < ops; ++i) {
            switch (rng() % 3) {
                case 0:
                    d = SpaceDesc::cone(d);
                    ++depth;
                    break;
                case 1:
                    d = SpaceDesc::suspension(d);
                    ++depth;
                    break;
                default:
                    d = SpaceDesc::product(d, atoms[rng() % atoms.size()]);
                    break;
            }
        }
        CHECK(strat_poset_of(d).depth() == depth);
    }
}
