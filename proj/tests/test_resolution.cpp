#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "strat/corpus.hpp"
#include "strat/resolution.hpp"

using namespace strat;

TEST_CASE("resolve a cone over a manifold: one face, fiber the link, base a point") {
    FiberedCornersPtr r = resolve(SpaceDesc::cone(corpus::t2_desc()));
    CHECK(r->total_dim == 3);
    REQUIRE(r->faces.size() == 1);
    CHECK(desc_equal(r->faces[0].fiber_desc, corpus::t2_desc()));
    CHECK(r->faces[0].fiber_dim == 2);
    CHECK(r->faces[0].base_dim == 0);
    CHECK(r->corners.empty());
    CHECK(verify_ifs(*r).ok);
}

TEST_CASE("resolve the depth-two toy space Y x C(W x C(Z))") {
    // Y = S1, W = S1, Z = S2
    DescPtr y = corpus::sphere_desc(1);
    DescPtr w = corpus::sphere_desc(1);
    DescPtr z = corpus::sphere_desc(2);
    DescPtr d = SpaceDesc::product(
        y, SpaceDesc::cone(SpaceDesc::product(w, SpaceDesc::cone(z))));
    FiberedCornersPtr r = resolve(d);
    CHECK(r->total_dim == 1 + (1 + 2 + 1) + 1);
    REQUIRE(r->faces.size() == 2);
    CHECK(r->corners.size() == 1);
    CHECK(verify_ifs(*r).ok);

    // deepest stratum first in the blow-up order
    CHECK(r->blowup_order.size() == 2);

    // face of the bottom stratum: fiber res(W x C(Z)), base Y
    const FaceRecord* bottom = nullptr;
    const FaceRecord* middle = nullptr;
    for (const auto& f : r->faces) {
        if (f.base_dim == 1)
            bottom = &f;
        else
            middle = &f;
    }
    REQUIRE(bottom != nullptr);
    REQUIRE(middle != nullptr);
    // bottom: fiber W x C(Z) (dim 4), base Y (dim 1)
    CHECK(bottom->fiber_dim == 4);
    CHECK(desc_equal(bottom->base_desc, y));
    CHECK(bottom->fiber_desc->kind == SpaceDesc::Kind::Product);
    // middle: fiber Z (dim 2), base Y x C(W) (dim 3)
    CHECK(middle->fiber_dim == 2);
    CHECK(desc_equal(middle->fiber_desc, z));
    CHECK(middle->base_dim == 3);

    // the corner record: connecting fiber W over base Y
    const CornerRecord& c = r->corners[0];
    CHECK(c.connecting_fiber_dim == 1);
    CHECK(c.lower_base_dim == 1);
    CHECK(c.upper_base_dim == 3);
}

TEST_CASE("resolve a suspension: two faces, no corners") {
    FiberedCornersPtr r = resolve(SpaceDesc::suspension(corpus::sphere_desc(2)));
    REQUIRE(r->faces.size() == 2);
    for (const auto& f : r->faces) {
        CHECK(desc_equal(f.fiber_desc, corpus::sphere_desc(2)));
        CHECK(f.base_dim == 0);
    }
    CHECK(r->corners.empty());
    CHECK(verify_ifs(*r).ok);
}

TEST_CASE("verify_ifs rejects injected faults") {
    FiberedCornersPtr good = resolve(SpaceDesc::suspension(corpus::sphere_desc(2)));

    // corner with incomparable labels (the two poles)
    FiberedCorners bad1 = *good;
    CornerRecord fake;
    fake.lower = bad1.faces[0].stratum;
    fake.upper = bad1.faces[1].stratum;
    fake.connecting_fiber = SpaceDesc::empty();
    fake.connecting_fiber_dim = 2;
    fake.lower_base_dim = 0;
    fake.upper_base_dim = 3;
    bad1.corners.push_back(fake);
    IfsReport rep1 = verify_ifs(bad1);
    CHECK(!rep1.ok);
    CHECK(rep1.first_violation.find("incomparable") != std::string::npos);

    // face with broken dimension bookkeeping
    FiberedCorners bad2 = *good;
    bad2.faces[0].fiber_dim = 1;
    IfsReport rep2 = verify_ifs(bad2);
    CHECK(!rep2.ok);
    CHECK(rep2.first_violation.find("fiber dim") != std::string::npos);
}

TEST_CASE("face count equals the number of singular strata on random descriptions") {
    std::mt19937 rng(20240);
    std::vector<DescPtr> atoms = {corpus::sphere_desc(1), corpus::sphere_desc(2),
                                  corpus::t2_desc()};
    int built = 0;
    while (built < 50) {
        DescPtr d = atoms[rng() % atoms.size()];
        int ops = static_cast<int>(rng() % 3);
        for (int i = 0; i < ops; ++i) {
            switch (rng() % 4) {
                case 0:
                    d = SpaceDesc::cone(d);
                    break;
                case 1:
                    d = SpaceDesc::suspension(d);
                    break;
                case 2:
                    d = SpaceDesc::join(d, atoms[rng() % atoms.size()]);
                    break;
                default:
                    d = SpaceDesc::product(d, atoms[rng() % atoms.size()]);
                    break;
            }
        }
        if (strat_poset_of(d).depth() > 3) continue;
        if (!is_pseudomanifold(d).ok) continue;
        ++built;
        FiberedCornersPtr r = resolve(d);
        std::vector<int> dims = stratum_dims(d);
        int singular = 0;
        for (int i = 0; i < r->poset.size(); ++i)
            if (!r->poset.is_maximal(i) && dims[i] >= 0) ++singular;
        CHECK(static_cast<int>(r->faces.size()) == singular);
        CHECK(verify_ifs(*r).ok);
        // fibers and bases live strictly lower in depth
        for (const auto& f : r->faces) {
            CHECK(f.fiber->depth < r->depth);
            CHECK(f.base->depth < r->depth);
        }
    }
}

TEST_CASE("resolving a product with a manifold multiplies the bases") {
    DescPtr x = SpaceDesc::suspension(corpus::sphere_desc(2));
    DescPtr m = corpus::sphere_desc(1);
    FiberedCornersPtr rx = resolve(x);
    FiberedCornersPtr rxm = resolve(SpaceDesc::product(x, m));
    REQUIRE(rx->faces.size() == rxm->faces.size());
    for (std::size_t i = 0; i < rx->faces.size(); ++i) {
        // same fibers, bases multiplied by the manifold
        CHECK(desc_equal(rx->faces[i].fiber_desc, rxm->faces[i].fiber_desc));
        CHECK(rxm->faces[i].base_dim == rx->faces[i].base_dim + 1);
        CHECK(desc_equal(rxm->faces[i].base_desc,
                         SpaceDesc::product(rx->faces[i].base_desc, m)));
    }
}

TEST_CASE("blow-up schedule is a linear extension of the product order") {
    Poset sw = Poset::chain({"0", "1", "2"});
    Poset sy = Poset::chain({"0", "1"});
    auto sched = blowup_schedule(sw, sy);
    REQUIRE(sched.size() == 2);  // singular: {0,1} x {0}
    CHECK(sched[0] == std::pair<std::string, std::string>{"0", "0"});
    CHECK(sched[1] == std::pair<std::string, std::string>{"1", "0"});

    // property: no pair appears before a product-order predecessor
    Poset sw2 = product(Poset::chain({"a", "b"}), Poset::chain({"x", "y"}));
    auto sched2 = blowup_schedule(sw2, sw2);
    auto before = [&](const std::pair<std::string, std::string>& p,
                      const std::pair<std::string, std::string>& q) {
        return sw2.leq(p.first, q.first) && sw2.leq(p.second, q.second) && p != q;
    };
    for (std::size_t i = 0; i < sched2.size(); ++i)
        for (std::size_t j = i + 1; j < sched2.size(); ++j) CHECK(!before(sched2[j], sched2[i]));
}

TEST_CASE("grid resolution of a product bundle of cones") {
    DescPtr fiber = SpaceDesc::cone(corpus::sphere_desc(2));
    DescPtr base = SpaceDesc::cone(corpus::sphere_desc(1));
    GridResolution g = resolve_bundle(fiber, base);
    REQUIRE(g.vertical.size() == 1);
    REQUIRE(g.horizontal.size() == 1);
    CHECK(g.schedule.size() == 1);

    // vertical: fiber of phi^v is the link of the fiber's cone point
    CHECK(desc_equal(g.vertical[0].fiber_desc, corpus::sphere_desc(2)));
    // base of phi^v is the closure stratum of the total description: pt x base
    CHECK(g.vertical[0].base_total_dim == dim(base));

    // horizontal pull-back square: fiber of phi^h equals the fiber of the
    // face bundle of res(base)
    REQUIRE(g.res_base->faces.size() == 1);
    CHECK(desc_equal(g.horizontal[0].fiber_desc, g.res_base->faces[0].fiber_desc));
    // and its base fibers over B_alpha res(base) with fiber the bundle fiber
    CHECK(desc_equal(g.horizontal[0].base_total_desc,
                     SpaceDesc::product(fiber, g.horizontal[0].base_of_base_desc)));
    CHECK(desc_equal(g.horizontal[0].base_of_base_desc, g.res_base->faces[0].base_desc));
}

TEST_CASE("grid resolution degenerate cases") {
    // manifold fiber: no vertical faces
    GridResolution g1 = resolve_bundle(corpus::t2_desc(),
                                       SpaceDesc::suspension(corpus::sphere_desc(2)));
    CHECK(g1.vertical.empty());
    CHECK(g1.horizontal.size() == 2);
    CHECK(g1.schedule.empty());

    // point base: grid is the fiber resolution, no horizontal faces
    GridResolution g2 = resolve_bundle(SpaceDesc::suspension(corpus::sphere_desc(2)),
                                       corpus::pt_desc());
    CHECK(g2.horizontal.empty());
    CHECK(g2.vertical.size() == 2);
    CHECK(g2.res_fiber->faces.size() == 2);
}
