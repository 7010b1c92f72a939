#include "strat/resolution.hpp"

#include <algorithm>

#include "strat/errors.hpp"

namespace strat {

namespace {

std::pair<std::string, std::string> split_pair(const std::string& l) {
    if (l.size() < 3 || l.front() != '(' || l.back() != ')')
        throw ValidationError("not a pair label: '" + l + "'");
    int depth = 0;
    for (std::size_t i = 1; i + 1 < l.size(); ++i) {
        if (l[i] == '(') ++depth;
        if (l[i] == ')') --depth;
        if (l[i] == ',' && depth == 0)
            return {l.substr(1, i - 1), l.substr(i + 1, l.size() - i - 2)};
    }
    throw ValidationError("not a pair label: '" + l + "'");
}

// link of stratum a inside the closure of stratum b, for a < b
DescPtr link_within(const DescPtr& d, const std::string& a, const std::string& b) {
    switch (d->kind) {
        case SpaceDesc::Kind::Atom:
            // atom closures keep their label names
            return link_of(closure_of(d, b), a);
        case SpaceDesc::Kind::Cone: {
            if (a == cone_star_label(d->left)) return closure_of(d->left, b);
            return link_within(d->left, a, b);
        }
        case SpaceDesc::Kind::Suspension: {
            std::string p0, p1;
            susp_pole_labels(d->left, p0, p1);
            if (a == p0 || a == p1) return closure_of(d->left, b);
            return link_within(d->left, a, b);
        }
        case SpaceDesc::Kind::Product: {
            auto [ax, ay] = split_pair(a);
            auto [bx, by] = split_pair(b);
            DescPtr lx = ax == bx ? SpaceDesc::empty() : link_within(d->left, ax, bx);
            DescPtr ly = ay == by ? SpaceDesc::empty() : link_within(d->right, ay, by);
            return SpaceDesc::join(lx, ly);
        }
        case SpaceDesc::Kind::Join: {
            auto [ax, ay] = split_pair(a);
            auto [bx, by] = split_pair(b);
            std::string star_a, star_b;
            join_star_labels(d, star_a, star_b);
            // end strata: the closure of b lives in a single factor
            if (by == star_b) return link_within(d->left, ax, bx);
            if (bx == star_a) return link_within(d->right, ay, by);
            // open-part stratum: the closure of b is a join of closures
            DescPtr lx, ly;
            if (ax == star_a)
                lx = closure_of(d->left, bx);
            else if (ax == bx)
                lx = SpaceDesc::empty();
            else
                lx = link_within(d->left, ax, bx);
            if (ay == star_b)
                ly = closure_of(d->right, by);
            else if (ay == by)
                ly = SpaceDesc::empty();
            else
                ly = link_within(d->right, ay, by);
            return SpaceDesc::join(lx, ly);
        }
        default:
            throw ValidationError("link_within on empty description");
    }
}

std::vector<int> singular_elements(const Poset& p, const std::vector<int>& dims) {
    std::vector<int> out;
    for (int i = 0; i < p.size(); ++i)
        if (!p.is_maximal(i) && dims[i] >= 0) out.push_back(i);
    return out;
}

FiberedCornersPtr resolve_hybrid(const DescPtr& d);

}  // namespace

FiberedCornersPtr resolve(const DescPtr& d) {
    PseudomanifoldReport pm = is_pseudomanifold(d);
    if (!pm.ok) throw NotPseudomanifold(pm.detail);
    return resolve_hybrid(d);
}

namespace {

// Recursive resolution entry. Stratum closures are hybrid spaces: they may
// carry codimension-one strata (the future corner faces), so only the
// top-level resolve() demands a pseudomanifold.
FiberedCornersPtr resolve_hybrid(const DescPtr& d) {
    auto out = std::make_shared<FiberedCorners>();
    out->space = d;
    out->poset = strat_poset_of(d);
    out->total_dim = dim(d);
    out->depth = out->poset.depth();
    std::vector<int> dims = stratum_dims(d);
    std::vector<int> singular = singular_elements(out->poset, dims);

    // non-decreasing enumeration: repeatedly blow up a minimal remaining
    // singular stratum, ties broken by depth then label
    std::vector<int> remaining = singular;
    while (!remaining.empty()) {
        int best = -1;
        for (int cand : remaining) {
            bool minimal = true;
            for (int other : remaining)
                if (other != cand && out->poset.leq(other, cand)) minimal = false;
            if (!minimal) continue;
            if (best < 0 ||
                std::make_pair(out->poset.depth_below(cand), out->poset.label(cand)) <
                    std::make_pair(out->poset.depth_below(best), out->poset.label(best)))
                best = cand;
        }
        out->blowup_order.push_back(out->poset.label(best));
        remaining.erase(std::find(remaining.begin(), remaining.end(), best));
    }

    for (const std::string& label : out->blowup_order) {
        FaceRecord face;
        face.stratum = label;
        face.fiber_desc = link_of(d, label);
        face.base_desc = closure_of(d, label);
        face.fiber = resolve_hybrid(face.fiber_desc);
        face.base = resolve_hybrid(face.base_desc);
        face.fiber_dim = dim(face.fiber_desc);
        face.base_dim = dim(face.base_desc);
        out->faces.push_back(std::move(face));
    }

    for (int a : singular)
        for (int b : singular) {
            if (a == b || !out->poset.leq(a, b)) continue;
            CornerRecord corner;
            corner.lower = out->poset.label(a);
            corner.upper = out->poset.label(b);
            corner.connecting_fiber = link_within(d, corner.lower, corner.upper);
            corner.connecting_fiber_dim = dim(corner.connecting_fiber);
            corner.lower_base_dim = dim(closure_of(d, corner.lower));
            corner.upper_base_dim = dim(closure_of(d, corner.upper));
            out->corners.push_back(std::move(corner));
        }
    return out;
}

}  // namespace

IfsReport verify_ifs(const FiberedCorners& f) {
    IfsReport rep;
    auto fail = [&](const std::string& why) {
        rep.ok = false;
        if (rep.first_violation.empty()) rep.first_violation = why;
    };

    std::vector<int> singular;
    for (int i = 0; i < f.poset.size(); ++i)
        if (!f.poset.is_maximal(i)) singular.push_back(i);

    // every singular stratum carries exactly one face record
    for (int s : singular) {
        int count = 0;
        for (const auto& face : f.faces)
            if (face.stratum == f.poset.label(s)) ++count;
        if (count != 1)
            fail("stratum '" + f.poset.label(s) + "' has " + std::to_string(count) +
                 " face records");
    }

    for (const auto& face : f.faces) {
        if (!f.poset.contains(face.stratum) ||
            f.poset.is_maximal(f.poset.index_of(face.stratum))) {
            fail("face record for non-singular stratum '" + face.stratum + "'");
            continue;
        }
        if (face.fiber_dim + face.base_dim + 1 != f.total_dim)
            fail("face '" + face.stratum + "': fiber dim " + std::to_string(face.fiber_dim) +
                 " + base dim " + std::to_string(face.base_dim) + " + 1 != total dim " +
                 std::to_string(f.total_dim));
        if (!face.fiber || !face.base) {
            fail("face '" + face.stratum + "' misses a resolved fiber or base");
            continue;
        }
        if (face.fiber->total_dim != face.fiber_dim || face.base->total_dim != face.base_dim)
            fail("face '" + face.stratum + "': resolved dims disagree with the record");
        // termination measure
        if (face.fiber->depth >= f.depth || face.base->depth >= f.depth)
            fail("face '" + face.stratum + "': fiber or base depth not smaller");
        IfsReport sub = verify_ifs(*face.fiber);
        if (!sub.ok) fail("fiber of '" + face.stratum + "': " + sub.first_violation);
        sub = verify_ifs(*face.base);
        if (!sub.ok) fail("base of '" + face.stratum + "': " + sub.first_violation);
    }

    for (const auto& corner : f.corners) {
        if (!f.poset.contains(corner.lower) || !f.poset.contains(corner.upper)) {
            fail("corner mentions unknown strata");
            continue;
        }
        int a = f.poset.index_of(corner.lower);
        int b = f.poset.index_of(corner.upper);
        if (a == b || !f.poset.leq(a, b)) {
            fail("corner (" + corner.lower + ", " + corner.upper +
                 ") has incomparable or equal labels");
            continue;
        }
        if (corner.connecting_fiber_dim + corner.lower_base_dim + 1 != corner.upper_base_dim)
            fail("corner (" + corner.lower + ", " + corner.upper + "): connecting fiber dim " +
                 std::to_string(corner.connecting_fiber_dim) + " + lower base dim " +
                 std::to_string(corner.lower_base_dim) + " + 1 != upper base dim " +
                 std::to_string(corner.upper_base_dim));
    }
    return rep;
}

std::vector<std::pair<std::string, std::string>> blowup_schedule(const Poset& sw,
                                                                 const Poset& sy) {
    struct Item {
        int depth_sum;
        std::string a, b;
    };
    std::vector<Item> items;
    for (int a = 0; a < sw.size(); ++a) {
        if (sw.is_maximal(a)) continue;
        for (int b = 0; b < sy.size(); ++b) {
            if (sy.is_maximal(b)) continue;
            items.push_back({sw.depth_below(a) + sy.depth_below(b), sw.label(a), sy.label(b)});
        }
    }
    std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
        return std::tie(x.depth_sum, x.a, x.b) < std::tie(y.depth_sum, y.a, y.b);
    });
    std::vector<std::pair<std::string, std::string>> out;
    for (auto& i : items) out.push_back({i.a, i.b});
    return out;
}

GridResolution resolve_bundle(const DescPtr& fiber, const DescPtr& base) {
    for (const DescPtr& d : {fiber, base}) {
        PseudomanifoldReport pm = is_pseudomanifold(d);
        if (!pm.ok) throw NotPseudomanifold(pm.detail);
    }
    GridResolution g;
    g.fiber_space = fiber;
    g.base_space = base;
    g.total_dim = dim(fiber) + dim(base);
    g.res_fiber = resolve(fiber);
    g.res_base = resolve(base);

    Poset pw = strat_poset_of(fiber);
    std::vector<int> dw = stratum_dims(fiber);
    for (int a = 0; a < pw.size(); ++a) {
        if (pw.is_maximal(a) || dw[a] < 0) continue;
        VerticalFace v;
        v.stratum = pw.label(a);
        v.fiber_desc = link_of(fiber, v.stratum);
        v.base_total_desc = SpaceDesc::product(closure_of(fiber, v.stratum), base);
        v.fiber_dim = dim(v.fiber_desc);
        v.base_total_dim = dim(v.base_total_desc);
        g.vertical.push_back(std::move(v));
    }

    Poset py = strat_poset_of(base);
    std::vector<int> dy = stratum_dims(base);
    for (int b = 0; b < py.size(); ++b) {
        if (py.is_maximal(b) || dy[b] < 0) continue;
        HorizontalFace h;
        h.stratum = py.label(b);
        h.fiber_desc = link_of(base, h.stratum);
        h.base_of_base_desc = closure_of(base, h.stratum);
        h.base_total_desc = SpaceDesc::product(fiber, h.base_of_base_desc);
        h.fiber_dim = dim(h.fiber_desc);
        h.base_total_dim = dim(h.base_total_desc);
        g.horizontal.push_back(std::move(h));
    }

    g.schedule = blowup_schedule(pw, py);
    return g;
}

}  // namespace strat
