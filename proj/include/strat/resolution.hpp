#pragma once

#include <memory>

#include "strat/space.hpp"

namespace strat {

struct FiberedCorners;
using FiberedCornersPtr = std::shared_ptr<const FiberedCorners>;

// Boundary face produced by blowing up one singular stratum: it fibers over
// the resolution of the stratum closure with fiber the resolution of the
// link.
struct FaceRecord {
    std::string stratum;
    DescPtr fiber_desc;  // link of the stratum
    DescPtr base_desc;   // closure of the stratum
    FiberedCornersPtr fiber;
    FiberedCornersPtr base;
    int fiber_dim = -1;
    int base_dim = -1;
};

// Connecting bundle phi_{ba} at the corner of faces a < b: the a-face of the
// base of b fibers over the base of a, with fiber the resolved link of a
// inside the closure of b.
struct CornerRecord {
    std::string lower;  // a
    std::string upper;  // b
    DescPtr connecting_fiber;  // link of a inside closure(b)
    int connecting_fiber_dim = -1;
    int lower_base_dim = -1;  // dim closure(a) = dim B_a
    int upper_base_dim = -1;  // dim closure(b) = dim B_b
};

struct FiberedCorners {
    DescPtr space;
    Poset poset;
    int total_dim = 0;
    int depth = 0;
    std::vector<FaceRecord> faces;      // one per singular stratum
    std::vector<CornerRecord> corners;  // per comparable singular pair a < b
    std::vector<std::string> blowup_order;
};

// Iterated blow-up of minimal singular strata in depth-then-label order.
FiberedCornersPtr resolve(const DescPtr& d);

struct IfsReport {
    bool ok = true;
    std::string first_violation;
};

// Checks the dimension equations of faces and corners, comparability of
// corner labels, and recursively that fibers and bases are themselves valid.
IfsReport verify_ifs(const FiberedCorners& f);

// Vertical face of the partial fiber resolution of the product bundle
// W x Y -> Y: indexed by a singular stratum of W.
struct VerticalFace {
    std::string stratum;           // a in S(W)
    DescPtr fiber_desc;            // link of a in W (fiber of phi_a^v)
    DescPtr base_total_desc;       // B_a^v = closure_W(a) x Y
    int fiber_dim = -1;
    int base_total_dim = -1;
};

// Horizontal face of the partial base resolution: indexed by a singular
// stratum of Y, forming a pull-back square over the face bundle of res(Y).
struct HorizontalFace {
    std::string stratum;        // alpha in S(Y)
    DescPtr fiber_desc;         // fiber of phi_alpha^h = fiber of phi_alpha
    DescPtr base_of_base_desc;  // B_alpha res(Y) = closure_Y(alpha)
    DescPtr base_total_desc;    // B_alpha^h = W x closure_Y(alpha)
    int fiber_dim = -1;
    int base_total_dim = -1;
};

struct GridResolution {
    DescPtr fiber_space;  // W
    DescPtr base_space;   // Y
    int total_dim = 0;
    FiberedCornersPtr res_fiber;  // res(W)
    FiberedCornersPtr res_base;   // res(Y)
    std::vector<VerticalFace> vertical;
    std::vector<HorizontalFace> horizontal;
    std::vector<std::pair<std::string, std::string>> schedule;  // codim-2 corner blow-ups
};

// Grid resolution of the product bundle W x Y -> Y.
GridResolution resolve_bundle(const DescPtr& fiber, const DescPtr& base);

// All pairs (a, alpha) of singular strata, in a deterministic linear
// extension of the product order (depth-sorted, then by labels).
std::vector<std::pair<std::string, std::string>> blowup_schedule(const Poset& sw,
                                                                 const Poset& sy);

}  // namespace strat
