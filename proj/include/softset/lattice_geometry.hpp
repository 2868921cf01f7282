#pragma once

// Exact lattice geometry. The parameter space is the set of lattice points
// of a bounded box, and the convex-combination points of a pair (x, y) are
// exactly the lattice points of the closed segment [x, y]. Everything here
// is integer arithmetic; intermediate products are widened to 128 bits so
// the predicates are exact over the full int64 coordinate range.

#include <cstdint>
#include <iterator>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "softset/core.hpp"
#include "softset/rng.hpp"

namespace softset {

// ---------------------------------------------------------------------------
// Segments

/// Gcd of the coordinate differences |y_i - x_i|; zero iff x == y. The
/// closed segment [x, y] carries exactly this many lattice points plus one.
inline std::uint64_t segment_gcd(const LatticePoint& x, const LatticePoint& y) {
    if (x.dim() != y.dim())
        throw Error("segment endpoints have mismatched dimensions");
    std::uint64_t g = 0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        const auto a = static_cast<std::uint64_t>(x.coords[i]);
        const auto b = static_cast<std::uint64_t>(y.coords[i]);
        g = std::gcd(g, x.coords[i] >= y.coords[i] ? a - b : b - a);
    }
    return g;
}

/// All lattice points of the closed segment [x, y], ordered from x to y.
/// Each returned z equals x + (k/g)(y - x) exactly in integers, k = 0..g.
inline std::vector<LatticePoint> segment_lattice_points(const LatticePoint& x,
                                                        const LatticePoint& y) {
    const std::uint64_t g = segment_gcd(x, y);
    if (g == 0) return {x};
    const std::size_t n = x.dim();
    std::vector<__int128> step(n);
    for (std::size_t i = 0; i < n; ++i)
        step[i] = (static_cast<__int128>(y.coords[i]) - static_cast<__int128>(x.coords[i])) /
                  static_cast<__int128>(g);
    std::vector<LatticePoint> out;
    out.reserve(static_cast<std::size_t>(g) + 1);
    for (std::uint64_t k = 0; k <= g; ++k) {
        LatticePoint z;
        z.coords.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            z.coords[i] = static_cast<std::int64_t>(static_cast<__int128>(x.coords[i]) +
                                                    static_cast<__int128>(k) * step[i]);
        out.push_back(std::move(z));
    }
    return out;
}

// ---------------------------------------------------------------------------
// LatticeSet

/// Finite set of lattice points inside a box. Used for the level regions of
/// soft sets and for alpha-inclusions viewed as crisp parameter sets.
class LatticeSet {
public:
    explicit LatticeSet(GridBox box, std::set<LatticePoint> points = {})
        : box_(std::move(box)), points_(std::move(points)) {
        for (const auto& p : points_)
            if (!box_.contains(p))
                throw Error("point " + to_string(p) + " outside box " + to_string(box_));
    }

    const GridBox& box() const noexcept { return box_; }
    const std::set<LatticePoint>& points() const noexcept { return points_; }
    std::size_t dim() const noexcept { return box_.dim(); }
    std::size_t size() const noexcept { return points_.size(); }
    bool contains(const LatticePoint& p) const { return points_.count(p) > 0; }

    bool operator==(const LatticeSet& o) const noexcept {
        return box_ == o.box_ && points_ == o.points_;
    }
    bool operator!=(const LatticeSet& o) const noexcept { return !(*this == o); }

private:
    GridBox box_;
    std::set<LatticePoint> points_;
};

// ---------------------------------------------------------------------------
// Segment convexity

struct SegmentViolation {
    LatticePoint x;
    LatticePoint y;
    LatticePoint z;  // on segment [x, y], missing from the set

    bool operator==(const SegmentViolation& o) const noexcept {
        return x == o.x && y == o.y && z == o.z;
    }
};

struct SegmentConvexity {
    std::optional<SegmentViolation> violation;

    bool holds() const noexcept { return !violation.has_value(); }
    explicit operator bool() const noexcept { return holds(); }
};

/// A set is segment-convex iff it contains every lattice point of every
/// segment between its members. On failure returns the lexicographically
/// smallest (x, y, z) violation; the scan runs over pairs in lexicographic
/// order and walks each segment from x to y, which is lexicographically
/// increasing whenever x < y.
inline SegmentConvexity is_segment_convex(const LatticeSet& set) {
    const auto& pts = set.points();
    for (auto ix = pts.begin(); ix != pts.end(); ++ix) {
        for (auto iy = std::next(ix); iy != pts.end(); ++iy) {
            if (segment_gcd(*ix, *iy) <= 1) continue;  // no interior lattice points
            const auto segment = segment_lattice_points(*ix, *iy);
            for (std::size_t k = 1; k + 1 < segment.size(); ++k)
                if (!set.contains(segment[k]))
                    return {SegmentViolation{*ix, *iy, segment[k]}};
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Hull convexity (dimensions 1 and 2)

namespace detail {

// Signed area of the triangle (a, b, c); positive for a counter-clockwise
// turn. Exact for all int64 coordinates.
inline __int128 cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
    const __int128 abx = static_cast<__int128>(b.coords[0]) - a.coords[0];
    const __int128 aby = static_cast<__int128>(b.coords[1]) - a.coords[1];
    const __int128 acx = static_cast<__int128>(c.coords[0]) - a.coords[0];
    const __int128 acy = static_cast<__int128>(c.coords[1]) - a.coords[1];
    return abx * acy - aby * acx;
}

// Strict convex hull (no collinear vertices) in counter-clockwise order.
// Precondition: at least three points, not all collinear.
inline std::vector<LatticePoint> convex_hull_2d(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    const std::size_t n = pts.size();
    std::vector<LatticePoint> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower hull
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper hull
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

inline bool in_convex_polygon(const std::vector<LatticePoint>& hull, const LatticePoint& p) {
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % hull.size()];
        if (cross(a, b, p) < 0) return false;  // strictly outside this edge
    }
    return true;
}

}  // namespace detail

/// True iff the set equals the lattice points of its own convex hull. A
/// strictly stronger notion than segment convexity: {(0,0),(1,2),(2,1)} is
/// segment-convex (no segment has interior lattice points) but its hull
/// contains (1,1). Only dimensions 1 and 2 are supported.
inline bool is_hull_convex_2d(const LatticeSet& set) {
    if (set.dim() > 2)
        throw Error("hull convexity is only decided for dimensions 1 and 2");
    const auto& pts = set.points();
    if (pts.size() <= 1) return true;

    const LatticePoint& lo = *pts.begin();
    const LatticePoint& hi = *pts.rbegin();

    if (set.dim() == 1) {
        // hull is the interval [lo, hi]; convex iff no integer is skipped
        const std::uint64_t span = static_cast<std::uint64_t>(hi.coords[0]) -
                                   static_cast<std::uint64_t>(lo.coords[0]) + 1;
        return span == pts.size();
    }

    // Collinear sets degenerate to a segment between the lexicographic
    // extremes; those extremes are the geometric endpoints.
    const LatticePoint* second = nullptr;
    for (const auto& p : pts)
        if (p != lo) {
            second = &p;
            break;
        }
    const bool collinear = std::all_of(pts.begin(), pts.end(), [&](const LatticePoint& q) {
        return detail::cross(lo, *second, q) == 0;
    });
    if (collinear)
        return segment_lattice_points(lo, hi).size() == pts.size();

    const auto hull = detail::convex_hull_2d({pts.begin(), pts.end()});

    // Scan the bounding box of the set for hull points missing from it.
    LatticePoint bb_min = *pts.begin();
    LatticePoint bb_max = *pts.begin();
    for (const auto& p : pts)
        for (std::size_t i = 0; i < 2; ++i) {
            bb_min.coords[i] = std::min(bb_min.coords[i], p.coords[i]);
            bb_max.coords[i] = std::max(bb_max.coords[i], p.coords[i]);
        }
    for (const auto& p : GridBox(bb_min, bb_max).points())
        if (detail::in_convex_polygon(hull, p) && !set.contains(p))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Convex-by-construction generator

/// Lattice points of the box satisfying a randomly sampled system of integer
/// half-space inequalities. The intersection of half-spaces with the box is
/// convex, so the result is always hull-convex and hence segment-convex; it
/// may be empty. Deterministic in (box, seed).
inline LatticeSet random_convex_lattice_set(const GridBox& box, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = box.dim();

    struct HalfSpace {
        std::vector<std::int64_t> normal;
        __int128 bound;  // normal . x <= bound
    };

    // Anchoring the constraints on a common in-box point keeps most samples
    // non-empty; one time in eight the bound is drawn freely instead, which
    // may leave the region empty.
    LatticePoint anchor;
    anchor.coords.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        anchor.coords[i] = uniform_in(rng, box.min().coords[i], box.max().coords[i]);
    const bool anchored = !chance(rng, 1, 8);

    const std::size_t constraint_count = uniform_below(rng, 5);  // 0..4
    std::vector<HalfSpace> constraints;
    constraints.reserve(constraint_count);
    for (std::size_t c = 0; c < constraint_count; ++c) {
        HalfSpace hs;
        hs.normal.resize(n);
        do {
            for (std::size_t i = 0; i < n; ++i) hs.normal[i] = uniform_in(rng, -3, 3);
        } while (std::all_of(hs.normal.begin(), hs.normal.end(),
                             [](std::int64_t v) { return v == 0; }));

        // Range of normal . x over the box, per coordinate.
        __int128 lo = 0, hi = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const __int128 a = static_cast<__int128>(hs.normal[i]) * box.min().coords[i];
            const __int128 b = static_cast<__int128>(hs.normal[i]) * box.max().coords[i];
            lo += a < b ? a : b;
            hi += a < b ? b : a;
        }
        if (anchored) {
            __int128 at_anchor = 0;
            for (std::size_t i = 0; i < n; ++i)
                at_anchor += static_cast<__int128>(hs.normal[i]) * anchor.coords[i];
            std::uint64_t slack_max = static_cast<std::uint64_t>((hi - lo) / 4 + 2);
            slack_max = std::min<std::uint64_t>(slack_max, std::uint64_t{1} << 30);
            hs.bound = at_anchor + static_cast<__int128>(uniform_below(rng, slack_max));
        } else {
            std::uint64_t span = static_cast<std::uint64_t>(
                std::min<unsigned __int128>(static_cast<unsigned __int128>(hi - lo),
                                            std::uint64_t{1} << 30));
            hs.bound = lo - 2 + static_cast<__int128>(uniform_below(rng, span + 3));
        }
        constraints.push_back(std::move(hs));
    }

    std::set<LatticePoint> selected;
    for (const auto& p : box.points()) {
        bool inside = true;
        for (const auto& hs : constraints) {
            __int128 dot = 0;
            for (std::size_t i = 0; i < n; ++i)
                dot += static_cast<__int128>(hs.normal[i]) * p.coords[i];
            if (dot > hs.bound) {
                inside = false;
                break;
            }
        }
        if (inside) selected.insert(p);
    }
    return LatticeSet(box, std::move(selected));
}

}  // namespace softset
