#pragma once

// Shared fixtures: two small one-dimensional soft sets over a six-element
// universe, rich enough to exercise every algebra operation and both
// deciders. sample_s is neither convex nor concave; sample_t differs from
// it at every stored point.

#include <softset/softset.hpp>

namespace fixtures {

inline const softset::Universe& universe6() {
    static const softset::Universe u{"u1", "u2", "u3", "u4", "u5", "u6"};
    return u;
}

inline softset::GridBox box15() {
    return softset::GridBox(softset::LatticePoint{1}, softset::LatticePoint{5});
}

inline softset::SoftSet sample_s() {
    const auto& u = universe6();
    return softset::SoftSet(
        u, box15(),
        {{softset::LatticePoint{1}, u.subset({"u1", "u2", "u3"})},
         {softset::LatticePoint{2}, u.subset({"u1", "u4"})},
         {softset::LatticePoint{4}, softset::ElemSubset::full(u.size())}});
}

inline softset::SoftSet sample_t() {
    const auto& u = universe6();
    return softset::SoftSet(
        u, box15(),
        {{softset::LatticePoint{1}, u.subset({"u1", "u2", "u6"})},
         {softset::LatticePoint{2}, u.subset({"u1", "u2", "u3"})},
         {softset::LatticePoint{3}, u.subset({"u1", "u2"})},
         {softset::LatticePoint{5}, u.subset({"u6"})}});
}

}  // namespace fixtures
