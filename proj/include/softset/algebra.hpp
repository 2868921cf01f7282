#pragma once

// The soft-set algebra: soft subset, complement, union, intersection and
// alpha-inclusion, all pointwise over a shared carrier (universe, dimension,
// box). Operands with different carriers are rejected.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "softset/core.hpp"

namespace softset {

/// First point x (lexicographic) where f_S(x) is not a subset of f_T(x),
/// together with the lowest-index element present in f_S(x) but not f_T(x).
inline std::optional<std::pair<LatticePoint, std::size_t>> find_subset_violation(
    const SoftSet& s, const SoftSet& t) {
    s.require_same_carrier(t);
    // Only stored entries of s can violate; absent points map to the empty
    // subset, which is below everything.
    for (const auto& [point, value] : s.entries()) {
        const ElemSubset excess = value.minus(t.value_at(point));
        if (auto u = excess.first_set()) return std::make_pair(point, *u);
    }
    return std::nullopt;
}

/// True iff f_S(x) is a subset of f_T(x) for every lattice point of the box.
inline bool is_soft_subset(const SoftSet& s, const SoftSet& t) {
    return !find_subset_violation(s, t).has_value();
}

/// Pointwise complement against the universe. Points absent from s carry the
/// empty subset and so map to the full universe in the result.
inline SoftSet complement(const SoftSet& s) {
    std::vector<std::pair<LatticePoint, ElemSubset>> pairs;
    for (const auto& point : s.box().points())
        pairs.emplace_back(point, ~s.value_at(point));
    return SoftSet(s.universe(), s.box(), pairs);
}

/// Pointwise union f_S(x) | f_T(x).
inline SoftSet union_of(const SoftSet& s, const SoftSet& t) {
    s.require_same_carrier(t);
    std::map<LatticePoint, ElemSubset> merged(s.entries().begin(), s.entries().end());
    for (const auto& [point, value] : t.entries()) {
        auto [it, inserted] = merged.emplace(point, value);
        if (!inserted) it->second = it->second | value;
    }
    return SoftSet(s.universe(), s.box(), {merged.begin(), merged.end()});
}

/// Pointwise intersection f_S(x) & f_T(x).
inline SoftSet intersection_of(const SoftSet& s, const SoftSet& t) {
    s.require_same_carrier(t);
    std::vector<std::pair<LatticePoint, ElemSubset>> pairs;
    for (const auto& [point, value] : s.entries()) {
        auto it = t.entries().find(point);
        if (it != t.entries().end()) pairs.emplace_back(point, value & it->second);
    }
    return SoftSet(s.universe(), s.box(), pairs);
}

/// The alpha-inclusion S^alpha: all box points whose value contains alpha,
/// in lexicographic order. Every point qualifies when alpha is empty.
inline std::vector<LatticePoint> alpha_inclusion(const SoftSet& s, const ElemSubset& alpha) {
    if (alpha.width() != s.universe().size())
        throw Error("alpha width does not match the universe");
    if (alpha.none()) return s.box().points();  // every value contains the empty set
    std::vector<LatticePoint> out;
    for (const auto& [point, value] : s.entries())
        if (value.contains(alpha)) out.push_back(point);
    return out;
}

inline SoftSet operator|(const SoftSet& s, const SoftSet& t) { return union_of(s, t); }
inline SoftSet operator&(const SoftSet& s, const SoftSet& t) { return intersection_of(s, t); }
inline SoftSet operator~(const SoftSet& s) { return complement(s); }

}  // namespace softset
