#pragma once

// Core value types for soft sets over a bounded integer lattice: a universe
// of named elements, bit-mask subsets of it, lattice points, boxes, and the
// soft-set map itself. Every type is immutable after construction, so values
// can be shared or moved between threads freely; all operations on them are
// pure functions.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace softset {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Combining values that do not share universe, dimension and box is
/// rejected rather than coerced; silent re-boxing would change the meaning
/// of every convexity statement made about the operands.
class CarrierMismatch : public Error {
public:
    explicit CarrierMismatch(const std::string& message) : Error(message) {}
};

// ---------------------------------------------------------------------------
// Universe

/// Ordered list of distinct, non-empty element names. Bit i of every
/// ElemSubset over this universe refers to name(i); the index assignment is
/// fixed for the lifetime of the value.
class Universe {
public:
    explicit Universe(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty())
            throw Error("universe must contain at least one element");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty())
                throw Error("universe element names must be non-empty");
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw Error("duplicate universe element name: " + names_[i]);
        }
    }

    Universe(std::initializer_list<std::string> names)
        : Universe(std::vector<std::string>(names)) {}

    std::size_t size() const noexcept { return names_.size(); }

    const std::string& name(std::size_t index) const {
        if (index >= names_.size())
            throw Error("element index out of range");
        return names_[index];
    }

    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<std::size_t> index_of(std::string_view name) const noexcept {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    bool operator==(const Universe& other) const noexcept { return names_ == other.names_; }
    bool operator!=(const Universe& other) const noexcept { return !(*this == other); }

    /// Builds an element subset from names; unknown names are an error.
    class ElemSubset subset(std::initializer_list<std::string_view> names) const;

private:
    std::vector<std::string> names_;
};

// ---------------------------------------------------------------------------
// ElemSubset

/// Subset of a universe, stored as a fixed-width membership mask. The width
/// is part of the value; operations between subsets of different widths are
/// rejected. Bits above the width are always clear.
class ElemSubset {
public:
    explicit ElemSubset(std::size_t width)
        : width_(width), blocks_(block_count(width), 0) {}

    static ElemSubset empty(std::size_t width) { return ElemSubset(width); }

    static ElemSubset full(std::size_t width) {
        ElemSubset s(width);
        for (auto& b : s.blocks_) b = ~std::uint64_t{0};
        s.clear_tail();
        return s;
    }

    static ElemSubset of(std::size_t width, std::initializer_list<std::size_t> indices) {
        ElemSubset s(width);
        for (std::size_t i : indices) s.set(i);
        return s;
    }

    std::size_t width() const noexcept { return width_; }

    bool test(std::size_t index) const {
        check_index(index);
        return (blocks_[index >> 6] >> (index & 63)) & 1u;
    }

    ElemSubset& set(std::size_t index, bool value = true) {
        check_index(index);
        const std::uint64_t mask = std::uint64_t{1} << (index & 63);
        if (value)
            blocks_[index >> 6] |= mask;
        else
            blocks_[index >> 6] &= ~mask;
        return *this;
    }

    bool none() const noexcept {
        return std::all_of(blocks_.begin(), blocks_.end(),
                           [](std::uint64_t b) { return b == 0; });
    }

    bool all() const noexcept {
        return count() == width_;
    }

    std::size_t count() const noexcept {
        std::size_t n = 0;
        for (std::uint64_t b : blocks_) n += static_cast<std::size_t>(std::popcount(b));
        return n;
    }

    /// Superset test: true iff other is a subset of *this.
    bool contains(const ElemSubset& other) const {
        check_same_width(other);
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (other.blocks_[i] & ~blocks_[i]) return false;
        return true;
    }

    std::optional<std::size_t> first_set() const noexcept {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i])
                return (i << 6) + static_cast<std::size_t>(std::countr_zero(blocks_[i]));
        return std::nullopt;
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < width_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    friend ElemSubset operator&(const ElemSubset& a, const ElemSubset& b) {
        a.check_same_width(b);
        ElemSubset r(a.width_);
        for (std::size_t i = 0; i < r.blocks_.size(); ++i)
            r.blocks_[i] = a.blocks_[i] & b.blocks_[i];
        return r;
    }

    friend ElemSubset operator|(const ElemSubset& a, const ElemSubset& b) {
        a.check_same_width(b);
        ElemSubset r(a.width_);
        for (std::size_t i = 0; i < r.blocks_.size(); ++i)
            r.blocks_[i] = a.blocks_[i] | b.blocks_[i];
        return r;
    }

    ElemSubset operator~() const {
        ElemSubset r(width_);
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            r.blocks_[i] = ~blocks_[i];
        r.clear_tail();
        return r;
    }

    /// Set difference *this minus other.
    ElemSubset minus(const ElemSubset& other) const {
        check_same_width(other);
        ElemSubset r(width_);
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            r.blocks_[i] = blocks_[i] & ~other.blocks_[i];
        return r;
    }

    bool operator==(const ElemSubset& other) const noexcept {
        return width_ == other.width_ && blocks_ == other.blocks_;
    }
    bool operator!=(const ElemSubset& other) const noexcept { return !(*this == other); }

private:
    static std::size_t block_count(std::size_t width) { return (width + 63) / 64; }

    void clear_tail() noexcept {
        if (width_ & 63)
            blocks_.back() &= (std::uint64_t{1} << (width_ & 63)) - 1;
        if (width_ == 0) blocks_.clear();
    }

    void check_index(std::size_t index) const {
        if (index >= width_) {
            std::ostringstream os;
            os << "element index " << index << " out of range for width " << width_;
            throw Error(os.str());
        }
    }

    void check_same_width(const ElemSubset& other) const {
        if (width_ != other.width_) {
            std::ostringstream os;
            os << "element-subset width mismatch: " << width_ << " vs " << other.width_;
            throw Error(os.str());
        }
    }

    std::size_t width_;
    std::vector<std::uint64_t> blocks_;
};

inline ElemSubset Universe::subset(std::initializer_list<std::string_view> names) const {
    ElemSubset s(size());
    for (std::string_view n : names) {
        auto i = index_of(n);
        if (!i) throw Error("unknown universe element: " + std::string(n));
        s.set(*i);
    }
    return s;
}

/// Renders a subset with element names in universe order, e.g. "{u1,u4}".
inline std::string to_string(const ElemSubset& subset, const Universe& universe) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (std::size_t i = 0; i < subset.width(); ++i) {
        if (!subset.test(i)) continue;
        if (!first) os << ',';
        os << universe.name(i);
        first = false;
    }
    os << '}';
    return os.str();
}

// ---------------------------------------------------------------------------
// LatticePoint

/// Integer vector in Z^n. Ordering is lexicographic by coordinates, which
/// fixes the scan order of every decider and the canonical order of every
/// serialized document.
struct LatticePoint {
    std::vector<std::int64_t> coords;

    LatticePoint() = default;
    LatticePoint(std::initializer_list<std::int64_t> cs) : coords(cs) {}
    explicit LatticePoint(std::vector<std::int64_t> cs) : coords(std::move(cs)) {}

    std::size_t dim() const noexcept { return coords.size(); }

    bool operator==(const LatticePoint& o) const noexcept { return coords == o.coords; }
    bool operator!=(const LatticePoint& o) const noexcept { return coords != o.coords; }
    bool operator<(const LatticePoint& o) const noexcept { return coords < o.coords; }
    bool operator<=(const LatticePoint& o) const noexcept { return coords <= o.coords; }
    bool operator>(const LatticePoint& o) const noexcept { return coords > o.coords; }
    bool operator>=(const LatticePoint& o) const noexcept { return coords >= o.coords; }
};

inline std::string to_string(const LatticePoint& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        if (i) os << ',';
        os << p.coords[i];
    }
    os << ')';
    return os.str();
}

// ---------------------------------------------------------------------------
// GridBox

/// Axis-aligned box of lattice points, min <= max componentwise. The box is
/// the finite carrier standing in for the parameter space: a quantifier
/// "for all x" always ranges over the lattice points of a box.
class GridBox {
public:
    GridBox(LatticePoint min, LatticePoint max)
        : min_(std::move(min)), max_(std::move(max)) {
        if (min_.dim() == 0)
            throw Error("box dimension must be at least 1");
        if (min_.dim() != max_.dim())
            throw Error("box corners have mismatched dimensions");
        for (std::size_t i = 0; i < min_.dim(); ++i)
            if (min_.coords[i] > max_.coords[i])
                throw Error("box min exceeds max in coordinate " + std::to_string(i));
    }

    std::size_t dim() const noexcept { return min_.dim(); }
    const LatticePoint& min() const noexcept { return min_; }
    const LatticePoint& max() const noexcept { return max_; }

    bool contains(const LatticePoint& p) const {
        if (p.dim() != dim())
            throw Error("point " + to_string(p) + " has wrong dimension for box");
        for (std::size_t i = 0; i < dim(); ++i)
            if (p.coords[i] < min_.coords[i] || p.coords[i] > max_.coords[i])
                return false;
        return true;
    }

    std::uint64_t point_count() const {
        unsigned __int128 n = 1;
        for (std::size_t i = 0; i < dim(); ++i) {
            const unsigned __int128 side =
                static_cast<unsigned __int128>(max_.coords[i] - min_.coords[i]) + 1;
            n *= side;
            if (n > kMaxEnumerablePoints)
                throw Error("box too large to enumerate");
        }
        return static_cast<std::uint64_t>(n);
    }

    /// All lattice points of the box in lexicographic order.
    std::vector<LatticePoint> points() const {
        std::vector<LatticePoint> out;
        out.reserve(static_cast<std::size_t>(point_count()));
        LatticePoint p = min_;
        for (;;) {
            out.push_back(p);
            std::size_t i = dim();
            while (i > 0) {
                --i;
                if (p.coords[i] < max_.coords[i]) {
                    ++p.coords[i];
                    break;
                }
                p.coords[i] = min_.coords[i];
                if (i == 0) return out;
            }
        }
    }

    bool operator==(const GridBox& o) const noexcept {
        return min_ == o.min_ && max_ == o.max_;
    }
    bool operator!=(const GridBox& o) const noexcept { return !(*this == o); }

    // Enumeration cap; boxes beyond this are constructible but cannot be
    // exhaustively scanned.
    static constexpr std::uint64_t kMaxEnumerablePoints = std::uint64_t{1} << 22;

private:
    LatticePoint min_;
    LatticePoint max_;
};

inline std::string to_string(const GridBox& box) {
    return "[" + to_string(box.min()) + ".." + to_string(box.max()) + "]";
}

// ---------------------------------------------------------------------------
// SoftSet

/// A finite map from lattice points of a box to subsets of the universe.
/// Stored in normal form: no entry maps to the empty subset, and looking up
/// an absent in-box point yields the empty subset. The soft set with no
/// entries is the empty soft set.
class SoftSet {
public:
    SoftSet(Universe universe, GridBox box,
            const std::vector<std::pair<LatticePoint, ElemSubset>>& pairs = {})
        : universe_(std::move(universe)), box_(std::move(box)) {
        for (const auto& [point, value] : pairs) {
            if (value.width() != universe_.size()) {
                std::ostringstream os;
                os << "value at " << to_string(point) << " has width " << value.width()
                   << ", universe has size " << universe_.size();
                throw Error(os.str());
            }
            if (!box_.contains(point))
                throw Error("point " + to_string(point) + " outside box " + to_string(box_));
            if (value.none()) continue;  // normal form: empty values are not stored
            if (!entries_.emplace(point, value).second)
                throw Error("duplicate point " + to_string(point));
        }
    }

    const Universe& universe() const noexcept { return universe_; }
    const GridBox& box() const noexcept { return box_; }
    std::size_t dim() const noexcept { return box_.dim(); }

    /// The approximate value at x; absent in-box points map to the empty
    /// subset, points outside the box are an error.
    ElemSubset value_at(const LatticePoint& point) const {
        if (!box_.contains(point))
            throw Error("point " + to_string(point) + " outside box " + to_string(box_));
        auto it = entries_.find(point);
        if (it == entries_.end()) return ElemSubset::empty(universe_.size());
        return it->second;
    }

    /// Non-empty entries in lexicographic point order.
    const std::map<LatticePoint, ElemSubset>& entries() const noexcept { return entries_; }

    bool is_empty_soft_set() const noexcept { return entries_.empty(); }

    bool same_carrier(const SoftSet& other) const noexcept {
        return universe_ == other.universe_ && box_ == other.box_;
    }

    void require_same_carrier(const SoftSet& other) const {
        if (universe_ != other.universe_)
            throw CarrierMismatch("soft sets have different universes");
        if (box_ != other.box_)
            throw CarrierMismatch("soft sets have different boxes");
    }

    bool operator==(const SoftSet& other) const noexcept {
        return same_carrier(other) && entries_ == other.entries_;
    }
    bool operator!=(const SoftSet& other) const noexcept { return !(*this == other); }

private:
    Universe universe_;
    GridBox box_;
    std::map<LatticePoint, ElemSubset> entries_;
};

// ---------------------------------------------------------------------------
// Witness

enum class WitnessKind {
    ConvexityViolation,   // element in f(x) and f(y) but missing from f(z)
    ConcavityViolation,   // element in f(z) but in neither f(x) nor f(y)
};

/// Concrete refutation of a convexity or concavity claim: a segment pair
/// (x, y), a lattice point z strictly between them, and the offending
/// element index.
struct Witness {
    LatticePoint x;
    LatticePoint y;
    LatticePoint z;
    std::size_t element = 0;
    WitnessKind kind = WitnessKind::ConvexityViolation;

    bool operator==(const Witness& o) const noexcept {
        return x == o.x && y == o.y && z == o.z && element == o.element && kind == o.kind;
    }
    bool operator!=(const Witness& o) const noexcept { return !(*this == o); }
};

inline std::string to_string(const Witness& w, const Universe& universe) {
    return "x=" + to_string(w.x) + " y=" + to_string(w.y) + " z=" + to_string(w.z) +
           " u=" + universe.name(w.element);
}

}  // namespace softset
