#pragma once

// Convexity and concavity of soft sets, decided two independent ways:
//
//  * oracle deciders enumerate every pair of box points and every lattice
//    point strictly between them, checking the defining containments
//    f(z) >= f(x) & f(y) (convex) and f(z) <= f(x) | f(y) (concave);
//  * fast deciders reduce to segment convexity of per-element level regions
//    {x : u in f(x)} (convex) and co-level regions {x : u not in f(x)}
//    (concave).
//
// Both routes agree on every input; the test suite and the theorem suite
// below hold them against each other. Also here: convex-by-construction
// generators, the alpha-cut characterization check, and a randomized
// harness for the closure and duality laws.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "softset/algebra.hpp"
#include "softset/core.hpp"
#include "softset/lattice_geometry.hpp"
#include "softset/rng.hpp"

namespace softset {

struct Verdict {
    std::optional<Witness> witness;

    bool holds() const noexcept { return !witness.has_value(); }
    explicit operator bool() const noexcept { return holds(); }
};

// ---------------------------------------------------------------------------
// Definition oracles

/// Exhaustive check of the convexity definition. Returns the
/// lexicographically first witness: pairs (x, y) scan in lexicographic
/// order, the segment walks from x to y, and the element is the
/// lowest-index one present in f(x) & f(y) but missing from f(z).
inline Verdict is_convex_oracle(const SoftSet& s) {
    const auto points = s.box().points();
    for (std::size_t i = 0; i < points.size(); ++i) {
        const ElemSubset fx = s.value_at(points[i]);
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (segment_gcd(points[i], points[j]) <= 1) continue;
            const ElemSubset required = fx & s.value_at(points[j]);
            if (required.none()) continue;
            const auto segment = segment_lattice_points(points[i], points[j]);
            for (std::size_t k = 1; k + 1 < segment.size(); ++k) {
                const ElemSubset missing = required.minus(s.value_at(segment[k]));
                if (auto u = missing.first_set())
                    return {Witness{points[i], points[j], segment[k], *u,
                                    WitnessKind::ConvexityViolation}};
            }
        }
    }
    return {};
}

/// Exhaustive check of the concavity definition, mirroring
/// is_convex_oracle with the containment reversed against the union.
inline Verdict is_concave_oracle(const SoftSet& s) {
    const auto points = s.box().points();
    for (std::size_t i = 0; i < points.size(); ++i) {
        const ElemSubset fx = s.value_at(points[i]);
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (segment_gcd(points[i], points[j]) <= 1) continue;
            const ElemSubset allowed = fx | s.value_at(points[j]);
            if (allowed.all()) continue;
            const auto segment = segment_lattice_points(points[i], points[j]);
            for (std::size_t k = 1; k + 1 < segment.size(); ++k) {
                const ElemSubset excess = s.value_at(segment[k]).minus(allowed);
                if (auto u = excess.first_set())
                    return {Witness{points[i], points[j], segment[k], *u,
                                    WitnessKind::ConcavityViolation}};
            }
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Level-region deciders

/// S is convex iff every element's level region {x : u in f(x)} is
/// segment-convex. Same verdict as the oracle on every input; the witness
/// is valid but may differ from the oracle's.
inline Verdict is_convex(const SoftSet& s) {
    for (std::size_t u = 0; u < s.universe().size(); ++u) {
        std::set<LatticePoint> region;
        for (const auto& [point, value] : s.entries())
            if (value.test(u)) region.insert(point);
        const auto check = is_segment_convex(LatticeSet(s.box(), std::move(region)));
        if (!check.holds()) {
            const auto& v = *check.violation;
            return {Witness{v.x, v.y, v.z, u, WitnessKind::ConvexityViolation}};
        }
    }
    return {};
}

/// S is concave iff every element's co-level region {x : u not in f(x)} is
/// segment-convex (equivalently, the complement of S is convex).
inline Verdict is_concave(const SoftSet& s) {
    const auto points = s.box().points();
    for (std::size_t u = 0; u < s.universe().size(); ++u) {
        std::set<LatticePoint> region;
        for (const auto& point : points)
            if (!s.value_at(point).test(u)) region.insert(point);
        const auto check = is_segment_convex(LatticeSet(s.box(), std::move(region)));
        if (!check.holds()) {
            const auto& v = *check.violation;
            return {Witness{v.x, v.y, v.z, u, WitnessKind::ConcavityViolation}};
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Witness replay

/// Independent re-check of a witness against the soft set it refutes: z must
/// lie strictly between x and y on their segment, and the membership pattern
/// of the element must match the claimed violation kind.
inline bool witness_holds(const SoftSet& s, const Witness& w) {
    if (w.x.dim() != s.dim() || w.y.dim() != s.dim() || w.z.dim() != s.dim()) return false;
    if (!s.box().contains(w.x) || !s.box().contains(w.y) || !s.box().contains(w.z)) return false;
    if (w.element >= s.universe().size()) return false;
    if (w.z == w.x || w.z == w.y) return false;
    const auto segment = segment_lattice_points(w.x, w.y);
    if (std::find(segment.begin(), segment.end(), w.z) == segment.end()) return false;
    const bool in_x = s.value_at(w.x).test(w.element);
    const bool in_y = s.value_at(w.y).test(w.element);
    const bool in_z = s.value_at(w.z).test(w.element);
    if (w.kind == WitnessKind::ConvexityViolation) return in_x && in_y && !in_z;
    return !in_x && !in_y && in_z;
}

// ---------------------------------------------------------------------------
// Generators

/// Convex by construction: each element's level region is an independently
/// sampled convex lattice region, so every level region is segment-convex.
inline SoftSet random_convex_soft_set(const Universe& universe, const GridBox& box,
                                      std::uint64_t seed) {
    std::map<LatticePoint, ElemSubset> values;
    for (std::size_t u = 0; u < universe.size(); ++u) {
        const LatticeSet region = random_convex_lattice_set(box, derive_seed(seed, u));
        for (const auto& point : region.points()) {
            auto [it, inserted] = values.emplace(point, ElemSubset(universe.size()));
            it->second.set(u);
        }
    }
    return SoftSet(universe, box, {values.begin(), values.end()});
}

/// Concave by construction: complement of a convex-by-construction set; its
/// co-level regions are exactly the convex level regions of that set.
inline SoftSet random_concave_soft_set(const Universe& universe, const GridBox& box,
                                       std::uint64_t seed) {
    return complement(random_convex_soft_set(universe, box, seed));
}

/// Arbitrary soft set: membership is an independent coin flip per point and
/// element, with a per-instance density drawn from the seed. Produces
/// incomparable values across points, not just chains.
inline SoftSet random_soft_set(const Universe& universe, const GridBox& box,
                               std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::uint64_t density_pct = uniform_below(rng, 101);
    std::vector<std::pair<LatticePoint, ElemSubset>> pairs;
    for (const auto& point : box.points()) {
        ElemSubset value(universe.size());
        for (std::size_t u = 0; u < universe.size(); ++u)
            if (chance(rng, density_pct, 100)) value.set(u);
        if (!value.none()) pairs.emplace_back(point, value);
    }
    return SoftSet(universe, box, pairs);
}

// ---------------------------------------------------------------------------
// Alpha-cut characterization

/// Executable form of the level-cut theorem: S is convex iff S^alpha is a
/// segment-convex parameter set for every alpha. Computes both sides
/// independently (fast decider vs exhaustive enumeration of all 2^m subsets
/// alpha) and reports whether they agree.
inline bool check_alpha_cut_characterization(const SoftSet& s) {
    const std::size_t m = s.universe().size();
    if (m > 16)
        throw Error("universe too large for exhaustive alpha enumeration (limit 16)");
    const bool lhs = is_convex(s).holds();
    bool rhs = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m) && rhs; ++mask) {
        ElemSubset alpha(m);
        for (std::size_t u = 0; u < m; ++u)
            if ((mask >> u) & 1) alpha.set(u);
        const auto points = alpha_inclusion(s, alpha);
        rhs = is_segment_convex(LatticeSet(s.box(), {points.begin(), points.end()})).holds();
    }
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Theorem suite

struct SuiteConfig {
    std::size_t dim = 1;
    std::int64_t box_side = 3;
    std::size_t universe_size = 2;
    std::size_t family_size = 3;  // width of the finite-family closure laws
};

enum class LawExpectation {
    Holds,               // zero violations required
    FindsCounterexample  // the interesting outcome is at least one refutation
};

struct LawResult {
    std::string name;
    LawExpectation expectation = LawExpectation::Holds;
    std::size_t trials = 0;
    std::size_t violations = 0;  // for the search law: counterexamples found
    std::optional<Witness> first_witness;
    std::string note;
};

struct SuiteReport {
    SuiteConfig config;
    std::uint64_t master_seed = 0;
    std::size_t trials_requested = 0;
    std::string law_filter;
    Universe universe;
    std::vector<LawResult> laws;

    bool all_expected_laws_hold() const {
        for (const auto& law : laws)
            if (law.expectation == LawExpectation::Holds && law.violations > 0) return false;
        return true;
    }

    const LawResult* find_law(const std::string& name) const {
        for (const auto& law : laws)
            if (law.name == name) return &law;
        return nullptr;
    }

    /// Fixed-format table; a pure function of the inputs, so two runs with
    /// the same flags render byte-identical reports.
    std::string to_text() const {
        std::ostringstream os;
        os << "theorem-suite: trials=" << trials_requested << " seed=" << master_seed
           << " dim=" << config.dim << " box-side=" << config.box_side
           << " universe=" << config.universe_size << " family=" << config.family_size
           << " law=" << law_filter << "\n";
        os << pad_right("law", 28) << pad_left("trials", 8) << pad_left("violations", 12)
           << "  first-witness\n";
        for (const auto& law : laws) {
            os << pad_right(law.name, 28) << pad_left(std::to_string(law.trials), 8)
               << pad_left(std::to_string(law.violations), 12) << "  "
               << (law.first_witness ? to_string(*law.first_witness, universe) : "-") << "\n";
        }
        for (const auto& law : laws)
            if (!law.note.empty()) os << law.name << ": " << law.note << "\n";
        os << "result: " << (all_expected_laws_hold() ? "PASS" : "FAIL") << "\n";
        return os.str();
    }

private:
    static std::string pad_right(const std::string& s, std::size_t width) {
        return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
    }
    static std::string pad_left(const std::string& s, std::size_t width) {
        return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
    }
};

inline const std::vector<std::string>& theorem_suite_law_names() {
    static const std::vector<std::string> names = {
        "convex_intersection",
        "convex_family_intersection",
        "convex_union_search",
        "concave_union",
        "concave_family_union",
        "concave_intersection",
        "complement_duality_convex",
        "complement_duality_concave",
        "alpha_cut_iff",
    };
    return names;
}

namespace detail {

struct LawOutcome {
    bool violated = false;
    std::optional<Witness> witness;
};

inline LawOutcome run_theorem_law(std::size_t law_index, std::mt19937_64& rng,
                                  const Universe& universe, const GridBox& box,
                                  const SuiteConfig& config) {
    // Sub-seeds are drawn one at a time so the draw order is fixed by the
    // statement order, not by argument evaluation order.
    auto convex = [&]() { return random_convex_soft_set(universe, box, rng()); };
    auto concave = [&]() { return random_concave_soft_set(universe, box, rng()); };
    auto arbitrary = [&]() { return random_soft_set(universe, box, rng()); };

    switch (law_index) {
        case 0: {  // convex_intersection
            const SoftSet s = convex();
            const SoftSet t = convex();
            const Verdict v = is_convex(intersection_of(s, t));
            return {!v.holds(), v.witness};
        }
        case 1: {  // convex_family_intersection
            SoftSet acc = convex();
            for (std::size_t i = 1; i < config.family_size; ++i) {
                const SoftSet next = convex();
                acc = intersection_of(acc, next);
            }
            const Verdict v = is_convex(acc);
            return {!v.holds(), v.witness};
        }
        case 2: {  // convex_union_search: a violation here is a find
            const SoftSet s = convex();
            const SoftSet t = convex();
            const Verdict v = is_convex(union_of(s, t));
            return {!v.holds(), v.witness};
        }
        case 3: {  // concave_union
            const SoftSet s = concave();
            const SoftSet t = concave();
            const Verdict v = is_concave(union_of(s, t));
            return {!v.holds(), v.witness};
        }
        case 4: {  // concave_family_union
            SoftSet acc = concave();
            for (std::size_t i = 1; i < config.family_size; ++i) {
                const SoftSet next = concave();
                acc = union_of(acc, next);
            }
            const Verdict v = is_concave(acc);
            return {!v.holds(), v.witness};
        }
        case 5: {  // concave_intersection
            const SoftSet s = concave();
            const SoftSet t = concave();
            const Verdict v = is_concave(intersection_of(s, t));
            return {!v.holds(), v.witness};
        }
        case 6: {  // complement_duality_convex, over arbitrary soft sets
            const SoftSet s = arbitrary();
            const Verdict direct = is_convex(s);
            const Verdict dual = is_concave(complement(s));
            if (direct.holds() == dual.holds()) return {};
            return {true, direct.holds() ? dual.witness : direct.witness};
        }
        case 7: {  // complement_duality_concave
            const SoftSet s = arbitrary();
            const Verdict direct = is_concave(s);
            const Verdict dual = is_convex(complement(s));
            if (direct.holds() == dual.holds()) return {};
            return {true, direct.holds() ? dual.witness : direct.witness};
        }
        case 8: {  // alpha_cut_iff
            const SoftSet s = arbitrary();
            return {!check_alpha_cut_characterization(s), std::nullopt};
        }
        default:
            throw Error("unknown law index");
    }
}

}  // namespace detail

/// Runs each selected law over `trials` generated instances. Per-trial seeds
/// derive from (master seed, law index, trial index), so the report is a
/// pure function of its arguments. Laws expected to hold count violations;
/// the union-of-convex search counts found counterexample pairs and notes
/// exhaustion when it finds none.
inline SuiteReport theorem_suite(std::size_t trials, const SuiteConfig& config,
                                 std::uint64_t master_seed,
                                 const std::string& law_filter = "all") {
    if (trials == 0) throw Error("trials must be at least 1");
    if (config.dim == 0) throw Error("dimension must be at least 1");
    if (config.box_side < 1) throw Error("box side must be at least 1");
    if (config.universe_size == 0) throw Error("universe size must be at least 1");
    if (config.family_size == 0) throw Error("family size must be at least 1");

    const auto& names = theorem_suite_law_names();
    if (law_filter != "all" &&
        std::find(names.begin(), names.end(), law_filter) == names.end())
        throw Error("unknown law: " + law_filter);

    std::vector<std::string> element_names;
    for (std::size_t u = 1; u <= config.universe_size; ++u)
        element_names.push_back("u" + std::to_string(u));
    Universe universe(element_names);

    LatticePoint lo, hi;
    lo.coords.assign(config.dim, 0);
    hi.coords.assign(config.dim, config.box_side - 1);
    GridBox box(lo, hi);

    SuiteReport report{config, master_seed, trials, law_filter, universe, {}};

    for (std::size_t law_index = 0; law_index < names.size(); ++law_index) {
        const std::string& name = names[law_index];
        if (law_filter != "all" && law_filter != name) continue;

        LawResult result;
        result.name = name;
        result.expectation = name == "convex_union_search"
                                 ? LawExpectation::FindsCounterexample
                                 : LawExpectation::Holds;

        if (name == "alpha_cut_iff" && config.universe_size > 16) {
            result.note = "skipped, universe too large for exhaustive alpha enumeration";
            report.laws.push_back(std::move(result));
            continue;
        }

        for (std::size_t trial = 0; trial < trials; ++trial) {
            std::mt19937_64 rng(derive_seed(master_seed, law_index, trial));
            const auto outcome =
                detail::run_theorem_law(law_index, rng, universe, box, config);
            if (outcome.violated) {
                ++result.violations;
                if (!result.first_witness) result.first_witness = outcome.witness;
            }
            ++result.trials;
        }
        if (result.expectation == LawExpectation::FindsCounterexample &&
            result.violations == 0)
            result.note = "exhausted, no counterexample pair found";
        report.laws.push_back(std::move(result));
    }
    return report;
}

}  // namespace softset
