#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include <softset/algebra.hpp>

#include "support.hpp"

using namespace softset;
using fixtures::box15;
using fixtures::sample_s;
using fixtures::sample_t;
using fixtures::universe6;

namespace {

const LatticePoint p1{1};
const LatticePoint p2{2};
const LatticePoint p3{3};
const LatticePoint p4{4};
const LatticePoint p5{5};

SoftSet empty_set() { return SoftSet(universe6(), box15()); }

}  // namespace

TEST_CASE("soft subset ranks the empty soft set below everything") {
    CHECK(is_soft_subset(empty_set(), sample_s()));
    CHECK(is_soft_subset(empty_set(), empty_set()));
    CHECK(is_soft_subset(sample_s(), sample_s()));
}

TEST_CASE("soft subset violation names the first offending point and element") {
    const auto s = sample_s();
    const auto t = sample_t();
    CHECK_FALSE(is_soft_subset(s, t));
    // At point 2 the value {u1,u4} is not below {u1,u2,u3}; the scan reports
    // the earlier failure at point 1, where u3 is the first element missing.
    CHECK(s.value_at(p2).minus(t.value_at(p2)).first_set() == universe6().index_of("u4"));
    const auto violation = find_subset_violation(s, t);
    REQUIRE(violation.has_value());
    CHECK(violation->first == p1);
    CHECK(violation->second == universe6().index_of("u3"));
}

TEST_CASE("subset in both directions is exactly equality") {
    const auto s = sample_s();
    const auto grown = union_of(s, sample_t());
    CHECK(is_soft_subset(s, grown));
    CHECK_FALSE(is_soft_subset(grown, s));
    CHECK((is_soft_subset(s, grown) && is_soft_subset(grown, s)) == (s == grown));

    // Same value assembled from different input orderings.
    const SoftSet reordered(universe6(), box15(),
                            {{p4, ElemSubset::full(6)},
                             {p1, universe6().subset({"u1", "u2", "u3"})},
                             {p2, universe6().subset({"u1", "u4"})}});
    CHECK(is_soft_subset(s, reordered));
    CHECK(is_soft_subset(reordered, s));
    CHECK(s == reordered);
}

TEST_CASE("union is pointwise") {
    const auto u = union_of(sample_s(), sample_t());
    CHECK(u.value_at(p1) == universe6().subset({"u1", "u2", "u3", "u6"}));
    CHECK(u.value_at(p2) == universe6().subset({"u1", "u2", "u3", "u4"}));
    CHECK(u.value_at(p3) == universe6().subset({"u1", "u2"}));
    CHECK(u.value_at(p4) == ElemSubset::full(6));
    CHECK(u.value_at(p5) == universe6().subset({"u6"}));
}

TEST_CASE("intersection is pointwise and drops empty results") {
    const auto i = intersection_of(sample_s(), sample_t());
    CHECK(i.value_at(p1) == universe6().subset({"u1", "u2"}));
    CHECK(i.value_at(p2) == universe6().subset({"u1"}));
    CHECK(i.value_at(p4).none());
    CHECK(i.entries().size() == 2);
}

TEST_CASE("complement covers the whole box") {
    const auto c = complement(sample_s());
    CHECK(c.value_at(p1) == universe6().subset({"u4", "u5", "u6"}));
    CHECK(c.value_at(p3) == ElemSubset::full(6));
    CHECK(c.value_at(p4).none());
    CHECK(c.entries().size() == 4);
    CHECK(complement(c) == sample_s());
    CHECK(complement(empty_set()).value_at(p2) == ElemSubset::full(6));
}

TEST_CASE("union and intersection have the expected algebra") {
    const auto s = sample_s();
    const auto t = sample_t();
    CHECK(union_of(s, t) == union_of(t, s));
    CHECK(intersection_of(s, t) == intersection_of(t, s));
    CHECK(union_of(s, empty_set()) == s);
    CHECK(intersection_of(s, empty_set()) == empty_set());
    CHECK(union_of(s, s) == s);
    CHECK(intersection_of(s, s) == s);
    CHECK((s | t) == union_of(s, t));
    CHECK((s & t) == intersection_of(s, t));
    CHECK(~s == complement(s));
}

TEST_CASE("De Morgan laws hold pointwise") {
    const auto s = sample_s();
    const auto t = sample_t();
    CHECK(complement(union_of(s, t)) == intersection_of(complement(s), complement(t)));
    CHECK(complement(intersection_of(s, t)) == union_of(complement(s), complement(t)));
}

TEST_CASE("operations reject mismatched carriers") {
    const auto s = sample_s();
    const SoftSet other_box(universe6(), GridBox(LatticePoint{0}, LatticePoint{5}));
    CHECK_THROWS_AS(union_of(s, other_box), CarrierMismatch);
    CHECK_THROWS_AS(intersection_of(s, other_box), CarrierMismatch);
    CHECK_THROWS_AS(is_soft_subset(s, other_box), CarrierMismatch);
}

TEST_CASE("alpha inclusion lists qualifying points in order") {
    const auto s = sample_s();
    CHECK((alpha_inclusion(s, universe6().subset({"u1"})) ==
           std::vector<LatticePoint>{p1, p2, p4}));
    CHECK(alpha_inclusion(s, ElemSubset::full(6)) == std::vector<LatticePoint>{p4});
    CHECK((alpha_inclusion(s, ElemSubset::empty(6)) ==
           std::vector<LatticePoint>{p1, p2, p3, p4, p5}));
    CHECK_THROWS_AS(alpha_inclusion(s, ElemSubset::empty(5)), Error);
}

TEST_CASE("alpha inclusion is antitone in alpha") {
    const auto s = sample_s();
    const auto small = alpha_inclusion(s, universe6().subset({"u1"}));
    const auto large = alpha_inclusion(s, universe6().subset({"u1", "u4"}));
    for (const auto& point : large)
        CHECK(std::find(small.begin(), small.end(), point) != small.end());
    CHECK((large == std::vector<LatticePoint>{p2, p4}));
}

TEST_CASE("alpha inclusion factors through single elements") {
    const auto s = sample_s();
    const auto joint = alpha_inclusion(s, universe6().subset({"u1", "u4"}));
    const auto only1 = alpha_inclusion(s, universe6().subset({"u1"}));
    const auto only4 = alpha_inclusion(s, universe6().subset({"u4"}));
    std::vector<LatticePoint> both;
    for (const auto& point : only1)
        if (std::find(only4.begin(), only4.end(), point) != only4.end())
            both.push_back(point);
    CHECK(joint == both);
}
