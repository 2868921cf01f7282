// Walkthrough of the convexity machinery: a generated convex soft set, a
// hand-made violation with its witness, the complement duality, and a small
// run of the randomized theorem suite.

#include <iostream>

#include <softset/softset.hpp>

using namespace softset;

int main() {
    const Universe universe{"u1", "u2"};
    const GridBox box(LatticePoint{0, 0}, LatticePoint{4, 4});

    const SoftSet generated = random_convex_soft_set(universe, box, 2024);
    std::cout << "generated soft set on " << to_string(box) << " with "
              << generated.entries().size() << " non-empty points\n";
    std::cout << "  decider:  convex = " << (is_convex(generated).holds() ? "yes" : "no")
              << "\n";
    std::cout << "  oracle:   convex = "
              << (is_convex_oracle(generated).holds() ? "yes" : "no") << "\n";

    // Punch a hole into a level region to manufacture a violation.
    std::vector<std::pair<LatticePoint, ElemSubset>> dented;
    for (const auto& [point, value] : generated.entries()) {
        ElemSubset v = value;
        if (point == LatticePoint{2, 2}) v = ElemSubset::empty(universe.size());
        dented.emplace_back(point, v);
    }
    const SoftSet broken(universe, box, dented);
    const Verdict verdict = is_convex(broken);
    if (!verdict.holds()) {
        std::cout << "after clearing f(2,2): refuted by "
                  << to_string(*verdict.witness, universe) << "\n";
        std::cout << "  witness replays: "
                  << (witness_holds(broken, *verdict.witness) ? "yes" : "no") << "\n";
    } else {
        std::cout << "after clearing f(2,2): still convex (the point carried no value)\n";
    }

    std::cout << "complement of the generated set is concave: "
              << (is_concave(complement(generated)).holds() ? "yes" : "no") << "\n\n";

    const SuiteConfig config{2, 4, 2, 3};
    std::cout << theorem_suite(60, config, 11).to_text();

    // The FAIL row above is the suite doing its job: intersection does not
    // preserve concavity. The smallest counterexample fits in one box.
    const Universe one{"u"};
    const GridBox line(LatticePoint{0}, LatticePoint{2});
    const SoftSet left(one, line,
                       {{LatticePoint{0}, ElemSubset::of(1, {0})},
                        {LatticePoint{1}, ElemSubset::of(1, {0})}});
    const SoftSet right(one, line,
                        {{LatticePoint{1}, ElemSubset::of(1, {0})},
                         {LatticePoint{2}, ElemSubset::of(1, {0})}});
    const Verdict met = is_concave(intersection_of(left, right));
    std::cout << "\nminimal refutation of the intersection law on " << to_string(line)
              << ":\n";
    std::cout << "  {0,1} and {1,2} intervals are concave: "
              << (is_concave(left).holds() && is_concave(right).holds() ? "yes" : "no")
              << "\n";
    std::cout << "  their intersection {1} is concave: " << (met.holds() ? "yes" : "no")
              << ", witness " << to_string(*met.witness, one) << "\n";
    return 0;
}
