// Walkthrough of the soft-set algebra on two hand-built one-dimensional
// soft sets: pointwise values, union, intersection, complement, subset
// verdicts, alpha-inclusions, and the canonical document form.

#include <iostream>

#include <softset/softset.hpp>

using namespace softset;

namespace {

void print_values(const std::string& label, const SoftSet& s) {
    std::cout << label << " over " << to_string(s.box()) << ":\n";
    for (const auto& point : s.box().points())
        std::cout << "  f" << to_string(point) << " = "
                  << to_string(s.value_at(point), s.universe()) << "\n";
}

}  // namespace

int main() {
    const Universe shades{"red", "green", "blue", "gray"};
    const GridBox box(LatticePoint{0}, LatticePoint{4});

    const SoftSet warm(shades, box,
                       {{LatticePoint{0}, shades.subset({"red"})},
                        {LatticePoint{1}, shades.subset({"red", "gray"})},
                        {LatticePoint{3}, shades.subset({"red", "green"})}});
    const SoftSet cool(shades, box,
                       {{LatticePoint{1}, shades.subset({"blue", "gray"})},
                        {LatticePoint{2}, shades.subset({"blue"})},
                        {LatticePoint{3}, shades.subset({"green", "blue"})}});

    print_values("warm", warm);
    print_values("cool", cool);

    print_values("warm | cool", union_of(warm, cool));
    print_values("warm & cool", intersection_of(warm, cool));
    print_values("~warm", complement(warm));

    std::cout << "warm below warm|cool: "
              << (is_soft_subset(warm, union_of(warm, cool)) ? "yes" : "no") << "\n";
    const auto violation = find_subset_violation(warm, cool);
    if (violation)
        std::cout << "warm below cool fails at " << to_string(violation->first) << " on "
                  << shades.name(violation->second) << "\n";

    std::cout << "points whose value covers {red}:";
    for (const auto& point : alpha_inclusion(warm, shades.subset({"red"})))
        std::cout << " " << to_string(point);
    std::cout << "\n";
    std::cout << "points whose value covers {red,gray}:";
    for (const auto& point : alpha_inclusion(warm, shades.subset({"red", "gray"})))
        std::cout << " " << to_string(point);
    std::cout << "\n\n";

    std::cout << "canonical document for warm:\n" << serialize_document(warm);
    return 0;
}
