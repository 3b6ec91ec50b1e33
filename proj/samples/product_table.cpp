// Prints the deformed products of all pairs of weight-1 and weight-2 diagrams,
// then the same products at the two classical endpoints.
#include <iostream>

#include "ldiag.hpp"

int main() {
    using namespace ldiag;
    const auto deck = deck_up_to(2);
    for (const auto& a : deck) {
        if (a.empty()) continue;
        for (const auto& b : deck) {
            if (b.empty()) continue;
            const DiagramSum s = deformed_product(a, b);
            std::cout << "[" << format_matrix(a) << "] * [" << format_matrix(b) << "]  (" << s.size() << " terms)\n"
                      << format_sum(s);
            std::cout << "  at (0,0): " << format_sum(specialize(s, 0, 0));
            std::cout << "  at (1,1): " << specialize(s, 1, 1).size() << " terms, all coefficient 1\n\n";
        }
    }
}
