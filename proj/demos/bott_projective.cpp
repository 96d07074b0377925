// Cohomology of O(d) on P^3 and of twisted tangent bundles, via Bott.

#include <iostream>

#include "cyv/bott.hpp"

int main() {
    using namespace cyv;
    using namespace cyv::bott;

    for (int d = -6; d <= 3; ++d) {
        BottInput in{4, 1, Weight{{d}}, Weight{{0, 0, 0}}};
        std::cout << "O(" << d << ") on P^3: " << bott_cohomology(in).to_string() << "\n";
    }

    // Q(-1) on P^3 is the twisted tangent bundle; Q* sits in the gamma block.
    BottInput t{4, 1, Weight{{0}}, Weight{{0, 0, -1}}};
    std::cout << "Q on P^3: " << bott_cohomology(t).to_string() << "\n";
}
