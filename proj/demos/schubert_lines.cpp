// Classical enumerative counts in Grassmannian Chow rings.

#include <iostream>

#include "cyv/chow.hpp"

int main() {
    using namespace cyv;
    using namespace cyv::chow;

    // Lines in P^3 meeting four general lines.
    auto g24 = grassmann_ring(2, 4);
    std::cout << "lines meeting 4 lines in P^3:   " << integrate(schubert(g24, Partition({1})).pow(4)) << "\n";

    // Degree of G(2,5) in the Pluecker embedding.
    auto g25 = grassmann_ring(2, 5);
    std::cout << "degree of G(2,5):               " << integrate(schubert(g25, Partition({1})).pow(6)) << "\n";

    // The same product, parsed and expanded in the Schubert basis.
    std::cout << "s1^4 on G(2,4):                 " << parse_class_expr("s1^4", g24).to_string() << "\n";
}
