// Exact singular points of a few plane curves. For a reducible curve the
// geometric genus is p_a minus the node count and can be negative.

#include <iostream>

#include "cyv/pencil.hpp"

int main() {
    using namespace cyv;
    using namespace cyv::pencil;

    const MPoly x = MPoly::variable(3, 0), y = MPoly::variable(3, 1), z = MPoly::variable(3, 2);
    const std::vector<std::pair<std::string, MPoly>> curves{
        {"nodal cubic", y.pow(2) * z - x.pow(3) - x.pow(2) * z},
        {"four lines", x * y * z * (x + y + z)},
        {"two conics", (x.pow(2) + y.pow(2) - z.pow(2)) * (x.pow(2) + y.pow(2) * Rational(2) - z.pow(2) * Rational(3))},
    };
    for (const auto& [name, f] : curves) {
        auto pts = singular_points(f);
        std::cout << name << ": " << point_count(pts) << " singular point(s)\n";
        for (const auto& p : pts) std::cout << "  " << p.format() << "\n";
        auto g = curve_genus_report(f, pts);
        std::cout << "  degree " << g.degree << ", arithmetic genus " << g.arithmetic_genus << ", geometric genus " << g.geometric_genus
                  << "\n";
    }
}
