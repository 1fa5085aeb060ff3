// Minimal library tour: determinants and minimum palettes for the bundled
// diagrams at a few moduli.

#include <foxlink/foxlink.hpp>

#include <iostream>

int main() {
    using namespace foxlink;

    for (const LinkTableEntry& entry : builtin_table()) {
        const IntMatrix m = coloring_matrix(entry.diagram);
        const Int det = link_determinant(m);
        std::cout << entry.diagram.name << ": det " << det;
        for (std::int64_t r : {3, 5, 6}) {
            std::cout << ", n_" << r << " = ";
            if (auto mp = min_palette_diagram(entry.diagram, r))
                std::cout << mp->colors;
            else
                std::cout << "-";
        }
        std::cout << '\n';
    }
    return 0;
}
