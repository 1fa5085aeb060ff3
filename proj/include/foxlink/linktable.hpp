#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "foxlink/diagram.hpp"

namespace foxlink {

/// A reference diagram together with its independently determined
/// determinant and a note on how that value was obtained.
struct LinkTableEntry {
    Diagram diagram;
    std::optional<Int> expected_det;
    std::string provenance;
};

inline const std::vector<LinkTableEntry>& builtin_table() {
    static const std::vector<LinkTableEntry> table = [] {
        std::vector<LinkTableEntry> t;
        auto add = [&](Diagram d, Int det, std::string prov) {
            t.push_back({std::move(d), std::move(det), std::move(prov)});
        };

        Diagram trefoil = torus_2n(3);
        trefoil.name = "trefoil";
        add(std::move(trefoil), 3, "torus family: determinant equals the crossing count");
        for (int n : {5, 7, 9, 11})
            add(torus_2n(n), n, "torus family: determinant equals the crossing count");

        Diagram fig8;
        fig8.name = "figure8";
        fig8.arcs = 4;
        fig8.crossings = {{0, 1, 2}, {2, 3, 0}, {1, 2, 3}, {3, 0, 1}};
        add(std::move(fig8), 5, "checked against the cofactor-expansion minor oracle");

        Diagram five2;
        five2.name = "5_2";
        five2.arcs = 5;
        five2.crossings = {{2, 0, 1}, {4, 1, 2}, {0, 2, 3}, {3, 4, 0}, {1, 3, 4}};
        add(std::move(five2), 7, "checked against the cofactor-expansion minor oracle");

        Diagram hopf;
        hopf.name = "hopf";
        hopf.arcs = 2;
        hopf.crossings = {{0, 1, 1}, {1, 0, 0}};
        add(std::move(hopf), 2, "checked against the cofactor-expansion minor oracle");

        // One-crossing unknot gadget with two arcs; its system forces the two
        // colors equal, so no modulus admits a non-trivial coloring.
        Diagram kink;
        kink.name = "unknot-kink";
        kink.arcs = 2;
        kink.crossings = {{0, 0, 1}};
        add(std::move(kink), 1, "checked against the cofactor-expansion minor oracle");

        for (const auto& e : t) validate(e.diagram);
        return t;
    }();
    return table;
}

/// Case-sensitive lookup by entry name; "T(2,3)" resolves to the trefoil.
inline const LinkTableEntry* find_entry(std::string_view name) {
    std::string key{name};
    if (key == "T(2,3)") key = "trefoil";
    for (const auto& e : builtin_table())
        if (e.diagram.name == key) return &e;
    return nullptr;
}

}  // namespace foxlink
