#include <foxlink/coloring.hpp>
#include <foxlink/linktable.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "test_support.hpp"

using namespace foxlink;
using testsupport::collect;

namespace {

const Diagram& table_diagram(const char* name) { return find_entry(name)->diagram; }

std::vector<Coloring> nontrivial_colorings(const Diagram& d, std::int64_t r) {
    std::vector<Coloring> out;
    for (auto& c : collect(enumerate_all_colorings_mod(d, r)))
        if (!is_trivial(c)) out.push_back(std::move(c));
    return out;
}

}  // namespace

TEST_CASE("validity: pinned examples") {
    const Diagram& trefoil = table_diagram("trefoil");
    CHECK(is_valid_coloring(trefoil, {3, {0, 1, 2}}));
    CHECK_FALSE(is_valid_coloring(trefoil, {3, {0, 1, 1}}));

    // constant assignments are valid on every diagram
    for (const auto& entry : builtin_table()) {
        const std::size_t n = static_cast<std::size_t>(entry.diagram.arcs) +
                              static_cast<std::size_t>(entry.diagram.free_loops);
        CHECK(is_valid_coloring(entry.diagram, {5, std::vector<std::int64_t>(n, 2)}));
    }

    CHECK_THROWS_AS(is_valid_coloring(trefoil, {3, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(is_valid_coloring(trefoil, {3, {0, 1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(is_valid_coloring(trefoil, {1, {0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("palette helpers") {
    const Coloring c{6, {0, 2, 0, 4}};
    CHECK(palette(c) == std::vector<std::int64_t>{0, 2, 4});
    CHECK(palette_size(c) == 3);
    CHECK_FALSE(is_trivial(c));
    CHECK(is_trivial({5, {3, 3, 3}}));
    CHECK(translate_min_to_zero({6, {2, 4, 2}}) == Coloring{6, {0, 2, 0}});
}

TEST_CASE("enumeration: trefoil kernels") {
    const Diagram& trefoil = table_diagram("trefoil");

    const auto mod3 = collect(enumerate_colorings(trefoil, 3));
    CHECK(mod3.size() == 9);
    CHECK(std::count_if(mod3.begin(), mod3.end(),
                        [](const Coloring& c) { return !is_trivial(c); }) == 6);
    for (const auto& c : mod3) CHECK(is_valid_coloring(trefoil, c));

    const auto mod5 = collect(enumerate_colorings(trefoil, 5));
    CHECK(mod5.size() == 5);
    for (const auto& c : mod5) CHECK(is_trivial(c));

    CHECK(collect(enumerate_colorings(torus_2n(5), 5)).size() == 25);

    CHECK_THROWS_AS(enumerate_colorings(trefoil, 4), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_colorings(trefoil, 1), std::invalid_argument);
}

TEST_CASE("minimum palette: pinned values") {
    const Diagram& trefoil = table_diagram("trefoil");

    const auto tre3 = min_palette_diagram(trefoil, 3);
    REQUIRE(tre3.has_value());
    CHECK(tre3->colors == 3);
    CHECK(tre3->witness == Coloring{3, {0, 1, 2}});
    CHECK(is_valid_coloring(trefoil, tre3->witness));

    const auto fig5 = min_palette_diagram(table_diagram("figure8"), 5);
    REQUIRE(fig5.has_value());
    CHECK(fig5->colors == 4);
    CHECK(is_valid_coloring(table_diagram("figure8"), fig5->witness));

    CHECK_FALSE(min_palette_diagram(trefoil, 5).has_value());
    CHECK_THROWS_AS(min_palette_diagram(trefoil, 1), std::invalid_argument);
}

TEST_CASE("minimum palette: reduction route equals brute force") {
    for (const char* name : {"trefoil", "figure8", "hopf", "T(2,9)"}) {
        const Diagram& d = table_diagram(name);
        for (std::int64_t r = 2; r <= 12; ++r) {
            CAPTURE(name, r);
            const auto fast = min_palette_diagram(d, r, PaletteSearch::prime_reduction);
            const auto brute = min_palette_diagram(d, r, PaletteSearch::brute_force);
            CHECK(fast.has_value() == brute.has_value());
            if (fast && brute) {
                CHECK(fast->colors == brute->colors);
                CHECK(is_valid_coloring(d, fast->witness));
                CHECK(palette_size(fast->witness) == fast->colors);
            }
        }
    }
}

TEST_CASE("minimum palette: matches the exhaustive-scan oracle") {
    for (const char* name : {"trefoil", "figure8", "hopf", "unknot-kink"}) {
        const Diagram& d = table_diagram(name);
        for (std::int64_t r = 2; r <= 8; ++r) {
            CAPTURE(name, r);
            const auto mine = min_palette_diagram(d, r);
            const auto oracle = testsupport::brute_force_scan(d, r).min_nontrivial_palette;
            CHECK(mine.has_value() == oracle.has_value());
            if (mine && oracle) CHECK(mine->colors == *oracle);
        }
    }
}

TEST_CASE("lift: pinned examples") {
    const Diagram& trefoil = table_diagram("trefoil");
    const Coloring base{3, {0, 1, 2}};
    CHECK(lift_coloring(base, 6, trefoil) == Coloring{6, {0, 2, 4}});
    CHECK(lift_coloring(base, 9, trefoil) == Coloring{9, {0, 3, 6}});
    CHECK(lift_coloring(base, 3, trefoil) == base);
    CHECK(is_valid_coloring(trefoil, lift_coloring(base, 9, trefoil)));
    CHECK_THROWS_AS(lift_coloring(base, 7, trefoil), std::invalid_argument);
    CHECK_THROWS_AS(lift_coloring({3, {0, 1, 1}}, 6, trefoil), std::invalid_argument);

    // trivial colorings stay trivial under lifting
    const Coloring flat = lift_coloring({3, {2, 2, 2}}, 12, trefoil);
    CHECK(is_trivial(flat));
    CHECK(flat.values == std::vector<std::int64_t>{8, 8, 8});
}

TEST_CASE("free-loop values are unconstrained but counted") {
    const Diagram d = parse_diagram("X 0 0 1\nloop");
    CHECK(is_valid_coloring(d, {5, {1, 1, 4}}));
    CHECK_FALSE(is_valid_coloring(d, {5, {1, 2, 0}}));
    CHECK_THROWS_AS(is_valid_coloring(d, {5, {1, 1}}), std::invalid_argument);
    CHECK(palette(Coloring{5, {1, 1, 4}}) == std::vector<std::int64_t>{1, 4});

    // the loop contributes a free color, so two-color assignments exist
    const auto mp = min_palette_diagram(d, 5);
    REQUIRE(mp.has_value());
    CHECK(mp->colors == 2);
}

TEST_CASE("lift: preserves validity, palette and non-triviality") {
    for (const char* name : {"trefoil", "figure8", "hopf"}) {
        const Diagram& d = table_diagram(name);
        for (std::int64_t r0 : {2, 3, 5}) {
            for (const auto& c : nontrivial_colorings(d, r0)) {
                for (std::int64_t mult : {2, 3, 4}) {
                    const Coloring up = lift_coloring(c, r0 * mult, d);
                    CHECK(is_valid_coloring(d, up));
                    CHECK(palette_size(up) == palette_size(c));
                    CHECK_FALSE(is_trivial(up));
                }
            }
        }
    }
}

TEST_CASE("reduce: pinned examples") {
    const Diagram& trefoil = table_diagram("trefoil");

    const ReduceResult six = reduce_coloring({6, {0, 2, 4}}, trefoil);
    CHECK(six.color_gcd == 2);
    CHECK(six.prime == 3);
    CHECK(six.coloring == Coloring{3, {0, 1, 2}});

    const ReduceResult nine = reduce_coloring({9, {0, 3, 6}}, trefoil);
    CHECK(nine.color_gcd == 3);
    CHECK(nine.prime == 3);
    CHECK(nine.coloring == Coloring{3, {0, 1, 2}});

    // prime modulus, color gcd 1: nothing to contract
    const ReduceResult fix = reduce_coloring({3, {0, 1, 2}}, trefoil);
    CHECK(fix.color_gcd == 1);
    CHECK(fix.prime == 3);
    CHECK(fix.coloring == Coloring{3, {0, 1, 2}});

    CHECK_THROWS_AS(reduce_coloring({6, {2, 2, 2}}, trefoil), std::invalid_argument);
    CHECK_THROWS_AS(reduce_coloring({6, {0, 1, 2}}, trefoil), std::invalid_argument);
}

TEST_CASE("reduce: yields valid non-trivial prime colorings, palette never grows") {
    for (const auto& entry : builtin_table()) {
        const Diagram& d = entry.diagram;
        const Int det = link_determinant(coloring_matrix(d));
        for (std::int64_t r = 2; r <= 12; ++r) {
            for (const auto& c : nontrivial_colorings(d, r)) {
                CAPTURE(d.name, r, c.values);
                const ReduceResult res = reduce_coloring(c, d);
                CHECK(is_prime(res.prime));
                CHECK(is_valid_coloring(d, res.coloring));
                CHECK_FALSE(is_trivial(res.coloring));
                CHECK(palette_size(res.coloring) <= palette_size(c));
                const Int common = det == 0 ? Int(r) : checked_gcd(Int(r), det);
                CHECK(common % res.prime == 0);
            }
        }
    }
}

TEST_CASE("affine normalization: pinned examples") {
    const Diagram t7 = torus_2n(7);
    // arc i colored 2 + 2i mod 7: crossing 0 reads (over, unders) = (4, {2, 6})
    const Coloring c{7, {2, 4, 6, 1, 3, 5, 0}};
    REQUIRE(is_valid_coloring(t7, c));
    const Coloring normalized = affine_normalize(c, 0, t7);
    CHECK(normalized == Coloring{7, {0, 1, 2, 3, 4, 5, 6}});
    CHECK(is_valid_coloring(t7, normalized));
    CHECK(palette_size(normalized) == palette_size(c));

    // an already normalized coloring maps to itself
    CHECK(affine_normalize(normalized, 0, t7) == normalized);

    CHECK_THROWS_AS(affine_normalize({7, {1, 1, 1, 1, 1, 1, 1}}, 0, t7),
                    std::invalid_argument);
    CHECK_THROWS_AS(affine_normalize(c, 99, t7), std::out_of_range);
    const Diagram& trefoil = table_diagram("trefoil");
    CHECK_THROWS_AS(affine_normalize({6, {0, 2, 4}}, 0, trefoil), std::invalid_argument);
}

TEST_CASE("affine maps preserve validity and palette size") {
    std::mt19937 rng(23);
    for (const char* name : {"trefoil", "figure8", "T(2,5)"}) {
        const Diagram& d = table_diagram(name);
        for (std::int64_t p : {3, 5, 7}) {
            for (const auto& c : collect(enumerate_colorings(d, p))) {
                const std::int64_t a = 1 + static_cast<std::int64_t>(rng() % (p - 1));
                const std::int64_t b = static_cast<std::int64_t>(rng() % p);
                Coloring mapped{p, c.values};
                for (auto& v : mapped.values) v = (a * v + b) % p;
                CHECK(is_valid_coloring(d, mapped));
                CHECK(palette_size(mapped) == palette_size(c));
            }
        }
    }
}

TEST_CASE("normalized figure-eight colorings use palette {0,1,2,x}") {
    const Diagram& fig8 = table_diagram("figure8");
    int nontrivial = 0;
    for (const auto& c : collect(enumerate_colorings(fig8, 5))) {
        if (is_trivial(c)) continue;
        ++nontrivial;
        const auto pivot = find_polychromatic_crossing(fig8, c);
        REQUIRE(pivot.has_value());
        const Coloring norm = affine_normalize(c, *pivot, fig8);
        const auto colors = palette(norm);
        REQUIRE(colors.size() == 4);
        CHECK(colors[0] == 0);
        CHECK(colors[1] == 1);
        CHECK(colors[2] == 2);
        CHECK((colors[3] == 3 || colors[3] == 4));
    }
    CHECK(nontrivial == 20);
}

TEST_CASE("polychromatic crossing search") {
    const Diagram& trefoil = table_diagram("trefoil");
    const auto hit = find_polychromatic_crossing(trefoil, {3, {0, 1, 2}});
    REQUIRE(hit.has_value());
    CHECK(*hit < trefoil.crossings.size());

    CHECK_FALSE(find_polychromatic_crossing(trefoil, {3, {1, 1, 1}}).has_value());

    // with only two colors available there is no such crossing
    const Diagram& hopf = table_diagram("hopf");
    REQUIRE(is_valid_coloring(hopf, {2, {0, 1}}));
    CHECK_FALSE(find_polychromatic_crossing(hopf, {2, {0, 1}}).has_value());
}

TEST_CASE("two- and three-color implications at prime moduli") {
    for (const auto& entry : builtin_table()) {
        const Diagram& d = entry.diagram;
        if (d.arcs > 7) continue;
        for (std::int64_t p : {3, 5, 7}) {
            for (const auto& c : collect(enumerate_colorings(d, p))) {
                if (is_trivial(c)) continue;
                const std::size_t size = palette_size(c);
                CAPTURE(d.name, p, c.values);
                CHECK(size != 2);  // two colors force an even modulus
                if (size == 3) CHECK(p == 3);
            }
        }
    }
}
