#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "foxlink/diagram.hpp"
#include "foxlink/snf.hpp"
#include "foxlink/theory.hpp"

namespace foxlink {

/// Residues mod `modulus`, one per arc and then one per free loop.
struct Coloring {
    std::int64_t modulus = 0;
    std::vector<std::int64_t> values;
    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Sorted distinct colors in use.
inline std::vector<std::int64_t> palette(const Coloring& c) {
    std::vector<std::int64_t> out(c.values.begin(), c.values.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::size_t palette_size(const Coloring& c) { return palette(c).size(); }

/// Constant assignments are the trivial colorings.
inline bool is_trivial(const Coloring& c) { return palette_size(c) < 2; }

/// True iff twice the over-color equals the sum of the under-colors mod r at
/// every crossing. Length and residue-range violations are errors, not a
/// false result.
inline bool is_valid_coloring(const Diagram& d, const Coloring& c) {
    if (c.modulus < 2) throw std::invalid_argument("modulus must be at least 2");
    const std::size_t expected =
        static_cast<std::size_t>(d.arcs) + static_cast<std::size_t>(d.free_loops);
    if (c.values.size() != expected)
        throw std::invalid_argument("coloring length mismatch: expected " +
                                    std::to_string(expected) + " values, got " +
                                    std::to_string(c.values.size()));
    for (std::int64_t v : c.values)
        if (v < 0 || v >= c.modulus)
            throw std::invalid_argument("colors must be reduced to [0, r)");
    for (const Crossing& cr : d.crossings) {
        const std::int64_t lhs = 2 * c.values[static_cast<std::size_t>(cr.over)] -
                                 c.values[static_cast<std::size_t>(cr.under_a)] -
                                 c.values[static_cast<std::size_t>(cr.under_b)];
        if (((lhs % c.modulus) + c.modulus) % c.modulus != 0) return false;
    }
    return true;
}

/// Lazily walks every solution of the coloring system mod r by running an
/// odometer over the solution-module generators; the all-zero coloring comes
/// first. Streams are independent and may be consumed concurrently.
class ColoringStream {
public:
    ColoringStream(const Diagram& d, SolutionModule sol)
        : length_(static_cast<std::size_t>(d.arcs) + static_cast<std::size_t>(d.free_loops)),
          sol_(std::move(sol)),
          counters_(sol_.generators.size(), 0) {}

    std::optional<Coloring> next() {
        if (done_) return std::nullopt;
        Coloring c{sol_.modulus, combine_generators(sol_, counters_)};
        c.values.resize(length_, 0);
        std::size_t i = 0;
        for (; i < counters_.size(); ++i) {
            if (++counters_[i] < sol_.orders[i]) break;
            counters_[i] = 0;
        }
        if (i == counters_.size()) done_ = true;
        return c;
    }

    const Int& cardinality() const { return sol_.cardinality; }
    const SolutionModule& solution_module() const { return sol_; }

private:
    std::size_t length_;
    SolutionModule sol_;
    std::vector<std::int64_t> counters_;
    bool done_ = false;
};

/// All p-colorings of the diagram for a prime p; there are p^k of them where
/// k is the kernel dimension mod p.
inline ColoringStream enumerate_colorings(const Diagram& d, std::int64_t p) {
    if (!is_prime(p))
        throw std::invalid_argument("enumerate_colorings needs a prime modulus");
    return ColoringStream(d, solve_homogeneous_mod(coloring_matrix(d), p));
}

/// All r-colorings for an arbitrary modulus r >= 2: the brute-force route.
inline ColoringStream enumerate_all_colorings_mod(const Diagram& d, std::int64_t r) {
    return ColoringStream(d, solve_homogeneous_mod(coloring_matrix(d), r));
}

/// Rescales a valid coloring mod r0 to the multiple modulus r by the factor
/// r/r0. Validity, palette size and non-triviality carry over.
inline Coloring lift_coloring(const Coloring& c, std::int64_t r, const Diagram& d) {
    if (r < 2) throw std::invalid_argument("target modulus must be at least 2");
    if (!is_valid_coloring(d, c))
        throw std::invalid_argument("coloring is not valid on the diagram");
    if (r % c.modulus != 0)
        throw std::invalid_argument("target modulus must be a multiple of the source modulus");
    const std::int64_t mult = r / c.modulus;
    Coloring out{r, c.values};
    for (auto& v : out.values) v *= mult;
    return out;
}

struct ReduceResult {
    std::int64_t color_gcd = 1;  // g: gcd of the modulus and the translated colors
    std::int64_t prime = 0;      // smallest prime dividing r / g
    Coloring coloring;           // valid non-trivial coloring mod prime
};

/// Contracts a non-trivial r-coloring to a non-trivial prime-modulus
/// coloring without increasing the palette size: translate so arc 0 has
/// color 0, divide the colors and the modulus by their common factor g, then
/// read everything mod the smallest prime dividing r/g. The returned prime
/// divides gcd(r, det).
inline ReduceResult reduce_coloring(const Coloring& c, const Diagram& d) {
    if (!is_valid_coloring(d, c))
        throw std::invalid_argument("coloring is not valid on the diagram");
    if (is_trivial(c))
        throw std::invalid_argument("reduction of a trivial coloring is undefined");
    const std::int64_t r = c.modulus;
    std::vector<std::int64_t> v = c.values;
    const std::int64_t shift = v.front();
    for (auto& x : v) x = ((x - shift) % r + r) % r;

    std::int64_t g = r;
    for (std::int64_t x : v) g = std::gcd(g, x);
    // Non-triviality leaves some translated color in (0, r), so g < r.
    const std::int64_t reduced_modulus = r / g;
    for (auto& x : v) x /= g;

    const std::int64_t p = least_prime_factor(Int(reduced_modulus)).convert_to<std::int64_t>();
    for (auto& x : v) x %= p;
    return {g, p, Coloring{p, std::move(v)}};
}

/// The affine image a*c + b (a != 0 mod p) under which the pivot crossing
/// reads (under_a, over, under_b) = (0, 1, 2). Affine images of valid
/// colorings are valid and keep the palette size.
inline Coloring affine_normalize(const Coloring& c, std::size_t pivot_crossing,
                                 const Diagram& d) {
    if (!is_prime(c.modulus))
        throw std::invalid_argument("affine normalization needs a prime modulus");
    if (pivot_crossing >= d.crossings.size())
        throw std::out_of_range("pivot crossing out of range");
    if (!is_valid_coloring(d, c))
        throw std::invalid_argument("coloring is not valid on the diagram");
    const Crossing& cr = d.crossings[pivot_crossing];
    const std::int64_t p = c.modulus;
    const std::int64_t co = c.values[static_cast<std::size_t>(cr.over)];
    const std::int64_t ca = c.values[static_cast<std::size_t>(cr.under_a)];
    const std::int64_t cb = c.values[static_cast<std::size_t>(cr.under_b)];
    if (co == ca || co == cb || ca == cb)
        throw std::invalid_argument("pivot crossing colors are not pairwise distinct");
    const std::int64_t a = mod_inverse(((co - ca) % p + p) % p, p);
    const std::int64_t b = (p - (a * ca) % p) % p;
    Coloring out{p, c.values};
    for (auto& v : out.values) v = (a * v + b) % p;
    return out;
}

/// First crossing whose three incident colors are pairwise distinct.
inline std::optional<std::size_t> find_polychromatic_crossing(const Diagram& d,
                                                              const Coloring& c) {
    const std::size_t expected =
        static_cast<std::size_t>(d.arcs) + static_cast<std::size_t>(d.free_loops);
    if (c.values.size() != expected)
        throw std::invalid_argument("coloring length mismatch");
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
        const Crossing& cr = d.crossings[i];
        const std::int64_t co = c.values[static_cast<std::size_t>(cr.over)];
        const std::int64_t ca = c.values[static_cast<std::size_t>(cr.under_a)];
        const std::int64_t cb = c.values[static_cast<std::size_t>(cr.under_b)];
        if (co != ca && co != cb && ca != cb) return i;
    }
    return std::nullopt;
}

struct MinPalette {
    std::size_t colors = 0;
    Coloring witness;
};

enum class PaletteSearch { prime_reduction, brute_force };

namespace detail {

/// Kernel scan up to affine equivalence for a prime modulus: affine maps
/// preserve validity and palette size, so it suffices to inspect the one
/// representative per orbit with first color 0 and first nonzero color 1.
inline std::optional<MinPalette> min_palette_prime(const Diagram& d, std::int64_t p) {
    ColoringStream stream = enumerate_colorings(d, p);
    std::optional<MinPalette> best;
    while (auto c = stream.next()) {
        if (c->values.empty() || c->values.front() != 0) continue;
        std::int64_t first_nonzero = 0;
        for (std::int64_t v : c->values)
            if (v != 0) {
                first_nonzero = v;
                break;
            }
        if (first_nonzero != 1) continue;  // also skips the all-zero coloring
        const std::size_t size = palette_size(*c);
        if (!best || size < best->colors) best = MinPalette{size, std::move(*c)};
    }
    return best;
}

}  // namespace detail

/// Least palette size over the non-trivial r-colorings of this diagram, with
/// a witness attaining it; empty when only trivial colorings exist. For a
/// prime modulus this scans the kernel up to affine equivalence. For a
/// composite modulus the default route takes the minimum over the primes
/// dividing gcd(r, det) and lifts the witness, which matches the diagram
/// minimum because lifting preserves palette size and reduction never
/// increases it; brute force enumerates the full solution set instead.
inline std::optional<MinPalette> min_palette_diagram(
    const Diagram& d, std::int64_t r, PaletteSearch mode = PaletteSearch::prime_reduction) {
    if (r < 2) throw std::invalid_argument("modulus must be at least 2");
    if (mode == PaletteSearch::brute_force) {
        ColoringStream stream = enumerate_all_colorings_mod(d, r);
        std::optional<MinPalette> best;
        while (auto c = stream.next()) {
            const std::size_t size = palette_size(*c);
            if (size < 2) continue;
            if (!best || size < best->colors) best = MinPalette{size, std::move(*c)};
        }
        return best;
    }
    if (is_prime(r)) return detail::min_palette_prime(d, r);

    const Int det = link_determinant(coloring_matrix(d));
    const Int common = det == 0 ? Int(r) : gcd(Int(r), det);
    std::optional<MinPalette> best;
    for (std::int64_t p : prime_factors(common.convert_to<std::int64_t>())) {
        auto sub = detail::min_palette_prime(d, p);
        if (sub && (!best || sub->colors < best->colors))
            best = MinPalette{sub->colors, lift_coloring(sub->witness, r, d)};
    }
    return best;
}

/// Translation making the smallest color 0; palette size is unchanged.
inline Coloring translate_min_to_zero(const Coloring& c) {
    if (c.values.empty()) return c;
    const std::int64_t lo = *std::min_element(c.values.begin(), c.values.end());
    Coloring out{c.modulus, c.values};
    for (auto& v : out.values) v -= lo;
    return out;
}

}  // namespace foxlink
