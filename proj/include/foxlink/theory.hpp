#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "foxlink/intmatrix.hpp"

namespace foxlink {

/// gcd on nonnegative integers with gcd(a, 0) = a; gcd(0, 0) is rejected.
inline Int checked_gcd(const Int& a, const Int& b) {
    if (a < 0 || b < 0) throw std::invalid_argument("gcd arguments must be nonnegative");
    if (a == 0 && b == 0) throw std::invalid_argument("gcd(0, 0) is undefined");
    return gcd(a, b);
}

/// Least prime factor by trial division; n >= 2.
inline Int least_prime_factor(const Int& n) {
    if (n < 2) throw std::invalid_argument("least prime factor needs an argument >= 2");
    if (n % 2 == 0) return 2;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return d;
    return n;
}

/// Least common prime divisor: 1 for coprime positive arguments, otherwise
/// the smallest prime dividing gcd(a, b). With one argument zero, the least
/// prime factor of the other (which must then be >= 2).
inline Int least_common_prime_divisor(const Int& a, const Int& b) {
    const Int g = checked_gcd(a, b);
    if (a == 0 || b == 0) {
        if (g < 2)
            throw std::invalid_argument("least common prime divisor undefined for (0, 1)");
        return least_prime_factor(g);
    }
    if (g == 1) return 1;
    return least_prime_factor(g);
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Distinct prime factors, ascending.
inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("prime factorization needs a positive argument");
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t r0 = m, r1 = ((a % m) + m) % m;
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) throw std::invalid_argument("value is not invertible modulo m");
    return ((s0 % m) + m) % m;
}

/// Verdict for the minimum number of colors of a link at modulus r, read off
/// the least common prime divisor of r and the determinant: coprime means no
/// non-trivial colorings; 2, 3 give exact minima 2, 3; 5 and 7 give exact
/// minimum 4; larger primes give the lower bound 5.
struct Prediction {
    enum class Verdict { no_nontrivial, exact, at_least };
    Verdict verdict = Verdict::no_nontrivial;
    int value = 0;  // the exact minimum, or the lower bound for at_least
    Int lcpd = 0;
    friend bool operator==(const Prediction&, const Prediction&) = default;
};

inline Prediction predicted_min_colors(std::int64_t r, const Int& det) {
    if (r < 2) throw std::invalid_argument("modulus must be at least 2");
    if (det < 0) throw std::invalid_argument("determinant must be nonnegative");
    if (det == 0)
        throw std::invalid_argument("null determinant is outside the prediction's scope");
    const Int l = least_common_prime_divisor(Int(r), det);
    using V = Prediction::Verdict;
    if (l == 1) return {V::no_nontrivial, 0, l};
    if (l == 2) return {V::exact, 2, l};
    if (l == 3) return {V::exact, 3, l};
    if (l == 5 || l == 7) return {V::exact, 4, l};
    return {V::at_least, 5, l};
}

/// A coloring condition 2*over = under_a + under_b realizable inside a
/// palette, with distinct under-colors. Stored with under_a < under_b.
struct Relation {
    std::int64_t over = 0;
    std::int64_t under_a = 0;
    std::int64_t under_b = 0;
    auto operator<=>(const Relation&) const = default;
};

using RelationSet = std::vector<Relation>;  // sorted, duplicate-free

/// All conditions with distinct under-colors drawn from the palette, over
/// the integers (no modulus) or modulo the given one.
inline RelationSet palette_relations(std::vector<std::int64_t> colors,
                                     std::optional<std::int64_t> modulus = std::nullopt) {
    if (modulus && *modulus < 2) throw std::invalid_argument("modulus must be at least 2");
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    RelationSet out;
    for (std::int64_t over : colors)
        for (std::size_t i = 0; i < colors.size(); ++i)
            for (std::size_t j = i + 1; j < colors.size(); ++j) {
                const std::int64_t lhs = 2 * over - colors[i] - colors[j];
                const bool holds = modulus ? ((lhs % *modulus) + *modulus) % *modulus == 0
                                           : lhs == 0;
                if (holds) out.push_back({over, colors[i], colors[j]});
            }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace foxlink
