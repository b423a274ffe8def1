#pragma once

#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lbspec/rational.hpp"
#include "lbspec/spectrum.hpp"  // isqrt

namespace lbspec::nt {

using lbspec::isqrt;

namespace detail {

inline void require_positive(std::int64_t k, const char* what) {
    if (k < 1) throw std::invalid_argument(std::string(what) + ": argument must be a natural number");
}

inline bool is_square(std::int64_t k) {
    if (k < 0) return false;
    const std::int64_t r = isqrt(k);
    return r * r == k;
}

/// True when k = alpha * m^2 for some natural m.
inline bool is_multiple_of_square(std::int64_t k, std::int64_t alpha) {
    return k > 0 && k % alpha == 0 && is_square(k / alpha);
}

/// Calls fn(d) for every positive divisor d of k.
template <class Fn>
void for_each_divisor(std::int64_t k, Fn&& fn) {
    for (std::int64_t d = 1; d * d <= k; ++d) {
        if (k % d != 0) continue;
        fn(d);
        if (d != k / d) fn(k / d);
    }
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Theta series

enum class ThetaLattice { Z, Sqrt2Z, Z2, Z3, ZPlusSqrt2Z };

[[nodiscard]] inline std::optional<ThetaLattice> parse_theta_lattice(std::string_view s) {
    if (s == "z") return ThetaLattice::Z;
    if (s == "sqrt2z") return ThetaLattice::Sqrt2Z;
    if (s == "z2") return ThetaLattice::Z2;
    if (s == "z3") return ThetaLattice::Z3;
    if (s == "z+sqrt2z" || s == "z-plus-sqrt2z") return ThetaLattice::ZPlusSqrt2Z;
    return std::nullopt;
}

namespace detail {

/// sum_{z in Z} q^(scale * z^2), truncated after q^max_k.
inline std::vector<std::uint64_t> base_theta(std::int64_t scale, std::int64_t max_k) {
    std::vector<std::uint64_t> s(static_cast<std::size_t>(max_k) + 1, 0);
    s[0] = 1;
    for (std::int64_t z = 1; scale * z * z <= max_k; ++z) s[static_cast<std::size_t>(scale * z * z)] += 2;
    return s;
}

inline std::vector<std::uint64_t> multiply(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> c(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

}  // namespace detail

/// Coefficients N(0..max_k) of the theta series of a lattice, obtained by
/// truncated power-series products of the one-dimensional series.
[[nodiscard]] inline std::vector<std::uint64_t> theta_coeffs(ThetaLattice lattice, std::int64_t max_k) {
    if (max_k < 0) throw std::invalid_argument("theta_coeffs: max_k must be >= 0");
    const auto z = detail::base_theta(1, max_k);
    switch (lattice) {
        case ThetaLattice::Z: return z;
        case ThetaLattice::Sqrt2Z: return detail::base_theta(2, max_k);
        case ThetaLattice::Z2: return detail::multiply(z, z);
        case ThetaLattice::Z3: return detail::multiply(detail::multiply(z, z), z);
        case ThetaLattice::ZPlusSqrt2Z: return detail::multiply(z, detail::base_theta(2, max_k));
    }
    return {};
}

// ---------------------------------------------------------------------------
// Representation counts

/// Brute-force lattice scans over signed ordered tuples. Used as the primary
/// route for N3 and as the reference for every other count.
namespace brute {

inline std::uint64_t n2(std::int64_t k) {
    const std::int64_t r = isqrt(k);
    std::uint64_t count = 0;
    for (std::int64_t x = -r; x <= r; ++x) {
        const std::int64_t rest = k - x * x;
        if (!detail::is_square(rest)) continue;
        count += rest == 0 ? 1 : 2;
    }
    return count;
}

inline std::uint64_t n2_prime(std::int64_t k) {
    std::uint64_t count = 0;
    for (std::int64_t y = -isqrt(k / 2); y <= isqrt(k / 2); ++y) {
        const std::int64_t rest = k - 2 * y * y;
        if (!detail::is_square(rest)) continue;
        count += rest == 0 ? 1 : 2;
    }
    return count;
}

inline std::uint64_t n3(std::int64_t k) {
    const std::int64_t r = isqrt(k);
    std::uint64_t count = 0;
    for (std::int64_t x = -r; x <= r; ++x) {
        for (std::int64_t y = -r; y <= r; ++y) {
            const std::int64_t rest = k - x * x - y * y;
            if (!detail::is_square(rest)) continue;
            count += rest == 0 ? 1 : 2;
        }
    }
    return count;
}

/// k = x^2 + y^2 with 0 < x < y.
inline std::uint64_t l2(std::int64_t k) {
    std::uint64_t count = 0;
    for (std::int64_t x = 1; 2 * x * x < k; ++x) {
        const std::int64_t rest = k - x * x;
        if (detail::is_square(rest)) ++count;
    }
    return count;
}

/// k = x^2 + y^2 + z^2 with 0 < x < y < z.
inline std::uint64_t l3(std::int64_t k) {
    std::uint64_t count = 0;
    for (std::int64_t x = 1; 3 * x * x < k; ++x) {
        for (std::int64_t y = x + 1; x * x + 2 * y * y < k; ++y) {
            if (detail::is_square(k - x * x - y * y)) ++count;
        }
    }
    return count;
}

}  // namespace brute

/// N2(k) = #{(x, y) in Z^2 : x^2 + y^2 = k} = 4 (d_1(k) - d_3(k)), counting
/// divisors congruent to 1 and 3 mod 4.
[[nodiscard]] inline std::uint64_t n2(std::int64_t k) {
    detail::require_positive(k, "n2");
    std::int64_t diff = 0;
    detail::for_each_divisor(k, [&](std::int64_t d) {
        if (d % 4 == 1) ++diff;
        if (d % 4 == 3) --diff;
    });
    return static_cast<std::uint64_t>(4 * diff);
}

/// N2'(k) = #{(x, y) in Z^2 : x^2 + 2 y^2 = k} = 2 (d_{1,3}(k) - d_{5,7}(k)) mod 8.
[[nodiscard]] inline std::uint64_t n2_prime(std::int64_t k) {
    detail::require_positive(k, "n2_prime");
    std::int64_t diff = 0;
    detail::for_each_divisor(k, [&](std::int64_t d) {
        const auto r = d % 8;
        if (r == 1 || r == 3) ++diff;
        if (r == 5 || r == 7) --diff;
    });
    return static_cast<std::uint64_t>(2 * diff);
}

/// N3(k) = #{(x, y, z) in Z^3 : x^2 + y^2 + z^2 = k}, by direct lattice scan.
[[nodiscard]] inline std::uint64_t n3(std::int64_t k) {
    detail::require_positive(k, "n3");
    return brute::n3(k);
}

/// True iff k is not of the form 4^m (8l + 7).
[[nodiscard]] inline bool three_squares_representable(std::int64_t k) {
    detail::require_positive(k, "three_squares_representable");
    while (k % 4 == 0) k /= 4;
    return k % 8 != 7;
}

/// L2(k): representations k = x^2 + y^2 with 0 < x < y. Every such pair is
/// one 8-element signed/swapped orbit of N2; k = m^2 and k = 2m^2 add four
/// extra boundary points.
[[nodiscard]] inline std::uint64_t l2(std::int64_t k) {
    detail::require_positive(k, "l2");
    const std::uint64_t boundary =
        (detail::is_square(k) || detail::is_multiple_of_square(k, 2)) ? 4 : 0;
    const std::uint64_t total = n2(k);
    if (total < boundary || (total - boundary) % 8 != 0) {
        throw std::logic_error("l2: orbit count is not integral for k = " + std::to_string(k));
    }
    const std::uint64_t value = (total - boundary) / 8;
    if (value != brute::l2(k)) throw std::logic_error("l2: case formula disagrees with brute force at k = " + std::to_string(k));
    return value;
}

/// L3(k): representations k = x^2 + y^2 + z^2 with 0 < x < y < z, from the
/// orbit decomposition N3 = 48 L3 + 3 N2 + 6 N2' (+ boundary corrections for
/// k = m^2, 2m^2, 3m^2).
[[nodiscard]] inline std::uint64_t l3(std::int64_t k) {
    detail::require_positive(k, "l3");
    const auto total3 = static_cast<std::int64_t>(n3(k));
    const auto total2 = static_cast<std::int64_t>(n2(k));
    const auto total2p = static_cast<std::int64_t>(n2_prime(k));

    std::int64_t numerator = 0;
    if (detail::is_square(k)) {
        numerator = total3 - 3 * total2 - 6 * total2p + 18;
    } else if (detail::is_multiple_of_square(k, 2)) {
        numerator = total3 - 3 * total2 - 6 * total2p + 12;
    } else if (detail::is_multiple_of_square(k, 3)) {
        numerator = total3 - 6 * total2p + 16;
    } else {
        numerator = total3 - 3 * total2 - 6 * total2p;
    }
    if (numerator < 0 || numerator % 48 != 0) {
        throw std::logic_error("l3: orbit count is not integral for k = " + std::to_string(k));
    }
    const auto value = static_cast<std::uint64_t>(numerator / 48);
    if (value != brute::l3(k)) throw std::logic_error("l3: case formula disagrees with brute force at k = " + std::to_string(k));
    return value;
}

// ---------------------------------------------------------------------------
// Legendre-Jacobi symbol

namespace detail {
inline void require_odd_modulus(std::int64_t n) {
    if (n <= 1 || n % 2 == 0) throw std::invalid_argument("jacobi symbol: modulus must be odd and > 1");
}
}  // namespace detail

/// Zolotarev's definition: the sign of the permutation x -> a x of Z/nZ, or 0
/// when gcd(a, n) > 1. O(n) time and memory.
[[nodiscard]] inline int zolotarev_symbol(std::int64_t a, std::int64_t n) {
    detail::require_odd_modulus(n);
    a = detail::mod(a, n);
    if (std::gcd(a, n) != 1) return 0;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::int64_t cycles = 0;
    for (std::int64_t start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        ++cycles;
        for (std::int64_t x = start; !seen[static_cast<std::size_t>(x)];
             x = static_cast<std::int64_t>((static_cast<__int128>(a) * x) % n)) {
            seen[static_cast<std::size_t>(x)] = true;
        }
    }
    // A permutation of n points with c cycles has sign (-1)^(n - c).
    return (n - cycles) % 2 == 0 ? 1 : -1;
}

/// Jacobi symbol (a/n) via quadratic reciprocity.
[[nodiscard]] inline int jacobi_symbol(std::int64_t a, std::int64_t n) {
    detail::require_odd_modulus(n);
    a = detail::mod(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const auto r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

// ---------------------------------------------------------------------------
// Memoised counts

enum class Backend { brute, theta, divisor };

[[nodiscard]] constexpr std::string_view to_string(Backend b) noexcept {
    switch (b) {
        case Backend::brute: return "brute";
        case Backend::theta: return "theta";
        case Backend::divisor: return "divisor";
    }
    return "?";
}

struct RepCounts {
    std::int64_t k = 0;
    std::uint64_t n2 = 0;
    std::uint64_t n2_prime = 0;
    std::uint64_t n3 = 0;
    std::uint64_t l2 = 0;
    std::uint64_t l3 = 0;
    Backend n2_backend = Backend::divisor;
    Backend n2_prime_backend = Backend::divisor;
    Backend n3_backend = Backend::brute;
    Backend l2_backend = Backend::divisor;
    Backend l3_backend = Backend::brute;

    friend bool operator==(const RepCounts&, const RepCounts&) = default;
};

/// All counts for k, cached process-wide. Concurrent callers may compute the
/// same k twice, but every reader sees a complete record.
[[nodiscard]] inline RepCounts rep_counts(std::int64_t k) {
    detail::require_positive(k, "rep_counts");
    static std::shared_mutex mutex;
    static std::unordered_map<std::int64_t, RepCounts> cache;
    {
        std::shared_lock lock(mutex);
        if (const auto it = cache.find(k); it != cache.end()) return it->second;
    }
    RepCounts rc;
    rc.k = k;
    rc.n2 = n2(k);
    rc.n2_prime = n2_prime(k);
    rc.n3 = n3(k);
    rc.l2 = l2(k);
    rc.l3 = l3(k);
    std::unique_lock lock(mutex);
    return cache.try_emplace(k, rc).first->second;
}

// ---------------------------------------------------------------------------
// Class-number route (consistency check only)
//
// The Dirichlet-style sums below reproduce psi(k)/12 (resp. psi(k)/24) only
// for squarefree k; for k with a square factor they differ, so nothing in the
// spectral pipeline depends on them.

/// psi(k): representations k = x^2 + y^2 + z^2 with gcd(x, y, z) = 1.
[[nodiscard]] inline std::uint64_t proper_three_square_count(std::int64_t k) {
    detail::require_positive(k, "proper_three_square_count");
    const std::int64_t r = isqrt(k);
    std::uint64_t count = 0;
    for (std::int64_t x = -r; x <= r; ++x) {
        for (std::int64_t y = -r; y <= r; ++y) {
            const std::int64_t rest = k - x * x - y * y;
            if (!detail::is_square(rest)) continue;
            const std::int64_t z = isqrt(rest);
            if (std::gcd(std::gcd(x, y), z) == 1) count += z == 0 ? 1 : 2;
        }
    }
    return count;
}

[[nodiscard]] inline bool is_squarefree(std::int64_t k) {
    for (std::int64_t p = 2; p * p <= k; ++p) {
        if (k % (p * p) == 0) return false;
    }
    return true;
}

/// h(k) = sum over 0 < a < k, gcd(a, 2k) = 1, of (-k / a); for k = 1, 2 (mod 4).
[[nodiscard]] inline std::int64_t class_h(std::int64_t k) {
    detail::require_positive(k, "class_h");
    std::int64_t sum = 0;
    for (std::int64_t a = 1; a < k; ++a) {
        if (std::gcd(a, 2 * k) != 1) continue;
        sum += a == 1 ? 1 : jacobi_symbol(-k, a);
    }
    return sum;
}

/// h'(k) = (1/3) sum over 0 < b < k, gcd(b, 2k) = 1, of (b / k); for k = 3 (mod 8).
[[nodiscard]] inline Rational class_h_prime(std::int64_t k) {
    detail::require_positive(k, "class_h_prime");
    if (k % 2 == 0 || k == 1) throw std::invalid_argument("class_h_prime: k must be odd and > 1");
    std::int64_t sum = 0;
    for (std::int64_t b = 1; b < k; ++b) {
        if (std::gcd(b, 2 * k) == 1) sum += jacobi_symbol(b, k);
    }
    return Rational(sum, 3);
}

/// F(k) = sum over square divisors delta^2 | k of h(k / delta^2), minus 1/2
/// when k is an odd square.
[[nodiscard]] inline Rational class_F(std::int64_t k) {
    detail::require_positive(k, "class_F");
    Rational sum;
    for (std::int64_t d = 1; d * d <= k; ++d) {
        if (k % (d * d) == 0) sum += class_h(k / (d * d));
    }
    if (k % 2 == 1 && detail::is_square(k)) sum -= Rational(1, 2);
    return sum;
}

/// psi(k) predicted by the class-number sums, when k is in their domain.
[[nodiscard]] inline std::optional<Rational> class_number_psi(std::int64_t k) {
    if (k > 1 && (k % 4 == 1 || k % 4 == 2)) return Rational(12 * class_h(k));
    if (k > 3 && k % 8 == 3) return Rational(24) * class_h_prime(k);
    return std::nullopt;
}

}  // namespace lbspec::nt
