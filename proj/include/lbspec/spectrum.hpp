#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "lbspec/lattices.hpp"
#include "lbspec/rational.hpp"
#include "lbspec/root_system.hpp"
#include "lbspec/weight.hpp"

namespace lbspec {

struct WeightDimension {
    ShiftedWeight nu;
    std::uint64_t dim = 0;

    friend bool operator==(const WeightDimension&, const WeightDimension&) = default;
};

/// One eigenvalue of the Laplacian with its multiplicity and the highest
/// weights that produce it. Weights are sorted lexicographically by nu.
struct SpectrumEntry {
    Rational lambda;
    std::uint64_t multiplicity = 0;
    std::vector<WeightDimension> weights;

    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in dimension/multiplicity");
    return r;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in multiplicity");
    return r;
}

inline void require_rank(const RootSystemData& rs, std::span<const std::int64_t> nu) {
    if (nu.size() != rs.rank()) throw std::invalid_argument("weight rank does not match root system");
    for (const auto v : nu) {
        if (v < 1) throw std::invalid_argument("shifted coordinates must be natural numbers");
    }
}

}  // namespace detail

/// Specialised per-root-system formulas. Each root system has an integral
/// positive-definite form Q(nu) with
///     lambda = -(Q(nu) - constant) / (denominator * gamma),
/// and a polynomial Weyl dimension.
namespace closed_form {

struct FormShape {
    std::int64_t constant;     // Q at nu = (1, ..., 1)
    std::int64_t denominator;  // 4 * b for A3/B3/B2, b for C3
};

[[nodiscard]] constexpr FormShape shape(RootSystemName rs) noexcept {
    switch (rs) {
        case RootSystemName::A3: return {20, 32};
        case RootSystemName::B3: return {35, 40};
        case RootSystemName::C3: return {14, 16};
        case RootSystemName::B2: return {10, 24};
    }
    return {0, 1};
}

[[nodiscard]] inline std::int64_t quadratic_value(RootSystemName rs, std::span<const std::int64_t> nu) {
    const auto sq = [](std::int64_t x) { return x * x; };
    switch (rs) {
        case RootSystemName::A3: return sq(nu[0] + 2 * nu[1] + nu[2]) + 2 * sq(nu[0]) + 2 * sq(nu[2]);
        case RootSystemName::B3: return sq(2 * nu[0] + 2 * nu[1] + nu[2]) + sq(2 * nu[1] + nu[2]) + sq(nu[2]);
        case RootSystemName::C3: return sq(nu[0] + nu[1] + nu[2]) + sq(nu[1] + nu[2]) + sq(nu[2]);
        case RootSystemName::B2: return sq(2 * nu[0] + nu[1]) + sq(nu[1]);
    }
    return 0;
}

[[nodiscard]] inline Rational eigenvalue(RootSystemName rs, std::span<const std::int64_t> nu,
                                         const Rational& gamma = 1) {
    const auto s = shape(rs);
    return -Rational(quadratic_value(rs, nu) - s.constant, s.denominator) / gamma;
}

[[nodiscard]] inline std::uint64_t weyl_dimension(RootSystemName rs, std::span<const std::int64_t> nu) {
    using u128 = unsigned __int128;
    const auto product = [](std::initializer_list<std::int64_t> fs) {
        u128 p = 1;
        for (const auto f : fs) {
            const u128 next = p * static_cast<u128>(f);
            if (f != 0 && next / static_cast<u128>(f) != p) throw std::overflow_error("Weyl dimension overflow");
            p = next;
        }
        return p;
    };
    u128 num = 0;
    u128 den = 1;
    switch (rs) {
        case RootSystemName::A3: {
            const auto [a, b, c] = std::tuple{nu[0], nu[1], nu[2]};
            num = product({a, b, c, a + b, b + c, a + b + c});
            den = 12;
            break;
        }
        case RootSystemName::B3: {
            const auto [a, b, c] = std::tuple{nu[0], nu[1], nu[2]};
            num = product({a, b, c, a + b, b + c, 2 * b + c, a + b + c, a + 2 * b + c, 2 * a + 2 * b + c});
            den = 720;
            break;
        }
        case RootSystemName::C3: {
            const auto [a, b, c] = std::tuple{nu[0], nu[1], nu[2]};
            num = product({a, b, c, a + b, b + c, b + 2 * c, a + b + c, a + b + 2 * c, a + 2 * b + 2 * c});
            den = 720;
            break;
        }
        case RootSystemName::B2: {
            const auto [a, b] = std::pair{nu[0], nu[1]};
            num = product({a, b, a + b, 2 * a + b});
            den = 6;
            break;
        }
    }
    if (num % den != 0) throw std::logic_error("closed-form Weyl dimension is not an integer");
    const u128 d = num / den;
    if (d > UINT64_MAX) throw std::overflow_error("Weyl dimension exceeds 64 bits");
    return static_cast<std::uint64_t>(d);
}

}  // namespace closed_form

/// lambda = -(<L+beta, L+beta> - <beta, beta>) / (b * gamma), evaluated from the
/// stored epsilon-coordinate vectors.
[[nodiscard]] inline Rational eigenvalue_by_roots(const RootSystemData& rs, std::span<const std::int64_t> nu,
                                                  const Rational& gamma = 1) {
    detail::require_rank(rs, nu);
    const RationalVec v = weight_to_epsilon(rs, nu);
    return -(inner(v, v) - inner(rs.beta, rs.beta)) / (rs.b * gamma);
}

/// Product over positive roots of <L+beta, alpha> / <beta, alpha>.
[[nodiscard]] inline Rational weyl_dimension_by_roots(const RootSystemData& rs, std::span<const std::int64_t> nu) {
    detail::require_rank(rs, nu);
    const RationalVec v = weight_to_epsilon(rs, nu);
    Rational d = 1;
    for (const auto& alpha : rs.positive_roots) d *= inner(v, alpha) / inner(rs.beta, alpha);
    return d;
}

/// Laplacian eigenvalue for the highest weight with shifted coordinates nu.
/// Both the root-sum and the specialised formula are evaluated; disagreement
/// throws std::logic_error.
[[nodiscard]] inline Rational eigenvalue(const RootSystemData& rs, std::span<const std::int64_t> nu,
                                         const Rational& gamma = 1) {
    if (gamma.sign() <= 0) throw std::invalid_argument("gamma must be positive");
    const Rational by_roots = eigenvalue_by_roots(rs, nu, gamma);
    if (by_roots != closed_form::eigenvalue(rs.name, nu, gamma)) {
        throw std::logic_error("eigenvalue: root-sum and closed form disagree");
    }
    return by_roots;
}

[[nodiscard]] inline Rational eigenvalue(const RootSystemData& rs, const ShiftedWeight& w, const Rational& gamma = 1) {
    return eigenvalue(rs, w.nu(), gamma);
}

/// Weyl dimension of the irreducible representation with shifted weight nu.
/// Throws std::logic_error if the root product is not an integer or the two
/// routes disagree.
[[nodiscard]] inline std::uint64_t weyl_dimension(const RootSystemData& rs, std::span<const std::int64_t> nu) {
    const Rational d = weyl_dimension_by_roots(rs, nu);
    if (!d.is_integer() || d.sign() <= 0) {
        throw std::logic_error("Weyl dimension is not a positive integer: " + d.str());
    }
    const auto value = static_cast<std::uint64_t>(d.num());
    if (value != closed_form::weyl_dimension(rs.name, nu)) {
        throw std::logic_error("weyl_dimension: root product and closed form disagree");
    }
    return value;
}

[[nodiscard]] inline std::uint64_t weyl_dimension(const RootSystemData& rs, const ShiftedWeight& w) {
    return weyl_dimension(rs, w.nu());
}

/// Largest admissible value of Q(nu) for eigenvalues lambda >= -cutoff, and
/// the per-coordinate bound nu_i <= isqrt(Qmax) that every form implies
/// (each nu_i^2 is dominated by one of the form's square terms).
struct EnumerationBound {
    std::int64_t max_form_value;
    std::int64_t nu_bound;
};

[[nodiscard]] inline std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw std::domain_error("isqrt of negative number");
    std::int64_t lo = 0;
    std::int64_t hi = std::min<std::int64_t>(n, 3037000499LL) + 1;  // hi^2 > n
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        (mid * mid <= n ? lo : hi) = mid;
    }
    return lo;
}

[[nodiscard]] inline EnumerationBound enumeration_bound(RootSystemName rs, const Rational& cutoff,
                                                        const Rational& gamma) {
    const auto s = closed_form::shape(rs);
    const std::int64_t qmax = s.constant + (Rational(s.denominator) * gamma * cutoff).floor();
    return {qmax, isqrt(qmax)};
}

/// Every eigenvalue lambda with -cutoff <= lambda <= 0, sorted by decreasing
/// lambda, with complete multiplicities. `workers` > 1 splits the nu_1 range
/// across threads; the result is identical for every worker count.
[[nodiscard]] inline std::vector<SpectrumEntry> enumerate_spectrum(const GroupDescriptor& g, const Rational& cutoff,
                                                                   const Rational& gamma = 1, unsigned workers = 1) {
    if (cutoff.sign() <= 0) throw std::invalid_argument("cutoff must be positive");
    if (gamma.sign() <= 0) throw std::invalid_argument("gamma must be positive");

    const RootSystemName rs = g.root_system;
    const auto bound = enumeration_bound(rs, cutoff, gamma);
    const std::size_t rank = g.rank();
    constexpr double max_candidates = 5e9;
    if (static_cast<double>(bound.nu_bound) * bound.nu_bound * (rank == 3 ? bound.nu_bound : 1) > max_candidates) {
        throw std::invalid_argument("cutoff too large for exhaustive enumeration");
    }

    struct Hit {
        std::int64_t form_value;
        WeightDimension weight;
    };

    const auto scan = [&](std::int64_t first_nu1, std::int64_t stride) {
        std::vector<Hit> hits;
        std::vector<std::int64_t> nu(rank, 1);
        for (std::int64_t a = first_nu1; a <= bound.nu_bound; a += stride) {
            nu[0] = a;
            const auto visit = [&] {
                if (!g.predicate(nu)) return;
                const std::int64_t q = closed_form::quadratic_value(rs, nu);
                if (q > bound.max_form_value) return;
                hits.push_back({q, {ShiftedWeight(nu), closed_form::weyl_dimension(rs, nu)}});
            };
            for (std::int64_t b = 1; b <= bound.nu_bound; ++b) {
                nu[1] = b;
                if (rank == 2) {
                    visit();
                    continue;
                }
                for (std::int64_t c = 1; c <= bound.nu_bound; ++c) {
                    nu[2] = c;
                    visit();
                }
            }
        }
        return hits;
    };

    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(bound.nu_bound)));
    std::vector<std::vector<Hit>> partial(workers);
    if (workers == 1) {
        partial[0] = scan(1, 1);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] { partial[w] = scan(1 + w, workers); });
        }
    }

    // lambda is strictly decreasing in Q, so grouping by Q ascending yields
    // entries in decreasing lambda.
    std::map<std::int64_t, std::vector<WeightDimension>> levels;
    for (auto& chunk : partial) {
        for (auto& h : chunk) levels[h.form_value].push_back(std::move(h.weight));
    }

    const auto s = closed_form::shape(rs);
    std::vector<SpectrumEntry> out;
    out.reserve(levels.size());
    for (auto& [q, weights] : levels) {
        std::sort(weights.begin(), weights.end(), [](const auto& x, const auto& y) { return x.nu < y.nu; });
        SpectrumEntry e;
        e.lambda = -Rational(q - s.constant, s.denominator) / gamma;
        for (const auto& w : weights) e.multiplicity = detail::checked_add(e.multiplicity, detail::checked_mul(w.dim, w.dim));
        e.weights = std::move(weights);
        out.push_back(std::move(e));
    }
    return out;
}

/// Coefficients of the highest root over the fundamental weights.
[[nodiscard]] inline std::vector<std::int64_t> highest_root_coefficients(const RootSystemData& rs) {
    std::vector<std::int64_t> coeffs;
    for (const auto& a : rs.simple_roots) {
        const Rational c = Rational(2) * inner(rs.highest_root, a) / inner(a, a);
        if (!c.is_integer()) throw std::logic_error("highest root is not an integral weight");
        coeffs.push_back(c.num());
    }
    return coeffs;
}

/// (eigenvalue, dimension) of the adjoint representation at gamma = 1; for a
/// correctly normalised metric this is (-1, dim G).
[[nodiscard]] inline std::pair<Rational, std::uint64_t> adjoint_check(const GroupDescriptor& g) {
    const RootSystemData& rs = g.roots();
    const ShiftedWeight nu = ShiftedWeight::from_highest_weight(highest_root_coefficients(rs));
    if (!g.admits(nu)) throw std::logic_error("adjoint weight is not in the group's lattice");
    return {eigenvalue(rs, nu), weyl_dimension(rs, nu)};
}

}  // namespace lbspec
