#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lbspec/rational.hpp"

namespace lbspec {

/// Vector in the span of the orthonormal epsilon basis, exact coordinates.
using RationalVec = std::vector<Rational>;

enum class RootSystemName { A3, B3, C3, B2 };

[[nodiscard]] constexpr std::string_view to_string(RootSystemName name) noexcept {
    switch (name) {
        case RootSystemName::A3: return "A3";
        case RootSystemName::B3: return "B3";
        case RootSystemName::C3: return "C3";
        case RootSystemName::B2: return "B2";
    }
    return "?";
}

/// Standard Euclidean product in epsilon coordinates.
[[nodiscard]] inline Rational inner(std::span<const Rational> u, std::span<const Rational> v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("inner: length mismatch (" + std::to_string(u.size()) + " vs " +
                                    std::to_string(v.size()) + ")");
    }
    Rational acc;
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
    return acc;
}

[[nodiscard]] inline RationalVec operator+(const RationalVec& a, const RationalVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector sum: length mismatch");
    RationalVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

[[nodiscard]] inline RationalVec operator*(const Rational& s, const RationalVec& v) {
    RationalVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

/// Root system data in epsilon coordinates (Bourbaki plates I-III).
struct RootSystemData {
    RootSystemName name;
    std::size_t dimension;  // ambient epsilon dimension
    std::vector<RationalVec> simple_roots;
    std::vector<RationalVec> positive_roots;
    std::vector<RationalVec> fundamental_weights;
    RationalVec beta;  // half-sum of positive roots
    RationalVec highest_root;
    Rational b;  // <highest_root + beta, highest_root + beta> - <beta, beta>

    [[nodiscard]] std::size_t rank() const noexcept { return simple_roots.size(); }
};

namespace detail {

inline RationalVec vec(std::initializer_list<Rational> xs) { return RationalVec(xs); }

/// Throws std::logic_error naming the first violated structural invariant.
inline void verify_root_system(const RootSystemData& rs) {
    const auto fail = [&](const std::string& what) {
        throw std::logic_error("root system " + std::string(to_string(rs.name)) + ": " + what);
    };

    const auto check_dim = [&](const RationalVec& v) {
        if (v.size() != rs.dimension) fail("vector of wrong dimension");
    };
    for (const auto& v : rs.simple_roots) check_dim(v);
    for (const auto& v : rs.positive_roots) check_dim(v);
    for (const auto& v : rs.fundamental_weights) check_dim(v);
    check_dim(rs.beta);
    check_dim(rs.highest_root);

    if (rs.fundamental_weights.size() != rs.rank()) fail("fundamental weight count != rank");

    RationalVec sum(rs.dimension);
    for (const auto& a : rs.positive_roots) sum = sum + a;
    if (Rational(1, 2) * sum != rs.beta) fail("beta is not half the sum of positive roots");

    for (std::size_t i = 0; i < rs.rank(); ++i) {
        for (std::size_t j = 0; j < rs.rank(); ++j) {
            const auto& a = rs.simple_roots[j];
            const Rational pairing = Rational(2) * inner(rs.fundamental_weights[i], a) / inner(a, a);
            if (pairing != Rational(i == j ? 1 : 0)) fail("fundamental weights are not dual to simple roots");
        }
    }

    const RationalVec top = rs.highest_root + rs.beta;
    if (inner(top, top) - inner(rs.beta, rs.beta) != rs.b) fail("stored b disagrees with recomputation");

    for (const auto& a : rs.positive_roots) {
        const Rational pairing = Rational(2) * inner(rs.beta, a) / inner(a, a);
        if (!pairing.is_integer() || pairing.sign() <= 0) fail("{beta, alpha} is not a positive integer");
    }
}

inline RootSystemData make_a3() {
    const Rational h(1, 2);
    const Rational q(1, 4);
    RootSystemData rs{
        .name = RootSystemName::A3,
        .dimension = 4,
        .simple_roots = {vec({1, -1, 0, 0}), vec({0, 1, -1, 0}), vec({0, 0, 1, -1})},
        .positive_roots = {vec({1, -1, 0, 0}), vec({0, 1, -1, 0}), vec({0, 0, 1, -1}),
                           vec({1, 0, -1, 0}), vec({0, 1, 0, -1}), vec({1, 0, 0, -1})},
        .fundamental_weights = {vec({3 * q, -q, -q, -q}), vec({h, h, -h, -h}), vec({q, q, q, -3 * q})},
        .beta = vec({Rational(3, 2), h, -h, Rational(-3, 2)}),
        .highest_root = vec({1, 0, 0, -1}),
        .b = 8,
    };
    return rs;
}

inline RootSystemData make_b3() {
    const Rational h(1, 2);
    return RootSystemData{
        .name = RootSystemName::B3,
        .dimension = 3,
        .simple_roots = {vec({1, -1, 0}), vec({0, 1, -1}), vec({0, 0, 1})},
        .positive_roots = {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), vec({1, -1, 0}), vec({1, 1, 0}),
                           vec({1, 0, -1}), vec({1, 0, 1}), vec({0, 1, -1}), vec({0, 1, 1})},
        .fundamental_weights = {vec({1, 0, 0}), vec({1, 1, 0}), vec({h, h, h})},
        .beta = vec({Rational(5, 2), Rational(3, 2), h}),
        .highest_root = vec({1, 1, 0}),
        .b = 10,
    };
}

inline RootSystemData make_c3() {
    return RootSystemData{
        .name = RootSystemName::C3,
        .dimension = 3,
        .simple_roots = {vec({1, -1, 0}), vec({0, 1, -1}), vec({0, 0, 2})},
        .positive_roots = {vec({2, 0, 0}), vec({0, 2, 0}), vec({0, 0, 2}), vec({1, -1, 0}), vec({1, 1, 0}),
                           vec({1, 0, -1}), vec({1, 0, 1}), vec({0, 1, -1}), vec({0, 1, 1})},
        .fundamental_weights = {vec({1, 0, 0}), vec({1, 1, 0}), vec({1, 1, 1})},
        .beta = vec({3, 2, 1}),
        .highest_root = vec({2, 0, 0}),
        .b = 16,
    };
}

inline RootSystemData make_b2() {
    const Rational h(1, 2);
    return RootSystemData{
        .name = RootSystemName::B2,
        .dimension = 2,
        .simple_roots = {vec({1, -1}), vec({0, 1})},
        .positive_roots = {vec({1, 0}), vec({0, 1}), vec({1, -1}), vec({1, 1})},
        .fundamental_weights = {vec({1, 0}), vec({h, h})},
        .beta = vec({Rational(3, 2), h}),
        .highest_root = vec({1, 1}),
        .b = 6,
    };
}

inline RootSystemData make_verified(RootSystemName name) {
    RootSystemData rs = [&] {
        switch (name) {
            case RootSystemName::A3: return make_a3();
            case RootSystemName::B3: return make_b3();
            case RootSystemName::C3: return make_c3();
            case RootSystemName::B2: return make_b2();
        }
        throw std::invalid_argument("unknown root system");
    }();
    verify_root_system(rs);
    return rs;
}

}  // namespace detail

/// Returns the hard-coded, construction-verified data for a root system.
/// The returned reference is to an immutable process-wide instance.
[[nodiscard]] inline const RootSystemData& builtin_root_system(RootSystemName name) {
    static const std::array<RootSystemData, 4> table{
        detail::make_verified(RootSystemName::A3),
        detail::make_verified(RootSystemName::B3),
        detail::make_verified(RootSystemName::C3),
        detail::make_verified(RootSystemName::B2),
    };
    return table.at(static_cast<std::size_t>(name));
}

/// Sum of coeffs[i] * fundamental_weights[i] in epsilon coordinates.
[[nodiscard]] inline RationalVec weight_to_epsilon(const RootSystemData& rs, std::span<const std::int64_t> coeffs) {
    if (coeffs.size() != rs.rank()) {
        throw std::invalid_argument("weight_to_epsilon: expected " + std::to_string(rs.rank()) +
                                    " coefficients, got " + std::to_string(coeffs.size()));
    }
    RationalVec out(rs.dimension);
    for (std::size_t i = 0; i < coeffs.size(); ++i) out = out + Rational(coeffs[i]) * rs.fundamental_weights[i];
    return out;
}

}  // namespace lbspec
