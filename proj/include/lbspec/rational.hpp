#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lbspec {

/// Exact rational number p/q over 64-bit integers.
///
/// Always stored in lowest terms with a positive denominator, so structural
/// equality is numeric equality. Every operation widens to 128 bits and
/// throws std::overflow_error if the reduced result leaves the 64-bit range;
/// results are never silently wrapped.
class Rational {
public:
    using int_type = std::int64_t;

    constexpr Rational() noexcept = default;
    constexpr Rational(int_type value) noexcept : num_(value) {}  // NOLINT(implicit)
    Rational(int_type num, int_type den) { assign(num, den); }

    [[nodiscard]] constexpr int_type num() const noexcept { return num_; }
    [[nodiscard]] constexpr int_type den() const noexcept { return den_; }

    [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }
    [[nodiscard]] constexpr int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

    /// Largest integer not exceeding the value.
    [[nodiscard]] constexpr int_type floor() const noexcept {
        int_type q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    Rational operator-() const { return make(-static_cast<__int128>(num_), den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        const __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
        const __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return make(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return make(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }

    /// Canonical text form "p/q" in lowest terms; the denominator is always
    /// written, so integers come out as "-1/1" or "0/1".
    [[nodiscard]] std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    /// Short human form: "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string short_str() const {
        return den_ == 1 ? std::to_string(num_) : str();
    }

    /// Parses "p" or "p/q" (optional leading sign, decimal digits only).
    /// Throws std::invalid_argument on anything else, including q == 0.
    static Rational parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.short_str(); }

private:
    static Rational make(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const __int128 g = gcd128(n < 0 ? -n : n, d);
        n /= g;
        d /= g;
        constexpr __int128 lo = INT64_MIN;
        constexpr __int128 hi = INT64_MAX;
        if (n < lo || n > hi || d > hi) throw std::overflow_error("rational arithmetic overflow");
        Rational r;
        r.num_ = static_cast<int_type>(n);
        r.den_ = static_cast<int_type>(d);
        return r;
    }

    static constexpr __int128 gcd128(__int128 a, __int128 b) noexcept {
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void assign(int_type num, int_type den) { *this = make(num, den); }

    int_type num_ = 0;
    int_type den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
    const auto fail = [&]() -> Rational {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "' (expected p or p/q)");
    };
    const auto parse_int = [&](std::string_view s, bool allow_sign) -> __int128 {
        bool negative = false;
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
            negative = s.front() == '-';
            s.remove_prefix(1);
        }
        if (s.empty() || s.size() > 19) fail();
        __int128 v = 0;
        for (const char c : s) {
            if (c < '0' || c > '9') fail();
            v = v * 10 + (c - '0');
        }
        return negative ? -v : v;
    };

    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return make(parse_int(text, true), 1);
    const __int128 n = parse_int(text.substr(0, slash), true);
    const __int128 d = parse_int(text.substr(slash + 1), false);
    if (d == 0) fail();
    return make(n, d);
}

}  // namespace lbspec
