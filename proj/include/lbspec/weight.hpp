#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lbspec {

/// Highest weight in shifted coordinates nu_i = Lambda_i + 1 (every nu_i >= 1).
///
/// Shifted coordinates are the internal representation throughout; the
/// unshifted coefficients Lambda only appear at I/O boundaries.
class ShiftedWeight {
public:
    ShiftedWeight() = default;
    explicit ShiftedWeight(std::vector<std::int64_t> nu) : nu_(std::move(nu)) {
        for (const auto v : nu_) {
            if (v < 1) throw std::invalid_argument("shifted weight coordinates must be >= 1");
        }
    }
    ShiftedWeight(std::initializer_list<std::int64_t> nu) : ShiftedWeight(std::vector<std::int64_t>(nu)) {}

    /// Builds nu = Lambda + (1, ..., 1) from highest-weight coefficients Lambda_i >= 0.
    static ShiftedWeight from_highest_weight(std::span<const std::int64_t> lambda) {
        std::vector<std::int64_t> nu(lambda.begin(), lambda.end());
        for (auto& v : nu) ++v;
        return ShiftedWeight(std::move(nu));
    }

    [[nodiscard]] std::size_t rank() const noexcept { return nu_.size(); }
    [[nodiscard]] std::span<const std::int64_t> nu() const noexcept { return nu_; }
    [[nodiscard]] std::int64_t operator[](std::size_t i) const { return nu_.at(i); }

    [[nodiscard]] std::vector<std::int64_t> highest_weight() const {
        std::vector<std::int64_t> lambda(nu_);
        for (auto& v : lambda) --v;
        return lambda;
    }

    friend bool operator==(const ShiftedWeight&, const ShiftedWeight&) = default;
    friend auto operator<=>(const ShiftedWeight&, const ShiftedWeight&) = default;

    friend std::ostream& operator<<(std::ostream& os, const ShiftedWeight& w) {
        os << '(';
        for (std::size_t i = 0; i < w.nu_.size(); ++i) os << (i ? "," : "") << w.nu_[i];
        return os << ')';
    }

private:
    std::vector<std::int64_t> nu_;
};

}  // namespace lbspec
