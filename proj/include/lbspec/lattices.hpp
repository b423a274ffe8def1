#pragma once

#include <array>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lbspec/root_system.hpp"
#include "lbspec/weight.hpp"

namespace lbspec {

enum class GroupName { SU4, SU4_mod_pm, PSU4, Spin7, SO7, Sp3, PSp3, Spin5, SO5 };

inline constexpr std::array<GroupName, 9> all_groups{
    GroupName::SU4,  GroupName::SU4_mod_pm, GroupName::PSU4, GroupName::Spin7, GroupName::SO7,
    GroupName::Sp3,  GroupName::PSp3,       GroupName::Spin5, GroupName::SO5,
};

/// Membership test for the characteristic lattice, phrased on shifted
/// coordinates nu (length = rank).
using WeightPredicate = bool (*)(std::span<const std::int64_t> nu);

/// One compact connected simple Lie group: its root system and the congruence
/// cutting its characteristic lattice out of the full weight lattice.
struct GroupDescriptor {
    GroupName name;
    std::string_view cli_name;      // su4, su4-mod-pm, ...
    std::string_view display_name;  // SU(4), SU(4)/(+-E4), ...
    std::string_view isomorphic_to;  // metadata only; empty when none recorded
    RootSystemName root_system;
    int dim_g;
    int pi1_order;
    int center_order;
    std::string_view predicate_text;
    WeightPredicate predicate;

    [[nodiscard]] std::size_t rank() const noexcept { return root_system == RootSystemName::B2 ? 2 : 3; }
    [[nodiscard]] const RootSystemData& roots() const { return builtin_root_system(root_system); }

    [[nodiscard]] bool admits(std::span<const std::int64_t> nu) const {
        if (nu.size() != rank()) throw std::invalid_argument("weight rank does not match group");
        return predicate(nu);
    }
    [[nodiscard]] bool admits(const ShiftedWeight& w) const { return admits(w.nu()); }
};

namespace detail {

constexpr std::int64_t mod(std::int64_t a, std::int64_t m) noexcept {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline bool any_weight(std::span<const std::int64_t>) { return true; }
inline bool su4_mod_pm_weight(std::span<const std::int64_t> nu) { return mod(nu[2] - nu[0], 2) == 0; }
inline bool psu4_weight(std::span<const std::int64_t> nu) { return mod(nu[2] - nu[0] + 2 * nu[1], 4) == 2; }
inline bool so7_weight(std::span<const std::int64_t> nu) { return mod(nu[2], 2) == 1; }
inline bool psp3_weight(std::span<const std::int64_t> nu) { return mod(nu[0] - nu[2], 2) == 0; }
inline bool so5_weight(std::span<const std::int64_t> nu) { return mod(nu[1], 2) == 1; }

inline constexpr std::array<GroupDescriptor, 9> group_table{{
    {GroupName::SU4, "su4", "SU(4)", "Spin(6)", RootSystemName::A3, 15, 1, 4, "none", &any_weight},
    {GroupName::SU4_mod_pm, "su4-mod-pm", "SU(4)/(+-E4)", "SO(6)", RootSystemName::A3, 15, 2, 2,
     "nu3 = nu1 (mod 2)", &su4_mod_pm_weight},
    {GroupName::PSU4, "psu4", "PSU(4)", "SO(6)/(+-E6)", RootSystemName::A3, 15, 4, 1,
     "nu3 - nu1 + 2 nu2 = 2 (mod 4)", &psu4_weight},
    {GroupName::Spin7, "spin7", "Spin(7)", "", RootSystemName::B3, 21, 1, 2, "none", &any_weight},
    {GroupName::SO7, "so7", "SO(7)", "", RootSystemName::B3, 21, 2, 1, "nu3 = 1 (mod 2)", &so7_weight},
    {GroupName::Sp3, "sp3", "Sp(3)", "", RootSystemName::C3, 21, 1, 2, "none", &any_weight},
    {GroupName::PSp3, "psp3", "PSp(3)", "", RootSystemName::C3, 21, 2, 1, "nu1 = nu3 (mod 2)", &psp3_weight},
    {GroupName::Spin5, "spin5", "Spin(5)", "Sp(2)", RootSystemName::B2, 10, 1, 2, "none", &any_weight},
    {GroupName::SO5, "so5", "SO(5)", "", RootSystemName::B2, 10, 2, 1, "nu2 = 1 (mod 2)", &so5_weight},
}};

}  // namespace detail

[[nodiscard]] inline const GroupDescriptor& descriptor(GroupName name) {
    return detail::group_table.at(static_cast<std::size_t>(name));
}

/// Looks a group up by its CLI identifier (su4, su4-mod-pm, psu4, spin7, so7,
/// sp3, psp3, spin5, so5).
[[nodiscard]] inline std::optional<GroupName> parse_group_name(std::string_view cli_name) {
    for (const auto& g : detail::group_table) {
        if (g.cli_name == cli_name) return g.name;
    }
    return std::nullopt;
}

/// Order of the maximal fundamental group Lambda1/Lambda0 for a root system.
[[nodiscard]] constexpr int weight_lattice_index(RootSystemName rs) noexcept {
    return rs == RootSystemName::A3 ? 4 : 2;
}

/// Lazy lexicographic enumeration of the shifted weights nu in [1, bound]^rank
/// admitted by a group.
class HighestWeightRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = ShiftedWeight;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const GroupDescriptor* g, std::int64_t bound) : group_(g), bound_(bound), nu_(g->rank(), 1) {
            if (!group_->admits(nu_)) advance();
        }

        ShiftedWeight operator*() const { return ShiftedWeight(nu_); }
        iterator& operator++() {
            advance();
            return *this;
        }
        void operator++(int) { advance(); }

        friend bool operator==(const iterator& it, std::default_sentinel_t) noexcept { return it.done_; }

    private:
        bool step() {
            for (std::size_t i = nu_.size(); i-- > 0;) {
                if (nu_[i] < bound_) {
                    ++nu_[i];
                    return true;
                }
                nu_[i] = 1;
            }
            return false;
        }
        void advance() {
            while (step()) {
                if (group_->admits(nu_)) return;
            }
            done_ = true;
        }

        const GroupDescriptor* group_ = nullptr;
        std::int64_t bound_ = 0;
        std::vector<std::int64_t> nu_;
        bool done_ = false;
    };

    HighestWeightRange(const GroupDescriptor& g, std::int64_t bound) : group_(&g), bound_(bound) {
        if (bound < 1) throw std::invalid_argument("highest_weights_of: nu_bound must be >= 1");
    }

    [[nodiscard]] iterator begin() const { return iterator(group_, bound_); }
    [[nodiscard]] std::default_sentinel_t end() const noexcept { return {}; }

private:
    const GroupDescriptor* group_;
    std::int64_t bound_;
};

/// All nu with max_i nu_i <= nu_bound in the group's lattice, lexicographic.
[[nodiscard]] inline HighestWeightRange highest_weights_of(const GroupDescriptor& g, std::int64_t nu_bound) {
    return HighestWeightRange(g, nu_bound);
}

}  // namespace lbspec
