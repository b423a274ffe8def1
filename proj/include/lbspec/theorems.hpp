#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lbspec/lattices.hpp"
#include "lbspec/number_theory.hpp"
#include "lbspec/rational.hpp"
#include "lbspec/spectrum.hpp"

namespace lbspec {

enum class CaseTag { case_I, case_II, single_case, both_cases, none };

[[nodiscard]] constexpr std::string_view to_string(CaseTag t) noexcept {
    switch (t) {
        case CaseTag::case_I: return "case I";
        case CaseTag::case_II: return "case II";
        case CaseTag::single_case: return "single case";
        case CaseTag::both_cases: return "both cases";
        case CaseTag::none: return "none";
    }
    return "?";
}

/// One summand c * L_n(k) of a weight-count formula.
struct TraceTerm {
    std::uint64_t coefficient;
    int squares;  // 2 for L2, 3 for L3
    std::uint64_t value;
};

struct FormulaTrace {
    std::optional<std::int64_t> k;
    std::vector<TraceTerm> terms;

    /// e.g. "2*L3(14)+L2(14)"; empty when no case applied.
    [[nodiscard]] std::string text() const {
        std::string out;
        for (const auto& t : terms) {
            if (!out.empty()) out += '+';
            if (t.coefficient != 1) out += std::to_string(t.coefficient) + '*';
            out += "L" + std::to_string(t.squares) + "(" + std::to_string(*k) + ")";
        }
        return out;
    }
};

struct EigenvalueVerdict {
    Rational lambda;
    bool is_eigenvalue = false;
    std::uint64_t weight_count = 0;
    CaseTag case_tag = CaseTag::none;
    FormulaTrace formula_trace;
};

namespace detail {

/// r as a natural number, if it is one.
inline std::optional<std::int64_t> natural(const Rational& r) {
    if (!r.is_integer() || r.sign() <= 0) return std::nullopt;
    return r.num();
}

inline FormulaTrace count_terms(std::int64_t k, std::initializer_list<std::pair<std::uint64_t, int>> terms) {
    FormulaTrace trace{k, {}};
    for (const auto& [coefficient, squares] : terms) {
        const std::uint64_t value = squares == 2 ? nt::l2(k) : nt::l3(k);
        trace.terms.push_back({coefficient, squares, value});
    }
    return trace;
}

inline std::uint64_t total(const FormulaTrace& t) {
    std::uint64_t sum = 0;
    for (const auto& term : t.terms) sum += term.coefficient * term.value;
    return sum;
}

struct CaseResult {
    CaseTag tag;
    FormulaTrace trace;
};

/// Applies the characterisation for group g to m = -lambda (normalised to
/// gamma = 1). Returns nullopt when no divisibility precondition holds.
inline std::optional<CaseResult> apply_characterisation(GroupName g, const Rational& m) {
    const auto two_cases = [](std::optional<FormulaTrace> first, std::optional<FormulaTrace> second)
        -> std::optional<CaseResult> {
        if (first && second) throw std::logic_error("characterisation cases are not mutually exclusive");
        if (first) return CaseResult{CaseTag::case_I, std::move(*first)};
        if (second) return CaseResult{CaseTag::case_II, std::move(*second)};
        return std::nullopt;
    };
    const auto single = [](std::optional<FormulaTrace> t) -> std::optional<CaseResult> {
        if (!t) return std::nullopt;
        return CaseResult{CaseTag::single_case, std::move(*t)};
    };
    const auto a3_even_case = [&]() -> std::optional<FormulaTrace> {
        if (const auto n = natural(Rational(8) * m)) return count_terms(5 + *n, {{2, 3}, {1, 2}});
        return std::nullopt;
    };

    switch (g) {
        case GroupName::SU4: {
            std::optional<FormulaTrace> odd;
            if (const auto n = natural(Rational(32) * m); n && *n % 8 == 7) odd = count_terms(20 + *n, {{2, 3}});
            return two_cases(std::move(odd), a3_even_case());
        }
        case GroupName::SU4_mod_pm:
            return single(a3_even_case());
        case GroupName::PSU4: {
            const auto four = natural(Rational(4) * m);
            const bool admissible = natural(Rational(8) * m) && four && (*four % 4 == 3 || *four % 4 == 2 || *four % 4 == 0);
            return single(admissible ? a3_even_case() : std::nullopt);
        }
        case GroupName::Spin7:
        case GroupName::SO7: {
            std::optional<FormulaTrace> odd;
            if (natural(Rational(5) * m)) odd = count_terms(35 + (Rational(40) * m).num(), {{1, 3}});
            if (g == GroupName::SO7) return single(std::move(odd));
            std::optional<FormulaTrace> even;
            if (const auto n = natural(Rational(40) * m); n && *n % 4 == 1) even = count_terms((35 + *n) / 4, {{1, 3}});
            return two_cases(std::move(odd), std::move(even));
        }
        case GroupName::Sp3:
        case GroupName::PSp3: {
            const Rational scale = g == GroupName::Sp3 ? 16 : 8;
            if (!natural(scale * m)) return std::nullopt;
            return single(count_terms(14 + (Rational(16) * m).num(), {{1, 3}}));
        }
        case GroupName::Spin5:
        case GroupName::SO5: {
            std::optional<FormulaTrace> odd;
            if (natural(Rational(3) * m)) odd = count_terms(10 + (Rational(24) * m).num(), {{1, 2}});
            if (g == GroupName::SO5) return single(std::move(odd));
            std::optional<FormulaTrace> even;
            if (const auto n = natural(Rational(12) * m); n && *n % 2 == 1 && *n >= 5) {
                even = count_terms((5 + *n) / 2, {{1, 2}});
            }
            return two_cases(std::move(odd), std::move(even));
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Decides number-theoretically whether lambda < 0 is a Laplacian eigenvalue
/// of group g with metric scale gamma, and how many highest weights realise it.
[[nodiscard]] inline EigenvalueVerdict check_eigenvalue(const GroupDescriptor& g, const Rational& lambda,
                                                        const Rational& gamma = 1) {
    if (lambda.sign() >= 0) throw std::invalid_argument("check_eigenvalue: lambda must be negative");
    if (gamma.sign() <= 0) throw std::invalid_argument("check_eigenvalue: gamma must be positive");

    EigenvalueVerdict v;
    v.lambda = lambda;
    const Rational m = -(lambda * gamma);
    if (auto result = detail::apply_characterisation(g.name, m)) {
        v.case_tag = result->tag;
        v.formula_trace = std::move(result->trace);
        v.weight_count = detail::total(v.formula_trace);
    }
    v.is_eigenvalue = v.weight_count > 0;
    return v;
}

/// Denominator of the grid on which every nonzero eigenvalue (gamma = 1) lies.
[[nodiscard]] constexpr std::int64_t candidate_denominator(RootSystemName rs) noexcept {
    return closed_form::shape(rs).denominator;
}

struct ValidationMismatch {
    Rational lambda;
    std::uint64_t theorem_count;
    std::uint64_t enumerated_count;
};

struct ValidationReport {
    GroupName group;
    Rational cutoff;
    std::size_t candidates_checked = 0;
    std::size_t eigenvalues_found = 0;
    std::vector<ValidationMismatch> mismatches;

    [[nodiscard]] bool ok() const noexcept { return mismatches.empty(); }
};

/// Compares check_eigenvalue against exhaustive enumeration (gamma = 1) for
/// every candidate -m/denominator down to -cutoff. Mismatches are reported,
/// not thrown.
[[nodiscard]] inline ValidationReport cross_validate(const GroupDescriptor& g, const Rational& cutoff) {
    ValidationReport report{g.name, cutoff, 0, 0, {}};
    std::map<Rational, std::uint64_t> enumerated;
    for (const auto& e : enumerate_spectrum(g, cutoff)) {
        if (e.lambda.sign() == 0) continue;
        enumerated[e.lambda] = e.weights.size();
    }
    report.eigenvalues_found = enumerated.size();

    const std::int64_t den = candidate_denominator(g.root_system);
    const std::int64_t last = (Rational(den) * cutoff).floor();
    for (std::int64_t m = 1; m <= last; ++m) {
        const Rational lambda(-m, den);
        const auto verdict = check_eigenvalue(g, lambda);
        const auto it = enumerated.find(lambda);
        const std::uint64_t count = it == enumerated.end() ? 0 : it->second;
        if (it != enumerated.end()) enumerated.erase(it);
        ++report.candidates_checked;
        if (verdict.weight_count != count) report.mismatches.push_back({lambda, verdict.weight_count, count});
    }
    // Anything left was off the candidate grid.
    for (const auto& [lambda, count] : enumerated) {
        const auto verdict = check_eigenvalue(g, lambda);
        report.mismatches.push_back({lambda, verdict.weight_count, count});
    }
    return report;
}

}  // namespace lbspec
