#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

#include "lbspec/theorems.hpp"

using lbspec::CaseTag;
using lbspec::check_eigenvalue;
using lbspec::descriptor;
using lbspec::GroupName;
using lbspec::Rational;

namespace {

std::string test_name(GroupName g) {
    std::string name(descriptor(g).cli_name);
    std::replace(name.begin(), name.end(), '-', '_');
    return name;
}

// Distinct highest weights per nonzero eigenvalue, from enumeration.
std::map<Rational, std::uint64_t> weight_counts(GroupName g, const Rational& cutoff) {
    std::map<Rational, std::uint64_t> out;
    for (const auto& e : lbspec::enumerate_spectrum(descriptor(g), cutoff)) {
        if (e.lambda.sign() != 0) out[e.lambda] = e.weights.size();
    }
    return out;
}

}  // namespace

TEST(Theorems, WorkedExamples) {
    const auto su4 = check_eigenvalue(descriptor(GroupName::SU4), Rational(-9, 8));
    EXPECT_TRUE(su4.is_eigenvalue);
    EXPECT_EQ(su4.weight_count, 2u);
    EXPECT_EQ(su4.case_tag, CaseTag::case_II);
    EXPECT_EQ(su4.formula_trace.k, 14);
    EXPECT_EQ(su4.formula_trace.text(), "2*L3(14)+L2(14)");

    const auto lowest = check_eigenvalue(descriptor(GroupName::SU4), Rational(-15, 32));
    EXPECT_EQ(lowest.weight_count, 2u);
    EXPECT_EQ(lowest.case_tag, CaseTag::case_I);
    EXPECT_EQ(lowest.formula_trace.text(), "2*L3(35)");

    const auto two = check_eigenvalue(descriptor(GroupName::SU4), Rational(-2));
    EXPECT_EQ(two.weight_count, 2u);
    EXPECT_EQ(two.formula_trace.text(), "2*L3(21)+L2(21)");

    const auto spin7 = check_eigenvalue(descriptor(GroupName::Spin7), Rational(-3, 5));
    EXPECT_EQ(spin7.weight_count, 1u);
    EXPECT_EQ(spin7.formula_trace.text(), "L3(59)");

    const auto spin7_low = check_eigenvalue(descriptor(GroupName::Spin7), Rational(-21, 40));
    EXPECT_EQ(spin7_low.weight_count, 1u);
    EXPECT_EQ(spin7_low.case_tag, CaseTag::case_II);
    EXPECT_EQ(spin7_low.formula_trace.text(), "L3(14)");

    const auto sp3 = check_eigenvalue(descriptor(GroupName::Sp3), Rational(-3, 4));
    EXPECT_EQ(sp3.weight_count, 1u);
    EXPECT_EQ(sp3.case_tag, CaseTag::single_case);
    EXPECT_EQ(sp3.formula_trace.text(), "L3(26)");
}

TEST(Theorems, NonEigenvalues) {
    const auto v = check_eigenvalue(descriptor(GroupName::SU4), Rational(-1, 32));
    EXPECT_FALSE(v.is_eigenvalue);
    EXPECT_EQ(v.weight_count, 0u);
    EXPECT_EQ(v.case_tag, CaseTag::none);
    EXPECT_FALSE(v.formula_trace.k.has_value());
    EXPECT_EQ(lbspec::enumerate_spectrum(descriptor(GroupName::SU4), Rational(1, 32)).size(), 1u);

    EXPECT_FALSE(check_eigenvalue(descriptor(GroupName::SU4), Rational(-1, 100)).is_eigenvalue);
}

TEST(Theorems, TwoSquareOnlyEigenvalue) {
    // k = 10 has no three-distinct-square representation, yet L2(10) = 1.
    const auto v = check_eigenvalue(descriptor(GroupName::SU4_mod_pm), Rational(-5, 8));
    EXPECT_TRUE(v.is_eigenvalue);
    EXPECT_EQ(v.weight_count, 1u);
    EXPECT_EQ(v.formula_trace.text(), "2*L3(10)+L2(10)");
}

TEST(Theorems, RejectsBadArguments) {
    EXPECT_THROW((void)check_eigenvalue(descriptor(GroupName::SU4), Rational(0)), std::invalid_argument);
    EXPECT_THROW((void)check_eigenvalue(descriptor(GroupName::SU4), Rational(1, 2)), std::invalid_argument);
    EXPECT_THROW((void)check_eigenvalue(descriptor(GroupName::SU4), Rational(-1), Rational(0)), std::invalid_argument);
}

TEST(Theorems, CrossValidateExamples) {
    for (const auto& [g, cutoff] : {std::pair{GroupName::SU4, Rational(2)}, std::pair{GroupName::SO5, Rational(3)},
                                    std::pair{GroupName::PSp3, Rational(2)}}) {
        const auto report = lbspec::cross_validate(descriptor(g), cutoff);
        EXPECT_TRUE(report.ok()) << test_name(g);
        EXPECT_GT(report.eigenvalues_found, 0u);
    }
}

TEST(Theorems, CaseExclusivity) {
    // check_eigenvalue throws if both cases hold; sweep the candidate grids.
    for (const auto g : {GroupName::SU4, GroupName::Spin7, GroupName::Spin5}) {
        const auto& d = descriptor(g);
        const std::int64_t den = lbspec::candidate_denominator(d.root_system);
        for (std::int64_t m = 1; m <= 10 * den; ++m) {
            EXPECT_NO_THROW((void)check_eigenvalue(d, Rational(-m, den))) << test_name(g) << " " << m;
        }
    }
}

TEST(Theorems, GroupChainMonotonicity) {
    const std::pair<GroupName, GroupName> chain[] = {
        {GroupName::PSU4, GroupName::SU4_mod_pm}, {GroupName::SU4_mod_pm, GroupName::SU4},
        {GroupName::SO7, GroupName::Spin7},       {GroupName::PSp3, GroupName::Sp3},
        {GroupName::SO5, GroupName::Spin5},
    };
    for (const auto& [sub, super] : chain) {
        const std::int64_t den = lbspec::candidate_denominator(descriptor(sub).root_system);
        for (std::int64_t m = 1; m <= 3 * den; ++m) {
            const Rational lambda(-m, den);
            const auto small = check_eigenvalue(descriptor(sub), lambda);
            const auto big = check_eigenvalue(descriptor(super), lambda);
            if (small.is_eigenvalue) {
                EXPECT_TRUE(big.is_eigenvalue) << test_name(sub) << " " << lambda;
            }
            EXPECT_LE(small.weight_count, big.weight_count);
        }
    }
}

class TheoremGroup : public ::testing::TestWithParam<GroupName> {};

TEST_P(TheoremGroup, WeightCountEqualsDistinctEnumeratedWeights) {
    const auto& d = descriptor(GetParam());
    const auto counts = weight_counts(GetParam(), Rational(3));
    const std::int64_t den = lbspec::candidate_denominator(d.root_system);
    std::size_t eigenvalues = 0;
    for (std::int64_t m = 1; m <= 3 * den; ++m) {
        const Rational lambda(-m, den);
        const auto v = check_eigenvalue(d, lambda);
        const auto it = counts.find(lambda);
        const std::uint64_t expected = it == counts.end() ? 0 : it->second;
        EXPECT_EQ(v.weight_count, expected) << lambda;
        EXPECT_EQ(v.is_eigenvalue, expected > 0) << lambda;
        eigenvalues += v.is_eigenvalue ? 1 : 0;
    }
    EXPECT_EQ(eigenvalues, counts.size());
}

TEST_P(TheoremGroup, OffGridValuesAreRejected) {
    const auto& d = descriptor(GetParam());
    const std::int64_t den = lbspec::candidate_denominator(d.root_system);
    for (std::int64_t m = 1; m <= 60; ++m) {
        const Rational lambda(-m, den * 7);
        if (lambda.den() % 7 != 0) continue;
        EXPECT_FALSE(check_eigenvalue(d, lambda).is_eigenvalue) << lambda;
    }
}

TEST_P(TheoremGroup, GammaCovariance) {
    const auto& d = descriptor(GetParam());
    const std::int64_t den = lbspec::candidate_denominator(d.root_system);
    for (const Rational gamma : {Rational(1, 2), Rational(2), Rational(3, 7), Rational(5, 3)}) {
        for (std::int64_t m = 1; m <= 2 * den; ++m) {
            const Rational lambda = Rational(-m, den) / gamma;
            const auto scaled = check_eigenvalue(d, lambda, gamma);
            const auto base = check_eigenvalue(d, lambda * gamma);
            EXPECT_EQ(scaled.weight_count, base.weight_count);
            EXPECT_EQ(scaled.case_tag, base.case_tag);
            EXPECT_EQ(scaled.formula_trace.text(), base.formula_trace.text());
        }
    }
}

TEST_P(TheoremGroup, CrossValidatesAtCutoffThree) {
    const auto report = lbspec::cross_validate(descriptor(GetParam()), Rational(3));
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.candidates_checked,
              static_cast<std::size_t>(3 * lbspec::candidate_denominator(descriptor(GetParam()).root_system)));
}

INSTANTIATE_TEST_SUITE_P(All, TheoremGroup, ::testing::ValuesIn(lbspec::all_groups),
                         [](const auto& info) { return test_name(info.param); });
