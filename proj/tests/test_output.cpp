#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "lbspec/output.hpp"

using lbspec::descriptor;
using lbspec::GroupName;
using lbspec::Rational;

namespace {

lbspec::OutputRecord record(GroupName g, Rational cutoff, Rational gamma = 1) {
    return lbspec::make_output_record(descriptor(g), cutoff, gamma,
                                      lbspec::enumerate_spectrum(descriptor(g), cutoff, gamma));
}

}  // namespace

TEST(Output, JsonLayout) {
    const auto j = lbspec::to_json(record(GroupName::SU4_mod_pm, Rational(5, 8)));
    EXPECT_EQ(j["schema_version"], "1");
    EXPECT_EQ(j["group"], "su4-mod-pm");
    EXPECT_EQ(j["gamma"], "1/1");
    EXPECT_EQ(j["cutoff"], "5/8");
    ASSERT_EQ(j["entries"].size(), 2u);
    EXPECT_EQ(j["entries"][0]["lambda"], "0/1");
    EXPECT_EQ(j["entries"][1]["lambda"], "-5/8");
    EXPECT_EQ(j["entries"][1]["multiplicity"], 36);
    EXPECT_EQ(j["entries"][1]["weights"][0]["Lambda"], (std::vector<int>{0, 1, 0}));
    EXPECT_EQ(j["entries"][1]["weights"][0]["nu"], (std::vector<int>{1, 2, 1}));
    EXPECT_EQ(j["entries"][1]["weights"][0]["dim"], 6);

    std::vector<std::string> keys;
    for (const auto& [key, value] : j.items()) keys.push_back(key);
    EXPECT_EQ(keys, (std::vector<std::string>{"schema_version", "group", "gamma", "cutoff", "entries"}));
}

TEST(Output, JsonRoundTrip) {
    for (const auto g : lbspec::all_groups) {
        const auto r = record(g, Rational(3), Rational(2, 3));
        std::ostringstream os;
        lbspec::write_json(os, r);
        const auto parsed = lbspec::output_record_from_json(nlohmann::ordered_json::parse(os.str()));
        EXPECT_EQ(parsed, r) << descriptor(g).cli_name;
    }
}

TEST(Output, JsonRejectsMalformedInput) {
    EXPECT_ANY_THROW((void)lbspec::output_record_from_json(nlohmann::ordered_json::parse(R"({"group":"su4"})")));
    const auto bad_rational = nlohmann::ordered_json::parse(
        R"({"schema_version":"1","group":"su4","gamma":"1.0","cutoff":"1/1","entries":[]})");
    EXPECT_THROW((void)lbspec::output_record_from_json(bad_rational), std::invalid_argument);
}

TEST(Output, Csv) {
    std::ostringstream os;
    lbspec::write_csv(os, record(GroupName::SO7, Rational(3, 5)));
    EXPECT_EQ(os.str(), "lambda,multiplicity,num_weights\n0/1,1,1\n-3/5,49,1\n");
}

TEST(Output, Pretty) {
    std::ostringstream os;
    lbspec::write_pretty(os, record(GroupName::SO7, Rational(3, 5)), descriptor(GroupName::SO7).display_name);
    const std::string text = os.str();
    EXPECT_EQ(text.substr(0, text.find('\n')), "SO(7)  gamma=1  cutoff=3/5");
    EXPECT_NE(text.find("-3/5    49            [1,0,0]:7"), std::string::npos) << text;
}
