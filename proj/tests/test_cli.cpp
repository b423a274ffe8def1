#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = lbspec::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, SpectrumPretty) {
    const auto r = run({"spectrum", "so7", "--cutoff", "3/5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("-3/5    49"), std::string::npos) << r.out;
}

TEST(Cli, SpectrumCsv) {
    const auto r = run({"spectrum", "su4-mod-pm", "--cutoff", "5/8", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "lambda,multiplicity,num_weights\n0/1,1,1\n-5/8,36,1\n");
}

TEST(Cli, SpectrumJsonRoundTrips) {
    const auto r = run({"spectrum", "psp3", "--cutoff", "2", "--gamma", "3/2", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto parsed = lbspec::output_record_from_json(nlohmann::ordered_json::parse(r.out));
    const auto& g = lbspec::descriptor(lbspec::GroupName::PSp3);
    const auto expected = lbspec::make_output_record(g, lbspec::Rational(2), lbspec::Rational(3, 2),
                                                     lbspec::enumerate_spectrum(g, 2, lbspec::Rational(3, 2)));
    EXPECT_EQ(parsed, expected);
}

TEST(Cli, SpectrumIsDeterministicAcrossJobs) {
    const auto serial = run({"spectrum", "spin7", "--cutoff", "8", "--format", "json"});
    const auto again = run({"spectrum", "spin7", "--cutoff", "8", "--format", "json"});
    const auto parallel = run({"spectrum", "spin7", "--cutoff", "8", "--format", "json", "--jobs", "4"});
    EXPECT_EQ(serial.out, again.out);
    EXPECT_EQ(serial.out, parallel.out);
}

TEST(Cli, SpectrumErrors) {
    EXPECT_EQ(run({"spectrum", "su4", "--cutoff", "0"}).code, 3);
    EXPECT_EQ(run({"spectrum", "su4", "--cutoff", "-1"}).code, 3);
    EXPECT_EQ(run({"spectrum", "su4", "--cutoff", "0.5"}).code, 3);
    EXPECT_EQ(run({"spectrum", "su4", "--cutoff", "1", "--gamma", "0"}).code, 3);
    EXPECT_EQ(run({"spectrum", "su4", "--cutoff", "1", "--format", "xml"}).code, 3);
    EXPECT_EQ(run({"spectrum", "g2", "--cutoff", "1"}).code, 2);
    EXPECT_EQ(run({"spectrum", "su4"}).code, 3);
    EXPECT_EQ(run({"spectrum", "su4", "--cutoff", "100000000"}).code, 3);
}

TEST(Cli, Check) {
    const auto yes = run({"check", "su4", "-9/8"});
    EXPECT_EQ(yes.code, 0);
    EXPECT_EQ(yes.out, "eigenvalue; weights=2; k=14; 2*L3(14)+L2(14)\n");
    const auto spin7 = run({"check", "spin7", "-21/40"});
    EXPECT_EQ(spin7.code, 0);
    EXPECT_EQ(spin7.out, "eigenvalue; weights=1; k=14; L3(14)\n");
    const auto no = run({"check", "su4", "-1/100"});
    EXPECT_EQ(no.code, 1);
    EXPECT_EQ(no.out, "not an eigenvalue; weights=0\n");
    EXPECT_EQ(run({"check", "su4", "-9/16", "--gamma", "2"}).out, yes.out);
}

TEST(Cli, CheckErrors) {
    EXPECT_EQ(run({"check", "su4", "1/2"}).code, 3);
    EXPECT_EQ(run({"check", "su4", "0"}).code, 3);
    EXPECT_EQ(run({"check", "su4", "abc"}).code, 3);
    EXPECT_EQ(run({"check", "sp4", "-1"}).code, 2);
}

TEST(Cli, NumberTheory) {
    EXPECT_EQ(run({"nt", "l3", "21"}).out, "1\n");
    EXPECT_EQ(run({"nt", "l2", "50"}).out, "1\n");
    EXPECT_EQ(run({"nt", "n2", "25"}).out, "12\n");
    EXPECT_EQ(run({"nt", "n2p", "9"}).out, "6\n");
    EXPECT_EQ(run({"nt", "n3", "9"}).out, "30\n");
    EXPECT_EQ(run({"nt", "theta", "z3", "12"}).out, "1 6 12 8 6 24 24 0 12 30 24 24 8\n");
    EXPECT_EQ(run({"nt", "jacobi", "2", "15"}).out, "1\n");
    EXPECT_EQ(run({"nt", "jacobi", "-1", "7"}).out, "-1\n");
}

TEST(Cli, NumberTheoryErrors) {
    EXPECT_EQ(run({"nt", "l3", "0"}).code, 3);
    EXPECT_EQ(run({"nt", "l3", "x"}).code, 3);
    EXPECT_EQ(run({"nt", "theta", "e8", "4"}).code, 3);
    EXPECT_EQ(run({"nt", "jacobi", "2", "16"}).code, 3);
    EXPECT_EQ(run({"nt", "jacobi", "2", "1"}).code, 3);
    EXPECT_EQ(run({"nt", "pi", "3"}).code, 3);
}

TEST(Cli, Validate) {
    for (const char* g : {"psu4", "sp3"}) {
        const auto r = run({"validate", g, "--cutoff", "2"});
        EXPECT_EQ(r.code, 0) << r.out;
        EXPECT_NE(r.out.find("mismatches=0"), std::string::npos);
    }
    EXPECT_EQ(run({"validate", "so5", "--cutoff", "3"}).code, 0);
    EXPECT_EQ(run({"validate", "so8", "--cutoff", "3"}).code, 2);
}

TEST(Cli, HelpAndUsage) {
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"spectrum", "--help"}).code, 0);
    EXPECT_EQ(run({}).code, 3);
    EXPECT_EQ(run({"frobnicate"}).code, 3);
}
