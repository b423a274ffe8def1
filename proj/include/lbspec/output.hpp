#pragma once

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lbspec/lattices.hpp"
#include "lbspec/rational.hpp"
#include "lbspec/spectrum.hpp"

namespace lbspec {

inline constexpr const char* output_schema_version = "1";

/// Machine-readable spectrum table as emitted by `lbspec spectrum`.
struct OutputRecord {
    std::string schema_version = output_schema_version;
    std::string group;
    Rational gamma = 1;
    Rational cutoff = 1;
    std::vector<SpectrumEntry> entries;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

[[nodiscard]] inline OutputRecord make_output_record(const GroupDescriptor& g, const Rational& cutoff,
                                                     const Rational& gamma, std::vector<SpectrumEntry> entries) {
    return OutputRecord{output_schema_version, std::string(g.cli_name), gamma, cutoff, std::move(entries)};
}

/// JSON with fixed key order; rationals as canonical "p/q" strings.
[[nodiscard]] inline nlohmann::ordered_json to_json(const OutputRecord& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = r.schema_version;
    j["group"] = r.group;
    j["gamma"] = r.gamma.str();
    j["cutoff"] = r.cutoff.str();
    auto entries = nlohmann::ordered_json::array();
    for (const auto& e : r.entries) {
        nlohmann::ordered_json je;
        je["lambda"] = e.lambda.str();
        je["multiplicity"] = e.multiplicity;
        auto weights = nlohmann::ordered_json::array();
        for (const auto& w : e.weights) {
            nlohmann::ordered_json jw;
            jw["Lambda"] = w.nu.highest_weight();
            jw["nu"] = std::vector<std::int64_t>(w.nu.nu().begin(), w.nu.nu().end());
            jw["dim"] = w.dim;
            weights.push_back(std::move(jw));
        }
        je["weights"] = std::move(weights);
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    return j;
}

/// Inverse of to_json. Throws nlohmann::json::exception or
/// std::invalid_argument on malformed input.
[[nodiscard]] inline OutputRecord output_record_from_json(const nlohmann::ordered_json& j) {
    OutputRecord r;
    r.schema_version = j.at("schema_version").get<std::string>();
    r.group = j.at("group").get<std::string>();
    r.gamma = Rational::parse(j.at("gamma").get<std::string>());
    r.cutoff = Rational::parse(j.at("cutoff").get<std::string>());
    for (const auto& je : j.at("entries")) {
        SpectrumEntry e;
        e.lambda = Rational::parse(je.at("lambda").get<std::string>());
        e.multiplicity = je.at("multiplicity").get<std::uint64_t>();
        for (const auto& jw : je.at("weights")) {
            e.weights.push_back({ShiftedWeight(jw.at("nu").get<std::vector<std::int64_t>>()),
                                 jw.at("dim").get<std::uint64_t>()});
        }
        r.entries.push_back(std::move(e));
    }
    return r;
}

inline void write_json(std::ostream& os, const OutputRecord& r) { os << to_json(r).dump(2) << '\n'; }

/// Flat table: lambda,multiplicity,num_weights.
inline void write_csv(std::ostream& os, const OutputRecord& r) {
    os << "lambda,multiplicity,num_weights\n";
    for (const auto& e : r.entries) os << e.lambda.str() << ',' << e.multiplicity << ',' << e.weights.size() << '\n';
}

namespace detail {
inline std::string format_lambda_coeffs(const ShiftedWeight& w) {
    std::ostringstream os;
    const auto lambda = w.highest_weight();
    os << '[';
    for (std::size_t i = 0; i < lambda.size(); ++i) os << (i ? "," : "") << lambda[i];
    os << ']';
    return os.str();
}
}  // namespace detail

/// Aligned human-readable table. Highest weights are printed as their
/// coefficients over the fundamental weights, with dimension.
inline void write_pretty(std::ostream& os, const OutputRecord& r, std::string_view display_name) {
    os << display_name << "  gamma=" << r.gamma.short_str() << "  cutoff=" << r.cutoff.short_str() << '\n';
    std::size_t lambda_width = 6;
    std::size_t sigma_width = 12;
    for (const auto& e : r.entries) {
        lambda_width = std::max(lambda_width, e.lambda.short_str().size());
        sigma_width = std::max(sigma_width, std::to_string(e.multiplicity).size());
    }
    os << std::left << std::setw(static_cast<int>(lambda_width) + 2) << "lambda" << std::setw(static_cast<int>(sigma_width) + 2)
       << "multiplicity" << "highest weights [Lambda]:dim\n";
    for (const auto& e : r.entries) {
        os << std::left << std::setw(static_cast<int>(lambda_width) + 2) << e.lambda.short_str()
           << std::setw(static_cast<int>(sigma_width) + 2) << e.multiplicity;
        for (std::size_t i = 0; i < e.weights.size(); ++i) {
            os << (i ? " " : "") << detail::format_lambda_coeffs(e.weights[i].nu) << ':' << e.weights[i].dim;
        }
        os << '\n';
    }
}

}  // namespace lbspec
