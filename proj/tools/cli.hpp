#pragma once

// Command-line front end, kept in a header so the test suites can drive it
// in-process.
//
// Exit codes: 0 success / is an eigenvalue, 1 not an eigenvalue, 2 unknown
// group, 3 malformed input, 4 validation mismatch.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lbspec/lbspec.hpp"

namespace lbspec::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_not_eigenvalue = 1,
    exit_unknown_group = 2,
    exit_malformed = 3,
    exit_mismatch = 4,
};

namespace detail {

struct UsageError {
    int code;
    std::string message;
};

inline const GroupDescriptor& lookup_group(const std::string& name) {
    const auto g = parse_group_name(name);
    if (!g) {
        throw UsageError{exit_unknown_group,
                         "unknown group '" + name + "' (expected su4, su4-mod-pm, psu4, spin7, so7, sp3, psp3, spin5, so5)"};
    }
    return descriptor(*g);
}

inline Rational parse_rational(const std::string& text, const char* what) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError{exit_malformed, std::string(what) + ": " + e.what()};
    }
}

inline Rational parse_positive(const std::string& text, const char* what) {
    const Rational r = parse_rational(text, what);
    if (r.sign() <= 0) throw UsageError{exit_malformed, std::string(what) + " must be positive"};
    return r;
}

inline void print_report(std::ostream& out, const ValidationReport& r) {
    out << "validate " << descriptor(r.group).cli_name << " cutoff=" << r.cutoff.short_str()
        << ": candidates=" << r.candidates_checked << " eigenvalues=" << r.eigenvalues_found
        << " mismatches=" << r.mismatches.size() << '\n';
    for (const auto& m : r.mismatches) {
        out << "mismatch lambda=" << m.lambda.short_str() << " theorem=" << m.theorem_count
            << " enumeration=" << m.enumerated_count << '\n';
    }
}

}  // namespace detail

/// Runs one CLI invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Laplace-Beltrami spectra of compact simple Lie groups of rank 3 (and B2)", "lbspec"};
    app.require_subcommand(1);

    std::string group_name;
    std::string cutoff_text;
    std::string gamma_text = "1";
    std::string format = "pretty";
    unsigned jobs = 1;

    auto* spectrum = app.add_subcommand("spectrum", "list eigenvalues, multiplicities and highest weights");
    spectrum->add_option("group", group_name, "group identifier")->required();
    spectrum->add_option("--cutoff", cutoff_text, "list eigenvalues lambda >= -cutoff (p or p/q)")->required();
    spectrum->add_option("--gamma", gamma_text, "metric scale gamma (p or p/q)")->capture_default_str();
    spectrum->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    spectrum->add_option("--jobs", jobs, "worker threads for enumeration")->check(CLI::PositiveNumber);

    std::string lambda_text;
    auto* check = app.add_subcommand("check", "decide whether lambda is an eigenvalue");
    check->add_option("group", group_name, "group identifier")->required();
    check->add_option("lambda", lambda_text, "candidate eigenvalue (negative, p/q)")->required();
    check->add_option("--gamma", gamma_text, "metric scale gamma (p or p/q)")->capture_default_str();

    auto* validate = app.add_subcommand("validate", "cross-check characterisation against enumeration");
    validate->add_option("group", group_name, "group identifier")->required();
    validate->add_option("--cutoff", cutoff_text, "check eigenvalues down to -cutoff")->required();

    auto* nt_cmd = app.add_subcommand("nt", "number-theory counts");
    nt_cmd->require_subcommand(1);
    std::int64_t k = 0;
    std::string lattice_name;
    std::int64_t jacobi_a = 0;
    std::int64_t jacobi_n = 0;
    struct Count {
        const char* name;
        const char* help;
    };
    std::vector<std::pair<CLI::App*, std::string>> count_cmds;
    for (const Count c : {Count{"n2", "N2(k): x^2+y^2=k over Z^2"}, Count{"n2p", "N2'(k): x^2+2y^2=k over Z^2"},
                          Count{"n3", "N3(k): x^2+y^2+z^2=k over Z^3"}, Count{"l2", "L2(k): 0<x<y"},
                          Count{"l3", "L3(k): 0<x<y<z"}}) {
        auto* sub = nt_cmd->add_subcommand(c.name, c.help);
        sub->add_option("k", k, "natural number")->required()->check(CLI::PositiveNumber);
        count_cmds.emplace_back(sub, c.name);
    }
    auto* theta = nt_cmd->add_subcommand("theta", "theta series coefficients N(0..max_k)");
    theta->add_option("lattice", lattice_name, "z, sqrt2z, z2, z3 or z+sqrt2z")->required();
    theta->add_option("max_k", k, "last coefficient index")->required()->check(CLI::NonNegativeNumber);
    auto* jacobi = nt_cmd->add_subcommand("jacobi", "Legendre-Jacobi symbol (a/n)");
    jacobi->add_option("a", jacobi_a, "integer")->required();
    jacobi->add_option("n", jacobi_n, "odd modulus > 1")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_malformed;
    }

    try {
        if (*spectrum) {
            const auto& g = detail::lookup_group(group_name);
            const Rational cutoff = detail::parse_positive(cutoff_text, "--cutoff");
            const Rational gamma = detail::parse_positive(gamma_text, "--gamma");
            const auto record = make_output_record(g, cutoff, gamma, enumerate_spectrum(g, cutoff, gamma, jobs));
            if (format == "json") {
                write_json(out, record);
            } else if (format == "csv") {
                write_csv(out, record);
            } else {
                write_pretty(out, record, g.display_name);
            }
            return exit_ok;
        }
        if (*check) {
            const auto& g = detail::lookup_group(group_name);
            const Rational lambda = detail::parse_rational(lambda_text, "lambda");
            if (lambda.sign() >= 0) throw detail::UsageError{exit_malformed, "lambda must be negative"};
            const Rational gamma = detail::parse_positive(gamma_text, "--gamma");
            const auto v = check_eigenvalue(g, lambda, gamma);
            out << (v.is_eigenvalue ? "eigenvalue" : "not an eigenvalue") << "; weights=" << v.weight_count;
            if (v.formula_trace.k) out << "; k=" << *v.formula_trace.k << "; " << v.formula_trace.text();
            out << '\n';
            return v.is_eigenvalue ? exit_ok : exit_not_eigenvalue;
        }
        if (*validate) {
            const auto& g = detail::lookup_group(group_name);
            const Rational cutoff = detail::parse_positive(cutoff_text, "--cutoff");
            const auto report = cross_validate(g, cutoff);
            detail::print_report(out, report);
            return report.ok() ? exit_ok : exit_mismatch;
        }
        if (*nt_cmd) {
            for (const auto& [sub, name] : count_cmds) {
                if (!*sub) continue;
                if (name == "n2") out << nt::n2(k) << '\n';
                if (name == "n2p") out << nt::n2_prime(k) << '\n';
                if (name == "n3") out << nt::n3(k) << '\n';
                if (name == "l2") out << nt::l2(k) << '\n';
                if (name == "l3") out << nt::l3(k) << '\n';
                return exit_ok;
            }
            if (*theta) {
                const auto lattice = nt::parse_theta_lattice(lattice_name);
                if (!lattice) throw detail::UsageError{exit_malformed, "unknown lattice '" + lattice_name + "'"};
                const auto coeffs = nt::theta_coeffs(*lattice, k);
                for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? " " : "") << coeffs[i];
                out << '\n';
                return exit_ok;
            }
            if (*jacobi) {
                if (jacobi_n <= 1 || jacobi_n % 2 == 0) throw detail::UsageError{exit_malformed, "n must be odd and > 1"};
                out << nt::jacobi_symbol(jacobi_a, jacobi_n) << '\n';
                return exit_ok;
            }
        }
    } catch (const detail::UsageError& e) {
        err << "error: " << e.message << '\n';
        return e.code;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_malformed;
    }
    return exit_malformed;
}

}  // namespace lbspec::cli
