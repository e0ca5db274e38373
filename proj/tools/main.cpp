// triangle-forge: exact matrix-generated number triangles, Motzkin/Dyck
// path combinatorics, and the tangent/Bernoulli/zeta cross-checks.

#include "tforge/constructions.hpp"
#include "tforge/nu_rho.hpp"
#include "tforge/paths.hpp"
#include "tforge/perm_oracle.hpp"
#include "tforge/serialization.hpp"
#include "tforge/verification.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace tforge;

std::optional<int> env_cap() {
    const char* value = std::getenv("TRIANGLE_FORGE_CAP");
    if (value == nullptr) return std::nullopt;
    try {
        return std::stoi(value);
    } catch (const std::exception&) {
        throw std::invalid_argument("TRIANGLE_FORGE_CAP is not an integer");
    }
}

// flag wins over the environment; each call site supplies its default
int resolve_cap(const std::optional<int>& flag, int fallback) {
    if (flag) return *flag;
    if (const auto env = env_cap()) return *env;
    return fallback;
}

OutputFormat parse_format(const std::string& name) {
    const auto format = output_format_from_name(name);
    if (!format) throw std::invalid_argument("unknown format: " + name);
    return *format;
}

std::string known_triangle_names() {
    std::string out;
    for (const TriangleId id : all_triangle_ids()) {
        if (!out.empty()) out += ", ";
        out += std::string(triangle_name(id));
    }
    return out;
}

std::string known_sequence_names() {
    std::string out;
    for (const SequenceId id : all_sequence_ids()) {
        if (!out.empty()) out += ", ";
        out += std::string(sequence_name(id));
    }
    return out;
}

int run_triangle(const std::string& name, int rows, const std::string& format_name,
                 const std::optional<int>& cap_flag) {
    const auto id = triangle_id_from_name(name);
    if (!id)
        throw std::invalid_argument("unknown triangle: " + name +
                                    " (known: " + known_triangle_names() + ")");
    const int cap = resolve_cap(cap_flag, kDefaultTriangleRowCap);
    const AnyTriangle triangle = named_triangle(*id, rows, cap);
    std::cout << render_triangle(name, triangle, parse_format(format_name));
    return 0;
}

int run_seq(const std::string& name, int count, const std::string& format_name) {
    const auto id = sequence_id_from_name(name);
    if (!id)
        throw std::invalid_argument("unknown sequence: " + name +
                                    " (known: " + known_sequence_names() + ")");
    if (count < 1) throw std::invalid_argument("count must be positive");
    const int first = sequence_first_index(*id);
    std::vector<Rational> terms;
    terms.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) terms.push_back(sequence_term(*id, first + i));
    std::cout << render_sequence(name, first, terms, parse_format(format_name));
    return 0;
}

int run_verify(int depth, const std::string& format_name,
               const std::optional<std::uint64_t>& seed,
               const std::optional<std::uint64_t>& samples) {
    VerifyOptions options;
    options.mc_seed = seed;
    options.mc_samples = samples;
    const VerifyReport report = verify_suite(depth, options);
    std::cout << render_report(report, parse_format(format_name));
    return report.all_pass() ? 0 : 1;
}

int run_oracle(const std::string& what, const std::vector<std::string>& args,
               const std::optional<int>& cap_flag) {
    const int brute_cap = resolve_cap(cap_flag, kDefaultBruteForceCap);
    const auto need_args = [&](std::size_t n) {
        if (args.size() != n)
            throw std::invalid_argument("oracle " + what + " expects " + std::to_string(n) +
                                        " argument(s)");
    };
    if (what == "phi") {
        need_args(1);
        std::cout << path_to_text(phi(parse_permutation(args[0]))) << "\n";
    } else if (what == "nu") {
        need_args(1);
        std::cout << to_text(nu(parse_path(args[0]))) << "\n";
    } else if (what == "rho") {
        need_args(1);
        std::cout << to_text(rho(parse_path(args[0]))) << "\n";
    } else if (what == "beta") {
        need_args(1);
        std::cout << to_text(beta_bruteforce(std::stoi(args[0]), brute_cap)) << "\n";
    } else if (what == "entringer") {
        need_args(2);
        std::cout << to_text(entringer_bruteforce(std::stoi(args[0]), std::stoi(args[1]),
                                                  brute_cap))
                  << "\n";
    } else {
        throw std::invalid_argument("unknown oracle: " + what +
                                    " (known: phi, nu, rho, beta, entringer)");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Motzkin/Dyck path combinatorics and the number triangles they generate"};
    app.require_subcommand(1);

    std::string triangle_id_name;
    int rows = 6;
    std::string triangle_format = "plain";
    std::optional<int> triangle_cap;
    auto* triangle_cmd = app.add_subcommand("triangle", "print a named triangle");
    triangle_cmd->add_option("name", triangle_id_name, "triangle name")->required();
    triangle_cmd->add_option("-r,--rows", rows, "number of rows to print");
    triangle_cmd->add_option("-f,--format", triangle_format, "plain, csv or json");
    triangle_cmd->add_option("--cap", triangle_cap, "row cap override");

    std::string seq_id_name;
    int count = 10;
    std::string seq_format = "plain";
    auto* seq_cmd = app.add_subcommand("seq", "print a named sequence");
    seq_cmd->add_option("name", seq_id_name, "sequence name")->required();
    seq_cmd->add_option("-c,--count", count, "number of terms to print");
    seq_cmd->add_option("-f,--format", seq_format, "plain, csv or json");

    int depth = 1;
    std::string verify_format = "plain";
    std::optional<std::uint64_t> verify_seed;
    std::optional<std::uint64_t> verify_samples;
    auto* verify_cmd = app.add_subcommand("verify", "run the cross-method verification suite");
    verify_cmd->add_option("-d,--depth", depth, "1 fast, 2 standard, 3 deep")
        ->check(CLI::Range(1, 3));
    verify_cmd->add_option("-f,--format", verify_format, "plain, csv or json");
    verify_cmd->add_option("--seed", verify_seed, "base seed for the Monte Carlo checks");
    verify_cmd->add_option("--samples", verify_samples, "Monte Carlo samples per seed");

    std::string oracle_what;
    std::vector<std::string> oracle_args;
    std::optional<int> oracle_cap;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force spot checks");
    oracle_cmd->add_option("what", oracle_what, "phi, nu, rho, beta or entringer")->required();
    oracle_cmd->add_option("args", oracle_args, "operation arguments");
    oracle_cmd->add_option("--cap", oracle_cap, "largest symmetric group swept");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(triangle_cmd))
            return run_triangle(triangle_id_name, rows, triangle_format, triangle_cap);
        if (app.got_subcommand(seq_cmd)) return run_seq(seq_id_name, count, seq_format);
        if (app.got_subcommand(verify_cmd))
            return run_verify(depth, verify_format, verify_seed, verify_samples);
        if (app.got_subcommand(oracle_cmd))
            return run_oracle(oracle_what, oracle_args, oracle_cap);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
