// Command-line front end: analyze | census | count | graph | verify.
// Exit codes: 0 all checks pass, 1 theorem/oracle or formula mismatch,
// 2 invalid input or size guard.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "grassclique/acceptance.hpp"
#include "grassclique/report.hpp"
#include "grassclique/textio.hpp"

namespace {

using namespace grassclique;

std::vector<int> parse_modulus(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(std::stoi(tok));
    return out;
}

FieldPtr make_field(int q, const std::string& modulus) {
    return modulus.empty() ? Field::make(q) : Field::make(q, parse_modulus(modulus));
}

EnumerationGuard guard_from_env(bool force) {
    EnumerationGuard guard;
    guard.force = force;
    if (const char* env = std::getenv("GRASSCLIQUE_GUARD")) {
        try {
            guard.limit = std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("GRASSCLIQUE_GUARD must be an integer, got '" +
                                        std::string(env) + "'");
        }
    }
    return guard;
}

void write_output(const std::string& path, const std::string& bytes) {
    if (path.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << bytes;
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

std::string read_matrix_source(const std::string& inline_text, const std::string& path) {
    if (!inline_text.empty()) return inline_text;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stars and tops of the projective-code graph: classify, count, verify"};
    app.require_subcommand(1);

    int q = 0, n = 0, k = 0, jobs = 1;
    std::string modulus, matrix_text, matrix_file, out_path, format = "json";
    bool force = false;

    auto add_field_opts = [&](CLI::App* cmd, bool need_nk) {
        cmd->add_option("--q", q, "field order (prime power <= 32)")->required();
        cmd->add_option("--modulus", modulus,
                        "modulus polynomial coefficients, constant term first");
        auto* on = cmd->add_option("--n", n, "ambient dimension");
        auto* ok = cmd->add_option("--k", k, "code dimension");
        if (need_nk) { on->required(); ok->required(); }
    };

    CLI::App* count = app.add_subcommand("count", "Grassmannian and star/top sizes");
    add_field_opts(count, true);

    CLI::App* analyze = app.add_subcommand("analyze", "full report for one (k-1)-code");
    add_field_opts(analyze, true);
    analyze->add_option("--matrix", matrix_text, "generator matrix, rows ';'-separated");
    analyze->add_option("--matrix-file", matrix_file, "file holding the generator matrix");

    CLI::App* census_cmd = app.add_subcommand("census", "classify every (k-1)-code");
    add_field_opts(census_cmd, true);
    census_cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    census_cmd->add_flag("--force", force, "bypass the enumeration size guard");
    census_cmd->add_option("--out", out_path, "output file (default: stdout)");
    census_cmd->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* graph = app.add_subcommand("graph", "projective-code graph statistics");
    add_field_opts(graph, true);
    graph->add_flag("--force", force, "bypass the enumeration size guard");

    CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");
    verify->add_option("--jobs", jobs, "worker threads (0 = all cores)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed()) {
            const FieldPtr field = make_field(q, modulus);
            std::cout << count_report(field->q(), n, k).dump(2) << "\n";
            return 0;
        }

        if (analyze->parsed()) {
            const FieldPtr field = make_field(q, modulus);
            const std::string source = read_matrix_source(matrix_text, matrix_file);
            const Subspace s = rowspace(parse_matrix(source, field));
            if (s.ambient_dim() != n)
                throw std::invalid_argument("matrix has " + std::to_string(s.ambient_dim()) +
                                            " columns but --n is " + std::to_string(n));
            if (s.dim() != k - 1)
                throw std::invalid_argument("matrix generates a code of dimension " +
                                            std::to_string(s.dim()) + " but --k is " +
                                            std::to_string(k) + " (need dimension k-1)");
            GrassmannParams{field, n, k}.require_graph_range();
            const StarReport report = analyze_star(s);
            std::cout << star_report_json(field->q(), report).dump(2) << "\n";
            return report.agree() ? 0 : 1;
        }

        if (census_cmd->parsed()) {
            const FieldPtr field = make_field(q, modulus);
            GrassmannParams params{field, n, k};
            CensusOptions opt;
            opt.jobs = jobs;
            opt.guard = guard_from_env(force);
            const CensusResult result = census(params, opt);
            write_output(out_path, format == "csv" ? census_csv(result)
                                                   : census_json(result).dump(2) + "\n");
            std::cerr << "census: " << result.summary.total << " rows, "
                      << result.summary.mismatches << " mismatches, "
                      << result.summary.wall_seconds << " s\n";
            return result.summary.mismatches == 0 ? 0 : 1;
        }

        if (graph->parsed()) {
            const FieldPtr field = make_field(q, modulus);
            GrassmannParams params{field, n, k};
            const GraphStats stats = graph_stats(params, guard_from_env(force));
            std::cout << graph_report_json(field->q(), n, k, stats).dump(2) << "\n";
            return 0;
        }

        if (verify->parsed()) {
            if (!verify->count("--jobs")) jobs = 0;  // default: all cores
            const auto results = run_acceptance(std::cout, jobs);
            const bool all = std::all_of(results.begin(), results.end(),
                                         [](const CriterionResult& r) { return r.passed; });
            std::cout << (all ? "all criteria passed\n" : "FAILURES present\n");
            return all ? 0 : 1;
        }
    } catch (const GuardExceeded& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::domain_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::overflow_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
