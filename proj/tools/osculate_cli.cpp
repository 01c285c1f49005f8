// osculate: fit, evaluate and verify osculating polynomial interpolants.
//
//   osculate fit PROBLEM.json [-o OUT.json]
//   osculate eval PROBLEM.json (--from A --to B --points N | --at x1,x2,...)
//                 [--method direct|barycentric|both] [--deriv P]
//   osculate verify [PROBLEM.json] [--seed S [--n N] [--m M]]
//   osculate demo-runge --nodes 20[,30,...] --family chebyshev|equispaced [--m 0|1]
//
// Exit codes: 0 success, 1 validation/parse failure, 2 verification failure,
// 3 size limit.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "osculate/osculate.hpp"

namespace {

enum ExitCode { kOk = 0, kInvalid = 1, kVerifyFailed = 2, kSizeLimit = 3 };

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        osculate::write_text(path, text);
}

}  // namespace

int main(int argc, char** argv) {
    using namespace osculate;

    CLI::App app{"Osculating (Hermite-type) polynomial interpolation"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string method_name;
    std::optional<std::size_t> deriv;
    std::optional<std::uint64_t> seed;
    app.add_option("--method", method_name, "Evaluator: direct, barycentric or both (eval defaults to direct, demo-runge to barycentric)")
        ->check(CLI::IsMember({"direct", "barycentric", "both"}));
    app.add_option("--deriv", deriv, "Derivative order (direct form only)");
    app.add_option("--seed", seed, "Seed for a generated random problem");

    std::string problem_path, output_path;

    auto* fit = app.add_subcommand("fit", "Write the weight and coefficient tables as JSON");
    fit->add_option("problem", problem_path, "Problem JSON file")->required();
    fit->add_option("-o,--output", output_path, "Output file (default stdout)");

    GridSpec grid;
    std::optional<std::string> at_list;
    auto* eval = app.add_subcommand("eval", "Evaluate on a grid and write CSV");
    eval->add_option("problem", problem_path, "Problem JSON file")->required();
    eval->add_option("--from", grid.from, "Grid start");
    eval->add_option("--to", grid.to, "Grid end");
    eval->add_option("--points", grid.points, "Number of grid points (>= 1)");
    eval->add_option("--at", at_list, "Comma-separated evaluation points");
    eval->add_option("-o,--output", output_path, "Output file (default stdout)");

    std::size_t rand_n = 4, rand_m = 3;
    auto* verify = app.add_subcommand("verify", "Compare both evaluators with the extended-precision oracle");
    verify->add_option("problem", problem_path, "Problem JSON file (omit with --seed)");
    verify->add_option("--n", rand_n, "Random problem: index of the last node (n+1 nodes)");
    verify->add_option("--m", rand_m, "Random problem: derivative order");

    std::vector<std::size_t> node_counts;
    std::string family_name = "chebyshev";
    std::size_t runge_m = 1;
    auto* demo = app.add_subcommand("demo-runge", "Interpolate 1/(1+25x^2) on [-1,1] and write errors as CSV");
    demo->add_option("--nodes", node_counts, "Node counts n+1")->delimiter(',')->required();
    demo->add_option("--family", family_name, "Node family")
        ->check(CLI::IsMember({"equispaced", "chebyshev"}));
    demo->add_option("--m", runge_m, "Derivative order (0 or 1)")->check(CLI::Range(0, 1));
    demo->add_option("-o,--output", output_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    const bool both = method_name == "both";
    const auto method_or = [&](EvalMethod fallback) {
        if (method_name == "direct") return EvalMethod::direct;
        if (method_name == "barycentric") return EvalMethod::barycentric;
        return fallback;
    };

    try {
        if (*fit) {
            const auto problem = load_problem(problem_path);
            const auto f = build_interpolant(problem.node_set(), problem.data());
            emit(fit_to_json(f, problem.label), output_path);
            return kOk;
        }
        if (*eval) {
            if (at_list) grid.at = parse_number_list(*at_list);
            const auto problem = load_problem(problem_path);
            const auto f = build_interpolant(problem.node_set(), problem.data());
            EvalRequest req{make_grid(grid), method_or(EvalMethod::direct), both, deriv};
            emit(eval_report(f, req), output_path);
            return kOk;
        }
        if (*verify) {
            if (seed.has_value() == !problem_path.empty()) {
                std::cerr << "verify: give either a problem file or --seed\n";
                return kInvalid;
            }
            const auto problem = seed ? random_problem(*seed, rand_n, rand_m) : load_problem(problem_path);
            const auto report = verify_problem(problem);
            std::cout << format_report(report);
            return report.passed() ? kOk : kVerifyFailed;
        }
        if (*demo) {
            const NodeFamily family = family_name == "equispaced" ? NodeFamily::equispaced : NodeFamily::chebyshev;
            const EvalMethod demo_method = method_or(EvalMethod::barycentric);
            std::vector<RungeRun> runs;
            for (std::size_t count : node_counts) {
                runs.push_back(runge_run(family, count, runge_m, demo_method));
                std::cerr << family_name << " nodes=" << count << " m=" << runge_m
                          << " max_error=" << format_double(runs.back().max_error) << "\n";
            }
            emit(runge_csv(runs), output_path);
            return kOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::SizeLimit ? kSizeLimit : kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kOk;
}
