#pragma once

// The operations behind the CLI subcommands, kept here so tests can drive
// them without spawning processes.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "osculate/core.hpp"
#include "osculate/evaluate.hpp"
#include "osculate/io.hpp"
#include "osculate/oracle.hpp"

namespace osculate {

inline constexpr double kVerifyTolerance = 1e-8;
inline constexpr std::size_t kVerifyGridPoints = 100;

/// Nodes uniform in [-2, 2] with pairwise gap >= 0.1, data uniform in [-10, 10].
inline ProblemFile random_problem(std::uint64_t seed, std::size_t n, std::size_t m) {
    constexpr double kMinGap = 0.1;
    if (n + 1 > 40) throw Error(ErrorKind::SizeLimit, "at most 40 nodes fit in [-2, 2] with gap 0.1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> node_dist(-2.0, 2.0), data_dist(-10.0, 10.0);
    ProblemFile p;
    p.m = m;
    std::size_t attempts = 0;
    while (p.nodes.size() < n + 1) {
        if (++attempts > 100000) throw Error(ErrorKind::SizeLimit, "could not place nodes with the required gap");
        const double x = node_dist(rng);
        if (std::all_of(p.nodes.begin(), p.nodes.end(), [&](double y) { return std::abs(x - y) >= kMinGap; }))
            p.nodes.push_back(x);
    }
    for (std::size_t i = 0; i <= n; ++i) {
        auto& row = p.derivatives.emplace_back();
        for (std::size_t k = 0; k <= m; ++k) row.push_back(data_dist(rng));
    }
    p.label = "random seed=" + std::to_string(seed) + " n=" + std::to_string(n) + " m=" + std::to_string(m);
    return p;
}

/// Node hull, widened to [x0 - 1, x0 + 1] for a single node.
inline std::vector<double> hull_grid(const NodeSet& nodes, std::size_t points) {
    double lo = nodes.min(), hi = nodes.max();
    if (nodes.size() == 1) {
        lo -= 1.0;
        hi += 1.0;
    }
    return make_grid(GridSpec{lo, hi, points, std::nullopt});
}

struct VerifyReport {
    std::size_t system_size = 0;
    double oracle_residual = 0.0;
    double oracle_scale = 0.0;
    double direct = 0.0;                   // max |direct - oracle| / (1 + max |oracle|) on the grid
    double barycentric = 0.0;              // same for the barycentric form
    std::vector<double> derivative;        // entry p-1: same for the order-p derivative
    double node_conditions = 0.0;          // max |y^(p)(x_i) - y_i^(p)| / (1 + |y_i^(p)|)
    double tolerance = kVerifyTolerance;

    double worst() const {
        double w = std::max({direct, barycentric, node_conditions});
        for (double d : derivative) w = std::max(w, d);
        return w;
    }
    bool passed() const { return worst() <= tolerance; }
};

inline VerifyReport verify_problem(const ProblemFile& problem) {
    const auto f = build_interpolant(problem.node_set(), problem.data());
    const auto fit = confluent_vandermonde_fit(f.nodes(), f.data());

    VerifyReport r;
    r.system_size = (f.order() + 1) * f.node_count();
    r.oracle_residual = fit.residual;
    r.oracle_scale = fit.scale;
    r.derivative.assign(f.order(), 0.0);

    // Normwise relative: max |eval - ref| / (1 + max |ref|) over the grid,
    // separately for the value and each derivative order.
    const auto grid = hull_grid(f.nodes(), kVerifyGridPoints);
    for (std::size_t p = 0; p <= f.order(); ++p) {
        double worst_direct = 0.0, worst_bary = 0.0, ref_norm = 0.0;
        for (double x : grid) {
            const double ref = poly_eval_deriv(fit.poly, x, p);
            ref_norm = std::max(ref_norm, std::abs(ref));
            worst_direct = std::max(worst_direct, std::abs((p == 0 ? eval_direct(f, x) : eval_derivative(f, x, p)) - ref));
            if (p == 0) worst_bary = std::max(worst_bary, std::abs(eval_barycentric(f, x) - ref));
        }
        if (p == 0) {
            r.direct = worst_direct / (1.0 + ref_norm);
            r.barycentric = worst_bary / (1.0 + ref_norm);
        } else {
            r.derivative[p - 1] = worst_direct / (1.0 + ref_norm);
        }
    }
    for (std::size_t i = 0; i < f.node_count(); ++i)
        for (std::size_t p = 0; p <= f.order(); ++p) {
            const double want = f.data()(i, p);
            r.node_conditions = std::max(
                r.node_conditions, std::abs(eval_derivative(f, f.nodes()[i], p) - want) / (1.0 + std::abs(want)));
        }
    return r;
}

inline std::string format_report(const VerifyReport& r) {
    std::string out;
    out += "system_size " + std::to_string(r.system_size) + "\n";
    out += "oracle_residual " + format_double(r.oracle_residual) + " (scale " + format_double(r.oracle_scale) + ")\n";
    out += "direct " + format_double(r.direct) + "\n";
    out += "barycentric " + format_double(r.barycentric) + "\n";
    for (std::size_t p = 0; p < r.derivative.size(); ++p)
        out += "derivative_" + std::to_string(p + 1) + " " + format_double(r.derivative[p]) + "\n";
    out += "node_conditions " + format_double(r.node_conditions) + "\n";
    out += std::string(r.passed() ? "PASS" : "FAIL") + " (tolerance " + format_double(r.tolerance) + ")\n";
    return out;
}

/// Evaluation report: `x,value` for one method, `x,direct,barycentric,abs_diff`
/// when `both` is set. With a derivative order only the direct form applies.
struct EvalRequest {
    std::vector<double> xs;
    EvalMethod method = EvalMethod::direct;
    bool both = false;
    std::optional<std::size_t> deriv;
};

inline std::string eval_report(const Interpolant& f, const EvalRequest& req) {
    std::vector<std::vector<double>> rows;
    rows.reserve(req.xs.size());
    if (req.deriv) {
        if (req.both || req.method != EvalMethod::direct)
            throw Error(ErrorKind::BadGridSpec, "--deriv is only available with --method direct");
        for (double x : req.xs) rows.push_back({x, eval_derivative(f, x, *req.deriv)});
        return to_csv({"x", "value"}, rows);
    }
    if (req.both) {
        const auto d = eval_grid(f, req.xs, EvalMethod::direct);
        const auto b = eval_grid(f, req.xs, EvalMethod::barycentric);
        for (std::size_t k = 0; k < req.xs.size(); ++k) rows.push_back({req.xs[k], d[k], b[k], std::abs(d[k] - b[k])});
        return to_csv({"x", "direct", "barycentric", "abs_diff"}, rows);
    }
    const auto v = eval_grid(f, req.xs, req.method);
    for (std::size_t k = 0; k < req.xs.size(); ++k) rows.push_back({req.xs[k], v[k]});
    return to_csv({"x", "value"}, rows);
}

enum class NodeFamily { equispaced, chebyshev };

inline std::vector<double> node_family(NodeFamily family, std::size_t count) {
    std::vector<double> xs(count);
    for (std::size_t k = 0; k < count; ++k) {
        if (family == NodeFamily::chebyshev)
            xs[k] = std::cos((2.0 * static_cast<double>(k) + 1.0) * std::numbers::pi / (2.0 * static_cast<double>(count)));
        else
            xs[k] = count == 1 ? 0.0 : -1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(count - 1);
    }
    return xs;
}

inline double runge(double x) { return 1.0 / (1.0 + 25.0 * x * x); }
inline double runge_prime(double x) {
    const double d = 1.0 + 25.0 * x * x;
    return -50.0 * x / (d * d);
}

inline constexpr std::size_t kRungeGridPoints = 1001;

struct RungeRun {
    std::size_t node_count = 0;
    double max_error = 0.0;
    std::vector<std::vector<double>> rows;  // nodes, x, f, interpolant, abs_error
};

inline RungeRun runge_run(NodeFamily family, std::size_t node_count, std::size_t m,
                          EvalMethod method = EvalMethod::barycentric) {
    if (node_count == 0) throw Error(ErrorKind::ValidationError, "node count must be at least 1");
    if (m > 1) throw Error(ErrorKind::WrongOrder, "the Runge demo supports m = 0 or m = 1");
    const auto xs = node_family(family, node_count);
    Matrix data(node_count, m + 1);
    for (std::size_t i = 0; i < node_count; ++i) {
        data(i, 0) = runge(xs[i]);
        if (m == 1) data(i, 1) = runge_prime(xs[i]);
    }
    const auto f = build_interpolant(NodeSet(xs), OsculatoryData(std::move(data)));
    const auto grid = make_grid(GridSpec{-1.0, 1.0, kRungeGridPoints, std::nullopt});
    RungeRun run;
    run.node_count = node_count;
    for (double x : grid) {
        const double exact = runge(x), approx = evaluate(f, x, method);
        const double err = std::abs(approx - exact);
        run.max_error = std::max(run.max_error, err);
        run.rows.push_back({static_cast<double>(node_count), x, exact, approx, err});
    }
    return run;
}

inline std::string runge_csv(const std::vector<RungeRun>& runs) {
    std::vector<std::vector<double>> rows;
    for (const auto& r : runs) rows.insert(rows.end(), r.rows.begin(), r.rows.end());
    return to_csv({"nodes", "x", "f", "interpolant", "abs_error"}, rows);
}

}  // namespace osculate
