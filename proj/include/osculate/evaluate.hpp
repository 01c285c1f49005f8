#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "osculate/core.hpp"
#include "osculate/jet.hpp"

namespace osculate {

enum class EvalMethod { direct, barycentric };

/// Inside this band around a node the barycentric form returns y_i.
inline constexpr double kNodeSnapTolerance = 4.0 * std::numeric_limits<double>::epsilon();
/// Inside this band the barycentric quotient is replaced by the direct form.
inline constexpr double kPoleGuardTolerance = 1e-8;

namespace detail {

inline void require_finite(double x, std::size_t index = 0) {
    if (!std::isfinite(x))
        throw Error(ErrorKind::NonFiniteInput, "evaluation point " + std::to_string(index) + " is not finite", index);
}

// Same multiplication sequence as Jet's pow, so order-0 jets reproduce it bit for bit.
template <class T>
T integer_power(T base, std::size_t e) {
    T result(1);
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

// A_i^(j) / j!, the monomial coefficients of P_i in powers of (x - x_i).
inline std::vector<double> taylor_row(std::span<const double> a) {
    std::vector<double> c(a.size());
    double factorial = 1.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (j > 0) factorial *= static_cast<double>(j);
        c[j] = a[j] / factorial;
    }
    return c;
}

}  // namespace detail

/// y(x) = sum_i l_i(x)^(m+1) P_i(x), with l_i evaluated as an explicit product.
inline double eval_direct(const Interpolant& f, double x) {
    detail::require_finite(x);
    const auto& nodes = f.nodes();
    const std::size_t m = f.order();
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        double l = 1.0;
        for (std::size_t k = 0; k < nodes.size(); ++k)
            if (k != i) l *= (x - nodes[k]) / (nodes[i] - nodes[k]);
        const auto c = detail::taylor_row(f.a_table().a.row(i));
        const double t = x - nodes[i];
        double p = c[m];
        for (std::size_t j = m; j-- > 0;) p = p * t + c[j];
        sum += detail::integer_power(l, m + 1) * p;
    }
    return sum;
}

/// y^(p)(x) by propagating order-p jets through the direct form.
inline double eval_derivative(const Interpolant& f, double x, std::size_t p) {
    detail::require_finite(x);
    check_order(p);
    using J = Jet<double>;
    const auto& nodes = f.nodes();
    const std::size_t m = f.order();
    const J var = J::variable(x, p);
    J sum(p);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        J l = J::constant(1.0, p);
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            if (k == i) continue;
            J factor = var;
            factor += -nodes[k];
            // divide rather than scale so the value matches eval_direct's rounding
            factor /= nodes[i] - nodes[k];
            l *= factor;
        }
        const auto c = detail::taylor_row(f.a_table().a.row(i));
        J t = var;
        t += -nodes[i];
        J poly = J::constant(c[m], p);
        for (std::size_t j = m; j-- > 0;) {
            poly = poly * t;
            poly += c[j];
        }
        sum += pow(l, m + 1) * poly;
    }
    return sum.derivative(p);
}

/// Quotient of weighted inverse-power sums; node neighbourhoods are guarded.
inline double eval_barycentric(const Interpolant& f, double x) {
    detail::require_finite(x);
    const auto& nodes = f.nodes();
    const std::size_t m = f.order();
    const double scale = nodes.scale();

    std::size_t nearest = 0;
    double nearest_gap = std::abs(x - nodes[0]);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        const double gap = std::abs(x - nodes[i]);
        if (gap < nearest_gap) {
            nearest_gap = gap;
            nearest = i;
        }
    }
    if (nearest_gap <= kNodeSnapTolerance * scale) return f.data()(nearest, 0);
    if (nearest_gap < kPoleGuardTolerance * scale) return eval_direct(f, x);

    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double u = 1.0 / (x - nodes[i]);
        const auto ca = detail::taylor_row(f.a_table().a.row(i));
        const auto cb = detail::taylor_row(f.b_table().b.row(i));
        // sum_j c_j u^(m+1-j), Horner in u
        double ha = ca[0], hb = cb[0];
        for (std::size_t j = 1; j <= m; ++j) {
            ha = ha * u + ca[j];
            hb = hb * u + cb[j];
        }
        const double w = f.weights().delta_pow[i];
        num += w * (ha * u);
        den += w * (hb * u);
    }
    return num / den;
}

inline double evaluate(const Interpolant& f, double x, EvalMethod method) {
    return method == EvalMethod::direct ? eval_direct(f, x) : eval_barycentric(f, x);
}

/// Pointwise evaluation; output order matches input order.
inline std::vector<double> eval_grid(const Interpolant& f, std::span<const double> xs, EvalMethod method) {
    for (std::size_t k = 0; k < xs.size(); ++k) detail::require_finite(xs[k], k);
    std::vector<double> out(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) out[k] = evaluate(f, xs[k], method);
    return out;
}

}  // namespace osculate
