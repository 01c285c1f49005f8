#pragma once

// Static data of an osculating (Hermite-type) polynomial interpolant: nodes,
// prescribed derivative data, Lagrange-basis derivatives at the nodes,
// barycentric weights and the per-node coefficient tables of the direct and
// barycentric forms.
//
// The interpolant with uniform order m on nodes x_0..x_n is
//
//     y(x) = sum_i L_i(x) P_i(x),   L_i = l_i^(m+1),
//     P_i(x) = sum_j A_i^(j) / j! (x - x_i)^j,
//
// with l_i the Lagrange basis polynomial. Because L_k and its first m
// derivatives vanish at x_i for k != i, the Leibniz expansion of y^(p) at x_i
// keeps only the k = i term, and the A coefficients follow from a
// per-node lower-triangular recursion.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "osculate/binomial.hpp"
#include "osculate/error.hpp"
#include "osculate/matrix.hpp"

namespace osculate {

/// Minimum node gap relative to max(span, 1).
inline constexpr double kDistinctnessTolerance = 1e-13;

class NodeSet {
public:
    /// Validates finiteness and pairwise distinctness; keeps input order.
    explicit NodeSet(std::vector<double> values) : values_(std::move(values)) {
        if (values_.empty()) throw Error(ErrorKind::ValidationError, "node list is empty");
        for (std::size_t i = 0; i < values_.size(); ++i)
            if (!std::isfinite(values_[i]))
                throw Error(ErrorKind::NonFiniteInput, "node " + std::to_string(i) + " is not finite", i);

        auto [lo, hi] = std::minmax_element(values_.begin(), values_.end());
        span_ = *hi - *lo;

        std::vector<double> sorted = values_;
        std::sort(sorted.begin(), sorted.end());
        const double threshold = kDistinctnessTolerance * scale();
        for (std::size_t k = 1; k < sorted.size(); ++k) {
            if (!(sorted[k] - sorted[k - 1] > threshold)) {
                auto it = std::find(values_.begin(), values_.end(), sorted[k]);
                throw Error(ErrorKind::DuplicateNode,
                            "nodes " + std::to_string(sorted[k - 1]) + " and " + std::to_string(sorted[k]) +
                                " are closer than " + std::to_string(threshold),
                            static_cast<std::size_t>(it - values_.begin()));
            }
        }
    }

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }
    double span() const noexcept { return span_; }
    double scale() const noexcept { return std::max(span_, 1.0); }
    double min() const { return *std::min_element(values_.begin(), values_.end()); }
    double max() const { return *std::max_element(values_.begin(), values_.end()); }

private:
    std::vector<double> values_;
    double span_ = 0.0;
};

inline NodeSet build_nodeset(std::span<const double> values) {
    return NodeSet(std::vector<double>(values.begin(), values.end()));
}

/// Row i holds (y_i, y_i', ..., y_i^(m)).
class OsculatoryData {
public:
    explicit OsculatoryData(Matrix values) : values_(std::move(values)) {
        if (values_.rows() == 0 || values_.cols() == 0)
            throw Error(ErrorKind::ShapeMismatch, "derivative data must have at least one row and one column");
        check_order(values_.cols() - 1);
        for (std::size_t i = 0; i < values_.rows(); ++i)
            for (std::size_t k = 0; k < values_.cols(); ++k)
                if (!std::isfinite(values_(i, k)))
                    throw Error(ErrorKind::NonFiniteInput,
                                "derivative " + std::to_string(k) + " at node " + std::to_string(i) + " is not finite",
                                i);
    }

    std::size_t order() const noexcept { return values_.cols() - 1; }
    std::size_t node_count() const noexcept { return values_.rows(); }
    double operator()(std::size_t i, std::size_t k) const { return values_(i, k); }
    const Matrix& values() const noexcept { return values_; }

    /// y_i = 1, all higher derivatives 0: the data whose interpolant is 1.
    static OsculatoryData constant_one(std::size_t node_count, std::size_t m) {
        Matrix v(node_count, m + 1, 0.0);
        for (std::size_t i = 0; i < node_count; ++i) v(i, 0) = 1.0;
        return OsculatoryData(std::move(v));
    }

private:
    Matrix values_;
};

/// small_l(i, v) = l_i^(v)(x_i), big_L(i, v) = L_i^(v)(x_i), v = 0..m.
struct BasisDerivativeTable {
    Matrix small_l;
    Matrix big_L;

    std::size_t order() const noexcept { return small_l.cols() - 1; }
};

struct BarycentricWeights {
    std::vector<double> delta;
    std::vector<double> delta_pow;  // delta^(m+1)
};

struct CoefficientTable {
    Matrix a;
};

struct DenominatorTable {
    Matrix b;
};

inline BarycentricWeights compute_weights(const NodeSet& nodes, std::size_t m) {
    check_order(m);
    BarycentricWeights w;
    w.delta.resize(nodes.size());
    w.delta_pow.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        double prod = 1.0;
        for (std::size_t j = 0; j < nodes.size(); ++j)
            if (j != i) prod *= nodes[i] - nodes[j];
        w.delta[i] = 1.0 / prod;
        w.delta_pow[i] = std::pow(w.delta[i], static_cast<double>(m + 1));
        if (!std::isfinite(w.delta_pow[i]) || w.delta_pow[i] == 0.0)
            throw Error(ErrorKind::Overflow,
                        "weight of node " + std::to_string(i) + " raised to power " + std::to_string(m + 1) +
                            " is out of range; nodes too clustered for this order",
                        i);
    }
    return w;
}

/// s_r = sum_{k != i} (x_i - x_k)^(-r) for r = 1..r_max; element r-1 holds s_r.
inline std::vector<double> power_sums(const NodeSet& nodes, std::size_t i, std::size_t r_max) {
    if (i >= nodes.size()) throw Error(ErrorKind::ShapeMismatch, "node index out of range", i);
    std::vector<double> s(r_max, 0.0);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (k == i) continue;
        const double t = 1.0 / (nodes[i] - nodes[k]);
        double tr = t;
        for (std::size_t r = 0; r < r_max; ++r) {
            s[r] += tr;
            tr *= t;
        }
    }
    return s;
}

namespace detail {

// Derivatives at x_i of F = l_i^c from the log-derivative series:
// (log F)^(r) = c (-1)^(r-1) (r-1)! s_r, F' = (log F)' F, so
// F^(r) = sum_{q<r} C(r-1, q) (log F)^(r-q) F^(q).
inline void exp_of_log_series(std::span<const double> s, double c, std::span<double> out) {
    const std::size_t m = out.size() - 1;
    std::vector<double> g(m + 1, 0.0);
    double factorial = 1.0;  // (r-1)!
    for (std::size_t r = 1; r <= m; ++r) {
        if (r > 1) factorial *= static_cast<double>(r - 1);
        const double sign = (r % 2 == 1) ? 1.0 : -1.0;
        g[r] = c * sign * factorial * s[r - 1];
    }
    out[0] = 1.0;
    for (std::size_t r = 1; r <= m; ++r) {
        double acc = 0.0;
        for (std::size_t q = 0; q < r; ++q) acc += binomial(r - 1, q) * g[r - q] * out[q];
        out[r] = acc;
    }
}

// A^(0) = y^(0); A^(p) = y^(p) - sum_{v=1..p} C(p, v) L^(v) A^(p-v).
inline void triangular_solve(std::span<const double> rhs, std::span<const double> big_L, std::span<double> out) {
    out[0] = rhs[0];
    for (std::size_t p = 1; p < out.size(); ++p) {
        double acc = rhs[p];
        for (std::size_t v = 1; v <= p; ++v) acc -= binomial(p, v) * big_L[v] * out[p - v];
        out[p] = acc;
    }
}

inline void require_basis_shape(const OsculatoryData& data, const BasisDerivativeTable& basis) {
    if (data.node_count() != basis.big_L.rows() || data.values().cols() != basis.big_L.cols())
        throw Error(ErrorKind::ShapeMismatch,
                    "data is " + std::to_string(data.node_count()) + "x" + std::to_string(data.values().cols()) +
                        " but basis table is " + std::to_string(basis.big_L.rows()) + "x" +
                        std::to_string(basis.big_L.cols()));
}

}  // namespace detail

inline BasisDerivativeTable basis_derivatives(const NodeSet& nodes, std::size_t m) {
    check_order(m);
    BasisDerivativeTable t{Matrix(nodes.size(), m + 1), Matrix(nodes.size(), m + 1)};
    const double power = static_cast<double>(m + 1);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto s = power_sums(nodes, i, m);
        detail::exp_of_log_series(s, 1.0, t.small_l.row(i));
        detail::exp_of_log_series(s, power, t.big_L.row(i));
    }
    return t;
}

inline CoefficientTable solve_numerator(const OsculatoryData& data, const BasisDerivativeTable& basis) {
    detail::require_basis_shape(data, basis);
    CoefficientTable out{Matrix(data.node_count(), data.order() + 1)};
    for (std::size_t i = 0; i < data.node_count(); ++i)
        detail::triangular_solve(data.values().row(i), basis.big_L.row(i), out.a.row(i));
    return out;
}

/// Same recursion as solve_numerator, applied to constant-one data.
inline DenominatorTable solve_denominator(std::size_t m, const BasisDerivativeTable& basis) {
    const auto one = OsculatoryData::constant_one(basis.big_L.rows(), m);
    return DenominatorTable{solve_numerator(one, basis).a};
}

/// Hermite (m = 1) coefficients from the closed-form expressions.
inline CoefficientTable closed_form_m1(const OsculatoryData& data, const BasisDerivativeTable& basis) {
    if (data.order() != 1) throw Error(ErrorKind::WrongOrder, "closed_form_m1 needs m = 1, got " + std::to_string(data.order()));
    detail::require_basis_shape(data, basis);
    CoefficientTable out{Matrix(data.node_count(), 2)};
    for (std::size_t i = 0; i < data.node_count(); ++i) {
        const double y = data(i, 0), dy = data(i, 1);
        const double l1 = basis.small_l(i, 1);
        out.a(i, 0) = y;
        out.a(i, 1) = dy - 2.0 * l1 * y;
    }
    return out;
}

/// m = 2 coefficients from the closed-form expressions.
inline CoefficientTable closed_form_m2(const OsculatoryData& data, const BasisDerivativeTable& basis) {
    if (data.order() != 2) throw Error(ErrorKind::WrongOrder, "closed_form_m2 needs m = 2, got " + std::to_string(data.order()));
    detail::require_basis_shape(data, basis);
    CoefficientTable out{Matrix(data.node_count(), 3)};
    for (std::size_t i = 0; i < data.node_count(); ++i) {
        const double y = data(i, 0), dy = data(i, 1), d2y = data(i, 2);
        const double l1 = basis.small_l(i, 1), l2 = basis.small_l(i, 2);
        out.a(i, 0) = y;
        out.a(i, 1) = dy - 3.0 * l1 * y;
        out.a(i, 2) = d2y - 6.0 * l1 * dy + 12.0 * l1 * l1 * y - 3.0 * l2 * y;
    }
    return out;
}

class Interpolant;
Interpolant build_interpolant(NodeSet nodes, OsculatoryData data);

/// Immutable bundle of everything evaluation needs. Safe to share across threads.
class Interpolant {
public:
    const NodeSet& nodes() const noexcept { return nodes_; }
    const OsculatoryData& data() const noexcept { return data_; }
    const BasisDerivativeTable& basis() const noexcept { return basis_; }
    const BarycentricWeights& weights() const noexcept { return weights_; }
    const CoefficientTable& a_table() const noexcept { return a_; }
    const DenominatorTable& b_table() const noexcept { return b_; }

    std::size_t order() const noexcept { return data_.order(); }
    std::size_t node_count() const noexcept { return nodes_.size(); }

    /// (m+1)(n+1) - 1: one less than the number of interpolation conditions.
    std::size_t degree_bound() const noexcept { return (order() + 1) * node_count() - 1; }

private:
    friend Interpolant build_interpolant(NodeSet nodes, OsculatoryData data);

    Interpolant(NodeSet nodes, OsculatoryData data, BasisDerivativeTable basis, BarycentricWeights weights,
                CoefficientTable a, DenominatorTable b)
        : nodes_(std::move(nodes)),
          data_(std::move(data)),
          basis_(std::move(basis)),
          weights_(std::move(weights)),
          a_(std::move(a)),
          b_(std::move(b)) {}

    NodeSet nodes_;
    OsculatoryData data_;
    BasisDerivativeTable basis_;
    BarycentricWeights weights_;
    CoefficientTable a_;
    DenominatorTable b_;
};

inline Interpolant build_interpolant(NodeSet nodes, OsculatoryData data) {
    if (data.node_count() != nodes.size())
        throw Error(ErrorKind::ShapeMismatch, std::to_string(nodes.size()) + " nodes but " +
                                                  std::to_string(data.node_count()) + " rows of derivative data");
    const std::size_t m = data.order();
    auto weights = compute_weights(nodes, m);
    auto basis = basis_derivatives(nodes, m);
    auto a = solve_numerator(data, basis);
    auto b = solve_denominator(m, basis);
    return Interpolant(std::move(nodes), std::move(data), std::move(basis), std::move(weights), std::move(a),
                       std::move(b));
}

}  // namespace osculate
