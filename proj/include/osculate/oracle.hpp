#pragma once

// Brute-force reference for small problems: the unique polynomial of degree
// (m+1)(n+1) - 1 meeting every value/derivative condition, found by solving
// the confluent Vandermonde system in the monomial basis with 113-bit
// floating point. Shares only the input types with the interpolant code.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "osculate/core.hpp"
#include "osculate/error.hpp"
#include "osculate/matrix.hpp"

namespace osculate {

using ExtendedReal = boost::multiprecision::cpp_bin_float_quad;

inline constexpr std::size_t kOracleSizeLimit = 64;
inline constexpr double kOracleResidualTolerance = 1e-20;

/// value(x) = sum_k coeffs[k] x^k. The leading coefficient may be zero.
template <class Real = ExtendedReal>
struct MonomialPolynomial {
    std::vector<Real> coeffs;

    std::size_t degree_bound() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

template <class Real = ExtendedReal>
struct OracleFit {
    MonomialPolynomial<Real> poly;
    double residual = 0.0;  // max |M c - y|
    double scale = 0.0;     // max row of |M||c|, plus max |y|
};

namespace detail {

// k! / (k-p)!
template <class Real>
Real falling_factorial(std::size_t k, std::size_t p) {
    Real r(1);
    for (std::size_t q = 0; q < p; ++q) r *= Real(k - q);
    return r;
}

}  // namespace detail

template <class Real = ExtendedReal>
OracleFit<Real> confluent_vandermonde_fit(const NodeSet& nodes, const OsculatoryData& data) {
    using std::abs;
    using boost::multiprecision::abs;
    if (data.node_count() != nodes.size())
        throw Error(ErrorKind::ShapeMismatch, "node count and data rows differ");
    const std::size_t cols = data.order() + 1;
    const std::size_t size = cols * nodes.size();
    if (size > kOracleSizeLimit)
        throw Error(ErrorKind::SizeLimit, "confluent Vandermonde system of size " + std::to_string(size) +
                                              " exceeds limit " + std::to_string(kOracleSizeLimit));

    basic_matrix<Real> sys(size, size, Real(0));
    std::vector<Real> rhs(size);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Real xi(nodes[i]);
        for (std::size_t p = 0; p < cols; ++p) {
            const std::size_t r = i * cols + p;
            rhs[r] = Real(data(i, p));
            Real xpow(1);  // xi^(k-p)
            for (std::size_t k = p; k < size; ++k) {
                sys(r, k) = detail::falling_factorial<Real>(k, p) * xpow;
                xpow *= xi;
            }
        }
    }
    const basic_matrix<Real> original = sys;
    const std::vector<Real> original_rhs = rhs;

    Real max_entry(0);
    for (const auto& v : sys.flat()) max_entry = std::max<Real>(max_entry, abs(v));
    const Real pivot_floor = max_entry * Real(size) * std::numeric_limits<Real>::epsilon();

    // Gaussian elimination with partial pivoting.
    for (std::size_t col = 0; col < size; ++col) {
        std::size_t best = col;
        for (std::size_t r = col + 1; r < size; ++r)
            if (abs(sys(r, col)) > abs(sys(best, col))) best = r;
        if (!(abs(sys(best, col)) > pivot_floor))
            throw Error(ErrorKind::SingularSystem, "zero pivot in column " + std::to_string(col) +
                                                       "; nodes are not distinct");
        if (best != col) {
            for (std::size_t k = 0; k < size; ++k) std::swap(sys(best, k), sys(col, k));
            std::swap(rhs[best], rhs[col]);
        }
        for (std::size_t r = col + 1; r < size; ++r) {
            const Real factor = sys(r, col) / sys(col, col);
            if (factor == 0) continue;
            sys(r, col) = 0;
            for (std::size_t k = col + 1; k < size; ++k) sys(r, k) -= factor * sys(col, k);
            rhs[r] -= factor * rhs[col];
        }
    }
    std::vector<Real> c(size);
    for (std::size_t r = size; r-- > 0;) {
        Real acc = rhs[r];
        for (std::size_t k = r + 1; k < size; ++k) acc -= sys(r, k) * c[k];
        c[r] = acc / sys(r, r);
    }

    Real residual(0), row_scale(0), rhs_scale(0);
    for (std::size_t r = 0; r < size; ++r) {
        Real acc = -original_rhs[r], mag(0);
        for (std::size_t k = 0; k < size; ++k) {
            acc += original(r, k) * c[k];
            mag += abs(original(r, k) * c[k]);
        }
        residual = std::max<Real>(residual, abs(acc));
        row_scale = std::max<Real>(row_scale, mag);
        rhs_scale = std::max<Real>(rhs_scale, abs(original_rhs[r]));
    }
    OracleFit<Real> fit;
    fit.poly.coeffs = std::move(c);
    fit.residual = static_cast<double>(residual);
    fit.scale = static_cast<double>(row_scale + rhs_scale);
    if (!(fit.residual <= kOracleResidualTolerance * fit.scale))
        throw Error(ErrorKind::SingularSystem, "oracle residual " + std::to_string(fit.residual) +
                                                   " exceeds tolerance; system too ill-conditioned");
    return fit;
}

/// k-th derivative by Horner in extended precision, rounded to double.
template <class Real>
double poly_eval_deriv(const MonomialPolynomial<Real>& poly, double x, std::size_t k) {
    const std::size_t len = poly.coeffs.size();
    if (k >= len) return 0.0;
    const Real xr(x);
    Real acc(0);
    for (std::size_t j = len; j-- > k;) acc = acc * xr + poly.coeffs[j] * detail::falling_factorial<Real>(j, k);
    return static_cast<double>(acc);
}

/// Central difference (f(x+h) - f(x-h)) / 2h.
template <class F>
double finite_difference(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace osculate
