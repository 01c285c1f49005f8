#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "osculate/binomial.hpp"

namespace osculate {

/// Value and derivatives (f, f', ..., f^(p)) of a quantity at one point.
/// Products use the Leibniz rule, so any polynomial expression built from
/// jets carries exact derivative semantics up to order p.
template <class Real = double>
class Jet {
public:
    explicit Jet(std::size_t order, Real value = Real(0)) : d_(order + 1, Real(0)) {
        check_order(order);
        d_[0] = value;
    }

    static Jet constant(Real c, std::size_t order) { return Jet(order, c); }

    /// The identity function t -> t evaluated at t = x.
    static Jet variable(Real x, std::size_t order) {
        Jet j(order, x);
        if (order >= 1) j.d_[1] = Real(1);
        return j;
    }

    std::size_t order() const noexcept { return d_.size() - 1; }
    Real value() const { return d_[0]; }
    Real derivative(std::size_t k) const { return d_[k]; }
    const std::vector<Real>& coeffs() const noexcept { return d_; }

    Jet& operator+=(const Jet& o) {
        assert(o.order() == order());
        for (std::size_t k = 0; k < d_.size(); ++k) d_[k] += o.d_[k];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        assert(o.order() == order());
        for (std::size_t k = 0; k < d_.size(); ++k) d_[k] -= o.d_[k];
        return *this;
    }
    Jet& operator*=(Real s) {
        for (auto& v : d_) v *= s;
        return *this;
    }
    Jet& operator/=(Real s) {
        for (auto& v : d_) v /= s;
        return *this;
    }
    Jet& operator+=(Real s) {
        d_[0] += s;
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, Real s) { return a *= s; }
    friend Jet operator*(Real s, Jet a) { return a *= s; }

    friend Jet operator*(const Jet& a, const Jet& b) {
        assert(a.order() == b.order());
        Jet out(a.order());
        for (std::size_t p = 0; p < a.d_.size(); ++p) {
            Real acc(0);
            for (std::size_t v = 0; v <= p; ++v) acc += Real(binomial(p, v)) * a.d_[v] * b.d_[p - v];
            out.d_[p] = acc;
        }
        return out;
    }
    Jet& operator*=(const Jet& o) { return *this = *this * o; }

    friend Jet pow(Jet base, std::size_t e) {
        Jet result = constant(Real(1), base.order());
        while (e > 0) {
            if (e & 1U) result *= base;
            e >>= 1U;
            if (e > 0) base *= base;
        }
        return result;
    }

private:
    std::vector<Real> d_;
};

}  // namespace osculate
