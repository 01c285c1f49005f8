#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

#include "osculate/error.hpp"

namespace osculate {

/// Largest derivative order accepted anywhere in the library. Every C(p, v)
/// with p <= kMaxOrder is below 2^53, so the double conversion is exact.
inline constexpr std::size_t kMaxOrder = 56;

namespace detail {

inline constexpr auto pascal_triangle = [] {
    std::array<std::array<std::uint64_t, kMaxOrder + 1>, kMaxOrder + 1> t{};
    for (std::size_t p = 0; p <= kMaxOrder; ++p) {
        t[p][0] = 1;
        for (std::size_t v = 1; v <= p; ++v) t[p][v] = t[p - 1][v - 1] + (v < p ? t[p - 1][v] : 0);
    }
    return t;
}();

}  // namespace detail

inline void check_order(std::size_t p) {
    if (p > kMaxOrder)
        throw Error(ErrorKind::OrderTooLarge,
                    "order " + std::to_string(p) + " exceeds limit " + std::to_string(kMaxOrder));
}

/// C(p, v) as a double; zero when v > p.
inline double binomial(std::size_t p, std::size_t v) {
    check_order(p);
    return v > p ? 0.0 : static_cast<double>(detail::pascal_triangle[p][v]);
}

}  // namespace osculate
