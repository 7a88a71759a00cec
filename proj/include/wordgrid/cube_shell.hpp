//
// wordgrid/cube_shell.hpp — bijection between integers and index triples.
//
// Copyright 2026 the wordgrid authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Every m >= 0 maps to a unique triple (i, j, k) with max(i, j, k) equal to
// l = floor(cbrt(m)). Geometrically the triples with max == l form the
// surface shell of an (l+1)-cube; m - l^3 walks that shell face by face:
//
//   i-face (i = l):        positions j in [0, l], k in [0, l]   -> (l+1)^2 slots
//   j-face (j = l, i < l): positions i in [0, l), k in [0, l]   -> l(l+1) slots
//   k-face (k = l, i,j<l): positions i in [0, l), j in [0, l)   -> l^2 slots
//
// (l+1)^2 + l(l+1) + l^2 = (l+1)^3 - l^3, so the three faces tile the shell
// exactly and the mapping is a bijection. Consecutive m walk k (or j on the
// k-face), which is why nearby m produce triples sharing two components.
//

#pragma once
#include <algorithm>
#include <cstdint>
#include <string>

#include "wordgrid/error.hpp"

namespace wordgrid {

struct IndexTriple {
    std::int64_t i = 0;
    std::int64_t j = 0;
    std::int64_t k = 0;

    bool operator==(const IndexTriple&) const = default;
};

/// The shell number l of a triple: always floor(cbrt(unfactor(t))).
inline std::int64_t max_index(const IndexTriple& t) { return std::max({t.i, t.j, t.k}); }

/// Exact floor(cbrt(m)) for m >= 0, integer arithmetic only. Floating-point
/// cbrt misrounds near perfect cubes at the 10^10 scale used here.
inline std::int64_t icbrt(std::int64_t m) {
    if (m < 0) throw RangeError("icbrt of negative value");
    if (m == 0) return 0;
    // Newton's method on integers from a power-of-two overestimate.
    std::int64_t x = std::int64_t(1) << ((66 - __builtin_clzll(static_cast<unsigned long long>(m))) / 3 + 1);
    while (true) {
        std::int64_t y = (2 * x + m / (x * x)) / 3;
        if (y >= x) break;
        x = y;
    }
    // Final correction: ensure x^3 <= m < (x+1)^3 (128-bit to survive the
    // top of the int64 range).
    while (static_cast<__int128>(x) * x * x > m) --x;
    while (static_cast<__int128>(x + 1) * (x + 1) * (x + 1) <= m) ++x;
    return x;
}

/// Decompose m into its shell triple (see the face walk above).
inline IndexTriple factor_m(std::int64_t m) {
    if (m < 0) throw RangeError("factor_m of negative value");
    const std::int64_t l = icbrt(m);
    std::int64_t t = m - l * l * l;
    if (t < (l + 1) * (l + 1))
        return {l, t / (l + 1), t % (l + 1)};
    t -= (l + 1) * (l + 1);
    if (t < l * (l + 1))
        return {t / (l + 1), l, t % (l + 1)};
    t -= l * (l + 1);
    return {t / l, t % l, l};
}

/// Inverse of factor_m.
inline std::int64_t unfactor(const IndexTriple& t) {
    if (t.i < 0 || t.j < 0 || t.k < 0)
        throw RangeError("negative component in index triple");
    const std::int64_t l = std::max(t.i, std::max(t.j, t.k));
    const std::int64_t base = l * l * l;
    if (t.i == l)
        return base + t.j * (l + 1) + t.k;
    if (t.j == l)
        return base + (l + 1) * (l + 1) + t.i * (l + 1) + t.k;
    return base + (l + 1) * (l + 1) + l * (l + 1) + t.i * l + t.j;
}

} // namespace wordgrid
