//
// wordgrid/congruence.hpp — the linear mixing step m = (c + a*n) mod modulus.
//
// Copyright 2026 the wordgrid authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Adjacent box indices n would otherwise map to adjacent m and hence to
// word triples sharing two words; the congruence scatters them. It is only
// invertible when gcd(a, modulus) = 1, which BandParams enforces.
//

#pragma once
#include <cstdint>
#include <numeric>
#include <string>

#include "wordgrid/error.hpp"

namespace wordgrid {

/// Per-band congruence constants. Construct via make_band_params() (or brace
/// init in tests) — validation happens in make_band_params so aggregate
/// construction stays possible for known-good constants.
struct BandParams {
    std::int64_t a = 1;         // multiplier, coprime with modulus
    std::int64_t c = 0;         // additive offset; band 0 uses 0
    std::int64_t modulus = 1;   // address space size per band
};

/// Validate and return band constants; throws ConfigError when the
/// multiplier is not invertible or values are out of domain.
inline BandParams make_band_params(std::int64_t a, std::int64_t c, std::int64_t modulus) {
    if (modulus <= 0) throw ConfigError("modulus must be positive");
    if (a <= 0) throw ConfigError("multiplier a must be positive");
    if (c < 0 || c >= modulus)
        throw ConfigError("offset c must lie in [0, modulus)");
    if (std::gcd(a, modulus) != 1)
        throw ConfigError("multiplier a=" + std::to_string(a) +
                          " is not coprime with modulus " + std::to_string(modulus) +
                          "; the mapping would not be invertible");
    return {a, c, modulus};
}

/// m = (c + a*n) mod modulus. Exact for n up to 10^14 and modulus up to
/// 2*10^10 (the product is taken in 128-bit arithmetic).
inline std::int64_t congruence_forward(std::int64_t n, const BandParams& p) {
    if (n < 0) throw RangeError("congruence_forward: n must be non-negative");
    const auto an = static_cast<__int128>(p.a) * n % p.modulus;
    return static_cast<std::int64_t>((an + p.c) % p.modulus);
}

namespace detail {
// Modular inverse of a mod m via the extended Euclidean algorithm.
// Precondition: gcd(a, m) == 1.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t old_r = a % m, r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
    }
    return old_s < 0 ? old_s + m : old_s;
}
} // namespace detail

/// Least non-negative n with congruence_forward(n, p) == m.
inline std::int64_t congruence_inverse(std::int64_t m, const BandParams& p) {
    if (m < 0 || m >= p.modulus)
        throw RangeError("congruence_inverse: m outside [0, modulus)");
    if (std::gcd(p.a, p.modulus) != 1)
        throw ConfigError("congruence_inverse: non-invertible multiplier");
    const std::int64_t inv = detail::mod_inverse(p.a, p.modulus);
    std::int64_t d = (m - p.c) % p.modulus;
    if (d < 0) d += p.modulus;
    return static_cast<std::int64_t>(static_cast<__int128>(inv) * d % p.modulus);
}

} // namespace wordgrid
