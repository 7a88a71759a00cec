//
// wordgrid/grid.hpp — the two-level coordinate grid.
//
// Copyright 2026 the wordgrid authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// The globe is split into 4320 x 8640 cells of 1/24 degree. Each cell is
// subdivided into 1546 latitude rows and W(Y) longitude columns, where W(Y)
// shrinks toward the poles so boxes stay roughly 3 m x 3 m. This header maps
// geographic coordinates to (cell, box) addresses and back, and measures
// distances between box centers.
//

#pragma once
#include <cmath>
#include <numbers>
#include <string>

#include "wordgrid/error.hpp"

namespace wordgrid {

inline constexpr int kCellRows = 4320;     // latitude cells, 1/24 degree each
inline constexpr int kCellCols = 8640;     // longitude cells
inline constexpr int kBoxRows = 1546;      // latitude boxes per cell
inline constexpr double kEarthRadiusM = 6371000.0;

/// Geographic point in degrees. Valid ranges are half-open:
/// lat in [-90, 90), lon in [-180, 180). +90 and +180 are rejected because
/// they would index one row/column past the grid.
struct GeoPoint {
    double lat = 0;
    double lon = 0;
};

/// One ~3m box: cell column X, cell row Y, box column x, box row y.
struct BoxAddress {
    int X = 0;   // [0, 8640)
    int Y = 0;   // [0, 4320)
    int x = 0;   // [0, band_width(Y))
    int y = 0;   // [0, 1546)

    bool operator==(const BoxAddress&) const = default;
};

/// Number of longitude boxes per cell in row Y:
/// W(Y) = max(1, floor(1546 * cos(latitude of row center))).
/// The cosine argument (Y+0.5)/24 - 90 is the row-center latitude in degrees.
inline int band_width(int Y) {
    if (Y < 0 || Y >= kCellRows)
        throw RangeError("cell row Y=" + std::to_string(Y) + " outside [0, 4320)");
    const double lat_deg = (Y + 0.5) / 24.0 - 90.0;
    const double w = std::floor(kBoxRows * std::cos(lat_deg * std::numbers::pi / 180.0));
    return w < 1.0 ? 1 : static_cast<int>(w);
}

namespace detail {
// Fractional part as z - floor(z); correct for negative z (frac(-0.25) = 0.75).
inline double frac(double z) { return z - std::floor(z); }

inline void check_point(const GeoPoint& p) {
    if (!(p.lat >= -90.0 && p.lat < 90.0))
        throw RangeError("latitude " + std::to_string(p.lat) + " outside [-90, 90)");
    if (!(p.lon >= -180.0 && p.lon < 180.0))
        throw RangeError("longitude " + std::to_string(p.lon) + " outside [-180, 180)");
}

inline void check_box(const BoxAddress& b) {
    if (b.Y < 0 || b.Y >= kCellRows || b.X < 0 || b.X >= kCellCols)
        throw RangeError("cell (" + std::to_string(b.X) + "," + std::to_string(b.Y) +
                         ") outside the 8640x4320 grid");
    if (b.y < 0 || b.y >= kBoxRows)
        throw RangeError("box row y=" + std::to_string(b.y) + " outside [0, 1546)");
    const int w = band_width(b.Y);
    if (b.x < 0 || b.x >= w)
        throw RangeError("box column x=" + std::to_string(b.x) + " outside [0, " +
                         std::to_string(w) + ") for row Y=" + std::to_string(b.Y));
}
} // namespace detail

/// Locate the box containing a point. Boundary points belong to the
/// higher-index cell/box (plain floor semantics).
inline BoxAddress latlon_to_box(const GeoPoint& p) {
    detail::check_point(p);
    const double zy = (p.lat + 90.0) * 24.0;
    const double zx = (p.lon + 180.0) * 24.0;
    BoxAddress b;
    b.Y = static_cast<int>(std::floor(zy));
    b.X = static_cast<int>(std::floor(zx));
    const int w = band_width(b.Y);
    b.y = static_cast<int>(std::floor(detail::frac(zy) * kBoxRows));
    b.x = static_cast<int>(std::floor(detail::frac(zx) * w));
    // frac() < 1 keeps the products below the row/column counts, but guard
    // against the last-ulp rounding case anyway.
    if (b.y >= kBoxRows) b.y = kBoxRows - 1;
    if (b.x >= w) b.x = w - 1;
    return b;
}

/// Center of a box (the +0.5 terms pick the midpoint of each subdivision).
inline GeoPoint box_to_latlon(const BoxAddress& b) {
    detail::check_box(b);
    GeoPoint p;
    p.lat = (b.Y + (b.y + 0.5) / kBoxRows) / 24.0 - 90.0;
    p.lon = (b.X + (b.x + 0.5) / static_cast<double>(band_width(b.Y))) / 24.0 - 180.0;
    return p;
}

/// Great-circle distance between two points, spherical earth.
inline double distance_m(const GeoPoint& a, const GeoPoint& b) {
    const double d2r = std::numbers::pi / 180.0;
    const double la1 = a.lat * d2r, la2 = b.lat * d2r;
    const double dlat = (b.lat - a.lat) * d2r, dlon = (b.lon - a.lon) * d2r;
    const double s1 = std::sin(dlat / 2), s2 = std::sin(dlon / 2);
    const double h = s1 * s1 + std::cos(la1) * std::cos(la2) * s2 * s2;
    return 2.0 * kEarthRadiusM * std::asin(std::min(1.0, std::sqrt(h)));
}

/// Great-circle distance between two box centers.
inline double box_distance_m(const BoxAddress& b1, const BoxAddress& b2) {
    return distance_m(box_to_latlon(b1), box_to_latlon(b2));
}

} // namespace wordgrid
