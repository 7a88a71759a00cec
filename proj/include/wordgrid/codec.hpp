//
// wordgrid/codec.hpp — the full box ↔ word-triple index pipeline.
//
// Copyright 2026 the wordgrid authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Encoding runs box → n → m → (i,j,k) → words and every stage is exactly
// invertible:
//
//   n = q + 1546·x + y            within the cell at (X, Y), offset q
//   m = (c + a·n) mod modulus     per-band linear congruence (a invertible)
//   m → (i,j,k)                   cube-shell factorization (cube_shell.hpp)
//   (i,j,k) → words               positional lookup in the band's vocabulary
//
// A band's vocabulary is the contiguous slice [b·K, (b+1)·K) of the
// frequency-ranked word list, so common words land in low bands and a word's
// rank identifies its band as rank div K. The modulus may exceed K³ (the
// shipped constants use 2×10¹⁰ > 2500³); an m whose factorization needs an
// index ≥ K has no words and is reported as a codec error.
//

#pragma once
#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wordgrid/congruence.hpp"
#include "wordgrid/cube_shell.hpp"
#include "wordgrid/error.hpp"
#include "wordgrid/grid.hpp"
#include "wordgrid/lexicon.hpp"

namespace wordgrid {

/// One simulated cell: its grid coordinates, its base offset into the band's
/// linear address space, and the band that owns it.
struct CellSpec {
    std::int32_t X = 0;
    std::int32_t Y = 0;
    std::int64_t q = 0;
    int band = 0;

    bool operator==(const CellSpec&) const = default;
};

/// The set of cells under simulation and their (X,Y) → (q, band) mapping.
/// Each cell covers the half-open n-interval [q, q + 1546·W(Y)).
class CellLayout {
public:
    /// Validates coordinates, uniqueness of (X,Y), and — unless
    /// `require_disjoint` is cleared for diagnostic setups — that no two
    /// cells of one band overlap in n-space (overlap would make two boxes
    /// share an address).
    static CellLayout from_cells(std::vector<CellSpec> cells, bool require_disjoint = true) {
        CellLayout layout;
        for (const auto& cell : cells) {
            if (cell.Y < 0 || cell.Y >= kCellRows || cell.X < 0 || cell.X >= kCellCols)
                throw ConfigError("cell (" + std::to_string(cell.X) + "," +
                                  std::to_string(cell.Y) + ") outside the grid");
            if (cell.q < 0) throw ConfigError("cell offset q must be non-negative");
            if (cell.band < 0) throw ConfigError("cell band must be non-negative");
            for (const auto& other : layout.cells_)
                if (other.X == cell.X && other.Y == cell.Y)
                    throw ConfigError("duplicate cell (" + std::to_string(cell.X) + "," +
                                      std::to_string(cell.Y) + ")");
            layout.cells_.push_back(cell);
        }
        if (require_disjoint) layout.check_disjoint();
        return layout;
    }

    const std::vector<CellSpec>& cells() const { return cells_; }

    bool has(std::int32_t X, std::int32_t Y) const { return find(X, Y) != nullptr; }

    const CellSpec& at(std::int32_t X, std::int32_t Y) const {
        if (const auto* c = find(X, Y)) return *c;
        throw ConfigError("cell (" + std::to_string(X) + "," + std::to_string(Y) +
                          ") is not in the layout");
    }

    /// Addresses one cell spans: 1546·W(Y).
    static std::int64_t span(const CellSpec& cell) {
        return static_cast<std::int64_t>(kBoxRows) * band_width(cell.Y);
    }

    /// The cell of `band` whose n-interval contains n, if any.
    const CellSpec* cell_for_n(std::int64_t n, int band) const {
        for (const auto& cell : cells_)
            if (cell.band == band && n >= cell.q && n < cell.q + span(cell)) return &cell;
        return nullptr;
    }

private:
    const CellSpec* find(std::int32_t X, std::int32_t Y) const {
        for (const auto& cell : cells_)
            if (cell.X == X && cell.Y == Y) return &cell;
        return nullptr;
    }

    void check_disjoint() const {
        for (std::size_t i = 0; i < cells_.size(); ++i)
            for (std::size_t j = i + 1; j < cells_.size(); ++j) {
                const auto& a = cells_[i];
                const auto& b = cells_[j];
                if (a.band != b.band) continue;
                if (a.q < b.q + span(b) && b.q < a.q + span(a))
                    throw ConfigError("cells (" + std::to_string(a.X) + "," +
                                      std::to_string(a.Y) + ") and (" + std::to_string(b.X) +
                                      "," + std::to_string(b.Y) +
                                      ") overlap in band address space");
            }
    }

    std::vector<CellSpec> cells_;
};

/// n = q + 1546·x + y for the box's cell.
inline std::int64_t box_to_n(const BoxAddress& b, const CellLayout& layout) {
    const auto& cell = layout.at(b.X, b.Y);
    return cell.q + static_cast<std::int64_t>(kBoxRows) * b.x + b.y;
}

/// Inverse of box_to_n within one band: locate the covering cell and split
/// the offset into (x, y). Addresses outside every configured cell cannot be
/// resolved.
inline BoxAddress n_to_box(std::int64_t n, int band, const CellLayout& layout) {
    if (n < 0) throw RangeError("linear index n must be non-negative");
    const CellSpec* cell = layout.cell_for_n(n, band);
    if (!cell)
        throw LookupError("index " + std::to_string(n) + " lies outside the configured cells");
    const std::int64_t off = n - cell->q;
    return BoxAddress{cell->X, cell->Y, static_cast<std::int32_t>(off / kBoxRows),
                      static_cast<std::int32_t>(off % kBoxRows)};
}

/// Every stage of one encode, for verbose output and diagnostics.
struct EncodeTrace {
    BoxAddress box;
    int band = 0;
    std::int64_t n = 0;
    std::int64_t m = 0;
    IndexTriple indices;
    WordTriple words;
};

/// Every stage of one decode.
struct DecodeTrace {
    IndexTriple indices;
    int band = 0;
    std::int64_t m = 0;
    std::int64_t n = 0;
    BoxAddress box;
    GeoPoint point;
};

/// Binds a word list, cell layout, and per-band congruence constants into
/// the end-to-end codec. The word list must outlive the codec.
class Codec {
public:
    Codec(const WordList& wl, CellLayout layout,
          std::vector<std::optional<BandParams>> bands, std::int64_t band_size,
          std::int64_t modulus)
        : wl_(&wl),
          layout_(std::move(layout)),
          bands_(std::move(bands)),
          band_size_(band_size),
          modulus_(modulus) {
        if (band_size_ <= 0) throw ConfigError("band size must be positive");
        if (modulus_ <= 0) throw ConfigError("modulus must be positive");
        for (const auto& cell : layout_.cells())
            band_params(cell.band);  // every referenced band must have constants
    }

    const WordList& words() const { return *wl_; }
    const CellLayout& layout() const { return layout_; }
    std::int64_t band_size() const { return band_size_; }
    std::int64_t modulus() const { return modulus_; }
    int band_count() const { return static_cast<int>(bands_.size()); }

    const BandParams& band_params(int band) const {
        if (band < 0 || band >= static_cast<int>(bands_.size()) || !bands_[band])
            throw ConfigError("band " + std::to_string(band) + " has no constants");
        return *bands_[band];
    }

    /// Word at in-band position `index` of `band`. Demands the band's
    /// vocabulary slice be fully backed by the word list.
    const std::string& band_word(int band, std::int64_t index) const {
        if (index < 0 || index >= band_size_)
            throw CodecError("index " + std::to_string(index) + " exceeds the band size " +
                             std::to_string(band_size_) +
                             " (m beyond the addressable cube)");
        if (band < 0 ||
            static_cast<std::size_t>((band + 1) * band_size_) > wl_->size())
            throw ConfigError("band " + std::to_string(band) +
                              " vocabulary is not fully backed by the word list");
        const std::int64_t rank = static_cast<std::int64_t>(band) * band_size_ + index;
        return wl_->word(static_cast<std::uint32_t>(rank));
    }

    WordTriple indices_to_words(const IndexTriple& t, int band) const {
        return {band_word(band, t.i), band_word(band, t.j), band_word(band, t.k)};
    }

    /// Positional inverse; errors name the offending word.
    IndexTriple words_to_indices(const WordTriple& s, int band) const {
        const auto index_of = [&](const std::string& w) {
            const auto r = wl_->rank(w);
            if (!r) throw LookupError("unknown word '" + w + "'");
            const std::int64_t idx =
                static_cast<std::int64_t>(*r) - static_cast<std::int64_t>(band) * band_size_;
            if (idx < 0 || idx >= band_size_)
                throw LookupError("word '" + w + "' is not in band " + std::to_string(band));
            return idx;
        };
        return IndexTriple{index_of(s.u), index_of(s.v), index_of(s.w)};
    }

    /// The band a word triple belongs to: all three ranks must fall in the
    /// same band slice.
    int band_of_words(const WordTriple& s) const {
        const auto band_of = [&](const std::string& w) {
            const auto r = wl_->rank(w);
            if (!r) throw LookupError("unknown word '" + w + "'");
            const auto band = static_cast<int>(*r / band_size_);
            if (band >= static_cast<int>(bands_.size()))
                throw LookupError("word '" + w + "' is beyond the configured bands");
            return band;
        };
        const int bu = band_of(s.u), bv = band_of(s.v), bw = band_of(s.w);
        if (bu != bv || bu != bw)
            throw LookupError("words '" + s.u + "', '" + s.v + "', '" + s.w +
                              "' mix different bands");
        return bu;
    }

    /// point → box → n → m → (i,j,k) → words, with all intermediates.
    EncodeTrace reverse_geocode_trace(const GeoPoint& p) const {
        EncodeTrace tr;
        tr.box = latlon_to_box(p);
        const auto& cell = layout_.at(tr.box.X, tr.box.Y);
        tr.band = cell.band;
        tr.n = box_to_n(tr.box, layout_);
        tr.m = congruence_forward(tr.n, band_params(tr.band));
        tr.indices = factor_m(tr.m);
        tr.words = indices_to_words(tr.indices, tr.band);
        return tr;
    }

    WordTriple reverse_geocode(const GeoPoint& p) const { return reverse_geocode_trace(p).words; }

    /// words → (i,j,k) → m → n → box → box-center point, with intermediates.
    DecodeTrace geocode_trace(const WordTriple& s) const {
        DecodeTrace tr;
        tr.band = band_of_words(s);
        tr.indices = words_to_indices(s, tr.band);
        tr.m = unfactor(tr.indices);
        if (tr.m >= modulus_)
            throw LookupError("address does not correspond to a representable index");
        tr.n = congruence_inverse(tr.m, band_params(tr.band));
        tr.box = n_to_box(tr.n, tr.band, layout_);
        tr.point = box_to_latlon(tr.box);
        return tr;
    }

    GeoPoint geocode(const WordTriple& s) const { return geocode_trace(s).point; }

private:
    const WordList* wl_;
    CellLayout layout_;
    std::vector<std::optional<BandParams>> bands_;
    std::int64_t band_size_;
    std::int64_t modulus_;
};

} // namespace wordgrid
