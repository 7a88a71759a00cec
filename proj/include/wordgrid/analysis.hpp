//
// wordgrid/analysis.hpp — the three quantitative studies over the codec.
//
// Copyright 2026 the wordgrid authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Three questions about a word-triple geocode, answered empirically:
//
//  * globally — how often does a random address have at least one confusable
//    neighbor, and how are per-word/per-triple confusion counts distributed?
//  * locally — enumerate every address of a few simulated cells, find all
//    pairs of real addresses confusable with each other, and measure how far
//    apart they sit (the linear congruence turns small Δm into ~10 km hops);
//  * birthday bound — for c expected confusions per address, how likely is
//    at least one confusable pair among the a(r) addresses within radius r?
//
// All sampling is seeded and uses plain modulo draws from mt19937_64, so
// byte-identical outputs are reproducible across runs and platforms.
//

#pragma once
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "wordgrid/codec.hpp"
#include "wordgrid/confusion.hpp"
#include "wordgrid/error.hpp"
#include "wordgrid/grid.hpp"

namespace wordgrid {

// ---------------------------------------------------------------------------
// Global statistics
// ---------------------------------------------------------------------------

struct GlobalStats {
    std::vector<double> word_hist;  // p(c): fraction of words with exactly c confusions
    double lambda1 = 0.0;           // empirical mean of c over the word list
    std::map<std::int64_t, double> product_hist;  // distribution of per-triple c in product mode
    std::map<std::int64_t, double> single_hist;   // ... in single-slot mode
    double p3_zero = 0.0;            // fraction of sampled triples with no confusion at all
    double p3_product_gt3 = 0.0;     // fraction with more than 3 product-mode confusions
    double p3_single_gt3 = 0.0;      // fraction with more than 3 single-slot confusions
    std::int64_t sample_count = 0;
};

/// Probability that an n-word address has at least one confusion if per-word
/// counts were Poisson(lambda1): 1 - exp(-n*lambda1). The global run reports
/// this next to the empirical value; the two differ noticeably, which is
/// part of the story the numbers tell.
inline double poisson_prediction(double lambda1, int n) {
    if (lambda1 < 0.0) throw RangeError("rate must be non-negative");
    if (n < 1) throw RangeError("word count must be at least 1");
    return 1.0 - std::exp(-static_cast<double>(n) * lambda1);
}

/// Draw `samples` uniform word triples (with replacement) and size their
/// confusion sets through the exact size laws — no set materialization.
/// `cutoff` restricts the countable confusions to the rank prefix
/// [0, cutoff), which is identical to rebuilding the index with the stricter
/// frequency threshold that produces that prefix.
inline GlobalStats global_confusion_stats(const ConfusionIndex& idx, std::int64_t samples,
                                          std::uint64_t seed,
                                          std::optional<std::uint32_t> cutoff = {}) {
    if (samples < 10000)
        throw RangeError("global statistics need at least 10,000 samples");
    const auto& wl = idx.words();
    const std::uint32_t cut =
        cutoff ? *cutoff : static_cast<std::uint32_t>(wl.size());

    GlobalStats out;
    out.sample_count = samples;

    std::vector<std::size_t> per_word(wl.size());
    std::size_t max_c = 0, total = 0;
    for (std::uint32_t r = 0; r < wl.size(); ++r) {
        per_word[r] = idx.c_within(r, cut);
        max_c = std::max(max_c, per_word[r]);
        total += per_word[r];
    }
    std::vector<std::int64_t> word_counts(max_c + 1, 0);
    for (const auto c : per_word) ++word_counts[c];
    out.word_hist.resize(max_c + 1);
    for (std::size_t c = 0; c <= max_c; ++c)
        out.word_hist[c] =
            static_cast<double>(word_counts[c]) / static_cast<double>(wl.size());
    out.lambda1 = static_cast<double>(total) / static_cast<double>(wl.size());

    std::map<std::int64_t, std::int64_t> product_counts, single_counts;
    std::int64_t zero = 0, product_gt3 = 0, single_gt3 = 0;
    std::mt19937_64 rng(seed);
    const auto draw = [&] {
        return static_cast<std::uint32_t>(rng() % wl.size());
    };
    for (std::int64_t s = 0; s < samples; ++s) {
        const auto cu = static_cast<std::int64_t>(per_word[draw()]);
        const auto cv = static_cast<std::int64_t>(per_word[draw()]);
        const auto cw = static_cast<std::int64_t>(per_word[draw()]);
        const std::int64_t c_product = (cu + 1) * (cv + 1) * (cw + 1) - 1;
        const std::int64_t c_single = cu + cv + cw;
        ++product_counts[c_product];
        ++single_counts[c_single];
        if (c_product == 0) ++zero;
        if (c_product > 3) ++product_gt3;
        if (c_single > 3) ++single_gt3;
    }
    const auto norm = [&](const std::map<std::int64_t, std::int64_t>& counts) {
        std::map<std::int64_t, double> p;
        for (const auto& [k, v] : counts)
            p[k] = static_cast<double>(v) / static_cast<double>(samples);
        return p;
    };
    out.product_hist = norm(product_counts);
    out.single_hist = norm(single_counts);
    out.p3_zero = static_cast<double>(zero) / static_cast<double>(samples);
    out.p3_product_gt3 = static_cast<double>(product_gt3) / static_cast<double>(samples);
    out.p3_single_gt3 = static_cast<double>(single_gt3) / static_cast<double>(samples);
    return out;
}

// ---------------------------------------------------------------------------
// Local simulation: exhaustive address index + confusable-pair detection
// ---------------------------------------------------------------------------

namespace detail {

// Fixed-capacity open-addressing map from m to n, sized once at build.
// Key -1 marks an empty slot (m is always non-negative).
class MtoN {
public:
    void init(std::size_t expected) {
        std::size_t cap = 16;
        while (cap < expected * 2) cap <<= 1;
        keys_.assign(cap, -1);
        vals_.assign(cap, 0);
        mask_ = cap - 1;
    }

    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    /// Returns false when the key already exists; *existing then holds the
    /// previously stored value.
    bool insert(std::int64_t m, std::int64_t n, std::int64_t* existing) {
        std::size_t slot = mix(static_cast<std::uint64_t>(m)) & mask_;
        while (keys_[slot] != -1) {
            if (keys_[slot] == m) {
                *existing = vals_[slot];
                return false;
            }
            slot = (slot + 1) & mask_;
        }
        keys_[slot] = m;
        vals_[slot] = n;
        ++count_;
        return true;
    }

    const std::int64_t* find(std::int64_t m) const {
        std::size_t slot = mix(static_cast<std::uint64_t>(m)) & mask_;
        while (keys_[slot] != -1) {
            if (keys_[slot] == m) return &vals_[slot];
            slot = (slot + 1) & mask_;
        }
        return nullptr;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t slot = 0; slot < keys_.size(); ++slot)
            if (keys_[slot] != -1) f(keys_[slot], vals_[slot]);
    }

    std::size_t size() const { return count_; }

private:
    std::vector<std::int64_t> keys_;
    std::vector<std::int64_t> vals_;
    std::size_t mask_ = 0;
    std::size_t count_ = 0;
};

} // namespace detail

/// Exhaustive m → n index over every box of the simulated cells, one map per
/// band. Boxes whose m needs an index ≥ K (unrepresentable as words) are
/// tallied, not stored. Duplicate m values — possible only in degenerate
/// overlapping layouts — keep the first n and are reported as diagnostics.
class AddressIndex {
public:
    struct Duplicate {
        int band;
        std::int64_t m;
        std::int64_t n_first;
        std::int64_t n_second;
    };

    /// Walk every cell of the codec's layout in order, n ascending.
    static AddressIndex build(const Codec& codec) {
        AddressIndex idx;
        const std::int64_t cube =
            codec.band_size() * codec.band_size() * codec.band_size();
        for (const auto& cell : codec.layout().cells())
            if (std::find(idx.bands_.begin(), idx.bands_.end(), cell.band) ==
                idx.bands_.end())
                idx.bands_.push_back(cell.band);
        std::sort(idx.bands_.begin(), idx.bands_.end());
        idx.maps_.resize(idx.bands_.size());

        for (std::size_t bi = 0; bi < idx.bands_.size(); ++bi) {
            const int band = idx.bands_[bi];
            std::int64_t expected = 0;
            for (const auto& cell : codec.layout().cells())
                if (cell.band == band) expected += CellLayout::span(cell);
            idx.maps_[bi].init(static_cast<std::size_t>(expected));

            const auto params = codec.band_params(band);
            for (const auto& cell : codec.layout().cells()) {
                if (cell.band != band) continue;
                const std::int64_t span = CellLayout::span(cell);
                idx.total_addresses_ += span;
                for (std::int64_t off = 0; off < span; ++off) {
                    const std::int64_t n = cell.q + off;
                    const std::int64_t m = congruence_forward(n, params);
                    if (m >= cube) {
                        ++idx.excluded_;
                        continue;
                    }
                    std::int64_t existing = 0;
                    if (!idx.maps_[bi].insert(m, n, &existing)) {
                        ++idx.duplicates_;
                        if (idx.duplicate_samples_.size() < 100)
                            idx.duplicate_samples_.push_back({band, m, existing, n});
                    }
                }
            }
        }
        return idx;
    }

    std::optional<std::int64_t> lookup(int band, std::int64_t m) const {
        const auto bi = band_slot(band);
        if (!bi) return std::nullopt;
        const auto* n = maps_[*bi].find(m);
        if (!n) return std::nullopt;
        return *n;
    }

    /// f(band, m, n) for every stored address. Slot order within a band is
    /// an implementation detail; callers needing order must sort.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t bi = 0; bi < bands_.size(); ++bi)
            maps_[bi].for_each(
                [&](std::int64_t m, std::int64_t n) { f(bands_[bi], m, n); });
    }

    std::span<const int> bands() const { return bands_; }
    std::int64_t total_addresses() const { return total_addresses_; }
    std::int64_t size() const {
        std::int64_t s = 0;
        for (const auto& map : maps_) s += static_cast<std::int64_t>(map.size());
        return s;
    }
    std::int64_t excluded_count() const { return excluded_; }
    std::int64_t duplicate_count() const { return duplicates_; }
    std::span<const Duplicate> duplicate_samples() const { return duplicate_samples_; }

private:
    std::optional<std::size_t> band_slot(int band) const {
        const auto it = std::lower_bound(bands_.begin(), bands_.end(), band);
        if (it == bands_.end() || *it != band) return std::nullopt;
        return static_cast<std::size_t>(it - bands_.begin());
    }

    std::vector<int> bands_;
    std::vector<detail::MtoN> maps_;
    std::int64_t total_addresses_ = 0;
    std::int64_t excluded_ = 0;
    std::int64_t duplicates_ = 0;
    std::vector<Duplicate> duplicate_samples_;
};

/// Convenience name for the exhaustive enumeration.
inline AddressIndex simulate_cells(const Codec& codec) { return AddressIndex::build(codec); }

enum class PairDirection {
    kForward,   // the lower-n address can be misread as the higher-n one
    kBackward,  // only the higher-n address can be misread as the lower
    kBoth,
};

inline std::string_view to_string(PairDirection d) {
    switch (d) {
        case PairDirection::kForward: return "a_to_b";
        case PairDirection::kBackward: return "b_to_a";
        default: return "both";
    }
}

/// One unordered confusable pair of real addresses, a attributed to the
/// smaller n. shared_words counts slots holding the same word (never 3 —
/// that would be the same address).
struct PairRecord {
    int band = 0;
    std::int64_t n_a = 0;
    std::int64_t n_b = 0;
    BoxAddress box_a;
    BoxAddress box_b;
    double distance_m = 0.0;
    int shared_words = 0;
    PairDirection direction = PairDirection::kForward;
};

/// For every simulated address, generate its confusion candidates from the
/// per-word index and probe the exhaustive address index. A pair qualifies
/// when the relation holds in at least one direction; it is emitted once,
/// sorted by (band, n_a, n_b). Candidate words outside the address's band
/// cannot name an address and are skipped.
inline std::vector<PairRecord> find_confusable_pairs(const AddressIndex& addr,
                                                     const ConfusionIndex& idx,
                                                     const Codec& codec,
                                                     ConfusionMode mode) {
    const std::int64_t K = codec.band_size();

    // discovery: band, lower n, higher n, bit 0 = found from lower side,
    // bit 1 = found from higher side
    struct Found {
        int band;
        std::int64_t n_a, n_b;
        unsigned dir;
    };
    std::vector<Found> found;

    std::vector<std::int64_t> slot_alts[3];
    addr.for_each([&](int band, std::int64_t m, std::int64_t n) {
        const IndexTriple t = factor_m(m);
        const std::int64_t base = static_cast<std::int64_t>(band) * K;
        const std::int64_t slots[3] = {t.i, t.j, t.k};
        for (int s = 0; s < 3; ++s) {
            auto& alts = slot_alts[s];
            alts.clear();
            if (mode == ConfusionMode::kProduct) alts.push_back(slots[s]);
            const auto row = idx.confusions_of(static_cast<std::uint32_t>(base + slots[s]));
            const auto lo = std::lower_bound(row.begin(), row.end(), base);
            const auto hi = std::lower_bound(row.begin(), row.end(), base + K);
            for (auto it = lo; it != hi; ++it)
                alts.push_back(static_cast<std::int64_t>(*it) - base);
            if (mode == ConfusionMode::kProduct)
                std::sort(alts.begin(), alts.end());
        }
        const auto probe = [&](std::int64_t m2) {
            if (m2 == m) return;
            const auto n2 = addr.lookup(band, m2);
            if (!n2) return;
            if (n < *n2)
                found.push_back({band, n, *n2, 1u});
            else
                found.push_back({band, *n2, n, 2u});
        };
        if (mode == ConfusionMode::kProduct) {
            for (const auto i2 : slot_alts[0])
                for (const auto j2 : slot_alts[1])
                    for (const auto k2 : slot_alts[2])
                        probe(unfactor({i2, j2, k2}));
        } else {
            for (const auto i2 : slot_alts[0]) probe(unfactor({i2, t.j, t.k}));
            for (const auto j2 : slot_alts[1]) probe(unfactor({t.i, j2, t.k}));
            for (const auto k2 : slot_alts[2]) probe(unfactor({t.i, t.j, k2}));
        }
    });

    std::sort(found.begin(), found.end(), [](const Found& x, const Found& y) {
        return std::tie(x.band, x.n_a, x.n_b) < std::tie(y.band, y.n_a, y.n_b);
    });

    std::vector<PairRecord> out;
    for (std::size_t i = 0; i < found.size();) {
        const Found& f = found[i];
        std::size_t j = i;
        unsigned dir = 0;
        while (j < found.size() && found[j].band == f.band && found[j].n_a == f.n_a &&
               found[j].n_b == f.n_b) {
            dir |= found[j].dir;
            ++j;
        }
        i = j;

        PairRecord rec;
        rec.band = f.band;
        rec.n_a = f.n_a;
        rec.n_b = f.n_b;
        rec.box_a = n_to_box(rec.n_a, rec.band, codec.layout());
        rec.box_b = n_to_box(rec.n_b, rec.band, codec.layout());
        rec.distance_m = box_distance_m(rec.box_a, rec.box_b);
        const auto params = codec.band_params(rec.band);
        const IndexTriple ta = factor_m(congruence_forward(rec.n_a, params));
        const IndexTriple tb = factor_m(congruence_forward(rec.n_b, params));
        rec.shared_words = (ta.i == tb.i) + (ta.j == tb.j) + (ta.k == tb.k);
        rec.direction = dir == 3u  ? PairDirection::kBoth
                        : dir == 1u ? PairDirection::kForward
                                    : PairDirection::kBackward;
        out.push_back(rec);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Distance histogram
// ---------------------------------------------------------------------------

/// Pair counts per (distance bin, shared-word count). Bin b covers
/// [b*bin_m, (b+1)*bin_m).
struct DistanceHistogram {
    double bin_m = 100.0;
    std::map<std::pair<std::int64_t, int>, std::int64_t> cells;

    std::int64_t total() const {
        std::int64_t t = 0;
        for (const auto& [k, v] : cells) t += v;
        return t;
    }

    /// The most populated bin (summed over shared-word counts); ties pick
    /// the nearest. Empty histogram → no value.
    std::optional<std::int64_t> modal_bin() const {
        std::map<std::int64_t, std::int64_t> by_bin;
        for (const auto& [k, v] : cells) by_bin[k.first] += v;
        std::optional<std::int64_t> best;
        std::int64_t best_count = 0;
        for (const auto& [bin, count] : by_bin)
            if (count > best_count) {
                best = bin;
                best_count = count;
            }
        return best;
    }

    /// Fraction of all pairs with this shared-word count.
    double shared_fraction(int shared) const {
        const auto t = total();
        if (t == 0) return 0.0;
        std::int64_t hits = 0;
        for (const auto& [k, v] : cells)
            if (k.second == shared) hits += v;
        return static_cast<double>(hits) / static_cast<double>(t);
    }

    /// Fraction of pairs within [lo_m, hi_m) that have this shared-word count.
    double shared_fraction_in(double lo_m, double hi_m, int shared) const {
        std::int64_t window = 0, hits = 0;
        for (const auto& [k, v] : cells) {
            const double lo = static_cast<double>(k.first) * bin_m;
            if (lo < lo_m || lo >= hi_m) continue;
            window += v;
            if (k.second == shared) hits += v;
        }
        if (window == 0) return 0.0;
        return static_cast<double>(hits) / static_cast<double>(window);
    }
};

inline DistanceHistogram pair_histograms(std::span<const PairRecord> pairs, double bin_m) {
    if (bin_m <= 0.0) throw RangeError("histogram bin width must be positive");
    DistanceHistogram h;
    h.bin_m = bin_m;
    for (const auto& p : pairs) {
        const auto bin = static_cast<std::int64_t>(std::floor(p.distance_m / bin_m));
        ++h.cells[{bin, p.shared_words}];
    }
    return h;
}

// ---------------------------------------------------------------------------
// Δm structure of the congruence
// ---------------------------------------------------------------------------

struct DeltaRecord {
    std::int64_t dn = 0;
    std::int64_t dm = 0;  // min(a·dn mod modulus, modulus − that): wraparound distance
};

/// All Δn up to max_dn whose Δm wraparound distance is at most `threshold`,
/// sorted by (distance, Δn). These are the Δn at which two far-apart boxes
/// receive nearly identical m — the source of the ~10 km confusable pairs.
inline std::vector<DeltaRecord> delta_m_scan(const BandParams& p, std::int64_t max_dn,
                                             std::int64_t threshold) {
    if (max_dn < 0) throw RangeError("max_dn must be non-negative");
    if (threshold < 0) throw RangeError("threshold must be non-negative");
    const std::int64_t step = p.a % p.modulus;
    std::vector<DeltaRecord> out;
    std::int64_t raw = 0;
    for (std::int64_t dn = 0; dn <= max_dn; ++dn) {
        const std::int64_t dist = std::min(raw, p.modulus - raw);
        if (dist <= threshold) out.push_back({dn, dist});
        raw += step;
        if (raw >= p.modulus) raw -= p.modulus;
    }
    std::sort(out.begin(), out.end(), [](const DeltaRecord& x, const DeltaRecord& y) {
        if (x.dm != y.dm) return x.dm < y.dm;
        return x.dn < y.dn;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Birthday bound
// ---------------------------------------------------------------------------

struct BirthdayParams {
    double c = 3.0;        // mean confusions per address
    double T = 0.0;        // total number of addresses
    double r = 0.0;        // radius of interest, meters
    double d = 3.0;        // box edge, meters
};

enum class BirthdayMethod { kApprox, kExact };

/// Probability that among the a(r) = floor(pi*(r/d)^2) addresses within
/// radius r, at least one pair is mutually confusable, when each address has
/// c confusions falling uniformly among T addresses.
///   approx: 1 − exp(−c·a(r)² / (2T))
///   exact:  1 − ∏_{k=0}^{a(r)−1} (1 − k·c/T), evaluated in log space
inline double birthday_probability(const BirthdayParams& p, BirthdayMethod method) {
    if (p.c <= 0.0 || p.T <= 0.0 || p.r <= 0.0 || p.d <= 0.0)
        throw RangeError("birthday parameters must all be positive");
    const double area = std::floor(std::numbers::pi * (p.r / p.d) * (p.r / p.d));
    if (area <= 1.0) return 0.0;  // fewer than two addresses: no pair possible
    if (method == BirthdayMethod::kApprox)
        return 1.0 - std::exp(-p.c * area * area / (2.0 * p.T));
    if (p.c * (area - 1.0) >= p.T)
        throw RangeError("exact birthday product needs c*(a(r)-1) < T");
    double log_sum = 0.0;
    const auto steps = static_cast<std::int64_t>(area);
    for (std::int64_t k = 1; k < steps; ++k)
        log_sum += std::log1p(-(static_cast<double>(k) * p.c) / p.T);
    return 1.0 - std::exp(log_sum);
}

// ---------------------------------------------------------------------------
// Sensitivity of the global statistics to the common-word threshold
// ---------------------------------------------------------------------------

struct SweepRow {
    std::int64_t v = 0;            // corpus-count threshold
    std::uint32_t common_size = 0; // |D(v)|
    double p3_product_gt3 = 0.0;
};

/// Rerun the product-mode >3 statistic across thresholds. The index is built
/// once at the loosest threshold and narrowed through rank prefixes, which
/// is exactly equivalent to rebuilding per v; the shared seed re-samples the
/// same triples so the monotonicity in |D(v)| is pointwise.
inline std::vector<SweepRow> sensitivity_sweep(const WordList& wl, const PhoneticIndex& ph,
                                               std::span<const std::int64_t> v_values,
                                               std::int64_t samples, std::uint64_t seed) {
    for (const auto v : v_values)
        if (v < 3) throw RangeError("thresholds below 3 are not meaningful");
    const auto idx = ConfusionIndex::build(wl, CommonSet(wl, 3), ph);
    std::vector<SweepRow> rows;
    rows.reserve(v_values.size());
    for (const auto v : v_values) {
        const std::uint32_t cut = wl.cutoff_rank(v);
        const auto stats = global_confusion_stats(idx, samples, seed, cut);
        rows.push_back({v, cut, stats.p3_product_gt3});
    }
    return rows;
}

// ---------------------------------------------------------------------------
// File output (CSV); all numeric formatting fixed for byte determinism
// ---------------------------------------------------------------------------

namespace detail {

inline std::ofstream open_out(const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw IngestError("cannot write " + file.string());
    return out;
}

inline std::string fmt(const char* spec, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, value);
    return buf;
}

} // namespace detail

/// Rows of (c, probability).
inline void write_probability_csv(const std::filesystem::path& file,
                                  std::span<const std::pair<std::int64_t, double>> rows) {
    auto out = detail::open_out(file);
    out << "c,probability\n";
    for (const auto& [c, p] : rows)
        out << c << ',' << detail::fmt("%.9f", p) << '\n';
}

inline std::vector<std::pair<std::int64_t, double>> hist_rows(
    const std::vector<double>& hist) {
    std::vector<std::pair<std::int64_t, double>> rows;
    for (std::size_t c = 0; c < hist.size(); ++c)
        rows.emplace_back(static_cast<std::int64_t>(c), hist[c]);
    return rows;
}

inline std::vector<std::pair<std::int64_t, double>> hist_rows(
    const std::map<std::int64_t, double>& hist) {
    return {hist.begin(), hist.end()};
}

/// Rows of (bin_low_m, bin_high_m, count, shared_words), sorted.
inline void write_histogram_csv(const std::filesystem::path& file,
                                const DistanceHistogram& h) {
    auto out = detail::open_out(file);
    out << "bin_low_m,bin_high_m,count,shared_words\n";
    for (const auto& [key, count] : h.cells) {
        const double lo = static_cast<double>(key.first) * h.bin_m;
        out << detail::fmt("%.1f", lo) << ',' << detail::fmt("%.1f", lo + h.bin_m) << ','
            << count << ',' << key.second << '\n';
    }
}

/// One row per pair, already in canonical order.
inline void write_pairs_csv(const std::filesystem::path& file,
                            std::span<const PairRecord> pairs) {
    auto out = detail::open_out(file);
    out << "band,n_a,n_b,distance_m,shared_words,direction\n";
    for (const auto& p : pairs)
        out << p.band << ',' << p.n_a << ',' << p.n_b << ','
            << detail::fmt("%.3f", p.distance_m) << ',' << p.shared_words << ','
            << to_string(p.direction) << '\n';
}

inline void write_sweep_csv(const std::filesystem::path& file,
                            std::span<const SweepRow> rows) {
    auto out = detail::open_out(file);
    out << "v,common_size,p3_product_gt3\n";
    for (const auto& r : rows)
        out << r.v << ',' << r.common_size << ',' << detail::fmt("%.9f", r.p3_product_gt3)
            << '\n';
}

inline void write_delta_csv(const std::filesystem::path& file,
                            std::span<const DeltaRecord> rows) {
    auto out = detail::open_out(file);
    out << "dn,dm\n";
    for (const auto& r : rows) out << r.dn << ',' << r.dm << '\n';
}

} // namespace wordgrid
