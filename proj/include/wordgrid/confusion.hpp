//
// wordgrid/confusion.hpp — per-word and per-address confusion sets.
//
// Copyright 2026 the wordgrid authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// A word w can be misheard or mistyped as w' when w' is one keyboard slip
// away (adjacent transposition, extra letter, missing letter, wrong letter)
// or sounds identical, AND w' is itself a common word — rare words are
// assumed not to be produced by accident. ConfusionIndex materializes that
// relation over a whole word list; address_confusions lifts it to word
// triples in two modes: every slot may vary (product) or exactly one slot
// varies (single).
//
// Membership is directional: w' in C(w) requires w' common, while w itself
// need not be common. Symmetric pair analysis lives in analysis.hpp.
//

#pragma once
#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordgrid/error.hpp"
#include "wordgrid/lexicon.hpp"

namespace wordgrid {

enum class ConfusionMode {
    kProduct,     // every word of the triple may be replaced independently
    kSingleSlot,  // exactly one word of the triple is replaced
};

inline ConfusionMode parse_confusion_mode(std::string_view s) {
    if (s == "product") return ConfusionMode::kProduct;
    if (s == "single") return ConfusionMode::kSingleSlot;
    throw RangeError("unknown confusion mode '" + std::string(s) +
                     "' (expected 'product' or 'single')");
}

inline std::string_view to_string(ConfusionMode m) {
    return m == ConfusionMode::kProduct ? "product" : "single";
}

/// All distinct strings one slip away from w: adjacent transpositions,
/// single deletions, single substitutions, single insertions, all over a-z.
/// Raw strings — not yet filtered against any dictionary; w itself excluded.
inline std::vector<std::string> typo_candidates(std::string_view w) {
    if (w.empty() || !detail::is_plain_lowercase(w))
        throw RangeError("typo candidates require a non-empty lowercase a-z word");
    std::vector<std::string> out;
    out.reserve(27 * w.size() + 28);
    std::string buf(w);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        std::swap(buf[i], buf[i + 1]);
        out.push_back(buf);
        std::swap(buf[i], buf[i + 1]);
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::string del(w.substr(0, i));
        del.append(w.substr(i + 1));
        out.push_back(std::move(del));
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        const char orig = buf[i];
        for (char ch = 'a'; ch <= 'z'; ++ch) {
            if (ch == orig) continue;
            buf[i] = ch;
            out.push_back(buf);
        }
        buf[i] = orig;
    }
    for (std::size_t i = 0; i <= w.size(); ++i) {
        std::string ins(w.substr(0, i));
        ins.push_back('a');
        ins.append(w.substr(i));
        for (char ch = 'a'; ch <= 'z'; ++ch) {
            ins[i] = ch;
            out.push_back(ins);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    // transposing equal letters or re-inserting a deleted letter reproduces w
    const auto self = std::lower_bound(out.begin(), out.end(), w);
    if (self != out.end() && *self == w) out.erase(self);
    return out;
}

/// The directed confusion relation over a word list, stored row-per-rank.
/// Neighbor lists are sorted by rank and exclude the word itself, so the
/// count of confusions is c(w) = confusions_of(rank).size().
class ConfusionIndex {
public:
    /// For every word of wl: neighbors = (typo candidates ∪ same-sounding
    /// words) restricted to `common`. Deterministic.
    static ConfusionIndex build(const WordList& wl, const CommonSet& common,
                                const PhoneticIndex& ph) {
        ConfusionIndex idx(wl, common.threshold());
        idx.offsets_.reserve(wl.size() + 1);
        std::vector<std::uint32_t> members;
        for (std::uint32_t r = 0; r < wl.size(); ++r) {
            const std::string& w = wl.word(r);
            members.clear();
            for (const auto& cand : typo_candidates(w)) {
                const auto cr = wl.rank(cand);
                if (cr && common.contains_rank(*cr)) members.push_back(*cr);
            }
            if (const auto* ps = ph.prons(w)) {
                for (const auto& p : *ps) {
                    const auto* group = ph.words_sharing(p);
                    if (!group) continue;
                    for (const auto& other : *group) {
                        if (other == w) continue;
                        const auto orr = wl.rank(other);
                        if (orr && common.contains_rank(*orr)) members.push_back(*orr);
                    }
                }
            }
            std::sort(members.begin(), members.end());
            members.erase(std::unique(members.begin(), members.end()), members.end());
            idx.flat_.insert(idx.flat_.end(), members.begin(), members.end());
            idx.offsets_.push_back(idx.flat_.size());
        }
        return idx;
    }

    /// Ranks confusable with rank `r`, ascending; excludes r.
    std::span<const std::uint32_t> confusions_of(std::uint32_t r) const {
        if (r >= size()) throw RangeError("rank " + std::to_string(r) + " out of range");
        const std::size_t lo = r == 0 ? 0 : offsets_[r - 1];
        return {flat_.data() + lo, offsets_[r] - lo};
    }

    std::size_t c(std::uint32_t r) const { return confusions_of(r).size(); }

    /// Confusions of r that fall inside the rank prefix [0, cutoff): because
    /// frequent-word sets are rank prefixes, this is the confusion count that
    /// a rebuild with the corresponding stricter threshold would produce.
    std::size_t c_within(std::uint32_t r, std::uint32_t cutoff) const {
        const auto row = confusions_of(r);
        return std::lower_bound(row.begin(), row.end(), cutoff) - row.begin();
    }

    /// C(w) itself, as words: w plus its neighbors, ordered by rank.
    std::vector<std::string> confusion_set(std::string_view w) const {
        const auto r = wl_->rank(w);
        if (!r) throw LookupError("word '" + std::string(w) + "' not in the index");
        const auto row = confusions_of(*r);
        std::vector<std::uint32_t> closed(row.begin(), row.end());
        closed.insert(std::lower_bound(closed.begin(), closed.end(), *r), *r);
        std::vector<std::string> out;
        out.reserve(closed.size());
        for (const auto cr : closed) out.push_back(wl_->word(cr));
        return out;
    }

    std::size_t total_confusions() const { return flat_.size(); }

    double mean_c() const {
        return size() == 0 ? 0.0
                           : static_cast<double>(flat_.size()) / static_cast<double>(size());
    }

    std::size_t size() const { return offsets_.size(); }
    const WordList& words() const { return *wl_; }
    std::int64_t common_threshold() const { return v_; }

    /// One line per word in rank order: "word<TAB>neighbor,neighbor,...".
    /// Words with no confusions write an empty second column.
    void save(const std::filesystem::path& file) const {
        std::ofstream out(file, std::ios::binary);
        if (!out) throw IngestError("cannot write confusion index to " + file.string());
        for (std::uint32_t r = 0; r < size(); ++r) {
            out << wl_->word(r) << '\t';
            const auto row = confusions_of(r);
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out << ',';
                out << wl_->word(row[i]);
            }
            out << '\n';
        }
    }

    /// Inverse of save(). Every word must belong to wl; rows may arrive in
    /// any order but each rank must appear exactly once.
    static ConfusionIndex load_file(const std::filesystem::path& file, const WordList& wl,
                                    std::int64_t threshold = 3) {
        std::ifstream in(file, std::ios::binary);
        if (!in) throw IngestError("cannot open confusion index " + file.string());
        std::vector<std::vector<std::uint32_t>> rows(wl.size());
        std::vector<bool> seen(wl.size(), false);
        std::string line;
        for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            const auto tab = line.find('\t');
            if (tab == std::string::npos)
                throw IngestError("malformed confusion row at " + file.string() + ":" +
                                  std::to_string(lineno));
            const auto require_rank = [&](std::string_view w) {
                const auto r = wl.rank(w);
                if (!r)
                    throw IngestError("confusion row names unknown word '" + std::string(w) +
                                      "' at " + file.string() + ":" + std::to_string(lineno));
                return *r;
            };
            const std::uint32_t r = require_rank(std::string_view(line).substr(0, tab));
            if (seen[r])
                throw IngestError("duplicate confusion row for '" + wl.word(r) + "' in " +
                                  file.string());
            seen[r] = true;
            std::size_t start = tab + 1;
            while (start < line.size()) {
                auto comma = line.find(',', start);
                if (comma == std::string::npos) comma = line.size();
                if (comma > start)
                    rows[r].push_back(
                        require_rank(std::string_view(line).substr(start, comma - start)));
                start = comma + 1;
            }
            std::sort(rows[r].begin(), rows[r].end());
            rows[r].erase(std::unique(rows[r].begin(), rows[r].end()), rows[r].end());
        }
        for (std::uint32_t r = 0; r < wl.size(); ++r)
            if (!seen[r])
                throw IngestError("confusion index " + file.string() + " is missing '" +
                                  wl.word(r) + "'");
        ConfusionIndex idx(wl, threshold);
        idx.offsets_.reserve(wl.size());
        for (const auto& row : rows) {
            idx.flat_.insert(idx.flat_.end(), row.begin(), row.end());
            idx.offsets_.push_back(idx.flat_.size());
        }
        return idx;
    }

private:
    ConfusionIndex(const WordList& wl, std::int64_t v) : wl_(&wl), v_(v) {}

    const WordList* wl_;
    std::int64_t v_;
    std::vector<std::uint32_t> flat_;
    std::vector<std::size_t> offsets_;
};

namespace detail {

/// Neighbor ranks plus the word's own rank, sorted — the closed set C(w).
inline std::vector<std::uint32_t> closed_row(const ConfusionIndex& idx, std::uint32_t r) {
    const auto row = idx.confusions_of(r);
    std::vector<std::uint32_t> closed(row.begin(), row.end());
    closed.insert(std::lower_bound(closed.begin(), closed.end(), r), r);
    return closed;
}

} // namespace detail

/// All word triples a reader might confuse with s, excluding s itself.
/// kProduct: the cross product of the three closed sets minus the identity,
///   so the count is |C(u)|·|C(v)|·|C(w)| − 1.
/// kSingleSlot: replace exactly one word, so the count is c(u)+c(v)+c(w).
/// Deterministic order: product mode walks slots outer-to-inner by rank;
/// single mode walks slot by slot.
inline std::vector<WordTriple> address_confusions(const WordTriple& s,
                                                  const ConfusionIndex& idx,
                                                  ConfusionMode mode) {
    const WordList& wl = idx.words();
    const auto rank_of = [&](const std::string& w) {
        const auto r = wl.rank(w);
        if (!r) throw LookupError("word '" + w + "' not in the index");
        return *r;
    };
    const std::uint32_t ru = rank_of(s.u), rv = rank_of(s.v), rw = rank_of(s.w);
    std::vector<WordTriple> out;
    if (mode == ConfusionMode::kProduct) {
        const auto cu = detail::closed_row(idx, ru);
        const auto cv = detail::closed_row(idx, rv);
        const auto cw = detail::closed_row(idx, rw);
        out.reserve(cu.size() * cv.size() * cw.size() - 1);
        for (const auto a : cu)
            for (const auto b : cv)
                for (const auto c : cw) {
                    if (a == ru && b == rv && c == rw) continue;
                    out.push_back({wl.word(a), wl.word(b), wl.word(c)});
                }
    } else {
        const std::uint32_t self[3] = {ru, rv, rw};
        for (int slot = 0; slot < 3; ++slot) {
            for (const auto alt : idx.confusions_of(self[slot])) {
                WordTriple t = s;
                (slot == 0 ? t.u : slot == 1 ? t.v : t.w) = wl.word(alt);
                out.push_back(std::move(t));
            }
        }
    }
    return out;
}

} // namespace wordgrid
