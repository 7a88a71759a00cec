//
// wordgrid/lexicon.hpp — word corpus ingestion and the phonetic index.
//
// Copyright 2026 the wordgrid authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// WordList filters a raw frequency corpus down to usable words (lowercase,
// length >= 4, count >= 3, one spelling per regional-variant pair) and ranks
// them by descending count. CommonSet is the "frequent word" cutoff D(v).
// PhoneticIndex groups words by normalized pronunciation; two words are
// homophones when they share a normalized pronunciation.
//

#pragma once
#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "wordgrid/error.hpp"

namespace wordgrid {

struct WordRecord {
    std::string word;
    std::int64_t count = 0;

    bool operator==(const WordRecord&) const = default;
};

/// A triple of words naming one grid box.
struct WordTriple {
    std::string u, v, w;

    bool operator==(const WordTriple&) const = default;
};

namespace detail {

struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
        return std::hash<std::string_view>{}(s);
    }
};
using StringMap = std::unordered_map<std::string, std::uint32_t, StringHash, std::equal_to<>>;

inline bool is_plain_lowercase(std::string_view w) {
    if (w.empty()) return false;
    for (const char ch : w)
        if (ch < 'a' || ch > 'z') return false;
    return true;
}

// Minimal UTF-8 decoding; malformed bytes fall back to their Latin-1 value
// so normalization never throws on odd input.
inline char32_t next_codepoint(std::string_view s, std::size_t& pos) {
    const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(s[i]); };
    const unsigned char b0 = byte(pos);
    if (b0 < 0x80) { pos += 1; return b0; }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) { len = 2; cp = b0 & 0x1F; }
    else if ((b0 & 0xF0) == 0xE0) { len = 3; cp = b0 & 0x0F; }
    else if ((b0 & 0xF8) == 0xF0) { len = 4; cp = b0 & 0x07; }
    else { pos += 1; return b0; }
    if (pos + len > s.size()) { pos += 1; return b0; }
    for (int i = 1; i < len; ++i) {
        const unsigned char bi = byte(pos + i);
        if ((bi & 0xC0) != 0x80) { pos += 1; return b0; }
        cp = (cp << 6) | (bi & 0x3F);
    }
    pos += len;
    return cp;
}

inline void append_codepoint(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

} // namespace detail

/// Canonical form of one transcription: the surrounding slashes, whitespace,
/// primary/secondary stress marks (U+02C8 / U+02CC), zero-width joiners and
/// combining diacritics (U+0300..U+036F, the rare loan-word accents) are all
/// dropped. Length marks and the phonemes themselves are kept.
inline std::string normalize_pronunciation(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    std::size_t pos = 0;
    while (pos < raw.size()) {
        const char32_t cp = detail::next_codepoint(raw, pos);
        if (cp == U'/' || cp == 0x02C8 || cp == 0x02CC || cp == 0x200D) continue;
        if (cp >= 0x0300 && cp <= 0x036F) continue;
        detail::append_codepoint(out, cp);
    }
    const auto first = out.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = out.find_last_not_of(" \t\r\n");
    return out.substr(first, last - first + 1);
}

/// One regional-spelling pair per line: "uk<TAB>us" (whitespace separated).
inline std::vector<std::pair<std::string, std::string>>
load_variant_pairs(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IngestError("cannot open variant file " + file.string());
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string a, b;
    while (in >> a >> b) pairs.emplace_back(a, b);
    return pairs;
}

/// The filtered, frequency-ranked word list.
class WordList {
public:
    /// Apply the corpus filters to raw records:
    ///   keep plain lowercase a-z words, length >= 4, count >= 3;
    ///   then drop the less frequent spelling of each variant pair
    ///   (ties drop the lexicographically later one);
    ///   then rank by descending count, ties in word order.
    static WordList from_records(std::vector<WordRecord> records,
                                 std::span<const std::pair<std::string, std::string>>
                                     variant_pairs = {}) {
        std::erase_if(records, [](const WordRecord& r) {
            return !detail::is_plain_lowercase(r.word) || r.word.size() < 4 || r.count < 3;
        });
        if (!variant_pairs.empty()) {
            detail::StringMap pos;
            pos.reserve(records.size());
            for (std::uint32_t idx = 0; idx < records.size(); ++idx)
                pos.emplace(records[idx].word, idx);
            std::vector<bool> dropped(records.size(), false);
            for (const auto& [uk, us] : variant_pairs) {
                const auto ia = pos.find(uk);
                const auto ib = pos.find(us);
                if (ia == pos.end() || ib == pos.end()) continue;
                if (dropped[ia->second] || dropped[ib->second]) continue;
                const WordRecord& ra = records[ia->second];
                const WordRecord& rb = records[ib->second];
                if (ra.count != rb.count)
                    dropped[ra.count < rb.count ? ia->second : ib->second] = true;
                else
                    dropped[ra.word > rb.word ? ia->second : ib->second] = true;
            }
            std::vector<WordRecord> kept;
            kept.reserve(records.size());
            for (std::uint32_t idx = 0; idx < records.size(); ++idx)
                if (!dropped[idx]) kept.push_back(std::move(records[idx]));
            records = std::move(kept);
        }
        if (records.empty())
            throw ConfigError("word list is empty after filtering");
        std::sort(records.begin(), records.end(), [](const WordRecord& a, const WordRecord& b) {
            if (a.count != b.count) return a.count > b.count;
            return a.word < b.word;
        });
        return WordList(std::move(records));
    }

    /// Read "word<TAB>count" records (one per line) and filter them.
    static WordList load(const std::filesystem::path& corpus,
                         const std::optional<std::filesystem::path>& variants = {}) {
        std::ifstream in(corpus);
        if (!in) throw IngestError("cannot open corpus file " + corpus.string());
        std::vector<WordRecord> records;
        std::string line;
        for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            const auto tab = line.find('\t');
            if (tab == std::string::npos || tab == 0)
                throw IngestError("malformed corpus record at " + corpus.string() + ":" +
                                  std::to_string(lineno));
            WordRecord r;
            r.word = line.substr(0, tab);
            try {
                std::size_t used = 0;
                r.count = std::stoll(line.substr(tab + 1), &used);
                if (used == 0) throw std::invalid_argument("empty");
            } catch (const std::exception&) {
                throw IngestError("bad count in corpus record at " + corpus.string() + ":" +
                                  std::to_string(lineno));
            }
            records.push_back(std::move(r));
        }
        std::vector<std::pair<std::string, std::string>> pairs;
        if (variants) pairs = load_variant_pairs(*variants);
        return from_records(std::move(records), pairs);
    }

    std::size_t size() const { return records_.size(); }

    const std::string& word(std::uint32_t rank) const {
        if (rank >= records_.size())
            throw RangeError("word rank " + std::to_string(rank) + " out of range");
        return records_[rank].word;
    }

    std::int64_t count(std::uint32_t rank) const {
        if (rank >= records_.size())
            throw RangeError("word rank " + std::to_string(rank) + " out of range");
        return records_[rank].count;
    }

    std::optional<std::uint32_t> rank(std::string_view w) const {
        const auto it = rank_.find(w);
        if (it == rank_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(std::string_view w) const { return rank_.find(w) != rank_.end(); }

    /// Records in rank order (descending count).
    const std::vector<WordRecord>& records() const { return records_; }

    /// First rank whose count drops below v. Because ranks are ordered by
    /// count, D(v) is exactly the prefix [0, cutoff).
    std::uint32_t cutoff_rank(std::int64_t v) const {
        const auto it = std::partition_point(
            records_.begin(), records_.end(),
            [v](const WordRecord& r) { return r.count >= v; });
        return static_cast<std::uint32_t>(it - records_.begin());
    }

private:
    explicit WordList(std::vector<WordRecord> records) : records_(std::move(records)) {
        rank_.reserve(records_.size());
        for (std::uint32_t r = 0; r < records_.size(); ++r)
            rank_.emplace(records_[r].word, r);
    }

    std::vector<WordRecord> records_;
    detail::StringMap rank_;
};

/// D(v): the words with corpus count >= v. D(3) is the whole list.
class CommonSet {
public:
    CommonSet(const WordList& wl, std::int64_t v) : wl_(&wl), v_(v) {
        if (v < 3) throw RangeError("common-set threshold must be >= 3");
        cutoff_ = wl.cutoff_rank(v);
    }

    bool contains_rank(std::uint32_t rank) const { return rank < cutoff_; }

    bool contains(std::string_view w) const {
        const auto r = wl_->rank(w);
        return r && *r < cutoff_;
    }

    std::size_t size() const { return cutoff_; }
    std::int64_t threshold() const { return v_; }
    std::uint32_t cutoff_rank() const { return cutoff_; }
    const WordList& words() const { return *wl_; }

private:
    const WordList* wl_;
    std::int64_t v_;
    std::uint32_t cutoff_ = 0;
};

/// Pronunciation groupings over one or more transcription dictionaries.
class PhoneticIndex {
public:
    /// Entries are (word, transcription). Multiple entries per word merge.
    static PhoneticIndex from_entries(
        const std::vector<std::pair<std::string, std::string>>& entries) {
        PhoneticIndex idx;
        for (const auto& [word, pron] : entries) idx.add(word, pron);
        idx.finish();
        return idx;
    }

    /// Each line: "word<TAB>/pron/[, /pron/...]". Lines without a tab or with
    /// no usable transcription are skipped and counted (warning_count()).
    static PhoneticIndex load(const std::vector<std::filesystem::path>& files) {
        PhoneticIndex idx;
        for (const auto& file : files) {
            std::ifstream in(file);
            if (!in) throw IngestError("cannot open phonetic dictionary " + file.string());
            std::string line;
            while (std::getline(in, line)) {
                if (!line.empty() && line.back() == '\r') line.pop_back();
                if (line.empty()) continue;
                const auto tab = line.find('\t');
                if (tab == std::string::npos || tab == 0) {
                    ++idx.warnings_;
                    continue;
                }
                std::string word = line.substr(0, tab);
                for (char& ch : word)
                    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
                bool any = false;
                std::size_t start = tab + 1;
                while (start <= line.size()) {
                    auto comma = line.find(',', start);
                    if (comma == std::string::npos) comma = line.size();
                    const std::string_view field(line.data() + start, comma - start);
                    if (!field.empty()) {
                        if (idx.add(word, field)) any = true;
                    }
                    start = comma + 1;
                }
                if (!any) ++idx.warnings_;
            }
        }
        idx.finish();
        return idx;
    }

    /// Distinct normalized pronunciations of w; nullptr when unknown.
    const std::vector<std::string>* prons(std::string_view w) const {
        const auto it = word_prons_.find(w);
        return it == word_prons_.end() ? nullptr : &it->second;
    }

    /// All words recorded with this normalized pronunciation.
    const std::vector<std::string>* words_sharing(std::string_view normalized_pron) const {
        const auto it = pron_words_.find(normalized_pron);
        return it == pron_words_.end() ? nullptr : &it->second;
    }

    /// C_h(w): words of wl (other than w) sharing a pronunciation with w.
    /// Sorted; empty when w is unknown or phonetically unique.
    std::vector<std::string> homophones(std::string_view w, const WordList& wl) const {
        std::vector<std::string> out;
        const auto* ps = prons(w);
        if (!ps) return out;
        for (const auto& p : *ps) {
            const auto* group = words_sharing(p);
            if (!group) continue;
            for (const auto& other : *group)
                if (other != w && wl.contains(other)) out.push_back(other);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    std::size_t size() const { return word_prons_.size(); }
    std::size_t warning_count() const { return warnings_; }

private:
    bool add(const std::string& word, std::string_view raw_pron) {
        std::string norm = normalize_pronunciation(raw_pron);
        if (norm.empty()) return false;
        word_prons_[word].push_back(std::move(norm));
        return true;
    }

    void finish() {
        for (auto& [word, ps] : word_prons_) {
            std::sort(ps.begin(), ps.end());
            ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
            for (const auto& p : ps) pron_words_[p].push_back(word);
        }
        for (auto& [pron, ws] : pron_words_) std::sort(ws.begin(), ws.end());
    }

    template <typename V>
    using Map = std::unordered_map<std::string, V, detail::StringHash, std::equal_to<>>;
    Map<std::vector<std::string>> word_prons_;
    Map<std::vector<std::string>> pron_words_;
    std::size_t warnings_ = 0;
};

} // namespace wordgrid
