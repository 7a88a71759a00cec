//
// A small, fully deterministic world shared by the analysis and CLI tests:
// 200 dense four-to-six-letter words over a five-letter alphabet, every third
// word assigned to one of 20 pronunciation groups, and two polar cells whose
// 1,546-box spans sit back to back in address space.
//
// Copyright 2026 the wordgrid authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
//

#pragma once
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wordgrid/codec.hpp"
#include "wordgrid/confusion.hpp"
#include "wordgrid/lexicon.hpp"

namespace testworld {

struct MiniData {
    std::vector<wordgrid::WordRecord> records;
    std::vector<std::pair<std::string, std::string>> prons;
};

inline MiniData mini_data() {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> len_dist(4, 6);
    std::uniform_int_distribution<int> ch_dist(0, 4);
    std::uniform_int_distribution<int> count_dist(3, 2000);
    std::set<std::string> seen;
    MiniData data;
    while (data.records.size() < 200) {
        std::string w;
        const int len = len_dist(rng);
        for (int i = 0; i < len; ++i) w.push_back(static_cast<char>('a' + ch_dist(rng)));
        if (!seen.insert(w).second) continue;
        data.records.push_back({w, count_dist(rng)});
        if (data.records.size() % 3 == 0)
            data.prons.emplace_back(
                w, "/grp" + std::to_string((data.records.size() / 3) % 20) + "/");
    }
    return data;
}

/// The same world as TSV fixtures, for runs that ingest from disk.
inline void write_mini_fixtures(const std::filesystem::path& dir) {
    const auto data = mini_data();
    std::ofstream corpus(dir / "corpus_200.tsv", std::ios::binary);
    for (const auto& r : data.records) corpus << r.word << '\t' << r.count << '\n';
    std::ofstream prons(dir / "prons_200.tsv", std::ios::binary);
    for (const auto& [w, p] : data.prons) prons << w << '\t' << p << '\n';
}

// The codec and confusion index observe the word list by address, so the
// list (and pronunciations) live behind stable heap pointers.
struct MiniWorld {
    std::unique_ptr<wordgrid::WordList> wl;
    std::unique_ptr<wordgrid::PhoneticIndex> ph;
    wordgrid::ConfusionIndex conf;
    wordgrid::Codec codec;
};

inline MiniWorld mini_world(std::int64_t modulus = 8000000, bool overlapping = false) {
    using namespace wordgrid;
    auto data = mini_data();
    auto wl = std::make_unique<WordList>(WordList::from_records(std::move(data.records)));
    auto ph = std::make_unique<PhoneticIndex>(PhoneticIndex::from_entries(data.prons));
    auto conf = ConfusionIndex::build(*wl, CommonSet(*wl, 150), *ph);
    auto layout = CellLayout::from_cells(
        {{500, 0, 0, 0}, {501, 0, overlapping ? 0 : 1546, 0}},
        /*require_disjoint=*/!overlapping);
    Codec codec(*wl, std::move(layout), {make_band_params(4733, 0, modulus)}, 200, modulus);
    return {std::move(wl), std::move(ph), std::move(conf), std::move(codec)};
}

} // namespace testworld
