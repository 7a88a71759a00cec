//
// wordgrid/config.hpp — JSON run configuration.
//
// Copyright 2026 the wordgrid authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// A run configuration is a single JSON object:
//
//   {
//     "band_size": 2500,            // words per band (K); vocabulary is K^3 triples
//     "band_count": 16,             // number of band slices carved from the list
//     "modulus": 20000000000,       // congruence modulus; omit for band_size^3
//     "common_threshold": 150,      // corpus count making a word "common"
//     "seed": 12345,                // RNG seed for sampled analyses
//     "bands": [ {"band": 0, "a": 3639313, "c": 0}, ... ],
//     "cells": [ {"X": 4316, "Y": 3396, "q": 0, "band": 0}, ... ],
//     "mode": "single",             // pair-scan mode: "single" or "product"
//     "output_dir": "out",          // default for written files, relative to
//                                   // the working directory (not this file)
//     "data": {                     // paths, relative to this file
//       "corpus": "wordfreq_en.tsv",
//       "phonetic": ["ipa_en_US.tsv", "ipa_en_UK.tsv"],
//       "variants": "variants_en.tsv"
//     }
//   }
//
// Band 0 must use offset c = 0, multipliers must be coprime to the modulus,
// and no two cells of a band may overlap in address space.
//

#pragma once
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wordgrid/codec.hpp"
#include "wordgrid/confusion.hpp"
#include "wordgrid/congruence.hpp"
#include "wordgrid/error.hpp"
#include "wordgrid/lexicon.hpp"

namespace wordgrid {

struct RunConfig {
    std::int64_t band_size = 2500;
    int band_count = 16;
    std::int64_t modulus = 0;  // resolved at load; defaults to band_size^3
    std::int64_t common_threshold = 150;
    std::uint64_t seed = 12345;
    std::vector<std::optional<BandParams>> bands;  // indexed by band id
    std::vector<CellSpec> cells;
    ConfusionMode mode = ConfusionMode::kSingleSlot;
    std::filesystem::path output_dir = ".";
    std::filesystem::path corpus;
    std::vector<std::filesystem::path> phonetic;
    std::filesystem::path variants;
};

inline RunConfig load_run_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open configuration file " + file.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("configuration " + file.string() + " is not valid JSON: " + e.what());
    }

    RunConfig cfg;
    try {
        cfg.band_size = j.value("band_size", cfg.band_size);
        cfg.band_count = j.value("band_count", cfg.band_count);
        cfg.common_threshold = j.value("common_threshold", cfg.common_threshold);
        cfg.seed = j.value("seed", cfg.seed);
        if (cfg.band_size <= 0) throw ConfigError("band_size must be positive");
        if (cfg.band_count <= 0) throw ConfigError("band_count must be positive");
        if (cfg.common_threshold < 3)
            throw ConfigError("common_threshold must be at least 3");
        cfg.modulus = j.value("modulus", cfg.band_size * cfg.band_size * cfg.band_size);
        if (cfg.modulus <= 0) throw ConfigError("modulus must be positive");

        cfg.bands.assign(static_cast<std::size_t>(cfg.band_count), std::nullopt);
        for (const auto& jb : j.value("bands", nlohmann::json::array())) {
            const int id = jb.at("band").get<int>();
            if (id < 0 || id >= cfg.band_count)
                throw ConfigError("band id " + std::to_string(id) + " outside [0, " +
                                  std::to_string(cfg.band_count) + ")");
            if (cfg.bands[id])
                throw ConfigError("band " + std::to_string(id) + " configured twice");
            const auto a = jb.at("a").get<std::int64_t>();
            const auto c = jb.value("c", std::int64_t{0});
            if (id == 0 && c != 0) throw ConfigError("band 0 must use offset c = 0");
            cfg.bands[id] = make_band_params(a, c, cfg.modulus);
        }

        for (const auto& jc : j.value("cells", nlohmann::json::array())) {
            CellSpec cell;
            cell.X = jc.at("X").get<std::int32_t>();
            cell.Y = jc.at("Y").get<std::int32_t>();
            cell.q = jc.value("q", std::int64_t{0});
            cell.band = jc.value("band", 0);
            if (cell.band < 0 || cell.band >= cfg.band_count ||
                !cfg.bands[static_cast<std::size_t>(cell.band)])
                throw ConfigError("cell (" + std::to_string(cell.X) + "," +
                                  std::to_string(cell.Y) + ") references band " +
                                  std::to_string(cell.band) + " which has no constants");
            cfg.cells.push_back(cell);
        }
        // delegate geometric validation (ranges, duplicates, overlap)
        CellLayout::from_cells(cfg.cells);

        if (j.contains("mode")) {
            try {
                cfg.mode = parse_confusion_mode(j.at("mode").get<std::string>());
            } catch (const RangeError& e) {
                throw ConfigError("configuration " + file.string() + ": " + e.what());
            }
        }
        cfg.output_dir = j.value("output_dir", std::string("."));

        if (j.contains("data")) {
            const auto& jd = j.at("data");
            const auto base = file.parent_path();
            const auto resolve = [&](const std::string& rel) {
                std::filesystem::path p(rel);
                if (p.is_relative()) p = base / p;
                if (!std::filesystem::exists(p))
                    throw ConfigError("configured data file does not exist: " + p.string());
                return p;
            };
            if (jd.contains("corpus")) cfg.corpus = resolve(jd.at("corpus").get<std::string>());
            if (jd.contains("variants"))
                cfg.variants = resolve(jd.at("variants").get<std::string>());
            for (const auto& ph : jd.value("phonetic", std::vector<std::string>{}))
                cfg.phonetic.push_back(resolve(ph));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("configuration " + file.string() + ": " + e.what());
    }
    return cfg;
}

/// Load and filter the configured corpus.
inline WordList load_wordlist(const RunConfig& cfg) {
    if (cfg.corpus.empty()) throw ConfigError("configuration names no corpus file");
    std::optional<std::filesystem::path> variants;
    if (!cfg.variants.empty()) variants = cfg.variants;
    return WordList::load(cfg.corpus, variants);
}

/// Load the configured pronunciation dictionaries.
inline PhoneticIndex load_phonetics(const RunConfig& cfg) {
    if (cfg.phonetic.empty())
        throw ConfigError("configuration names no phonetic dictionaries");
    return PhoneticIndex::load(cfg.phonetic);
}

/// Assemble the codec from a configuration. The word list must outlive it.
inline Codec make_codec(const RunConfig& cfg, const WordList& wl) {
    return Codec(wl, CellLayout::from_cells(cfg.cells), cfg.bands, cfg.band_size,
                 cfg.modulus);
}

} // namespace wordgrid
