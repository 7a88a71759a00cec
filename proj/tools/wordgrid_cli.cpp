//
// wordgrid — command-line front end.
//
// Copyright 2026 the wordgrid authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Subcommands:
//
//   encode LAT LON           point → word triple
//   decode W1.W2.W3          word triple → point (box center)
//   global                   sampled triple-confusion statistics → CSV + JSON
//   local                    exhaustive confusable-pair scan of the
//                            configured cells → CSV + JSON
//   birthday                 collision probability within a radius → JSON
//   sensitivity              global statistic across common-word thresholds
//   delta-scan               Δn whose congruence step |Δm| is tiny
//
// Every data-bound subcommand takes --config (or the WORDGRID_CONFIG
// environment variable). Exit codes: 0 success, 1 runtime failure (bad
// configuration or data files), 2 usage (bad flags, out-of-range inputs,
// unknown words).
//

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordgrid/analysis.hpp"
#include "wordgrid/config.hpp"

namespace {

using namespace wordgrid;

std::string fmt(const char* spec, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, value);
    return buf;
}

/// "word.word.word" → WordTriple.
WordTriple parse_address(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto dot = text.find('.', start);
        parts.push_back(text.substr(start, dot - start));
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    if (parts.size() != 3 || parts[0].empty() || parts[1].empty() || parts[2].empty())
        throw RangeError("address '" + text + "' must be three words separated by dots");
    return {parts[0], parts[1], parts[2]};
}

std::string box_line(const BoxAddress& b) {
    return "box: X=" + std::to_string(b.X) + " Y=" + std::to_string(b.Y) +
           " x=" + std::to_string(b.x) + " y=" + std::to_string(b.y);
}

std::string indices_line(const IndexTriple& t) {
    return "indices: (" + std::to_string(t.i) + ", " + std::to_string(t.j) + ", " +
           std::to_string(t.k) + ")";
}

void write_json(const std::filesystem::path& file, const nlohmann::json& j) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw IngestError("cannot write " + file.string());
    out << j.dump(2) << '\n';
}

std::filesystem::path prepare_out_dir(const std::optional<std::string>& flag,
                                      const std::filesystem::path& from_config) {
    std::filesystem::path dir = flag ? std::filesystem::path(*flag) : from_config;
    if (dir.empty()) dir = ".";
    std::filesystem::create_directories(dir);
    return dir;
}

// ---------------------------------------------------------------------------

struct EncodeArgs {
    std::string config;
    double lat = 0, lon = 0;
    bool verbose = false;
};

void cmd_encode(const EncodeArgs& a) {
    const auto cfg = load_run_config(a.config);
    const auto wl = load_wordlist(cfg);
    const auto codec = make_codec(cfg, wl);
    const auto tr = codec.reverse_geocode_trace({a.lat, a.lon});
    if (a.verbose) {
        std::cout << box_line(tr.box) << '\n'
                  << "band: " << tr.band << '\n'
                  << "n: " << tr.n << '\n'
                  << "m: " << tr.m << '\n'
                  << indices_line(tr.indices) << '\n';
    }
    std::cout << tr.words.u << '.' << tr.words.v << '.' << tr.words.w << '\n';
}

struct DecodeArgs {
    std::string config;
    std::string address;
    bool verbose = false;
};

void cmd_decode(const DecodeArgs& a) {
    const auto words = parse_address(a.address);
    const auto cfg = load_run_config(a.config);
    const auto wl = load_wordlist(cfg);
    const auto codec = make_codec(cfg, wl);
    const auto tr = codec.geocode_trace(words);
    if (a.verbose) {
        std::cout << indices_line(tr.indices) << '\n'
                  << "band: " << tr.band << '\n'
                  << "m: " << tr.m << '\n'
                  << "n: " << tr.n << '\n'
                  << box_line(tr.box) << '\n';
    }
    std::cout << fmt("%.6f", tr.point.lat) << ' ' << fmt("%.6f", tr.point.lon) << '\n';
}

// ---------------------------------------------------------------------------

struct GlobalArgs {
    std::string config;
    std::int64_t samples = 1000000;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> threshold;
    std::optional<std::string> out;
};

void cmd_global(const GlobalArgs& a) {
    const auto cfg = load_run_config(a.config);
    const auto wl = load_wordlist(cfg);
    const auto ph = load_phonetics(cfg);
    const auto threshold = a.threshold.value_or(cfg.common_threshold);
    const CommonSet common(wl, threshold);
    const auto idx = ConfusionIndex::build(wl, common, ph);
    const auto seed = a.seed.value_or(cfg.seed);
    const auto stats = global_confusion_stats(idx, a.samples, seed);

    const auto dir = prepare_out_dir(a.out, cfg.output_dir);
    write_probability_csv(dir / "word_confusions.csv", hist_rows(stats.word_hist));
    write_probability_csv(dir / "triple_product.csv", hist_rows(stats.product_hist));
    write_probability_csv(dir / "triple_single.csv", hist_rows(stats.single_hist));

    nlohmann::json j;
    j["lexicon_size"] = wl.size();
    j["common_threshold"] = threshold;
    j["common_size"] = common.size();
    j["samples"] = stats.sample_count;
    j["seed"] = seed;
    j["lambda1"] = stats.lambda1;
    j["total_confusions"] = idx.total_confusions();
    j["p3_zero"] = stats.p3_zero;
    j["p3_any"] = 1.0 - stats.p3_zero;
    j["p3_product_gt3"] = stats.p3_product_gt3;
    j["p3_single_gt3"] = stats.p3_single_gt3;
    j["poisson_p3_any"] = poisson_prediction(stats.lambda1, 3);
    write_json(dir / "global_summary.json", j);

    std::cout << "lexicon: " << wl.size() << " words, " << common.size()
              << " common (count >= " << threshold << ")\n"
              << "lambda1: " << fmt("%.4f", stats.lambda1) << '\n'
              << "p3(zero): " << fmt("%.4f", stats.p3_zero) << '\n'
              << "p3(product > 3): " << fmt("%.4f", stats.p3_product_gt3) << '\n'
              << "p3(single > 3): " << fmt("%.4f", stats.p3_single_gt3) << '\n'
              << "poisson p3(any): " << fmt("%.4f", poisson_prediction(stats.lambda1, 3))
              << " vs empirical " << fmt("%.4f", 1.0 - stats.p3_zero) << '\n'
              << "wrote word_confusions.csv triple_product.csv triple_single.csv "
                 "global_summary.json to "
              << dir.string() << '\n';
}

// ---------------------------------------------------------------------------

struct LocalArgs {
    std::string config;
    std::optional<std::string> mode;
    double bin_m = 100.0;
    std::optional<std::string> out;
};

void cmd_local(const LocalArgs& a) {
    const auto cfg = load_run_config(a.config);
    const auto mode = a.mode ? parse_confusion_mode(*a.mode) : cfg.mode;
    const auto wl = load_wordlist(cfg);
    const auto ph = load_phonetics(cfg);
    const CommonSet common(wl, cfg.common_threshold);
    const auto idx = ConfusionIndex::build(wl, common, ph);
    const auto codec = make_codec(cfg, wl);

    const auto addr = simulate_cells(codec);
    const auto pairs = find_confusable_pairs(addr, idx, codec, mode);
    const auto hist = pair_histograms(pairs, a.bin_m);

    const auto dir = prepare_out_dir(a.out, cfg.output_dir);
    write_pairs_csv(dir / "pairs.csv", pairs);
    write_histogram_csv(dir / "distance_histogram.csv", hist);

    nlohmann::json j;
    j["mode"] = std::string(to_string(mode));
    j["bin_m"] = a.bin_m;
    j["cells"] = cfg.cells.size();
    j["total_addresses"] = addr.total_addresses();
    j["stored_addresses"] = addr.size();
    j["excluded_addresses"] = addr.excluded_count();
    j["duplicate_addresses"] = addr.duplicate_count();
    j["pair_count"] = static_cast<std::int64_t>(pairs.size());
    if (const auto modal = hist.modal_bin()) {
        j["modal_bin_low_m"] = static_cast<double>(*modal) * a.bin_m;
        j["modal_bin_high_m"] = static_cast<double>(*modal + 1) * a.bin_m;
    } else {
        j["modal_bin_low_m"] = nullptr;
        j["modal_bin_high_m"] = nullptr;
    }
    j["shared2_fraction"] = hist.shared_fraction(2);
    j["shared2_fraction_9_11km"] = hist.shared_fraction_in(9000.0, 11000.0, 2);
    j["duplicate_samples"] = nlohmann::json::array();
    for (const auto& d : addr.duplicate_samples())
        j["duplicate_samples"].push_back(
            {{"band", d.band}, {"m", d.m}, {"n_first", d.n_first}, {"n_second", d.n_second}});
    write_json(dir / "local_summary.json", j);

    std::cout << "addresses: " << addr.total_addresses() << " (stored " << addr.size()
              << ", wordless " << addr.excluded_count() << ", duplicate "
              << addr.duplicate_count() << ")\n"
              << "mode: " << to_string(mode) << '\n'
              << "confusable pairs: " << pairs.size() << '\n';
    if (const auto modal = hist.modal_bin())
        std::cout << "modal distance bin: [" << fmt("%.1f", *modal * a.bin_m) << ", "
                  << fmt("%.1f", (*modal + 1) * a.bin_m) << ") m\n";
    std::cout << "two-shared-word fraction: " << fmt("%.4f", hist.shared_fraction(2))
              << " overall, " << fmt("%.4f", hist.shared_fraction_in(9000.0, 11000.0, 2))
              << " in 9-11 km\n"
              << "wrote pairs.csv distance_histogram.csv local_summary.json to "
              << dir.string() << '\n';
}

// ---------------------------------------------------------------------------

struct BirthdayArgs {
    double c = 3.0;
    double T = 0.0;
    double r = 0.0;
    double d = 3.0;
    std::string method = "both";
    std::optional<std::string> out;
};

void cmd_birthday(const BirthdayArgs& a) {
    const BirthdayParams p{a.c, a.T, a.r, a.d};
    const double addresses = std::floor(std::numbers::pi * (a.r / a.d) * (a.r / a.d));
    std::optional<double> approx, exact;
    if (a.method == "approx" || a.method == "both")
        approx = birthday_probability(p, BirthdayMethod::kApprox);
    if (a.method == "exact" || a.method == "both")
        exact = birthday_probability(p, BirthdayMethod::kExact);
    if (!approx && !exact)
        throw RangeError("method must be 'approx', 'exact', or 'both'");

    std::cout << "addresses within " << fmt("%.1f", a.r) << " m: " << fmt("%.0f", addresses)
              << '\n';
    if (approx) std::cout << "approx: " << fmt("%.6f", *approx) << '\n';
    if (exact) std::cout << "exact: " << fmt("%.6f", *exact) << '\n';

    const auto dir = prepare_out_dir(a.out, ".");
    nlohmann::json j;
    j["c"] = a.c;
    j["T"] = a.T;
    j["r"] = a.r;
    j["d"] = a.d;
    j["addresses"] = addresses;
    if (approx) j["approx"] = *approx;
    if (exact) j["exact"] = *exact;
    write_json(dir / "birthday_summary.json", j);
}

// ---------------------------------------------------------------------------

struct SensitivityArgs {
    std::string config;
    std::vector<std::int64_t> thresholds{3, 10, 30, 100, 150, 300, 600, 1000, 3000};
    std::int64_t samples = 1000000;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
};

void cmd_sensitivity(const SensitivityArgs& a) {
    const auto cfg = load_run_config(a.config);
    const auto wl = load_wordlist(cfg);
    const auto ph = load_phonetics(cfg);
    const auto rows =
        sensitivity_sweep(wl, ph, a.thresholds, a.samples, a.seed.value_or(cfg.seed));

    const auto dir = prepare_out_dir(a.out, cfg.output_dir);
    write_sweep_csv(dir / "sensitivity.csv", rows);

    for (const auto& r : rows)
        std::cout << "v=" << r.v << " common=" << r.common_size
                  << " p3(product > 3)=" << fmt("%.4f", r.p3_product_gt3) << '\n';
    std::cout << "wrote sensitivity.csv to " << dir.string() << '\n';
}

// ---------------------------------------------------------------------------

struct DeltaArgs {
    std::string config;
    int band = 0;
    std::int64_t max_dn = 10000000;
    std::int64_t threshold = 10;
    std::optional<std::string> out;
};

void cmd_delta_scan(const DeltaArgs& a) {
    const auto cfg = load_run_config(a.config);
    if (a.band < 0 || a.band >= cfg.band_count ||
        !cfg.bands[static_cast<std::size_t>(a.band)])
        throw RangeError("band " + std::to_string(a.band) + " has no configured constants");
    const auto& params = *cfg.bands[static_cast<std::size_t>(a.band)];
    const auto rows = delta_m_scan(params, a.max_dn, a.threshold);

    const auto dir = prepare_out_dir(a.out, cfg.output_dir);
    write_delta_csv(dir / "delta_scan.csv", rows);

    std::cout << rows.size() << " offsets with |dm| <= " << a.threshold << " among dn <= "
              << a.max_dn << '\n';
    for (const auto& r : rows) {
        if (r.dn == 0) continue;
        std::cout << "smallest step: dn=" << r.dn << " dm=" << r.dm << '\n';
        break;  // rows are sorted by |dm|, then dn
    }
    std::cout << "wrote delta_scan.csv to " << dir.string() << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"word-triple geocoder and its confusion analyses"};
    app.require_subcommand(1);

    const auto add_config = [](CLI::App* cmd, std::string& target) {
        cmd->add_option("--config", target, "run configuration (JSON)")
            ->envname("WORDGRID_CONFIG")
            ->required()
            ->check(CLI::ExistingFile);
    };

    EncodeArgs enc;
    auto* enc_cmd = app.add_subcommand("encode", "convert a coordinate to a word triple");
    add_config(enc_cmd, enc.config);
    enc_cmd->add_option("lat", enc.lat, "latitude, degrees")->required();
    enc_cmd->add_option("lon", enc.lon, "longitude, degrees")->required();
    enc_cmd->add_flag("-v,--verbose", enc.verbose, "print box, n, m, and indices");
    enc_cmd->callback([&] { cmd_encode(enc); });

    DecodeArgs dec;
    auto* dec_cmd = app.add_subcommand("decode", "convert a word triple to a coordinate");
    add_config(dec_cmd, dec.config);
    dec_cmd->add_option("address", dec.address, "three words joined by dots")->required();
    dec_cmd->add_flag("-v,--verbose", dec.verbose, "print indices, m, n, and box");
    dec_cmd->callback([&] { cmd_decode(dec); });

    GlobalArgs glob;
    auto* glob_cmd = app.add_subcommand(
        "global", "sample word triples and tabulate confusion-count distributions");
    add_config(glob_cmd, glob.config);
    glob_cmd->add_option("--samples", glob.samples, "number of sampled triples");
    glob_cmd->add_option("--seed", glob.seed, "RNG seed (default: configuration)");
    glob_cmd->add_option("--threshold", glob.threshold,
                         "common-word corpus count (default: configuration)");
    glob_cmd->add_option("--out", glob.out, "output directory");
    glob_cmd->callback([&] { cmd_global(glob); });

    LocalArgs loc;
    auto* loc_cmd = app.add_subcommand(
        "local", "enumerate the configured cells and find confusable address pairs");
    add_config(loc_cmd, loc.config);
    loc_cmd->add_option("--mode", loc.mode,
                        "'single' (one word misread) or 'product' (any combination)");
    loc_cmd->add_option("--bin", loc.bin_m, "distance histogram bin width, meters");
    loc_cmd->add_option("--out", loc.out, "output directory");
    loc_cmd->callback([&] { cmd_local(loc); });

    BirthdayArgs bd;
    auto* bd_cmd = app.add_subcommand(
        "birthday", "probability of a confusable pair among the addresses within a radius");
    bd_cmd->add_option("--c", bd.c, "mean confusions per address");
    bd_cmd->add_option("--T", bd.T, "total addresses confusions can land on")->required();
    bd_cmd->add_option("--r", bd.r, "radius of interest, meters")->required();
    bd_cmd->add_option("--d", bd.d, "box edge, meters");
    bd_cmd->add_option("--method", bd.method, "'approx', 'exact', or 'both'");
    bd_cmd->add_option("--out", bd.out, "output directory");
    bd_cmd->callback([&] { cmd_birthday(bd); });

    SensitivityArgs sens;
    auto* sens_cmd = app.add_subcommand(
        "sensitivity", "rerun the triple statistic across common-word thresholds");
    add_config(sens_cmd, sens.config);
    sens_cmd->add_option("--v", sens.thresholds, "thresholds to evaluate")->delimiter(',');
    sens_cmd->add_option("--samples", sens.samples, "number of sampled triples");
    sens_cmd->add_option("--seed", sens.seed, "RNG seed (default: configuration)");
    sens_cmd->add_option("--out", sens.out, "output directory");
    sens_cmd->callback([&] { cmd_sensitivity(sens); });

    DeltaArgs delta;
    auto* delta_cmd = app.add_subcommand(
        "delta-scan", "index offsets whose congruence step wraps close to zero");
    add_config(delta_cmd, delta.config);
    delta_cmd->add_option("--band", delta.band, "band whose constants to scan");
    delta_cmd->add_option("--max-dn", delta.max_dn, "largest index offset to scan");
    delta_cmd->add_option("--threshold", delta.threshold, "largest |dm| to report");
    delta_cmd->add_option("--out", delta.out, "output directory");
    delta_cmd->callback([&] { cmd_delta_scan(delta); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const RangeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const LookupError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
