// Copyright 2026 the wordgrid authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "test_util.hpp"
#include "wordgrid/confusion.hpp"

using namespace wordgrid;

namespace {

// Independent one-slip check, written as a pairwise test rather than a
// generator so it cannot share a bug with typo_candidates: equal lengths
// allow one substitution or one adjacent transposition; a length-1 gap
// allows one insertion/deletion.
bool one_op(const std::string& a, const std::string& b) {
    if (a == b) return false;
    if (a.size() == b.size()) {
        std::vector<std::size_t> diff;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) diff.push_back(i);
        if (diff.size() == 1) return true;
        if (diff.size() == 2 && diff[1] == diff[0] + 1)
            return a[diff[0]] == b[diff[1]] && a[diff[1]] == b[diff[0]];
        return false;
    }
    const std::string& s = a.size() < b.size() ? a : b;
    const std::string& l = a.size() < b.size() ? b : a;
    if (l.size() != s.size() + 1) return false;
    std::size_t i = 0;
    while (i < s.size() && s[i] == l[i]) ++i;
    return std::equal(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                      l.begin() + static_cast<std::ptrdiff_t>(i) + 1);
}

// Every a-z string whose length is within one of |w| and which one_op
// accepts. Exhaustive, so only usable for short words.
std::vector<std::string> one_op_closure(const std::string& w) {
    std::vector<std::string> hits;
    const std::size_t lo = w.size() - 1, hi = w.size() + 1;
    for (std::size_t len = lo; len <= hi; ++len) {
        std::string s(len, 'a');
        while (true) {
            if (one_op(w, s)) hits.push_back(s);
            std::size_t i = 0;
            while (i < len && s[i] == 'z') s[i++] = 'a';
            if (i == len) break;
            ++s[i];
        }
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

auto triple_key(const WordTriple& t) { return std::tie(t.u, t.v, t.w); }

std::vector<std::string> sorted_words(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("typo candidates cover the four slip types") {
    const auto cands = typo_candidates("cat");
    CHECK(cands.size() == 181u);
    CHECK(std::is_sorted(cands.begin(), cands.end()));
    CHECK(std::adjacent_find(cands.begin(), cands.end()) == cands.end());
    const auto has = [&](std::string_view s) {
        return std::binary_search(cands.begin(), cands.end(), std::string(s));
    };
    CHECK(has("cats"));  // extra letter
    CHECK(has("act"));   // adjacent transposition
    CHECK(has("bat"));   // wrong letter
    CHECK(has("at"));    // missing letter
    CHECK(has("chat"));  // interior insertion
    CHECK_FALSE(has("cat"));
    CHECK_FALSE(has("dog"));
    CHECK_FALSE(has("cost"));  // two ops away

    CHECK(typo_candidates("calm").size() > 0);
    const auto calm = typo_candidates("calm");
    CHECK(std::binary_search(calm.begin(), calm.end(), std::string("clam")));
}

TEST_CASE("typo candidates match the exhaustive one-slip closure") {
    for (const std::string w : {"ab", "cat", "aa", "zzz"}) {
        CHECK(typo_candidates(w) == one_op_closure(w));
    }
}

TEST_CASE("typo candidate validation") {
    CHECK_THROWS_AS(typo_candidates(""), RangeError);
    CHECK_THROWS_AS(typo_candidates("Cat"), RangeError);
    CHECK_THROWS_AS(typo_candidates("can't"), RangeError);
    CHECK_THROWS_AS(typo_candidates("café"), RangeError);
}

namespace {

// Tiny world with one homophone pair per sense: a word list where
// sound-alike pairs exist but no slip-distance pairs do.
WordList sound_world() {
    return WordList::from_records({
        {"home", 1000}, {"arose", 200}, {"arrows", 180}, {"recede", 160}, {"reseed", 70},
    });
}

PhoneticIndex sound_prons() {
    return PhoneticIndex::from_entries({
        {"arose", "/əˈroʊz/"},
        {"arrows", "/əroʊz/"},
        {"recede", "/rɪˈsiːd/"},
        {"reseed", "/rɪsiːd/"},
        {"home", "/hoʊm/"},
    });
}

} // namespace

TEST_CASE("confusion index groups sound-alikes filtered to common words") {
    const auto wl = sound_world();
    const auto ph = sound_prons();

    // threshold 3: every word is common
    const auto idx = ConfusionIndex::build(wl, CommonSet(wl, 3), ph);
    CHECK(idx.size() == 5u);
    CHECK(idx.confusion_set("arose") == std::vector<std::string>{"arose", "arrows"});
    CHECK(idx.confusion_set("arrows") == std::vector<std::string>{"arose", "arrows"});
    CHECK(idx.confusion_set("recede") == std::vector<std::string>{"recede", "reseed"});
    CHECK(idx.confusion_set("home") == std::vector<std::string>{"home"});
    CHECK(idx.c(*wl.rank("arose")) == 1u);
    CHECK(idx.c(*wl.rank("home")) == 0u);
    CHECK(idx.total_confusions() == 4u);
    CHECK(idx.mean_c() == Catch::Approx(4.0 / 5.0));
    CHECK_THROWS_AS(idx.confusion_set("zzzz"), LookupError);

    // threshold 150: "reseed" (count 70) can no longer be produced, but can
    // still produce — membership is directional.
    const auto strict = ConfusionIndex::build(wl, CommonSet(wl, 150), ph);
    CHECK(strict.confusion_set("recede") == std::vector<std::string>{"recede"});
    CHECK(strict.confusion_set("reseed") == std::vector<std::string>{"recede", "reseed"});

    // the loose index answers strict-threshold counts through the rank prefix
    const std::uint32_t cut = wl.cutoff_rank(150);
    for (std::uint32_t r = 0; r < wl.size(); ++r)
        CHECK(idx.c_within(r, cut) == strict.c(r));
}

TEST_CASE("address confusions in product and single-slot modes") {
    const auto wl = sound_world();
    const auto idx = ConfusionIndex::build(wl, CommonSet(wl, 3), sound_prons());
    const WordTriple s{"arose", "recede", "home"};

    const auto pi = address_confusions(s, idx, ConfusionMode::kProduct);
    REQUIRE(pi.size() == 3u);  // 2*2*1 - 1
    const std::set<std::tuple<std::string, std::string, std::string>> pi_set{
        triple_key(pi[0]), triple_key(pi[1]), triple_key(pi[2])};
    CHECK(pi_set.count({"arrows", "recede", "home"}) == 1u);
    CHECK(pi_set.count({"arose", "reseed", "home"}) == 1u);
    CHECK(pi_set.count({"arrows", "reseed", "home"}) == 1u);
    CHECK(pi_set.count({"arose", "recede", "home"}) == 0u);  // self excluded

    const auto sigma = address_confusions(s, idx, ConfusionMode::kSingleSlot);
    REQUIRE(sigma.size() == 2u);  // 1 + 1 + 0
    CHECK(sigma[0] == WordTriple{"arrows", "recede", "home"});
    CHECK(sigma[1] == WordTriple{"arose", "reseed", "home"});
    for (const auto& t : sigma) CHECK(pi_set.count(triple_key(t)) == 1u);

    // confusion-free triple: empty in both modes
    const WordTriple quiet{"home", "home", "home"};
    CHECK(address_confusions(quiet, idx, ConfusionMode::kProduct).empty());
    CHECK(address_confusions(quiet, idx, ConfusionMode::kSingleSlot).empty());

    CHECK_THROWS_WITH(address_confusions({"arose", "zzzz", "home"}, idx,
                                         ConfusionMode::kProduct),
                      Catch::Matchers::ContainsSubstring("zzzz"));
}

TEST_CASE("confusion mode names parse and print") {
    CHECK(parse_confusion_mode("product") == ConfusionMode::kProduct);
    CHECK(parse_confusion_mode("single") == ConfusionMode::kSingleSlot);
    CHECK(to_string(ConfusionMode::kProduct) == "product");
    CHECK(to_string(ConfusionMode::kSingleSlot) == "single");
    CHECK_THROWS_AS(parse_confusion_mode("both"), RangeError);
}

namespace {

// A 200-word lexicon over a 5-letter alphabet, dense enough that slips
// collide, with synthetic pronunciation groups sprinkled in.
struct DenseWorld {
    WordList wl;
    PhoneticIndex ph;
};

DenseWorld dense_world() {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> len_dist(4, 6);
    std::uniform_int_distribution<int> ch_dist(0, 4);
    std::uniform_int_distribution<int> count_dist(3, 2000);
    std::set<std::string> seen;
    std::vector<WordRecord> records;
    std::vector<std::pair<std::string, std::string>> entries;
    while (records.size() < 200) {
        std::string w;
        const int len = len_dist(rng);
        for (int i = 0; i < len; ++i) w.push_back(static_cast<char>('a' + ch_dist(rng)));
        if (!seen.insert(w).second) continue;
        records.push_back({w, count_dist(rng)});
        if (records.size() % 3 == 0)
            entries.emplace_back(w, "/grp" + std::to_string((records.size() / 3) % 20) + "/");
    }
    return {WordList::from_records(std::move(records)),
            PhoneticIndex::from_entries(entries)};
}

} // namespace

TEST_CASE("index construction matches a brute-force all-pairs checker") {
    const auto world = dense_world();
    const auto& wl = world.wl;
    const CommonSet common(wl, 150);
    const auto idx = ConfusionIndex::build(wl, common, world.ph);

    REQUIRE(idx.size() == 200u);
    std::size_t nonzero = 0;
    for (std::uint32_t r = 0; r < wl.size(); ++r) {
        std::vector<std::uint32_t> expect;
        for (std::uint32_t o = 0; o < wl.size(); ++o) {
            if (o == r || !common.contains_rank(o)) continue;
            bool hit = one_op(wl.word(r), wl.word(o));
            if (!hit) {
                const auto* pr = world.ph.prons(wl.word(r));
                const auto* po = world.ph.prons(wl.word(o));
                if (pr && po)
                    for (const auto& p : *pr)
                        if (std::find(po->begin(), po->end(), p) != po->end()) {
                            hit = true;
                            break;
                        }
            }
            if (hit) expect.push_back(o);
        }
        const auto row = idx.confusions_of(r);
        REQUIRE(std::vector<std::uint32_t>(row.begin(), row.end()) == expect);
        if (!expect.empty()) ++nonzero;
    }
    // the fixture is dense on purpose; make sure it actually exercised us
    CHECK(nonzero > 50u);
}

TEST_CASE("confusion set size laws hold for random addresses") {
    const auto world = dense_world();
    const auto idx = ConfusionIndex::build(world.wl, CommonSet(world.wl, 150), world.ph);
    const auto& wl = world.wl;

    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(wl.size() - 1));
    for (int iter = 0; iter < 10000; ++iter) {
        const std::uint32_t a = pick(rng), b = pick(rng), c = pick(rng);
        const WordTriple s{wl.word(a), wl.word(b), wl.word(c)};
        const auto pi = address_confusions(s, idx, ConfusionMode::kProduct);
        const auto sigma = address_confusions(s, idx, ConfusionMode::kSingleSlot);
        REQUIRE(pi.size() ==
                (idx.c(a) + 1) * (idx.c(b) + 1) * (idx.c(c) + 1) - 1);
        REQUIRE(sigma.size() == idx.c(a) + idx.c(b) + idx.c(c));
    }
}

TEST_CASE("single-slot members differ in exactly one word and embed in product mode") {
    const auto world = dense_world();
    const auto idx = ConfusionIndex::build(world.wl, CommonSet(world.wl, 150), world.ph);
    const auto& wl = world.wl;

    std::mt19937 rng(11);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(wl.size() - 1));
    for (int iter = 0; iter < 300; ++iter) {
        const WordTriple s{wl.word(pick(rng)), wl.word(pick(rng)), wl.word(pick(rng))};
        const auto pi = address_confusions(s, idx, ConfusionMode::kProduct);
        std::set<std::tuple<std::string, std::string, std::string>> pi_keys;
        for (const auto& t : pi) {
            REQUIRE(!(t == s));  // self never appears
            pi_keys.insert(triple_key(t));
        }
        REQUIRE(pi_keys.size() == pi.size());  // no duplicates
        for (const auto& t : address_confusions(s, idx, ConfusionMode::kSingleSlot)) {
            const int differing = (t.u != s.u) + (t.v != s.v) + (t.w != s.w);
            REQUIRE(differing == 1);
            REQUIRE(pi_keys.count(triple_key(t)) == 1u);
        }
    }
}

TEST_CASE("confusion index survives a save/load round trip byte-identically") {
    const auto world = dense_world();
    const auto idx = ConfusionIndex::build(world.wl, CommonSet(world.wl, 150), world.ph);

    const testutil::TempDir tmp;
    const auto f1 = tmp.path() / "idx1.tsv";
    const auto f2 = tmp.path() / "idx2.tsv";
    idx.save(f1);
    idx.save(f2);
    CHECK(testutil::slurp(f1) == testutil::slurp(f2));
    CHECK(!testutil::slurp(f1).empty());

    const auto loaded = ConfusionIndex::load_file(f1, world.wl, 150);
    REQUIRE(loaded.size() == idx.size());
    CHECK(loaded.common_threshold() == 150);
    for (std::uint32_t r = 0; r < idx.size(); ++r) {
        const auto a = idx.confusions_of(r);
        const auto b = loaded.confusions_of(r);
        REQUIRE(std::equal(a.begin(), a.end(), b.begin(), b.end()));
    }
}

TEST_CASE("confusion index import rejects unknown words and missing rows") {
    const auto wl = sound_world();
    const testutil::TempDir tmp;

    const auto unknown = tmp.write(
        "bad1.tsv", "home\t\narose\tarrows\narrows\tarose\nrecede\tghost\nreseed\t\n");
    CHECK_THROWS_AS(ConfusionIndex::load_file(unknown, wl), IngestError);

    const auto missing = tmp.write("bad2.tsv", "home\t\narose\tarrows\n");
    CHECK_THROWS_WITH(ConfusionIndex::load_file(missing, wl),
                      Catch::Matchers::ContainsSubstring("missing"));

    const auto dup = tmp.write(
        "bad3.tsv",
        "home\t\nhome\t\narose\tarrows\narrows\tarose\nrecede\treseed\nreseed\trecede\n");
    CHECK_THROWS_WITH(ConfusionIndex::load_file(dup, wl),
                      Catch::Matchers::ContainsSubstring("duplicate"));

    const auto good = tmp.write(
        "good.tsv", "reseed\trecede\nhome\t\narose\tarrows\narrows\tarose\nrecede\treseed\n");
    const auto idx = ConfusionIndex::load_file(good, wl);  // row order is free
    CHECK(idx.confusion_set("arose") == std::vector<std::string>{"arose", "arrows"});
}

TEST_CASE("full-corpus confusion statistics", "[corpus]") {
    const auto dir = testutil::data_dir();
    const auto wl = WordList::load(dir / "wordfreq_en.tsv", dir / "variants_en.tsv");
    const auto ph = PhoneticIndex::load({dir / "ipa_en_US.tsv", dir / "ipa_en_UK.tsv"});
    const auto idx = ConfusionIndex::build(wl, CommonSet(wl, 150), ph);

    CHECK(idx.total_confusions() == 32092u);
    CHECK(idx.mean_c() == Catch::Approx(32092.0 / 43238.0).margin(1e-12));
    // headline mean confusion count, with corpus-snapshot slack
    CHECK(idx.mean_c() == Catch::Approx(0.73).margin(0.15));

    CHECK(sorted_words(idx.confusion_set("clause")) ==
          std::vector<std::string>{"cause", "clause", "claws"});
    CHECK(sorted_words(idx.confusion_set("calm")) ==
          std::vector<std::string>{"calf", "call", "calm", "clam", "palm"});
    CHECK(sorted_words(idx.confusion_set("which")) ==
          std::vector<std::string>{"which", "witch"});
    // non-rhotic transcriptions make these sound-alikes
    CHECK(sorted_words(idx.confusion_set("sauce")) ==
          std::vector<std::string>{"sauce", "source"});
    CHECK(sorted_words(idx.confusion_set("there")) ==
          std::vector<std::string>{"here", "thee", "their", "theme", "there", "these",
                                   "three"});
}
