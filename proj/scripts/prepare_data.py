#!/usr/bin/env python3
"""Regenerate the files in data/ from their upstream packages.

Sources (fetched with npm; see --node-modules):
  * subtlex-word-frequencies — SUBTLEXus film-subtitle word counts
    (Brysbaert & New), 74,286 word/count records.
  * ipa-dict — IPA transcriptions for en_US and en_UK.

Outputs written to data/:
  * wordfreq_en.tsv   word<TAB>count, one record per line, package order.
  * ipa_en_US.tsv / ipa_en_UK.tsv
                      word<TAB>/pron/[, /pron/...], one word per line.
  * variants_en.tsv   regional spelling pairs "uk<TAB>us", both spellings
                      attested in the corpus; generated by the rules below
                      plus a curated list, minus known false positives.

Usage: scripts/prepare_data.py [--node-modules PATH] [--out data/]
"""

import argparse
import json
import re
import subprocess
from pathlib import Path

VOWELS = set("aeiou")

# Suffix whitelists keep the rewrite rules from firing inside unrelated words
# (e.g. "journal" contains "our" but has no "jornal" variant).
OUR_SUFFIXES = ["", "s", "ed", "ing", "ings", "ite", "ites", "ful", "fully",
                "hood", "able", "ably", "er", "ers", "ism", "ist", "ists",
                "less", "ly", "y", "ytown"]
LL_SUFFIXES = ["ed", "ing", "er", "ers", "or", "ors", "ous", "ery"]
AE_STEMS = ["anaem", "anaesth", "archaeo", "encyclopaed", "faec", "gynaec",
            "haem", "leukaem", "mediaev", "orthopaed", "paediatr", "paedoph",
            "palaeo", "aesthet", "caesar"]
OE_STEMS = ["foet", "oesoph", "oestro", "diarrho", "amoeb", "subpoen",
            "manoeuvr"]
CURATED = [
    ("grey", "gray"), ("greys", "grays"), ("greyish", "grayish"),
    ("greyhound", "grayhound"), ("tyre", "tire"), ("tyres", "tires"),
    ("plough", "plow"), ("ploughs", "plows"), ("ploughed", "plowed"),
    ("ploughing", "plowing"), ("cheque", "check"), ("cheques", "checks"),
    ("kerb", "curb"), ("kerbs", "curbs"), ("pyjama", "pajama"),
    ("pyjamas", "pajamas"), ("whisky", "whiskey"), ("aluminium", "aluminum"),
    ("moustache", "mustache"), ("moustaches", "mustaches"),
    ("mould", "mold"), ("moulds", "molds"), ("moulded", "molded"),
    ("moulding", "molding"), ("mouldy", "moldy"), ("moult", "molt"),
    ("moulting", "molting"), ("smoulder", "smolder"),
    ("smouldering", "smoldering"), ("programme", "program"),
    ("programmes", "programs"), ("defence", "defense"),
    ("defences", "defenses"), ("offence", "offense"),
    ("offences", "offenses"), ("pretence", "pretense"),
    ("licence", "license"), ("licences", "licenses"),
    ("practise", "practice"), ("practised", "practiced"),
    ("practising", "practicing"), ("jewellery", "jewelry"),
    ("sceptical", "skeptical"), ("scepticism", "skepticism"),
    ("sceptic", "skeptic"), ("sceptics", "skeptics"),
    ("draught", "draft"), ("draughts", "drafts"), ("draughty", "drafty"),
    ("enrol", "enroll"), ("enrolment", "enrollment"),
    ("fulfil", "fulfill"), ("fulfilment", "fulfillment"),
    ("instalment", "installment"), ("instalments", "installments"),
    ("skilful", "skillful"), ("wilful", "willful"), ("woollen", "woolen"),
    ("focussed", "focused"), ("focussing", "focusing"),
    ("speciality", "specialty"), ("specialities", "specialties"),
    ("manoeuvre", "maneuver"), ("manoeuvres", "maneuvers"),
    ("doughnut", "donut"), ("doughnuts", "donuts"),
    ("omelette", "omelet"), ("omelettes", "omelets"),
    ("yoghurt", "yogurt"), ("cosy", "cozy"),
    ("artefact", "artifact"), ("artefacts", "artifacts"),
]
# Rule hits that are different words, not spelling variants.
FALSE_POSITIVES = {
    ("hours", "hors"), ("livre", "liver"), ("poured", "pored"),
    ("pouring", "poring"), ("scoured", "scored"), ("scouring", "scoring"),
    ("timbre", "timber"),
}

IPA_DUMP_JS = r"""
const m = require(process.argv[1]);
const map = m.default || m;
const fs = require('fs');
const out = [];
for (const [word, pron] of map) out.push(word + '\t' + pron);
fs.writeFileSync(process.argv[2], out.join('\n') + '\n');
"""


def variant_pairs(words):
    """Generate (uk, us) spelling pairs where both forms are in `words`."""
    pairs = set()

    def add(uk, us):
        if uk in words and us in words and uk != us:
            pairs.add((uk, us))

    for w in words:
        i = w.find("our")
        while i >= 0:
            if i > 0 and w[i + 3:] in OUR_SUFFIXES:
                add(w, w[:i] + "or" + w[i + 3:])
            i = w.find("our", i + 1)
        for suf, rep in [("re", "er"), ("res", "ers")]:
            if w.endswith(suf) and len(w) > len(suf) + 1 \
                    and w[-len(suf) - 1] not in VOWELS:
                add(w, w[:-len(suf)] + rep)
        for suf in ["ise", "ised", "iser", "isers", "ises", "ising",
                    "isation", "isations"]:
            if w.endswith(suf) and len(w) - len(suf) >= 4:
                add(w, w[:len(w) - len(suf)] + suf.replace("is", "iz", 1))
        for suf in ["yse", "ysed", "yses", "ysing"]:
            if w.endswith(suf) and len(w) - len(suf) >= 4:
                add(w, w[:len(w) - len(suf)] + suf.replace("ys", "yz", 1))
        for suf, rep in [("ogue", "og"), ("ogues", "ogs")]:
            if w.endswith(suf) and len(w) - len(suf) >= 3:
                add(w, w[:len(w) - len(suf)] + rep)
        for s in LL_SUFFIXES:
            if w.endswith("ll" + s):
                p = w[:len(w) - len(s) - 2]
                if p and p[-1] in VOWELS and (p + "l") in words:
                    add(w, p + "l" + s)
        for st in AE_STEMS:
            if st in w:
                add(w, w.replace("ae", "e"))
        for st in OE_STEMS:
            if st in w:
                add(w, w.replace("oe", "e"))
    for uk, us in CURATED:
        add(uk, us)
    return pairs - FALSE_POSITIVES


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--node-modules", default="node_modules",
                    help="directory containing the two npm packages")
    ap.add_argument("--out", default=str(Path(__file__).parent.parent / "data"))
    args = ap.parse_args()
    nm = Path(args.node_modules)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    records = json.loads(
        (nm / "subtlex-word-frequencies" / "index.json").read_text())
    with open(out / "wordfreq_en.tsv", "w") as f:
        for e in records:
            f.write(f"{e['word']}\t{e['count']}\n")
    print(f"wordfreq_en.tsv: {len(records)} records")

    for region in ("US", "UK"):
        dst = out / f"ipa_en_{region}.tsv"
        subprocess.run(
            ["node", "-e", IPA_DUMP_JS,
             str((nm / "ipa-dict" / "lib" / f"en_{region}.js").resolve()),
             str(dst)],
            check=True)
        print(f"{dst.name}: {sum(1 for _ in open(dst, encoding='utf-8'))} words")

    alpha = re.compile(r"^[a-z]+$")
    corpus = {e["word"] for e in records
              if alpha.match(e["word"]) and len(e["word"]) >= 4
              and e["count"] >= 3}
    pairs = variant_pairs(corpus)
    with open(out / "variants_en.tsv", "w") as f:
        for uk, us in sorted(pairs):
            f.write(f"{uk}\t{us}\n")
    print(f"variants_en.tsv: {len(pairs)} pairs")


if __name__ == "__main__":
    main()
