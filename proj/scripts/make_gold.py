#!/usr/bin/env python3
"""Build the synthetic gold-standard mini-corpus.

Each sentence comes from a template whose analyses are written out by hand
below, so the gold annotation never depends on the tagger. Writes gold.txt
(one sentence per line) and gold.vrt next to it.
"""

import argparse
import random
from pathlib import Path

# (surface, lemma, basic, rich, mutation)
MAE = ("Mae", "bod", "B", "Bpres3u", "-")
ROEDD = ("Roedd", "bod", "B", "Bamherff3u", "-")
DOES = ("Does", "bod", "B", "Bpres3u", "-")
AETH = ("Aeth", "mynd", "B", "Bgorff3u", "-")
R = ("'r", "y", "Ban", "Bandb", "-")
Y = ("y", "y", "Ban", "Bandb", "-")
YR = ("yr", "y", "Ban", "Bandb", "-")
I_PREP = ("i", "i", "Ar", "Arsym", "-")
YN_PRED = ("yn", "yn", "U", "Utra", "-")
N_PRED = ("'n", "yn", "U", "Utra", "-")
YN_ADV = ("yn", "yn", "U", "Uadf", "-")
YN_IN = ("yn", "yn", "Ar", "Arsym", "-")
A = ("a", "a", "Cys", "Cyscyd", "-")
STOP = (".", ".", "Atd", "Atdt", "-")

# Nouns: base, gender, soft form after the article when feminine.
FEM = [("cath", "gath"), ("merch", "ferch"), ("tref", "dref"), ("mam", "fam"),
       ("coeden", "goeden"), ("gardd", "ardd")]
MASC = ["ci", "tad", "llyfr", "dyn", "bachgen", "car", "athro", "afal"]
ANIMATE = {"cath", "merch", "mam", "ci", "tad", "dyn", "bachgen", "athro"}
PLACES = ["Cymru", "Bangor", "Caerdydd", "Aberystwyth"]
# Adjective base and its soft form.
ADJ = [("mawr", "fawr"), ("bach", "fach"), ("da", "dda"), ("coch", "goch"),
       ("glas", "las"), ("prydferth", "brydferth"), ("newydd", "newydd"),
       ("hapus", "hapus")]
PAST = [("Canodd", "canu"), ("Rhedodd", "rhedeg"), ("Darllenodd", "darllen")]
ENGLISH = ["computer", "phone", "email", "video"]


def noun(base, rich="Egu", mut="-", surface=None):
    return (surface or base, base, "E", rich, mut)


def adj(base, soft):
    return (soft, base, "Ans", "Anscadu", "sm" if soft != base else "-")


def article_noun(rng, fem=None, animate=False):
    """Returns the tokens of a singular noun after the article."""
    if fem is None:
        fem = rng.random() < 0.5
    if fem:
        base, soft = rng.choice([n for n in FEM if not animate or n[0] in ANIMATE])
        return [noun(base, "Ebu", "sm", soft)]
    return [noun(rng.choice([n for n in MASC if not animate or n in ANIMATE]))]


def article(tokens):
    """The article form that fits the first noun token."""
    return [YR if tokens[0][0][0] in "aeiouwy" else Y] + tokens


def t_predicative(rng):
    # Mae'r gath yn fawr.
    subject = article_noun(rng)
    a = rng.choice(ADJ)
    return [MAE, R] + subject + [YN_PRED, adj(*a), STOP]


def t_complement(rng):
    # Mae Cymru'n wlad Geltaidd.
    place = rng.choice(PLACES)
    kind = rng.choice([("gwlad", "wlad"), ("tref", "dref")])
    a = rng.choice([("Celtaidd", "Geltaidd"), ("prydferth", "brydferth"), ("mawr", "fawr"),
                    ("bach", "fach")])
    first = rng.choice([MAE, ROEDD])
    return [first, noun(place, "Epb"), N_PRED, noun(kind[0], "Ebu", "sm", kind[1]),
            adj(*a), STOP]


def t_nasal(rng):
    # Mae'r plant yn nhref Bangor. / Mae'r dyn yng Nghaerdydd.
    choice = rng.randrange(3)
    subject = [noun("plentyn", "Egll", surface="plant")] if rng.random() < 0.5 else \
        [noun(rng.choice(sorted(ANIMATE & set(MASC))))]
    if choice == 0:
        tail = [YN_IN, noun("tref", "Ebu", "nm", "nhref"), noun(rng.choice(PLACES[1:]), "Epb")]
    elif choice == 1:
        tail = [("yng", "yn", "Ar", "Arsym", "-"), noun("Caerdydd", "Epb", "nm", "Nghaerdydd")]
    else:
        tail = [("ym", "yn", "Ar", "Arsym", "-"), noun("Bangor", "Epb", "nm", "Mangor")]
    return [MAE, R] + subject + tail + [STOP]


def t_motion(rng):
    # Aeth y ci i'r ysgol.
    subject = article_noun(rng, animate=True)
    dest = rng.choice([noun("ysgol", "Ebu"), noun("tref", "Ebu", "sm", "dref"),
                       noun("gardd", "Ebu", "sm", "ardd")])
    return [AETH] + article(subject) + [I_PREP, R, dest, STOP]


def t_nobody(rng):
    # Does neb yn y tŷ.
    place = rng.choice([noun("tŷ"), noun("ysgol", "Ebu"), noun("car")])
    return [DOES, ("neb", "neb", "Rha", "Rhaamh", "-"), YN_IN, Y, place, STOP]


def t_adverbial(rng):
    # Canodd y ferch yn dda.
    verb = rng.choice(PAST)
    subject = article_noun(rng, animate=True)
    a = rng.choice([("da", "dda"), ("hapus", "hapus")])
    return [(verb[0], verb[1], "B", "Bgorff3u", "-")] + article(subject) + [YN_ADV, adj(*a), STOP]


def t_possessive(rng):
    # Mae ei chath hi yn fawr. / Aeth ei gath ef i'r ysgol.
    if rng.random() < 0.5:
        a = rng.choice(ADJ)
        return [MAE, ("ei", "ei", "Rha", "Rhadib3bu", "-"), noun("cath", "Ebu", "am", "chath"),
                ("hi", "hi", "Rha", "Rhapers3bu", "-"), YN_PRED, adj(*a), STOP]
    return [AETH, ("ei", "ei", "Rha", "Rhadib3gu", "-"), noun("cath", "Ebu", "sm", "gath"),
            ("ef", "ef", "Rha", "Rhapers3gu", "-"), I_PREP, R, noun("ysgol", "Ebu"), STOP]


def t_english(rng):
    # Mae'r computer yn newydd.
    word = rng.choice(ENGLISH)
    a = rng.choice([("newydd", "newydd"), ("hapus", "hapus")])
    return [MAE, R, (word, word, "Gw", "Gwest", "-"), YN_PRED, adj(*a), STOP]


def t_every(rng):
    # Mae pob plentyn yn hapus.
    a = rng.choice(ADJ)
    return [MAE, ("pob", "pob", "Ban", "Banpen", "-"), noun("plentyn"), YN_PRED, adj(*a), STOP]


def t_object(rng):
    # Prynodd y dyn fara a llyfr.
    subject = article_noun(rng, fem=False, animate=True)
    return [("Prynodd", "prynu", "B", "Bgorff3u", "-")] + article(subject) + \
        [noun("bara", "Egu", "sm", "fara"), A, noun("llyfr"), STOP]


def t_weather(rng):
    # Roedd y tywydd yn dda heddiw.
    a = rng.choice([("da", "dda"), ("mawr", "fawr")])
    return [ROEDD, Y, noun("tywydd"), YN_PRED, adj(*a), ("heddiw", "heddiw", "Adf", "Adf", "-"),
            STOP]


TEMPLATES = [t_predicative, t_complement, t_nasal, t_motion, t_nobody, t_adverbial,
             t_possessive, t_english, t_every, t_object, t_weather]


def render(tokens):
    out = ""
    for surface, *_ in tokens:
        if out and not surface.startswith("'") and surface != ".":
            out += " "
        out += surface
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "data" / "gold")
    ap.add_argument("--sentences", type=int, default=66)
    ap.add_argument("--seed", type=int, default=1789)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    sentences = []
    # Every template at least once, then a seeded mix.
    for i in range(args.sentences):
        t = TEMPLATES[i] if i < len(TEMPLATES) else rng.choice(TEMPLATES)
        sentences.append(t(rng))

    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / "gold.txt").write_text("\n".join(render(s) for s in sentences) + "\n",
                                      encoding="utf-8")
    lines = ["# id: gold", "# language_type: written", "# genre: miscellaneous",
             "# sensitive: false", "# source: synthetic"]
    index = 0
    for si, s in enumerate(sentences, 1):
        if si > 1:
            lines.append("")
        for pi, (surface, lemma, basic, rich, mut) in enumerate(s, 1):
            index += 1
            lines.append(f"{index}\t{surface}\t{si},{pi}\t{lemma}\t{basic}\t{rich}\t{mut}\t-")
    (args.out / "gold.vrt").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"{len(sentences)} sentences, {index} tokens")


if __name__ == "__main__":
    main()
