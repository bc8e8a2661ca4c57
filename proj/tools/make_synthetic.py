#!/usr/bin/env python3
"""Generate the bundled synthetic experiment under data/synthetic/.

Each topic has a two-word title (q1, q2), a synonym s1 of q1 and a hyponym s2
of q2. Relevant documents come in two kinds: a few "bridge" documents that use
the title words together with s1/s2, and "hidden" ones that only use s1/s2, so
an unexpanded title query cannot reach them. Every topic also has four noise
words that co-occur with the title in the bridge documents and dominate a set
of non-relevant "distractor" documents. The noise words are missing from the
toy WordNet and from the topic's concept documents, and never sit next to a
title word, so a relatedness-based selector rejects them while blind
expansion with every feedback term pulls the distractors up.

Output is a pure function of SEED.
"""

import argparse
import random
from pathlib import Path

SEED = 20240611

# (q1, s1 synonym of q1, q2, s2 hyponym of q2, field, noise words)
TOPICS = [
    ("ocean", "sea", "pollution", "smog", "environment", ["harbor", "tanker", "cargo", "dock"]),
    ("physician", "doctor", "surgery", "transplant", "medicine", ["insurance", "billing", "lawsuit", "premium"]),
    ("automobile", "car", "engine", "turbine", "transport", ["dealership", "showroom", "loan", "warranty"]),
    ("earthquake", "quake", "damage", "wreckage", "geology", ["volunteer", "donation", "charity", "telethon"]),
    ("currency", "money", "inflation", "hyperinflation", "economics", ["lottery", "jackpot", "casino", "ticket"]),
    ("student", "pupil", "examination", "quiz", "education", ["cafeteria", "uniform", "bus", "locker"]),
    ("forest", "woodland", "fire", "wildfire", "ecology", ["camping", "tent", "hiking", "backpack"]),
    ("election", "poll", "candidate", "nominee", "politics", ["banner", "slogan", "rally", "podium"]),
    ("telephone", "phone", "network", "broadband", "communication", ["advert", "jingle", "celebrity", "sponsor"]),
    ("river", "stream", "flood", "deluge", "hydrology", ["regatta", "rowing", "trophy", "spectator"]),
]

SYLLABLES = ["ka", "lo", "mi", "ren", "tu", "sa", "vor", "pel", "di", "nak", "bru", "zel", "fo", "gar", "hin",
             "jo", "qua", "wex", "yul", "tor"]


def pseudo_words(rng, count):
    words = set()
    while len(words) < count:
        words.add("".join(rng.choice(SYLLABLES) for _ in range(rng.randint(2, 3))))
    return sorted(words)


def fillers(rng, pool, n):
    return [rng.choice(pool) for _ in range(n)]


def doc(docno, words):
    lines = []
    for i in range(0, len(words), 12):
        lines.append(" ".join(words[i:i + 12]))
    return f"<DOC>\n<DOCNO>{docno}</DOCNO>\n<TEXT>\n" + "\n".join(lines) + "\n</TEXT>\n</DOC>\n"


def build(out: Path):
    rng = random.Random(SEED)
    filler_pool = pseudo_words(rng, 150)

    docs = []  # (docno, words)
    qrels = []
    topics = []
    for t, (q1, s1, q2, s2, _field, noise) in enumerate(TOPICS, start=1):
        tid = f"{t:04d}"
        topics.append((tid, f"{q1.capitalize()} {q2}"))
        # bridge: title words and their relatives side by side, noise apart
        for b in range(3):
            block = [q1, s1, q2, s2, q1, s2, q2, s1]
            words = fillers(rng, filler_pool, 4) + block + fillers(rng, filler_pool, 3)
            words += [noise[0], noise[1], noise[2], noise[3], noise[1], noise[0], noise[3], noise[2]]
            words += fillers(rng, filler_pool, 4)
            docno = f"SYN-{tid}-B{b}"
            docs.append((docno, words))
            qrels.append((tid, docno, 2))
        # hidden: relevant, but written with the relatives only
        for h in range(6):
            words = fillers(rng, filler_pool, 5) + [s1, s2] + fillers(rng, filler_pool, 5)
            words += [s2, s1] + fillers(rng, filler_pool, rng.randint(3, 8))
            docno = f"SYN-{tid}-H{h}"
            docs.append((docno, words))
            qrels.append((tid, docno, 2))
        # distractor: all about the noise words
        for d in range(4):
            words = fillers(rng, filler_pool, 4) + noise * 3 + fillers(rng, filler_pool, 4)
            docno = f"SYN-{tid}-D{d}"
            docs.append((docno, words))
            qrels.append((tid, docno, 0))
        # decoy: mentions the first title word in passing
        for d in range(2):
            words = fillers(rng, filler_pool, 10) + [q1] + fillers(rng, filler_pool, 10)
            docno = f"SYN-{tid}-M{d}"
            docs.append((docno, words))
            qrels.append((tid, docno, 1))

    for g in range(50):
        docs.append((f"SYN-GEN-{g:02d}", fillers(rng, filler_pool, rng.randint(15, 30))))

    rng.shuffle(docs)

    # concept corpus: topical concepts, noise concepts, generic concepts
    concepts = []
    for t, (q1, s1, q2, s2, field, noise) in enumerate(TOPICS, start=1):
        for c in range(3):
            words = [q1] * (2 + c) + [s1] * (3 - c) + [q2] * (1 + c) + [s2] * (2 + (c % 2))
            words += [field] * 2 + fillers(rng, filler_pool, 6)
            rng.shuffle(words)
            concepts.append((f"CON-{t:02d}-{c}", words))
        for c in range(2):
            words = noise * (1 + c) + fillers(rng, filler_pool, 6)
            rng.shuffle(words)
            concepts.append((f"CON-{t:02d}-N{c}", words))
    for g in range(20):
        concepts.append((f"CON-GEN-{g:02d}", fillers(rng, filler_pool, 12)))

    out.mkdir(parents=True, exist_ok=True)
    (out / "corpus.trec").write_text("".join(doc(d, w) for d, w in docs))
    (out / "concepts.trec").write_text("".join(doc(d, w) for d, w in concepts))
    (out / "topics.trec").write_text("".join(
        f"<top>\n<num> Number: {tid}\n<title> {title}\n\n<desc> Description:\n"
        f"Documents about {title.lower()}.\n</top>\n\n" for tid, title in topics))
    (out / "qrels.txt").write_text("".join(f"{t} 0 {d} {g}\n" for t, d, g in sorted(qrels)))

    write_wordnet(out / "wordnet")


def write_wordnet(wn: Path):
    """Toy noun taxonomy: entity > field > {q1, s1} and field > {q2} > {s2}."""
    wn.mkdir(parents=True, exist_ok=True)
    synsets = []  # (offset, words, pointers[(symbol, offset)])
    offset = 1000

    def add(words):
        nonlocal offset
        synsets.append([offset, words, []])
        offset += 100
        return len(synsets) - 1

    def link(hyponym, hypernym):
        synsets[hyponym][2].append(("@", synsets[hypernym][0]))
        synsets[hypernym][2].append(("~", synsets[hyponym][0]))

    root = add(["entity"])
    for q1, s1, q2, s2, field, _noise in TOPICS:
        f = add([field])
        link(f, root)
        a = add([q1, s1])
        link(a, f)
        b = add([q2])
        link(b, f)
        c = add([s2])
        link(c, b)

    header = "  1 Synthetic WordNet fragment in the WordNet 3.0 database format.\n"
    lines = [header]
    index = {}
    for off, words, pointers in synsets:
        ptrs = " ".join(f"{sym} {target:08d} n 0000" for sym, target in pointers)
        word_part = " ".join(f"{w} 0" for w in words)
        lines.append(f"{off:08d} 03 n {len(words):02x} {word_part} {len(pointers):03d} {ptrs} | synthetic\n")
        for w in words:
            index.setdefault(w, []).append((off, sorted({sym for sym, _ in pointers})))
    (wn / "data.noun").write_text("".join(lines))

    idx_lines = [header]
    for lemma in sorted(index):
        entries = index[lemma]
        symbols = sorted({s for _, syms in entries for s in syms})
        offsets = " ".join(f"{off:08d}" for off, _ in entries)
        idx_lines.append(f"{lemma} n {len(entries)} {len(symbols)} {' '.join(symbols)} {len(entries)} 0 {offsets}\n")
    (wn / "index.noun").write_text("".join(idx_lines))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "data" / "synthetic")
    build(parser.parse_args().out)


if __name__ == "__main__":
    main()
