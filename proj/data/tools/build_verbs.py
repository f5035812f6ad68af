#!/usr/bin/env python3
"""Derive verbs.tsv from the bundled task-phrase counts.

Each phrase is `<verb> <object words...>`; every object word is credited with
the phrase count for that verb. The emitted verb for a word is the one with the
highest total, ties going to the lexicographically smallest verb.
"""
import argparse
import collections
import pathlib
import sys


def derive(lines):
    totals = collections.defaultdict(collections.Counter)
    for line in lines:
        line = line.rstrip("\n")
        if not line or line.startswith("#"):
            continue
        phrase, count = line.split("\t")
        tokens = phrase.lower().split()
        verb, objects = tokens[0], tokens[1:]
        for word in objects:
            if word != verb:
                totals[word][verb] += int(count)
    table = {}
    for word, counter in totals.items():
        verb, freq = min(counter.items(), key=lambda kv: (-kv[1], kv[0]))
        table[word] = (verb, freq)
    return table


def main():
    here = pathlib.Path(__file__).resolve().parent.parent
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--source", default=here / "source" / "task_phrases.tsv")
    parser.add_argument("--out", default=here / "verbs.tsv")
    args = parser.parse_args()
    with open(args.source, encoding="utf-8") as f:
        table = derive(f)
    with open(args.out, "w", encoding="utf-8") as f:
        f.write("# word\tverb\tfrequency\n")
        for word in sorted(table):
            verb, freq = table[word]
            f.write(f"{word}\t{verb}\t{freq}\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
