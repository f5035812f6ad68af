#!/usr/bin/env python3
"""Reference Luhn scorer used to freeze tests/fixtures/luhn/expected.tsv.

Brute force: every pair of significant positions (p, q) in a sentence is a
candidate cluster when no gap between successive significant words inside it
exceeds the window; the score is count**2 / span as an exact Fraction.
"""
import pathlib
import re
from fractions import Fraction

HERE = pathlib.Path(__file__).resolve().parent
FIXTURES = HERE.parent / "fixtures" / "luhn"

STOPWORDS = set("""
a about above after again against all am an and any are as at be because been before being below between both
but by can could did do does doing down during each few for from further had has have having he her here hers
herself him himself his how i if in into is it its itself just me more most my myself no nor not now of off on
once only or other our ours out over own same she should so some such than that the their theirs them then there
these they this those through to too under until up very was we were what when where which while who whom why
will with would you your yours yourself it's don't i'm you're that's there's can't
""".split())

WINDOW = 4
MIN_FREQUENCY = 2
MAX_SENTENCES = 4
MIN_TO_SUMMARIZE = 5

WORD = re.compile(r"[A-Za-z0-9_]+(?:'[A-Za-z0-9_]+)*")


def tokens(sentence):
    return [w for w in (m.group(0).lower() for m in WORD.finditer(sentence)) if w not in STOPWORDS]


def score(sentence_tokens, significant):
    marks = [i for i, t in enumerate(sentence_tokens) if t in significant]
    best = Fraction(0)
    for x in range(len(marks)):
        for y in range(x, len(marks)):
            inside = marks[x:y + 1]
            if any(b - a - 1 > WINDOW for a, b in zip(inside, inside[1:])):
                continue
            best = max(best, Fraction(len(inside) ** 2, inside[-1] - inside[0] + 1))
    return best


def summarize(sentences):
    if len(sentences) < MIN_TO_SUMMARIZE:
        return list(range(len(sentences)))
    tokenized = [tokens(s) for s in sentences]
    counts = {}
    for ts in tokenized:
        for t in ts:
            counts[t] = counts.get(t, 0) + 1
    significant = {t for t, c in counts.items() if c >= MIN_FREQUENCY}
    scores = [score(ts, significant) for ts in tokenized]
    ranked = sorted(range(len(sentences)), key=lambda i: (-scores[i], i))
    return sorted(ranked[:MAX_SENTENCES])


def paragraphs():
    blocks, current = [], []
    for line in (FIXTURES / "paragraphs.txt").read_text(encoding="utf-8").splitlines():
        if line.startswith("#"):
            continue
        if not line.strip():
            if current:
                blocks.append(current)
            current = []
        else:
            current.append(line)
    if current:
        blocks.append(current)
    return blocks


def main():
    lines = ["# paragraph\tselected sentence indices (0-based)"]
    for n, block in enumerate(paragraphs()):
        lines.append(f"{n}\t{','.join(map(str, summarize(block)))}")
    (FIXTURES / "expected.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print("\n".join(lines))


if __name__ == "__main__":
    main()
