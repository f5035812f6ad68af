#!/usr/bin/env python3
"""Reference query builder used to freeze tests/fixtures/query/expected.tsv.

Reads the bundled knowledge tables directly and applies the per-kind rules
from scratch; shares no code with the C++ implementation.
"""
import pathlib
import re

HERE = pathlib.Path(__file__).resolve().parent
ROOT = HERE.parent.parent
DATA = ROOT / "data"
FIXTURES = HERE.parent / "fixtures" / "query"


def rows(name):
    for line in (DATA / name).read_text(encoding="utf-8").splitlines():
        if line and not line.startswith("#"):
            yield line.split("\t")


def load():
    syntax = {}
    for concept, token, count in rows("syntax_table.tsv"):
        syntax.setdefault(concept, []).append((token, int(count)))
    token_row = {}
    for concept, entries in syntax.items():
        for token, _ in entries:
            token_row.setdefault(token, concept)
    verbs = {w: v for w, v, _ in rows("verbs.tsv")}
    synonyms = {w: s for w, s, _ in rows("synonyms.tsv")}
    datatypes = dict(rows("datatypes.tsv"))
    return syntax, token_row, verbs, synonyms, datatypes


def reformulate(word, syntax, token_row):
    if word not in token_row:
        return word
    entries = syntax[token_row[word]]
    top = sorted(entries, key=lambda e: (-e[1], e[0]))[0][0]
    letters = "".join(c for c in top if c.isascii() and c.isalpha())
    return letters or word


def mistake(line):
    line = line.strip()
    quotes = 0
    stack = 0
    in_str = None
    for c in line:
        if in_str:
            if c == in_str:
                in_str = None
        elif c in "'\"":
            in_str = c
        elif c == "#":
            break
        elif c in "([{":
            stack += 1
        elif c in ")]}":
            stack -= 1
    if in_str:
        return "quotation marks"
    if stack:
        return "bracket meanings"
    colon = line.endswith(":")
    first = line.split()[0] if line.split() else ""
    if first == "for" and (not colon or " in " not in f" {line} "):
        return "for loop"
    if first == "while" and not colon:
        return "while loop"
    if re.search(r"\belse\s+if\b", line) or (first.rstrip(":") in ("if", "elif", "else") and not colon):
        return "else if syntax"
    return None


def build(kind, description, line, tables):
    syntax, token_row, verbs, synonyms, datatypes = tables
    if kind in ("AttributeError", "NameError"):
        words, found = [], []
        for quoted in re.findall(r"'([^']*)'", description):
            if not quoted:
                continue
            w = reformulate(quoted, syntax, token_row)
            w = datatypes.get(w, w)
            w = synonyms.get(w.lower(), w)
            v = verbs.get(w.lower())
            if v and v not in found:
                found.append(v)
            if w not in words:
                words.append(w)
        return " ".join([kind] + words + found)
    if kind == "SyntaxError":
        return mistake(line) or "SyntaxError: invalid syntax"
    full = f"{kind}: {description}" if description else kind
    if kind == "TypeError":
        if "the first argument must be callable" in description:
            return "must have first callable argument"
        if "not all arguments converted during string formatting" in description:
            return description
        return full
    if kind in ("IndentationError", "TabError"):
        return description or full
    if kind == "KeyError":
        return "KeyError"
    return full


def main():
    tables = load()
    out = ["# line of cases.tsv (1-based, comments excluded)\texpected query"]
    n = 0
    for line in (FIXTURES / "cases.tsv").read_text(encoding="utf-8").splitlines():
        if not line or line.startswith("#"):
            continue
        n += 1
        _, kind, description, offending = line.split("\t")
        out.append(f"{n}\t{build(kind, description, offending, tables)}")
    (FIXTURES / "expected.tsv").write_text("\n".join(out) + "\n", encoding="utf-8")
    print("\n".join(out))


if __name__ == "__main__":
    main()
