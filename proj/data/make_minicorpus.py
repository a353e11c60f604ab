"""Generates data/minicorpus: small synthetic repositories in C, Python and
JavaScript. Each repository draws identifiers from one or two themes, so the
topic model has structure to find. `plotkit` is copied verbatim to
`plotkit-copy` and `plotkit-mirror` (three exact clones).

Output is deterministic; rerun only when the corpus should change, then
refresh tests/golden.
"""
import random
import shutil
from pathlib import Path

THEMES = {
    "plot": ["figure", "axis", "legend", "linspace", "subplot", "color", "marker", "label",
             "scatter", "histogram", "title", "grid", "zeros", "astype", "arange"],
    "net": ["socket", "request", "response", "header", "server", "client", "connection",
            "timeout", "buffer", "packet", "port", "address", "session", "cookie", "proxy"],
    "parse": ["token", "lexer", "parser", "grammar", "syntax", "node", "tree", "symbol",
              "scanner", "expression", "statement", "literal", "keyword", "operator", "visitor"],
    "store": ["database", "query", "table", "record", "index", "cursor", "transaction",
              "schema", "column", "commit", "rollback", "migration", "field", "primary", "cache"],
    "game": ["player", "sprite", "level", "score", "enemy", "collision", "physics", "velocity",
             "render", "texture", "camera", "animation", "weapon", "health", "inventory"],
}

REPOS = [
    ("plotkit", "python", ["plot"]),
    ("netio", "c", ["net"]),
    ("tinyparse", "c", ["parse"]),
    ("webrelay", "javascript", ["net", "store"]),
    ("querylite", "python", ["store"]),
    ("arcade", "javascript", ["game"]),
    ("spritebox", "c", ["game", "plot"]),
    ("exprcalc", "python", ["parse"]),
    ("dashboard", "javascript", ["plot", "net"]),
    ("ledger", "c", ["store", "parse"]),
    ("shooter", "python", ["game"]),
    ("httpkit", "python", ["net"]),
]

# Rare words fall below the vocabulary frequency cut; short prefixes exercise
# the splitter's glued-prefix output ("np" + "array" -> "nparray").
RARE = ["quokka", "zeppelin", "obsidian", "lantern", "mosaic", "tundra", "falcon", "harbor",
        "velvet", "cobalt", "meadow", "saffron", "glacier", "pebble", "thistle", "walnut"]
PREFIXES = ["np", "db", "gl", "io", "js"]

FILES_PER_REPO = 4
EXT = {"python": "py", "c": "c", "javascript": "js"}


def ident(rng, words):
    a, b = rng.choice(words), rng.choice(words)
    style = rng.randrange(6)
    if style == 4:
        return rng.choice(PREFIXES) + "_" + a
    if style == 5 and rng.random() < 0.3:
        return rng.choice(RARE) + b.capitalize()
    if style == 0:
        return a + b.capitalize()
    if style == 1:
        return a + "_" + b
    if style == 2:
        return a.capitalize() + b.capitalize()
    return a


def python_file(rng, words):
    out = ['"""Module docstring mentioning unrelated words like banana and orchestra."""', "import os", ""]
    for _ in range(rng.randint(3, 5)):
        fn = ident(rng, words)
        args = ", ".join(ident(rng, words) for _ in range(rng.randint(1, 3)))
        out.append(f"def {fn}({args}):")
        out.append(f"    # comment about {rng.choice(words)}ing things and pineapple")
        for _ in range(rng.randint(2, 5)):
            out.append(f"    {ident(rng, words)} = {ident(rng, words)}({ident(rng, words)}, 'string {rng.choice(words)}')")
        out.append(f"    return {ident(rng, words)}")
        out.append("")
    return "\n".join(out) + "\n"


def c_file(rng, words):
    out = ["#include <stdio.h>", "/* block comment: marmalade */", ""]
    for _ in range(rng.randint(3, 5)):
        fn = ident(rng, words)
        out.append(f"static int {fn}(int {ident(rng, words)}, char *{ident(rng, words)}) {{")
        for _ in range(rng.randint(2, 5)):
            out.append(f"    int {ident(rng, words)} = {ident(rng, words)}({ident(rng, words)}); // {rng.choice(words)} note")
        out.append(f'    printf("%d walrus\\n", {ident(rng, words)});')
        out.append(f"    return {ident(rng, words)};")
        out.append("}")
        out.append("")
    return "\n".join(out) + "\n"


def js_file(rng, words):
    out = ["// header comment about tangerine", "'use strict';", ""]
    for _ in range(rng.randint(3, 5)):
        fn = ident(rng, words)
        out.append(f"function {fn}({ident(rng, words)}, {ident(rng, words)}) {{")
        for _ in range(rng.randint(2, 5)):
            out.append(f"  const {ident(rng, words)} = {ident(rng, words)}.{ident(rng, words)}(`tpl ${{zebra}}`);")
        out.append(f"  return {ident(rng, words)};")
        out.append("}")
        out.append("")
    return "\n".join(out) + "\n"


GEN = {"python": python_file, "c": c_file, "javascript": js_file}


def main():
    root = Path(__file__).resolve().parent / "minicorpus"
    if root.exists():
        shutil.rmtree(root)
    rng = random.Random(1234)
    for name, lang, themes in REPOS:
        words = [w for t in themes for w in THEMES[t]]
        repo = root / name
        for i in range(FILES_PER_REPO):
            sub = repo / ("src" if i % 2 == 0 else "lib")
            sub.mkdir(parents=True, exist_ok=True)
            (sub / f"part{i}.{EXT[lang]}").write_text(GEN[lang](rng, words))
        (repo / "README.md").write_text(f"# {name}\n\nNot source code; skipped by language detection.\n")
    for clone in ("plotkit-copy", "plotkit-mirror"):
        shutil.copytree(root / "plotkit", root / clone)


if __name__ == "__main__":
    main()
