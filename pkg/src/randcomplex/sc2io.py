"""The SC2 text format for 2-complexes.

Line 1 is ``sc2 <n> <full|listed>``.  Then, in listed mode only, zero or
more ``e <a> <b>`` lines, then zero or more ``f <a> <b> <c>`` lines.
Integers are space-separated with a < b < c; files are UTF-8 and every
line is newline-terminated.
"""

from __future__ import annotations

import io

from .complexes import FULL, Complex2, build_complex
from .errors import ParseError, RandComplexError


def dumps(X: Complex2) -> str:
    out = [f"sc2 {X.n} {X.skeleton_mode}"]
    if X.skeleton_mode != FULL:
        out.extend(f"e {a} {b}" for a, b in X.iter_edges())
    out.extend(f"f {a} {b} {c}" for a, b, c in X.sorted_faces())
    return "\n".join(out) + "\n"


def dump(X: Complex2, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(X))


def loads(text: str) -> Complex2:
    return _parse(io.StringIO(text))


def load(path) -> Complex2:
    with open(path, encoding="utf-8") as fh:
        return _parse(fh)


def _ints(parts, lineno, expect):
    if len(parts) != expect:
        raise ParseError(lineno, f"expected {expect} integers, got {len(parts)}")
    vals = []
    for p in parts:
        try:
            vals.append(int(p))
        except ValueError:
            raise ParseError(lineno, f"{p!r} is not an integer") from None
    return vals


def _parse(fh) -> Complex2:
    header = fh.readline()
    if not header:
        raise ParseError(1, "empty file")
    parts = header.split()
    if len(parts) != 3 or parts[0] != "sc2":
        raise ParseError(1, "header must be 'sc2 <n> <full|listed>'")
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(1, f"bad vertex count {parts[1]!r}") from None
    mode = parts[2]
    if mode not in (FULL, "listed"):
        raise ParseError(1, f"skeleton mode must be 'full' or 'listed', got {mode!r}")

    edges = []
    faces = []
    seen_face = False
    lineno = 1
    for line in fh:
        lineno += 1
        if line.strip() == "":
            raise ParseError(lineno, "blank line")
        parts = line.split()
        kind, rest = parts[0], parts[1:]
        if kind == "e":
            if mode == FULL:
                raise ParseError(lineno, "'e' line in full-skeleton file")
            if seen_face:
                raise ParseError(lineno, "'e' line after 'f' lines")
            a, b = _ints(rest, lineno, 2)
            if not a < b:
                raise ParseError(lineno, f"edge must satisfy a < b, got {a} {b}")
            edges.append((a, b))
        elif kind == "f":
            seen_face = True
            a, b, c = _ints(rest, lineno, 3)
            if not a < b < c:
                raise ParseError(lineno, f"face must satisfy a < b < c, got {a} {b} {c}")
            faces.append((a, b, c))
        else:
            raise ParseError(lineno, f"unknown record type {kind!r}")

    try:
        return build_complex(n, FULL if mode == FULL else edges, faces)
    except RandComplexError as exc:
        raise ParseError(lineno, f"inconsistent complex: {exc}") from exc
