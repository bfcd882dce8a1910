"""The .sgp text format for Cayley tables.

Layout, in order: a `sgp 1` header, `n <order>`, an optional `labels` line
(space-separated tokens, defaulting to e0..e{n-1}), n `row` lines of 0-based
indices, then optional `zero <index>` and `identity <index>` lines.  `#`
starts a comment.  Writing is canonical (single spaces, labels always
present, newline-terminated), and parse(write(S)) reproduces S exactly.
"""

from __future__ import annotations

import re
from typing import Optional

from .core import FiniteSemigroup, ParseError, ShapeError, build_semigroup
from .construct import BrandtExtension, brandt_extension

FORMAT_VERSION = 1


def write_sgp(S: FiniteSemigroup) -> str:
    if any(re.search(r"\s", lab) for lab in S.labels):
        raise ShapeError("labels with whitespace cannot be serialized")
    lines = [f"sgp {FORMAT_VERSION}", f"n {S.order}", "labels " + " ".join(S.labels)]
    for row in S.table:
        lines.append("row " + " ".join(str(v) for v in row))
    if S.zero is not None:
        lines.append(f"zero {S.zero}")
    if S.identity is not None:
        lines.append(f"identity {S.identity}")
    return "\n".join(lines) + "\n"


def _tokenize(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_sgp(text: str) -> FiniteSemigroup:
    """Parse a .sgp document; errors carry the offending line number."""
    tokens = list(_tokenize(text))
    if not tokens:
        raise ParseError("empty document")
    pos = 0

    def take():
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError("unexpected end of document", tokens[-1][0])
        item = tokens[pos]
        pos += 1
        return item

    lineno, words = take()
    if words != ["sgp", str(FORMAT_VERSION)]:
        raise ParseError(f"expected header 'sgp {FORMAT_VERSION}'", lineno)
    lineno, words = take()
    if len(words) != 2 or words[0] != "n" or not words[1].isdigit():
        raise ParseError("expected 'n <order>'", lineno)
    n = int(words[1])
    if n < 1:
        raise ParseError("order must be positive", lineno)

    labels: Optional[list[str]] = None
    rows: list[list[int]] = []
    zero: Optional[int] = None
    identity: Optional[int] = None
    row_line = None

    while pos < len(tokens):
        lineno, words = take()
        key = words[0]
        if key == "labels":
            if labels is not None or rows:
                raise ParseError("labels line out of place", lineno)
            labels = words[1:]
            if len(labels) != n:
                raise ParseError(f"{len(labels)} labels for {n} elements", lineno)
            if len(set(labels)) != n:
                raise ParseError("duplicate labels", lineno)
        elif key == "row":
            if zero is not None or identity is not None:
                raise ParseError("row after zero/identity line", lineno)
            if len(rows) == n:
                raise ParseError(f"more than {n} rows", lineno)
            entries = words[1:]
            if len(entries) != n:
                raise ParseError(
                    f"row {len(rows)} has {len(entries)} entries, expected {n}", lineno
                )
            row = []
            for w in entries:
                if not w.isdigit() or not (0 <= int(w) < n):
                    raise ParseError(f"index {w!r} out of range 0..{n - 1}", lineno)
                row.append(int(w))
            rows.append(row)
            row_line = lineno
        elif key in ("zero", "identity"):
            if len(words) != 2 or not words[1].isdigit():
                raise ParseError(f"expected '{key} <index>'", lineno)
            v = int(words[1])
            if not (0 <= v < n):
                raise ParseError(f"{key} index {v} out of range", lineno)
            if key == "zero":
                zero = v
            else:
                identity = v
        else:
            raise ParseError(f"unknown directive {key!r}", lineno)

    if len(rows) != n:
        raise ParseError(
            f"expected {n} rows, found {len(rows)}", row_line if row_line else lineno
        )
    return build_semigroup(rows, labels, zero=zero, identity=identity)


def write_extension(ext: BrandtExtension) -> str:
    """Serialize an extension's carrier plus a coordinate legend.

    The legend records the index-set size and, per nonzero carrier index, the
    (a, s, b) coordinates; the machine only needs the size line, since the
    carrier ordering is canonical and the base is the (0, s, 0) block.
    """
    out = [write_sgp(ext.carrier).rstrip("\n")]
    out.append(f"# brandt lambda {ext.lam}")
    for idx in range(1, ext.carrier.order):
        a, s, b = ext.decode(idx)
        out.append(f"# coord {idx} ({a},{ext.base.labels[s]},{b})")
    return "\n".join(out) + "\n"


_LAMBDA_RE = re.compile(r"^#\s*brandt\s+lambda\s+(\d+)\s*$", re.MULTILINE)


def read_extension(text: str) -> Optional[BrandtExtension]:
    """Rebuild extension coordinates from a legend-carrying document.

    Returns None when no legend is present.  The diagonal block at index pair
    (0, 0), together with the carrier zero, recovers the base; the rebuilt
    product law is validated against the parsed table.
    """
    m = _LAMBDA_RE.search(text)
    if not m:
        return None
    lam = int(m.group(1))
    carrier = parse_sgp(text)
    if lam < 1 or (carrier.order - 1) % (lam * lam) != 0:
        raise ParseError("legend size does not divide the carrier")
    if carrier.zero != 0:
        raise ParseError("extension carriers keep their zero at index 0")
    block = (carrier.order - 1) // (lam * lam)

    from .core import subsemigroup

    base = subsemigroup(carrier, range(0, block + 1))
    ext = BrandtExtension(
        base=base,
        lam=lam,
        carrier=carrier,
        base_has_identity=base.identity is not None,
        nonzero_base=tuple(range(1, block + 1)),
    )
    for i in range(1, carrier.order):
        a, s, b = ext.decode(i)
        for j in range(1, carrier.order):
            c, t, d = ext.decode(j)
            if b != c:
                want = 0
            else:
                prod = base.table[s][t]
                want = 0 if prod == base.zero else ext.encode(a, prod, d)
            if carrier.table[i][j] != want:
                raise ParseError("legend is inconsistent with the table")
    return ext
