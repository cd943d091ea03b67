"""The 2- and 3-dimensional classification lists as data.

Every entry is transcribed line by line from the printed multiplication
tables. Unlisted products and unlisted twist images are zero. Entries with
symbolic coefficients (``a``, ``b``, ``d``) are instantiated at rational
values before any computation.

Two printed lines collide with another line of the same entry under the
duplicate-entry rule of :func:`homtrias.algebra.from_tables`; each is
resolved explicitly in ``RESOLUTIONS`` with the printed text kept alongside.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Mapping, Sequence

from .algebra import HomTrialgebra, Op, dumps, from_tables
from .linalg import ZERO, same_span, scalar

_OPS = {"⊣": Op.LEFT, "⊢": Op.RIGHT, "⊥": Op.MIDDLE}
_LINE = re.compile(r"^\s*e(\d)\s*([⊣⊢⊥])\s*e(\d)\s*=\s*(.+?)\s*$")
_ALPHA = re.compile(r"^\s*α\(e(\d)\)\s*=\s*(.+?)\s*$")
_TERM = re.compile(r"([+-]?)\s*(\d*|[a-z])\s*e(\d)")

# Printed lines in reading order (column groups left to right).
_TABLES: dict[str, tuple[int, str]] = {
    "TH2.1": (2, "e1⊣e2=e1; e2⊣e1=e1; e2⊣e2=e1; e1⊢e2=e1; e2⊢e1=e1; e2⊢e2=e1; "
                 "e1⊥e2=e1; e2⊥e1=e1; e2⊥e2=e1; α(e2)=e1"),
    "TH2.2": (2, "e1⊣e2=e1; e2⊣e1=e1; e2⊣e2=e1; e1⊢e2=e1; e2⊢e1=e1; e2⊢e2=e1; e2⊥e2=e1; α(e2)=e1"),
    "TH2.3": (2, "e1⊣e2=e1; e2⊣e1=e1; e2⊣e2=e1; e1⊢e2=e1; e2⊢e1=e1; e2⊥e2=e1; α(e2)=e1"),
    "TH2.4": (2, "e2⊣e2=e1; e2⊢e2=e1; e2⊥e2=e1; α(e1)=e1; α(e2)=e1+e2"),
    "TH2.5": (2, "e2⊣e1=e1; e2⊣e2=e1+e2; e2⊢e1=e1; e2⊢e2=e1+e2; e2⊥e1=e1; e2⊥e2=e1+e2; "
                 "α(e1)=e1; α(e2)=e1+e2"),
    "TH2.6": (2, "e1⊣e2=e1; e2⊣e2=e1+e2; e1⊢e2=e1; e2⊢e2=e1+e2; e1⊥e2=e1; e2⊥e2=e1+e2; "
                 "α(e1)=e1; α(e2)=e1+e2"),
    "TH2.7": (2, "e1⊣e2=e1; e2⊣e2=e2; e2⊢e1=e1; e2⊢e2=e2; e1⊥e1=e1; e1⊥e2=e1; e2⊥e1=e1; e2⊥e2=e2; "
                 "α(e1)=e1; α(e2)=e2"),
    "TH2.8": (2, "e1⊣e2=e1; e2⊣e2=e2; e2⊢e1=e1; e2⊢e2=e2; e1⊥e2=e1; e2⊥e1=e1; e2⊥e2=e2; "
                 "α(e1)=e1; α(e2)=e2"),
    "TH2.9": (2, "e1⊣e1=-e1; e1⊣e2=e2; e2⊣e1=e2; e1⊢e1=-e1; e1⊢e2=e2; e2⊢e1=e2; "
                 "e1⊥e1=-e1; e1⊥e2=e1; e2⊥e2=e2; α(e1)=e1; α(e2)=-e2"),
    "TH2.10": (2, "e1⊣e1=-e1; e1⊣e2=e2; e1⊢e1=-e1; e1⊢e2=e2; e1⊥e1=-e1; e1⊥e2=e2; e2⊥e1=e2; "
                  "α(e1)=e1; α(e2)=-e2"),
    "TH2.11": (2, "e1⊣e1=e1; e2⊣e2=e2; e1⊢e1=e1; e2⊢e2=e2; e1⊥e1=e1; e2⊥e2=e2; α(e2)=e2"),
    "TH2.12": (2, "e2⊣e2=e2; e2⊢e2=e2; e1⊥e1=e1; e2⊥e2=e2; α(e1)=e1"),
    "TH2.13": (2, "e1⊣e2=e1; e2⊣e2=e2; e2⊢e1=e1; e2⊣e2=e2; e1⊥e1=e1; e1⊥e2=e1; e2⊥e1=e1; "
                  "e2⊥e2=e1+e2; α(e1)=e1; α(e2)=e2"),
    "TH3.1": (3, "e2⊣e2=e2+e3; e2⊣e3=e2+e3; e3⊣e2=e2+e3; e2⊢e2=e2+e3; e3⊢e2=e2+e3; e3⊢e3=e2+e3; "
                 "e2⊥e2=e2+e3; e2⊥e3=e2+e3; e3⊥e2=e2+e3; e3⊥e3=e2+e3; α(e1)=e1"),
    "TH3.2": (3, "e2⊣e2=e2+e3; e3⊣e2=e2+e3; e3⊣e3=e2+e3; e2⊢e2=e2+e3; e2⊢e3=e2+e3; e3⊢e3=e2+e3; "
                 "e2⊥e3=e2+e3; e3⊥e2=e2+e3; e3⊥e3=e2+e3; α(e1)=e1"),
    "TH3.3": (3, "e1⊣e1=ae2; e3⊣e3=e3; e1⊢e1=e2; e3⊢e3=e2; e1⊥e1=e2; e3⊥e3=e2; α(e1)=e1; α(e2)=e2"),
    "TH3.4": (3, "e1⊣e1=e3; e2⊣e2=e2; e1⊢e1=e3; e2⊢e2=e2; e1⊥e1=e3; e2⊥e2=e2; α(e1)=e1; α(e3)=e3"),
    "TH3.5": (3, "e1⊣e1=ae1; e2⊣e2=e2; e3⊣e2=e3; e1⊢e1=e1; e2⊢e2=e2; e3⊢e2=e3; "
                 "e1⊥e1=e1; e2⊥e2=e2; e3⊢e2=e3; α(e2)=e2; α(e3)=e3"),
    "TH3.6": (3, "e1⊣e1=e1+e3; e1⊣e3=e1+e3; e3⊣e1=e1+e3; e1⊢e1=e1+e3; e1⊢e3=e1+e3; e3⊢e1=e1+e3; "
                 "e1⊥e1=e1+e3; e1⊥e3=e1+e3; e3⊥e1=e1+e3; α(e2)=e2"),
    "TH3.7": (3, "e1⊣e1=e1+e2; e1⊣e2=e1+e2; e2⊣e2=e1+e2; e1⊢e1=e1+e2; e1⊢e2=e1+e2; e2⊢e1=e1+e2; "
                 "e2⊢e2=e1+e2; e2⊥e1=e1+e2; e2⊥e2=e1+e2; α(e3)=e3"),
    "TH3.8": (3, "e1⊣e2=e1+e2; e2⊣e1=e1+e2; e2⊣e2=e1+e2; e2⊢e1=e1+e2; e2⊢e2=e1+e2; e1⊥e1=e1+e2; "
                 "e1⊥e2=e1+e2; e2⊥e2=e1+e2; α(e3)=e3"),
    "TH3.9": (3, "e2⊣e2=ae2-be3; e2⊢e2=e2+de3; e2⊥e2=be2+e3; α(e1)=e1; α(e2)=e1+e2; α(e3)=e2+e3"),
    "TH3.10": (3, "e1⊣e2=e1; e2⊣e1=e1; e2⊣e2=e1; e2⊢e1=e1; e2⊢e2=e1; e2⊢e3=e1; "
                  "e2⊥e2=e1; e2⊥e3=e1; e3⊥e2=e1; α(e2)=e1; α(e3)=e3"),
    "TH3.11": (3, "e2⊣e1=e1; e2⊣e2=e1; e3⊣e2=e1; e1⊢e2=e1; e2⊢e1=e1; e3⊢e2=e1; "
                  "e2⊥e2=e1; e3⊥e2=e1; α(e2)=e1; α(e3)=e3"),
    "TH3.12": (3, "e2⊣e1=e1+e3; e2⊣e2=e1+e3; e3⊣e3=e1+e3; e1⊣e2=e1+e3; e2⊢e1=e1+e3; e2⊢e3=e1+e3; "
                  "e2⊥e2=e1+e3; e2⊥e3=e1+e3; e3⊥e3=e1+e3; α(e2)=e1"),
    "TH3.13": (3, "e3⊣e2=e1+e3; e3⊣e3=e1+e3; e1⊢e2=e1+e3; e2⊢e3=e1+e3; e3⊢e2=e1+e3; e3⊢e3=e1+e3; "
                  "e2⊥e2=e1+e3; e3⊥e2=e1+e3; e3⊥e3=e1+e3; α(e2)=e1"),
    "TH3.14": (3, "e2⊣e3=e1+e3; e3⊣e2=e1+e3; e3⊣e3=e1+e3; e2⊢e2=e1+e3; e3⊢e2=e1+e3; e3⊢e3=e1+e3; "
                  "e3⊥e2=e1+e3; e3⊥e3=e1+e3; α(e2)=e1"),
    "TH3.15": (3, "e1⊣e2=e1+e3; e3⊣e2=e1+e3; e3⊣e3=e1+e3; e2⊢e3=e1+e3; e3⊢e2=e1+e3; e3⊢e3=e1+e3; "
                  "e2⊥e1=e3; e2⊥e3=e3; e3⊥e3=e3; α(e2)=e1"),
    "TH3.16": (3, "e2⊣e1=e3; e2⊣e2=e3; e3⊣e3=e1+e3; e1⊢e2=e1; e3⊢e2=e1+e3; e3⊢e3=e1; "
                  "e3⊥e2=e3; e3⊥e3=e3; α(e2)=e1"),
    "TH3.17": (3, "e1⊣e2=e1+e3; e2⊣e1=e1+e3; e1⊢e2=e1; e3⊢e3=e1; e1⊥e2=e3; e2⊥e1=e3; "
                  "e3⊥e2=e1; e3⊥e3=e3; α(e2)=e1"),
    "TH3.18": (3, "e2⊣e3=e1+e3; e3⊣e2=e1+e3; e3⊣e3=e1+e3; e2⊢e1=e3; e2⊢e2=e1+e3; e3⊢e3=e1+e3; "
                  "e1⊥e2=e1+e3; e2⊥e3=e1; e3⊥e2=e1+e3; α(e2)=e1"),
    "TH3.19": (3, "e2⊣e3=e2; e3⊣e2=e2; e3⊣e3=e3; e2⊢e2=e2+e3; e3⊢e3=e2+e3; e2⊥e2=e2+e3; "
                  "e2⊥e3=e3; e3⊥e2=e3; e3⊥e3=e3; α(e1)=e1"),
    "TH3.20": (3, "e1⊣e3=e1; e2⊣e3=e1; e3⊣e3=e1; e3⊢e1=e1; e3⊢e2=e1; e3⊢e3=e1; "
                  "e1⊥e3=e1; e2⊥e3=e1; e3⊥e3=e1; α(e2)=e1; α(e3)=e2"),
    "TH3.21": (3, "e2⊣e3=e1; e3⊣e2=e1; e3⊣e3=e1; e3⊢e1=e1; e3⊢e3=e1; e1⊥e3=e1; "
                  "e2⊥e3=e1; e3⊥e1=e1; e3⊥e2=e1; α(e2)=e1; α(e3)=e2"),
}

# (entry, 0-based line index) -> (replacement line, note)
RESOLUTIONS: dict[tuple[str, int], tuple[str, str]] = {
    ("TH2.13", 3): (
        "e2⊢e2=e2",
        "printed 'e2⊣e2=e2' a second time, in the column group holding the ⊢ line; "
        "read as e2⊢e2=e2 (same shape as TH2.7/TH2.8)",
    ),
    ("TH3.5", 8): (
        "e3⊥e2=e3",
        "printed 'e3⊢e2=e3' inside the ⊥ column, repeating the ⊢ line verbatim; "
        "read as e3⊥e2=e3 (the ⊣ and ⊢ columns carry the same line)",
    ),
}

# name -> (default, samples); samples are whole assignments for multi-parameter entries
PARAMETERS: dict[str, tuple[tuple[str, ...], tuple[tuple[Fraction, ...], ...]]] = {
    "TH3.3": (("a",), ((Fraction(1),), (Fraction(2),), (Fraction(0),))),
    "TH3.5": (("a",), ((Fraction(1),), (Fraction(2),), (Fraction(0),))),
    "TH3.9": (("a", "b", "d"), (
        (Fraction(1), Fraction(1), Fraction(1)),
        (Fraction(2), Fraction(1), Fraction(1)),
        (Fraction(1), Fraction(0), Fraction(0)),
    )),
}

# Printed α-inner-derivation table: pattern rows, printed dimension.
INNER_TABLE: dict[str, tuple[str, int]] = {
    "TH2.1": ("0 0; I21 0", 1),
    "TH2.2": ("0 0; I21 0", 1),
    "TH2.3": ("0 0; I21 0", 1),
    "TH2.4": ("0 0; I21 I22", 1),
    "TH2.6": ("0 0; I21 0", 1),
    "TH3.1": ("I11 0 0; 0 I22 I23; 0 -I22 -I23", 3),
    "TH3.2": ("I11 0 0; 0 I22 I23; 0 -I22 -I23", 3),
    "TH3.3": ("I11 I21 0; 0 0 0; 0 0 I33", 3),
    "TH3.4": ("I11 0 I13; 0 0 0; 0 0 0", 2),
    "TH3.5": ("0 0 0; 0 0 I23; 0 0 I33", 2),
    "TH3.6": ("I11 0 I13; 0 I22 0; -I11 0 -I13", 3),
    "TH3.7": ("I11 I12 0; -I11 -I12 0; 0 0 I33", 3),
    "TH3.8": ("I11 I12 0; -I11 -I12 0; 0 0 I33", 3),
    "TH3.10": ("0 0 0; I21 0 0; 0 0 I33", 2),
    "TH3.11": ("0 0 0; I21 0 0; 0 0 I33", 2),
    "TH3.12": ("0 0 0; I21 I23 0; 0 0 0", 2),
    "TH3.13": ("0 0 0; I21 I23 0; 0 0 0", 2),
    "TH3.14": ("0 0 0; I21 I23 0; 0 0 0", 3),
    "TH3.15": ("0 0 0; I21 I23 0; 0 0 0", 2),
    "TH3.16": ("0 0 0; I21 I23 0; 0 0 0", 2),
    "TH3.17": ("0 0 0; I21 I23 0; 0 0 0", 2),
    "TH3.18": ("0 0 0; I21 I23 0; 0 0 0", 2),
    "TH3.19": ("I21 0 0; 0 0 0; 0 0 0", 1),
}

# Printed centroid table. '?' marks a cell left blank in print (read as 0).
CENTROID_TABLE: dict[str, tuple[str, int]] = {
    "TH2.1": ("0 0; c21 0", 1),
    "TH2.2": ("0 0; c21 0", 1),
    "TH2.4": ("c11 0; c21 d11", 2),
    "TH2.5": ("c11 0; c21 c11", 2),
    "TH2.6": ("c11 0; c21 c11", 2),
    "TH2.7": ("c11 0; 0 c11", 1),
    "TH2.8": ("c11 0; 0 c11", 1),
    "TH2.10": ("c11 0; 0 0", 1),
    "TH2.11": ("0 0; 0 c22", 1),
    "TH2.12": ("c11 0; 0 0", 1),
    "TH2.13": ("c11 0; 0 c11", 1),
    "TH3.1": ("c11 0 0; 0 c22 c23; 0 -c22 -c23", 3),
    "TH3.2": ("c11 0 0; 0 c22 c23; 0 -c22 -c23", 3),
    "TH3.3": ("0 c12 0; 0 0 0; 0 0 0", 1),
    "TH3.4": ("c11 0 c13; 0 0 0; 0 0 c11", 2),
    "TH3.5": ("0 0 0; 0 c22 ?; 0 0 c33", 2),
    "TH3.6": ("c11 0 c13; 0 c22 0; -c11 0 -c13", 3),
    "TH3.7": ("c11 c12 0; -c11 -c12 0; 0 0 c33", 3),
    "TH3.8": ("c11 c12 0; -c11 -c12 0; 0 0 c33", 3),
    "TH3.10": ("0 0 0; c21 0 0; 0 0 c33", 2),
    "TH3.11": ("0 0 0; c21 0 0; 0 0 c33", 2),
    "TH3.12": ("0 0 0; c21 c23 0; 0 0 0", 2),
    "TH3.13": ("0 0 0; c21 c23 0; 0 0 0", 2),
    "TH3.14": ("c11 0 0; c21 c11 c23; -c11 0 0", 3),
    "TH3.15": ("0 0 0; c21 0 c23; 0 0 0", 2),
    "TH3.16": ("0 0 0; c21 0 c23; 0 0 0", 2),
    "TH3.17": ("0 0 0; c21 0 c23; 0 0 0", 2),
    "TH3.18": ("0 0 0; c21 0 c23; 0 0 0", 2),
    "TH3.20": ("0 0 0; c21 0 0; c31 c21 0", 2),
    "TH3.21": ("0 0 0; c21 0 0; c31 c21 0", 2),
}


@dataclass(frozen=True)
class PrintedPattern:
    """A printed solution matrix: cells are 0 or ``±symbol``."""

    dim: int
    cells: tuple  # tuple of rows; each cell is (sign, symbol) or None
    printed_dim: int
    blanks: tuple = ()

    @classmethod
    def parse(cls, text: str, printed_dim: int) -> "PrintedPattern":
        rows, blanks = [], []
        for r, row in enumerate(text.split(";")):
            cells = []
            for c, tok in enumerate(row.split()):
                if tok in ("0", "?"):
                    if tok == "?":
                        blanks.append((r, c))
                    cells.append(None)
                elif tok.startswith("-"):
                    cells.append((-1, tok[1:]))
                else:
                    cells.append((1, tok))
            rows.append(tuple(cells))
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError(f"pattern is not square: {text!r}")
        return cls(n, tuple(rows), printed_dim, tuple(blanks))

    @property
    def symbols(self) -> list[str]:
        seen: list[str] = []
        for row in self.cells:
            for cell in row:
                if cell and cell[1] not in seen:
                    seen.append(cell[1])
        return seen

    def basis(self) -> list[tuple]:
        """Row-major vectorised spanning set, one matrix per free symbol.

        Printed row ``p`` lists the image of ``e_p``, so printed cell ``(p, q)``
        is unknown ``X[q][p]``.
        """
        out = []
        n = self.dim
        for s in self.symbols:
            v = [ZERO] * (n * n)
            for r, row in enumerate(self.cells):
                for c, cell in enumerate(row):
                    if cell and cell[1] == s:
                        v[c * n + r] = Fraction(cell[0])
            out.append(tuple(v))
        return out

    @property
    def pattern_dim(self) -> int:
        return len(self.symbols)

    @property
    def self_consistent(self) -> bool:
        return self.pattern_dim == self.printed_dim


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    dim: int
    lines: tuple[str, ...]
    params: tuple[str, ...] = ()
    samples: tuple = ()
    resolutions: tuple = field(default=())  # (line index, printed, used, note)

    @property
    def defaults(self) -> dict[str, Fraction]:
        return {p: Fraction(1) for p in self.params}

    def assignments(self) -> list[dict[str, Fraction]]:
        if not self.params:
            return [{}]
        return [dict(zip(self.params, s)) for s in self.samples]

    def resolved_lines(self) -> list[str]:
        used = list(self.lines)
        for idx, _, replacement, _ in self.resolutions:
            used[idx] = replacement
        return used

    def instantiate(self, assignment: Mapping[str, object] | None = None) -> HomTrialgebra:
        values = dict(self.defaults)
        for name, value in (assignment or {}).items():
            if name not in values:
                raise KeyError(f"{self.id} has no parameter {name!r}")
            values[name] = scalar(value)
        table, alpha_cols = [], [[ZERO] * self.dim for _ in range(self.dim)]
        for line in self.resolved_lines():
            m = _LINE.match(line)
            if m:
                i, sym, j, rhs = m.groups()
                table.append((_OPS[sym], int(i) - 1, int(j) - 1, _linear(rhs, self.dim, values)))
                continue
            m = _ALPHA.match(line)
            if not m:
                raise ValueError(f"{self.id}: unreadable line {line!r}")
            i, rhs = m.groups()
            alpha_cols[int(i) - 1] = _linear(rhs, self.dim, values)
        label = self.id
        if self.params:
            label += "[" + ",".join(f"{p}={values[p]}" for p in self.params) + "]"
        A = from_tables(self.dim, table, alpha_cols, label)
        return A.relabel(label, {"catalog": self.id, "params": {p: str(values[p]) for p in self.params}})

    def manifest(self) -> dict:
        counts = {op.value: 0 for op in _OPS.values()}
        alpha = 0
        for line in self.resolved_lines():
            m = _LINE.match(line)
            if m:
                counts[_OPS[m.group(2)].value] += 1
            else:
                alpha += 1
        return {
            "id": self.id,
            "dim": self.dim,
            "printed_lines": len(self.lines),
            "products": counts,
            "alpha_lines": alpha,
            "params": list(self.params),
            "resolutions": [
                {"line": idx + 1, "printed": printed, "used": used, "note": note}
                for idx, printed, used, note in self.resolutions
            ],
        }


def _linear(text: str, n: int, values: Mapping[str, Fraction]) -> list[Fraction]:
    out = [ZERO] * n
    pos = 0
    stripped = text.replace(" ", "")
    for m in _TERM.finditer(stripped):
        if m.start() != pos:
            raise ValueError(f"cannot parse linear expression {text!r}")
        pos = m.end()
        sign, coeff, k = m.groups()
        if coeff == "":
            value = Fraction(1)
        elif coeff.isdigit():
            value = Fraction(int(coeff))
        else:
            value = values[coeff]
        out[int(k) - 1] += -value if sign == "-" else value
    if pos != len(stripped):
        raise ValueError(f"cannot parse linear expression {text!r}")
    return out


def _build() -> dict[str, CatalogEntry]:
    entries = {}
    for eid, (dim, text) in _TABLES.items():
        lines = tuple(s.strip() for s in text.split(";"))
        res = tuple((idx, lines[idx], used, note)
                    for (rid, idx), (used, note) in sorted(RESOLUTIONS.items()) if rid == eid)
        params, samples = PARAMETERS.get(eid, ((), ()))
        entries[eid] = CatalogEntry(eid, dim, lines, params, samples, res)
    return entries


ENTRIES: dict[str, CatalogEntry] = _build()
INNER_PATTERNS = {k: PrintedPattern.parse(*v) for k, v in INNER_TABLE.items()}
CENTROID_PATTERNS = {k: PrintedPattern.parse(*v) for k, v in CENTROID_TABLE.items()}


def list_entries(dim: int | None = None) -> list[str]:
    return [k for k, e in ENTRIES.items() if dim is None or e.dim == dim]


def get(entry_id: str) -> CatalogEntry:
    key = normalize_id(entry_id)
    try:
        return ENTRIES[key]
    except KeyError:
        raise KeyError(f"unknown catalog entry {entry_id!r}") from None


def normalize_id(entry_id: str) -> str:
    m = re.fullmatch(r"\s*TH_?(\d)[._^]?(\d+)\s*", entry_id, flags=re.IGNORECASE)
    return f"TH{m.group(1)}.{int(m.group(2))}" if m else entry_id


def instantiate(entry_id: str, assignment: Mapping[str, object] | None = None) -> HomTrialgebra:
    return get(entry_id).instantiate(assignment)


def manifest() -> list[dict]:
    return [e.manifest() for e in ENTRIES.values()]


def data_dir() -> Path:
    return Path(__file__).with_name("data")


def export(directory: str | Path | None = None) -> list[Path]:
    """Write one algebra file per entry at its default assignment."""
    directory = Path(directory) if directory is not None else data_dir()
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for eid, entry in ENTRIES.items():
        path = directory / f"{eid}.json"
        path.write_text(dumps(entry.instantiate()))
        written.append(path)
    return written


def sample_assignments(entry_id: str) -> list[dict[str, Fraction]]:
    return get(entry_id).assignments()


def entries_with_patterns(table: Mapping[str, PrintedPattern]) -> Sequence[str]:
    return [k for k in ENTRIES if k in table]


# --- verification ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PatternComparison:
    """A computed solution space set against a printed table row."""

    table: str
    computed_dim: int
    printed_dim: int
    pattern_dim: int
    pattern_matches: bool

    @property
    def dim_matches(self) -> bool:
        return self.computed_dim == self.printed_dim

    @property
    def self_consistent(self) -> bool:
        return self.pattern_dim == self.printed_dim

    def to_json(self) -> dict:
        return {
            "table": self.table,
            "computed_dim": self.computed_dim,
            "printed_dim": self.printed_dim,
            "pattern_dim": self.pattern_dim,
            "pattern_matches": self.pattern_matches,
            "dim_matches": self.dim_matches,
            "self_consistent": self.self_consistent,
        }


def compare_pattern(table: str, pattern: PrintedPattern, space) -> PatternComparison:
    computed = space.vectors()
    return PatternComparison(table, space.dimension, pattern.printed_dim, pattern.pattern_dim,
                             same_span(pattern.basis(), computed))


@dataclass(frozen=True)
class EntryCheck:
    entry: str
    label: str
    assignment: tuple  # ((name, value), ...)
    axioms: tuple
    multiplicative: tuple
    dims: dict
    comparisons: tuple = ()

    @property
    def trialgebra(self) -> bool:
        return all(r.passed for r in self.axioms)

    @property
    def is_multiplicative(self) -> bool:
        return all(r.passed for r in self.multiplicative)

    def to_json(self) -> dict:
        return {
            "entry": self.entry,
            "label": self.label,
            "assignment": {k: str(v) for k, v in self.assignment},
            "axioms": {r.identity: r.passed for r in self.axioms},
            "multiplicative": {r.identity: r.passed for r in self.multiplicative},
            "dims": dict(self.dims),
            "comparisons": [c.to_json() for c in self.comparisons],
        }


@dataclass(frozen=True)
class Discrepancy:
    entry: str
    label: str
    kind: str
    detail: dict

    def to_json(self) -> dict:
        return {"entry": self.entry, "label": self.label, "kind": self.kind, "detail": self.detail}

    def render(self) -> str:
        parts = ", ".join(f"{k}={v}" for k, v in self.detail.items())
        return f"{self.label:<20} {self.kind:<31} {parts}"


@dataclass(frozen=True)
class DiscrepancyReport:
    checks: tuple[EntryCheck, ...]
    discrepancies: tuple[Discrepancy, ...]

    def check(self, label_or_id: str) -> EntryCheck:
        return next(c for c in self.checks if label_or_id in (c.label, c.entry))

    def of_kind(self, kind: str) -> list[Discrepancy]:
        return [d for d in self.discrepancies if d.kind == kind]

    def to_json(self) -> dict:
        return {
            "entries": len({c.entry for c in self.checks}),
            "assignments": len(self.checks),
            "checks": [c.to_json() for c in self.checks],
            "discrepancies": [d.to_json() for d in self.discrepancies],
        }

    def render(self) -> str:
        lines = [f"{len(self.checks)} assignments over {len({c.entry for c in self.checks})} entries",
                 f"{sum(c.trialgebra for c in self.checks)} of {len(self.checks)} pass all nine axioms", ""]
        lines.append(f"{'label':<20} {'axioms':<7} {'mult':<5} {'der-':>4} {'der+':>4} {'cent':>4} {'inner':>5}")
        for c in self.checks:
            d = c.dims
            lines.append(f"{c.label:<20} {'ok' if c.trialgebra else 'FAIL':<7} "
                         f"{'yes' if c.is_multiplicative else 'no':<5} {d['der_minus']:>4} "
                         f"{d['der_plus']:>4} {d['centroid']:>4} {d['inner_span']:>5}")
        lines += ["", f"{len(self.discrepancies)} discrepancies"]
        lines += [d.render() for d in self.discrepancies]
        return "\n".join(lines)


def check_entry(entry_id: str, assignment: Mapping[str, object] | None = None,
                compare: bool = True) -> tuple[EntryCheck, list[Discrepancy]]:
    """Axioms, multiplicativity and subspace dimensions for one assignment."""
    from . import axioms, subspaces

    entry = get(entry_id)
    A = entry.instantiate(assignment)
    ax = tuple(axioms.check_triassociativity(A))
    mult = tuple(axioms.check_multiplicative(A))
    der_minus = subspaces.derivation_space(A, subspaces.MINUS)
    der_plus = subspaces.derivation_space(A, subspaces.PLUS)
    cent, quad = subspaces.centroid_space(A)
    dims = {
        "der_minus": der_minus.dimension,
        "der_plus": der_plus.dimension,
        "centroid": cent.dimension,
        "inner_span": subspaces.inner_span(A).dimension,
        "centroid_quadratic_ok": sum(q.holds for q in quad),
    }
    found: list[Discrepancy] = []
    label = A.label

    def note(kind, **detail):
        found.append(Discrepancy(entry.id, label, kind, detail))

    for r in ax:
        if not r.passed:
            w = r.witnesses[0]
            note("axiom-failure", identity=r.identity, witnesses=len(r.witnesses),
                 triple="e%d,e%d,e%d" % tuple(i + 1 for i in w.triple), component=w.component + 1,
                 lhs=str(w.lhs), rhs=str(w.rhs))
    for r in mult:
        if not r.passed:
            w = r.witnesses[0]
            note("not-multiplicative", identity=r.identity, witnesses=len(r.witnesses),
                 pair="e%d,e%d" % tuple(i + 1 for i in w.triple), component=w.component + 1)
    comparisons = []
    if compare:
        for table, patterns, space in (("inner", INNER_PATTERNS, der_minus), ("centroid", CENTROID_PATTERNS, cent)):
            if entry.id not in patterns:
                continue
            cmp = compare_pattern(table, patterns[entry.id], space)
            comparisons.append(cmp)
            if not cmp.pattern_matches:
                note(f"{table}-pattern-mismatch", computed_dim=cmp.computed_dim, pattern_dim=cmp.pattern_dim)
            if not cmp.dim_matches:
                note(f"{table}-dim-mismatch", computed_dim=cmp.computed_dim, printed_dim=cmp.printed_dim)
            if not cmp.self_consistent:
                note(f"{table}-printed-self-conflict", pattern_dim=cmp.pattern_dim,
                     printed_dim=cmp.printed_dim, computed_dim=cmp.computed_dim)
    check = EntryCheck(entry.id, label, tuple(A.provenance["params"].items()) if entry.params else (),
                       ax, mult, dims, tuple(comparisons))
    return check, found


def verify_catalog(samples: bool = True) -> DiscrepancyReport:
    """Check every entry at its defaults (and sample assignments when ``samples``).

    Printed tables are compared at the default assignment only; they are
    stated for generic parameter values.
    """
    checks, found = [], []
    for eid, entry in ENTRIES.items():
        assignments = entry.assignments() if samples else [entry.defaults]
        for k, assignment in enumerate(assignments):
            compare = assignment == entry.defaults or (not entry.params)
            check, disc = check_entry(eid, assignment, compare=compare)
            checks.append(check)
            found.extend(disc)
    return DiscrepancyReport(tuple(checks), tuple(found))
