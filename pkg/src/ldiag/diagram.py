"""Labelled diagrams as packed weight matrices.

Rows are white spots, columns are black spots, and entry ``(i, j)`` counts the
lines joining white spot ``i`` to black spot ``j``.  A matrix is *packed* when
no row and no column is identically zero; the 0x0 matrix is the empty diagram.
"""
from __future__ import annotations

import itertools
import os
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .errors import (
    BoundExceededError,
    ColumnIndexError,
    ParseError,
    RaggedError,
    UnpackedError,
)

Rows = tuple[tuple[int, ...], ...]

DEFAULT_MAX_WEIGHT = 5
MAX_WEIGHT_ENV = "LDIAG_MAX_WEIGHT"


@dataclass(frozen=True, eq=False)
class WeightMatrix:
    """A packed non-negative integer matrix (a labelled diagram).

    Build instances through :func:`validate`, :func:`parse_matrix` or the
    operations of this module; the constructor does not re-check packedness.
    """

    rows: Rows

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightMatrix):
            return NotImplemented
        return self is other or self.rows == other.rows

    def __hash__(self) -> int:
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash(self.rows)
            object.__setattr__(self, "_hash", h)
        return h

    @property
    def p(self) -> int:
        return len(self.rows)

    @property
    def q(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def is_empty(self) -> bool:
        return not self.rows

    @cached_property
    def columns(self) -> Rows:
        return tuple(zip(*self.rows))

    @cached_property
    def total_weight(self) -> int:
        return sum(map(sum, self.rows))

    def row_weights(self) -> tuple[int, ...]:
        return tuple(map(sum, self.rows))

    def column_weights(self) -> tuple[int, ...]:
        return tuple(map(sum, self.columns))

    def flattening(self) -> tuple[int, ...]:
        return tuple(itertools.chain.from_iterable(self.rows))

    @cached_property
    def sort_key(self) -> tuple:
        """Graded-lex key ``(total_weight, p, q, row-major flattening)``."""
        return (self.total_weight, self.p, self.q, self.flattening())

    def __lt__(self, other: WeightMatrix) -> bool:
        return self.sort_key < other.sort_key

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        return format_matrix(self)

    def __repr__(self) -> str:
        return f"WeightMatrix({format_matrix(self)!r})"


EMPTY = WeightMatrix(())


def validate(entries: Iterable[Sequence[int]]) -> WeightMatrix:
    """Check a grid and wrap it as a :class:`WeightMatrix`.

    Raises :class:`RaggedError` for rows of unequal length and
    :class:`UnpackedError` for a zero row or zero column.  ``[]`` is the empty
    diagram; a grid of empty rows (p x 0) is unpacked.
    """
    rows = tuple(tuple(int(x) for x in r) for r in entries)
    if not rows:
        return EMPTY
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise RaggedError(f"rows have unequal lengths: {[len(r) for r in rows]}")
    if any(x < 0 for r in rows for x in r):
        raise ValueError("weights must be non-negative")
    if width == 0:
        raise UnpackedError("p x 0 grid with p > 0 has zero rows")
    for i, r in enumerate(rows):
        if not any(r):
            raise UnpackedError(f"row {i + 1} is zero")
    for j, c in enumerate(zip(*rows)):
        if not any(c):
            raise UnpackedError(f"column {j + 1} is zero")
    return WeightMatrix(rows)


def _from_columns(columns: Sequence[Sequence[int]], p: int) -> WeightMatrix:
    if not columns:
        return EMPTY
    return WeightMatrix(tuple(zip(*columns)))


def concat(d1: WeightMatrix, d2: WeightMatrix) -> WeightMatrix:
    """Block-diagonal product ``[d1|d2]``: d2 placed below-right of d1."""
    if d1.is_empty:
        return d2
    if d2.is_empty:
        return d1
    pad1 = (0,) * d2.q
    pad2 = (0,) * d1.q
    return WeightMatrix(
        tuple(r + pad1 for r in d1.rows) + tuple(pad2 + r for r in d2.rows)
    )


def concat_all(ds: Iterable[WeightMatrix]) -> WeightMatrix:
    out = EMPTY
    for d in ds:
        out = concat(out, d)
    return out


@lru_cache(maxsize=None)
def restrict_columns(d: WeightMatrix, cols: tuple[int, ...]) -> WeightMatrix:
    """Keep the 0-based columns ``cols`` (in the order given), drop zero rows."""
    if any(j < 0 or j >= d.q for j in cols):
        raise ColumnIndexError(f"column index out of range for q={d.q}: {cols}")
    kept = []
    for r in d.rows:
        sub = tuple(r[j] for j in cols)
        if any(sub):
            kept.append(sub)
    return WeightMatrix(tuple(kept))


@lru_cache(maxsize=None)
def restrict_rows(d: WeightMatrix, rows: tuple[int, ...]) -> WeightMatrix:
    """Keep the 0-based rows ``rows``, drop columns that become zero."""
    if any(i < 0 or i >= d.p for i in rows):
        raise IndexError(f"row index out of range for p={d.p}: {rows}")
    sub = [d.rows[i] for i in rows]
    keep = [j for j in range(d.q) if any(r[j] for r in sub)]
    return WeightMatrix(tuple(tuple(r[j] for j in keep) for r in sub))


# -- unlabelled diagrams -----------------------------------------------------


@dataclass(frozen=True)
class UnlabelledDiagram:
    """Orbit of a weight matrix under row and column permutations.

    ``canon`` is the member with the lexicographically smallest row-major
    flattening.
    """

    canon: WeightMatrix

    def __str__(self) -> str:
        return format_matrix(self.canon)


@lru_cache(maxsize=None)
def canonical_unlabel(d: WeightMatrix) -> UnlabelledDiagram:
    if d.is_empty:
        return UnlabelledDiagram(EMPTY)
    cols = d.columns
    best: Rows | None = None
    # For a fixed column order the best row order is the sorted one, so only
    # column permutations are searched.
    for perm in itertools.permutations(range(d.q)):
        cand = tuple(sorted(tuple(cols[j][i] for j in perm) for i in range(d.p)))
        if best is None or cand < best:
            best = cand
    return UnlabelledDiagram(WeightMatrix(best))


def concat_unlabelled(u1: UnlabelledDiagram, u2: UnlabelledDiagram) -> UnlabelledDiagram:
    """The product ``[u1|u2]_D`` on unlabelled diagrams."""
    return canonical_unlabel(concat(u1.canon, u2.canon))


# -- monomials ---------------------------------------------------------------


def _clean(counts: dict[int, int]) -> dict[int, int]:
    return {k: v for k, v in sorted(counts.items()) if v}


@dataclass(frozen=True, eq=False)
class Monomial:
    """Exponents of ``L^alpha V^beta``: spot-degree -> number of spots."""

    alpha: dict[int, int]
    beta: dict[int, int]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.alpha == other.alpha and self.beta == other.beta

    def __hash__(self) -> int:
        return hash((tuple(self.alpha.items()), tuple(self.beta.items())))

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(
            _clean(Counter(self.alpha) + Counter(other.alpha)),
            _clean(Counter(self.beta) + Counter(other.beta)),
        )

    def __str__(self) -> str:
        parts = []
        for var, exps in (("L", self.alpha), ("V", self.beta)):
            for deg, cnt in exps.items():
                parts.append(f"{var}{deg}" + (f"^{cnt}" if cnt > 1 else ""))
        return " ".join(parts) if parts else "1"


def monomial_of(d: WeightMatrix) -> Monomial:
    """White and black spot types of ``d``, counted by degree."""
    return Monomial(
        _clean(Counter(d.row_weights())), _clean(Counter(d.column_weights()))
    )


# -- enumeration -------------------------------------------------------------


def configured_max_weight() -> int:
    raw = os.environ.get(MAX_WEIGHT_ENV)
    return int(raw) if raw else DEFAULT_MAX_WEIGHT


def _packed_grids(n: int, p: int, q: int) -> Iterable[Rows]:
    """Row-major fill of p x q grids of sum n, pruned on packedness."""
    cells = p * q
    grid = [0] * cells
    col_hit = [0] * q

    def fill(k: int, remaining: int, row_nonzero: bool):
        if k == cells:
            if remaining == 0 and all(col_hit):
                yield tuple(tuple(grid[i * q:(i + 1) * q]) for i in range(p))
            return
        i, j = divmod(k, q)
        if j == 0:
            row_nonzero = False
        rows_after = p - i - 1
        last_in_row = j == q - 1
        for v in range(remaining, -1, -1):
            if last_in_row and not row_nonzero and v == 0:
                continue
            rest = remaining - v
            zero_cols = sum(1 for c in range(q) if not col_hit[c] and not (c == j and v))
            if rest < rows_after + (0 if (row_nonzero or v) or last_in_row else 1):
                continue
            if rest < zero_cols:
                continue
            grid[k] = v
            if v:
                col_hit[j] += 1
            yield from fill(k + 1, rest, row_nonzero or v > 0)
            if v:
                col_hit[j] -= 1
        grid[k] = 0

    yield from fill(0, n, False)


def enumerate_by_weight(n: int, bound: int | None = None) -> list[WeightMatrix]:
    """All packed matrices of total weight ``n`` in graded-lex order."""
    cap = configured_max_weight() if bound is None else bound
    if n < 0:
        raise ValueError("weight must be non-negative")
    if n > cap:
        raise BoundExceededError(f"weight {n} exceeds enumeration cap {cap}")
    if n == 0:
        return [EMPTY]
    out = []
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            if max(p, q) > n:
                continue
            out.extend(WeightMatrix(g) for g in _packed_grids(n, p, q))
    out.sort()
    return out


def deck(max_weight: int, bound: int | None = None) -> list[WeightMatrix]:
    """All diagrams of total weight ``0..max_weight``."""
    return [d for n in range(max_weight + 1) for d in enumerate_by_weight(n, bound)]


# -- factorization -----------------------------------------------------------


def _first_split(d: WeightMatrix) -> tuple[int, int] | None:
    top_max = -1
    for k in range(1, d.p):
        row = d.rows[k - 1]
        top_max = max(top_max, max(j for j, x in enumerate(row) if x))
        l = top_max + 1
        if l >= d.q:
            return None
        if all(not any(r[:l]) for r in d.rows[k:]):
            return k, l
    return None


def factor_irreducibles(d: WeightMatrix) -> list[WeightMatrix]:
    """Unique factorization of ``d`` into concatenation-irreducible diagrams."""
    factors = []
    while not d.is_empty:
        split = _first_split(d)
        if split is None:
            factors.append(d)
            break
        k, l = split
        factors.append(WeightMatrix(tuple(r[:l] for r in d.rows[:k])))
        d = WeightMatrix(tuple(r[l:] for r in d.rows[k:]))
    return factors


def is_irreducible(d: WeightMatrix) -> bool:
    return not d.is_empty and _first_split(d) is None


# -- text format -------------------------------------------------------------


def format_matrix(d: WeightMatrix) -> str:
    if d.is_empty:
        return "e"
    return "; ".join(" ".join(map(str, r)) for r in d.rows)


def parse_matrix(s: str) -> WeightMatrix:
    """Parse ``"1 0; 0 2"`` style text; ``"e"`` is the empty diagram."""
    text = s.strip()
    if text == "e":
        return EMPTY
    if not text:
        raise ParseError("empty input (use 'e' for the empty diagram)")
    rows = []
    for chunk in text.split(";"):
        fields = chunk.split()
        if not fields:
            raise ParseError(f"empty row in {s!r}")
        try:
            row = [int(f) for f in fields]
        except ValueError as exc:
            raise ParseError(f"non-integer entry in {s!r}") from exc
        if any(x < 0 for x in row):
            raise ParseError(f"negative entry in {s!r}")
        rows.append(row)
    return validate(rows)
