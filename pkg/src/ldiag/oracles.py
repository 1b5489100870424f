"""Independent checks: brute-force MQSym product, quasi-shuffle, Euler-Zagier sums.

Nothing here shares a code path with :mod:`ldiag.product`.
"""
from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache
from typing import Iterable

import numpy as np

from .diagram import WeightMatrix, restrict_rows
from .formal import DiagramSum

Composition = tuple[int, ...]


def mqsym_oracle_product(a: WeightMatrix, b: WeightMatrix) -> DiagramSum:
    """Sum of all packed C whose top rows pack to ``a`` and bottom rows to ``b``.

    Columns of C are classified as top-only, bottom-only or both; every type
    word with the right counts is assembled and then filtered by restriction.
    """
    pa, pb = a.p, b.p
    top, bottom = a.columns, b.columns
    za, zb = (0,) * pa, (0,) * pb
    found = Counter()
    for n in range(max(a.q, b.q), a.q + b.q + 1):
        for word in itertools.product("TBX", repeat=n):
            if word.count("T") + word.count("X") != a.q:
                continue
            if word.count("B") + word.count("X") != b.q:
                continue
            ta, tb = iter(top), iter(bottom)
            cols = []
            for t in word:
                upper = next(ta) if t in "TX" else za
                lower = next(tb) if t in "BX" else zb
                cols.append(upper + lower)
            rows = tuple(tuple(c[i] for c in cols) for i in range(pa + pb))
            c = WeightMatrix(rows) if rows else WeightMatrix(())
            if not _packed(c):
                continue
            if restrict_rows(c, tuple(range(pa))) != a:
                continue
            if restrict_rows(c, tuple(range(pa, pa + pb))) != b:
                continue
            found[c] = 1
    return DiagramSum(found)


def _packed(c: WeightMatrix) -> bool:
    return all(any(r) for r in c.rows) and all(any(col) for col in zip(*c.rows))


# -- quasi-shuffle -----------------------------------------------------------


@lru_cache(maxsize=None)
def quasi_shuffle(u: Composition, v: Composition) -> dict[Composition, int]:
    """Hoffman's quasi-shuffle (stuffle) of two compositions."""
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    a, b = u[0], v[0]
    acc: Counter = Counter()
    for w, c in quasi_shuffle(u[1:], v).items():
        acc[(a,) + w] += c
    for w, c in quasi_shuffle(u, v[1:]).items():
        acc[(b,) + w] += c
    for w, c in quasi_shuffle(u[1:], v[1:]).items():
        acc[(a + b,) + w] += c
    return dict(acc)


def black_weight_word(d: WeightMatrix) -> Composition:
    """Column sums of ``d``, left to right."""
    return d.column_weights()


def project_words(x: DiagramSum) -> dict[Composition, int]:
    """Linear extension of :func:`black_weight_word` on integer-valued sums."""
    acc: Counter = Counter()
    for d, c in x.items():
        if not c.is_constant():
            raise ValueError("projection needs specialized (constant) coefficients")
        acc[black_weight_word(d)] += c.terms.get((0, 0), 0)
    return {w: c for w, c in acc.items() if c}


def parse_composition(s: str) -> Composition:
    s = s.strip()
    if not s:
        return ()
    parts = tuple(int(x) for x in s.split(","))
    if any(p < 1 for p in parts):
        raise ValueError(f"composition parts must be positive: {s!r}")
    return parts


def format_word_sum(terms: dict[Composition, int]) -> str:
    def key(w):
        return (sum(w), len(w), w)

    lines = []
    for w in sorted(terms, key=key):
        lines.append(f"{terms[w]} :: ({','.join(map(str, w))})")
    return "\n".join(lines) if lines else "0"


# -- Euler-Zagier sums -------------------------------------------------------


def mzv_truncated(s: Iterable[int], n_max: int) -> float:
    """``sum over n_max >= n1 > n2 > ... > nk >= 1 of prod n_i ** -s_i``."""
    s = tuple(s)
    if any(x < 1 for x in s):
        raise ValueError("parts must be >= 1")
    if not s:
        return 1.0
    n = np.arange(1, n_max + 1, dtype=np.float64)
    # inner[m] holds the sum over the tail of the index with largest index m+1.
    inner = n ** (-float(s[-1]))
    for part in reversed(s[:-1]):
        below = np.concatenate(([0.0], np.cumsum(inner)[:-1]))
        inner = n ** (-float(part)) * below
    return float(inner.sum())


def stuffle_check(a: int, b: int, n_max: int) -> float:
    """``|Z(a) Z(b) - Z(a,b) - Z(b,a) - Z(a+b)|`` with truncated sums ``Z``."""
    z = lambda *t: mzv_truncated(t, n_max)  # noqa: E731
    return abs(z(a) * z(b) - z(a, b) - z(b, a) - z(a + b))
