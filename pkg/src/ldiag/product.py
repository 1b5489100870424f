"""The two-parameter deformed product on labelled diagrams.

For basis diagrams ``d1`` and ``d2`` the product sums over every way of
interleaving the black spots (columns) of ``d2`` among those of ``d1``, with
optional superposition of a ``d2`` column onto a ``d1`` column.  The white
spots of ``d2`` always sit below those of ``d1``.  A term is weighted by

* ``qc ** sum(w1(i) * w2(j))`` over pairs where column ``j`` of ``d2`` lands
  strictly left of column ``i`` of ``d1`` (each pair contributes the number of
  line crossings it creates), and
* ``qs ** sum(w1(i) * w2(j))`` over superposed pairs ``(i, j)``,

where ``w`` is a column sum.  At ``(0, 0)`` only plain concatenation survives.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .diagram import WeightMatrix, _from_columns
from .errors import PlacementError
from .formal import DiagramSum
from .poly import DeformPoly

Slot = Union[tuple[str, int], tuple[str, int, int]]


@dataclass(frozen=True)
class Placement:
    """One interleaving-with-merges of two column sequences.

    Slots are ``("A", i)``, ``("B", j)`` or ``("M", i, j)`` with 0-based
    column indices of ``d1`` (``i``) and ``d2`` (``j``).
    """

    slots: tuple[Slot, ...]

    def left_indices(self) -> list[int]:
        return [s[1] for s in self.slots if s[0] in ("A", "M")]

    def right_indices(self) -> list[int]:
        return [s[-1] for s in self.slots if s[0] in ("B", "M")]

    def __str__(self) -> str:
        def fmt(s: Slot) -> str:
            if s[0] == "M":
                return f"M({s[1] + 1},{s[2] + 1})"
            return f"{s[0]}{s[1] + 1}"

        return "[" + ", ".join(fmt(s) for s in self.slots) + "]"


@lru_cache(maxsize=None)
def _placements(q1: int, q2: int) -> tuple[Placement, ...]:
    out: list[Placement] = []

    def rec(i: int, j: int, acc: list[Slot]) -> None:
        if i == q1 and j == q2:
            out.append(Placement(tuple(acc)))
            return
        if i < q1:
            rec(i + 1, j, acc + [("A", i)])
        if j < q2:
            rec(i, j + 1, acc + [("B", j)])
        if i < q1 and j < q2:
            rec(i + 1, j + 1, acc + [("M", i, j)])

    rec(0, 0, [])
    return tuple(out)


def enumerate_placements(d1: WeightMatrix, d2: WeightMatrix) -> list[Placement]:
    """Every placement for the pair, in a fixed order (A before B before M)."""
    return list(_placements(d1.q, d2.q))


def placement_count(q1: int, q2: int) -> int:
    return len(_placements(q1, q2))


def realize(
    pl: Placement, d1: WeightMatrix, d2: WeightMatrix
) -> tuple[WeightMatrix, DeformPoly]:
    """The diagram and the ``qc^a qs^b`` coefficient of one placement."""
    if pl.left_indices() != list(range(d1.q)) or pl.right_indices() != list(range(d2.q)):
        raise PlacementError(f"{pl} is not a placement for q1={d1.q}, q2={d2.q}")
    return _realize(pl, d1, d2)


def _realize(
    pl: Placement, d1: WeightMatrix, d2: WeightMatrix
) -> tuple[WeightMatrix, DeformPoly]:
    c1, c2 = d1.columns, d2.columns
    w1, w2 = d1.column_weights(), d2.column_weights()
    z1, z2 = (0,) * d1.p, (0,) * d2.p

    # Weight of d1 columns in slots strictly after each slot.
    after = [0] * (len(pl.slots) + 1)
    for k in range(len(pl.slots) - 1, -1, -1):
        s = pl.slots[k]
        after[k] = after[k + 1] + (w1[s[1]] if s[0] in ("A", "M") else 0)

    cols = []
    cross = over = 0
    for k, s in enumerate(pl.slots):
        if s[0] == "A":
            cols.append(c1[s[1]] + z2)
        elif s[0] == "B":
            cols.append(z1 + c2[s[1]])
            cross += w2[s[1]] * after[k + 1]
        else:
            _, i, j = s
            cols.append(c1[i] + c2[j])
            cross += w2[j] * after[k + 1]
            over += w1[i] * w2[j]
    return _from_columns(cols, d1.p + d2.p), DeformPoly.monomial(cross, over)


@lru_cache(maxsize=None)
def basis_product(d1: WeightMatrix, d2: WeightMatrix) -> DiagramSum:
    """``d1 * d2`` for basis diagrams, with symbolic coefficients."""
    return DiagramSum(_realize(pl, d1, d2) for pl in _placements(d1.q, d2.q))


@lru_cache(maxsize=None)
def specialized_basis_product(
    d1: WeightMatrix, d2: WeightMatrix, qc0: int, qs0: int
) -> DiagramSum:
    return basis_product(d1, d2).evaluate(qc0, qs0)


def deformed_product(
    x: DiagramSum | WeightMatrix,
    y: DiagramSum | WeightMatrix,
    qc0: int | None = None,
    qs0: int | None = None,
) -> DiagramSum:
    """Bilinear deformed product.

    Coefficients stay symbolic unless both ``qc0`` and ``qs0`` are given, in
    which case every basis product is specialized before accumulation.
    """
    if isinstance(x, WeightMatrix):
        x = DiagramSum.of(x)
    if isinstance(y, WeightMatrix):
        y = DiagramSum.of(y)
    if (qc0 is None) != (qs0 is None):
        raise ValueError("give both qc0 and qs0, or neither")
    acc: dict = {}
    for d, cx in x.items():
        for e, cy in y.items():
            if qc0 is None:
                term = basis_product(d, e)
            else:
                term = specialized_basis_product(d, e, qc0, qs0)
            coef = cx * cy
            for f, c in term.items():
                acc[f] = acc[f] + coef * c if f in acc else coef * c
    return DiagramSum(acc)
