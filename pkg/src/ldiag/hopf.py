"""Coproducts, counit and antipode at the two endpoint Hopf structures.

``(qc, qs, t) = (0, 0, 0)``: concatenation product with the cocommutative
coproduct splitting the black spots (or, optionally, the white spots) into a
subset and its complement.  ``(1, 1, 1)``: the product at ``qc = qs = 1`` with
deconcatenation of the black-spot sequence.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .diagram import EMPTY, WeightMatrix, format_matrix, restrict_columns, restrict_rows
from .errors import UnverifiedStructureError
from .formal import DiagramSum, TensorSum
from .poly import ONE, ZERO, DeformPoly
from .product import specialized_basis_product

BLACK_SPLIT = "black-split"
WHITE_SPLIT = "white-split"


@dataclass(frozen=True)
class HopfStructure:
    qc0: int
    qs0: int
    t: int
    coproduct_variant: str = BLACK_SPLIT

    def __post_init__(self):
        if self.t not in (0, 1):
            raise ValueError("t must be 0 or 1; no coproduct is defined in between")
        if self.coproduct_variant not in (BLACK_SPLIT, WHITE_SPLIT):
            raise ValueError(f"unknown coproduct variant {self.coproduct_variant!r}")
        if self.t == 1 and self.coproduct_variant != BLACK_SPLIT:
            raise ValueError("the t=1 coproduct only cuts black spots")

    @property
    def verified(self) -> bool:
        return (self.qc0, self.qs0, self.t) in ((0, 0, 0), (1, 1, 1))

    def product(self, d1: WeightMatrix, d2: WeightMatrix) -> DiagramSum:
        return specialized_basis_product(d1, d2, self.qc0, self.qs0)

    def coproduct(self, d: WeightMatrix) -> TensorSum:
        if self.t == 1:
            return coproduct_t1(d)
        if self.coproduct_variant == WHITE_SPLIT:
            return coproduct_t0_white(d)
        return coproduct_t0(d)

    def __str__(self) -> str:
        tag = "" if self.coproduct_variant == BLACK_SPLIT else f", {self.coproduct_variant}"
        return f"(qc={self.qc0}, qs={self.qs0}, t={self.t}{tag})"


LDIAG = HopfStructure(0, 0, 0)
MQSYM = HopfStructure(1, 1, 1)
STRUCTURES = {"ldiag": LDIAG, "mqsym": MQSYM}


def _subsets(n: int) -> Iterable[tuple[tuple[int, ...], tuple[int, ...]]]:
    idx = range(n)
    for mask in range(1 << n):
        left = tuple(i for i in idx if mask >> i & 1)
        right = tuple(i for i in idx if not mask >> i & 1)
        yield left, right


@lru_cache(maxsize=None)
def coproduct_t0(d: WeightMatrix) -> TensorSum:
    """Sum over column subsets ``I`` of ``d|I (x) d|complement``."""
    return TensorSum(
        ((restrict_columns(d, i), restrict_columns(d, j)), 1) for i, j in _subsets(d.q)
    )


@lru_cache(maxsize=None)
def coproduct_t0_white(d: WeightMatrix) -> TensorSum:
    """Row-subset variant of :func:`coproduct_t0`."""
    return TensorSum(
        ((restrict_rows(d, i), restrict_rows(d, j)), 1) for i, j in _subsets(d.p)
    )


@lru_cache(maxsize=None)
def coproduct_t1(d: WeightMatrix) -> TensorSum:
    """Deconcatenation of the column sequence: ``q + 1`` cuts."""
    return TensorSum(
        (
            (restrict_columns(d, tuple(range(k))), restrict_columns(d, tuple(range(k, d.q)))),
            1,
        )
        for k in range(d.q + 1)
    )


def counit(x: DiagramSum | WeightMatrix) -> DeformPoly:
    if isinstance(x, WeightMatrix):
        return ONE if x.is_empty else ZERO
    return x[EMPTY]


def antipode(d: WeightMatrix, h: HopfStructure = LDIAG) -> DiagramSum:
    """Antipode by the graded recursion ``S(d) = -d - sum S(d') d''``."""
    if not h.verified:
        raise UnverifiedStructureError(f"no antipode is asserted for {h}")
    return _antipode(d, h)


@lru_cache(maxsize=None)
def _antipode(d: WeightMatrix, h: HopfStructure) -> DiagramSum:
    if d.is_empty:
        return DiagramSum.unit()
    acc = DiagramSum.of(d, -1)
    for (left, right), c in h.coproduct(d).items():
        if left.is_empty or right.is_empty:
            continue
        acc = acc - _multiply(_antipode(left, h), DiagramSum.of(right), h).scale(c)
    return acc


def _multiply(x: DiagramSum, y: DiagramSum, h: HopfStructure) -> DiagramSum:
    acc: dict = {}
    for d, cx in x.items():
        for e, cy in y.items():
            coef = cx * cy
            for f, c in h.product(d, e).items():
                acc[f] = acc.get(f, ZERO) + coef * c
    return DiagramSum(acc)


def convolve_antipode(d: WeightMatrix, h: HopfStructure, side: str = "left") -> DiagramSum:
    """``m(S (x) id) Delta(d)`` (``side="left"``) or ``m(id (x) S) Delta(d)``."""
    acc = DiagramSum()
    for (left, right), c in h.coproduct(d).items():
        if side == "left":
            term = _multiply(_antipode(left, h), DiagramSum.of(right), h)
        else:
            term = _multiply(DiagramSum.of(left), _antipode(right, h), h)
        acc = acc + term.scale(c)
    return acc


# -- axiom harness -------------------------------------------------------------


@dataclass
class AxiomResult:
    passed: bool
    checked: int = 0
    counterexample: list[str] | None = None
    note: str | None = None

    def to_json_obj(self) -> dict:
        out = {"passed": self.passed, "checked": self.checked}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class AxiomReport:
    structure: HopfStructure
    deck_size: int
    axioms: dict[str, AxiomResult] = field(default_factory=dict)
    cocommutative: AxiomResult | None = None

    @property
    def verified_structure(self) -> bool:
        return self.structure.verified

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.axioms.values())

    def failures(self) -> list[str]:
        return [name for name, r in self.axioms.items() if not r.passed]

    def to_json_obj(self) -> dict:
        s = self.structure
        return {
            "structure": {
                "qc": s.qc0,
                "qs": s.qs0,
                "t": s.t,
                "coproduct_variant": s.coproduct_variant,
                "status": "verified" if s.verified else "unverified",
            },
            "deck_size": self.deck_size,
            "all_passed": self.all_passed,
            "axioms": {k: v.to_json_obj() for k, v in self.axioms.items()},
            "cocommutative": self.cocommutative.to_json_obj() if self.cocommutative else None,
        }


def _apply_left(t: TensorSum, f) -> TensorSum:
    """``(f (x) id)`` on a 2-tensor, where ``f`` returns a :class:`TensorSum`."""
    acc: dict = {}
    for (a, b), c in t.items():
        for key, c2 in f(a).items():
            k = key + (b,)
            acc[k] = acc.get(k, ZERO) + c * c2
    return TensorSum(acc)


def _apply_right(t: TensorSum, f) -> TensorSum:
    acc: dict = {}
    for (a, b), c in t.items():
        for key, c2 in f(b).items():
            k = (a,) + key
            acc[k] = acc.get(k, ZERO) + c * c2
    return TensorSum(acc)


def _run(items: Iterable, check) -> AxiomResult:
    n = 0
    for item in items:
        n += 1
        if not check(*item):
            return AxiomResult(False, n, [format_matrix(d) for d in item])
    return AxiomResult(True, n)


def verify_hopf_axioms(deck: Sequence[WeightMatrix], h: HopfStructure) -> AxiomReport:
    """Check the bialgebra and antipode laws exhaustively over ``deck``.

    Single-diagram laws run over ``deck``; compatibility runs over all ordered
    pairs from ``deck``.  Failures are recorded with the first counterexample.
    """
    deck = list(deck)
    report = AxiomReport(h, len(deck))
    delta = h.coproduct
    singles = [(d,) for d in deck]

    def coassoc(d):
        t = delta(d)
        return _apply_left(t, delta) == _apply_right(t, delta)

    def counit_left(d):
        acc = DiagramSum(((b, c * counit(a)) for (a, b), c in delta(d).items()))
        return acc == DiagramSum.of(d)

    def counit_right(d):
        acc = DiagramSum(((a, c * counit(b)) for (a, b), c in delta(d).items()))
        return acc == DiagramSum.of(d)

    def compat(x, y):
        lhs: dict = {}
        for f, c in h.product(x, y).items():
            for key, c2 in delta(f).items():
                lhs[key] = lhs.get(key, ZERO) + c * c2
        rhs = delta(x).componentwise_product(delta(y), h.product)
        return TensorSum(lhs) == rhs

    def antipode_left(d):
        return convolve_antipode(d, h, "left") == DiagramSum.unit().scale(counit(d))

    def antipode_right(d):
        return convolve_antipode(d, h, "right") == DiagramSum.unit().scale(counit(d))

    report.axioms["coassociativity"] = _run(singles, coassoc)
    report.axioms["counit_left"] = _run(singles, counit_left)
    report.axioms["counit_right"] = _run(singles, counit_right)
    report.axioms["bialgebra_compatibility"] = _run(itertools.product(deck, deck), compat)
    report.axioms["antipode_left"] = _run(singles, antipode_left)
    report.axioms["antipode_right"] = _run(singles, antipode_right)
    if not h.verified:
        for r in report.axioms.values():
            r.note = "structure unverified"

    cocomm = _run(singles, lambda d: delta(d) == delta(d).swap())
    cocomm.note = "informational"
    report.cocommutative = cocomm
    return report
