"""Finite formal linear combinations of diagrams over Z[qc, qs]."""
from __future__ import annotations

import json
from typing import Callable, Iterable, Iterator, Mapping, Union

from .diagram import EMPTY, WeightMatrix, format_matrix
from .poly import ONE, ZERO, DeformPoly, format_poly, poly_eval

Coeff = Union[int, DeformPoly]


def _as_poly(c: Coeff) -> DeformPoly:
    return DeformPoly.const(c) if isinstance(c, int) else c


class _LinearCombination:
    """Shared machinery: a normalized ``{key: DeformPoly}`` map."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable[tuple] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for k, c in items:
            c = _as_poly(c)
            acc[k] = acc[k] + c if k in acc else c
        self._terms = {k: acc[k] for k in sorted(acc, key=self._order) if acc[k]}

    @staticmethod
    def _order(key):
        raise NotImplementedError

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, key) -> DeformPoly:
        return self._terms.get(key, ZERO)

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(list(self.items()) + list(other.items()))

    def __neg__(self):
        return type(self)((k, -c) for k, c in self.items())

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Coeff):
        c = _as_poly(c)
        return type(self)((k, c * v) for k, v in self.items())

    def __rmul__(self, c: Coeff):
        if isinstance(c, (int, DeformPoly)):
            return self.scale(c)
        return NotImplemented

    def evaluate(self, qc0: int, qs0: int):
        """Specialize every coefficient at ``(qc0, qs0)``."""
        return type(self)((k, poly_eval(c, qc0, qs0)) for k, c in self.items())

    def map_coefficients(self, f: Callable[[DeformPoly], DeformPoly]):
        return type(self)((k, f(c)) for k, c in self.items())


class DiagramSum(_LinearCombination):
    """``sum coeff * diagram``, keyed by :class:`WeightMatrix`."""

    __slots__ = ()

    @staticmethod
    def _order(key: WeightMatrix):
        return key.sort_key

    @classmethod
    def of(cls, d: WeightMatrix, c: Coeff = 1) -> DiagramSum:
        return cls({d: c})

    @classmethod
    def unit(cls) -> DiagramSum:
        return cls({EMPTY: ONE})

    def __repr__(self) -> str:
        return f"DiagramSum({self.to_text()!r})"

    def to_text(self) -> str:
        if not self:
            return "0"
        return "\n".join(f"{format_poly(c)} :: {format_matrix(d)}" for d, c in self.items())

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {"matrix": d.tolist(), "coeff": poly_to_json(c)} for d, c in self.items()
            ]
        }


class TensorSum(_LinearCombination):
    """``sum coeff * (d_1 (x) ... (x) d_k)``, keyed by tuples of diagrams.

    The Hopf-algebra code uses pairs; triples appear in coassociativity checks.
    """

    __slots__ = ()

    @staticmethod
    def _order(key: tuple[WeightMatrix, ...]):
        return tuple(d.sort_key for d in key)

    def __repr__(self) -> str:
        return f"TensorSum({self.to_text()!r})"

    def swap(self) -> TensorSum:
        """Flip the factors of a 2-tensor."""
        return TensorSum(((b, a), c) for (a, b), c in self.items())

    def componentwise_product(
        self, other: TensorSum, mul: Callable[[WeightMatrix, WeightMatrix], DiagramSum]
    ) -> TensorSum:
        """``(a (x) b) . (c (x) d) = mul(a, c) (x) mul(b, d)``, extended bilinearly."""
        acc: dict = {}
        for (a, b), c1 in self.items():
            for (c, d), c2 in other.items():
                coef = c1 * c2
                for x, cx in mul(a, c).items():
                    for y, cy in mul(b, d).items():
                        key = (x, y)
                        acc[key] = acc.get(key, ZERO) + coef * cx * cy
        return TensorSum(acc)

    def to_text(self) -> str:
        if not self:
            return "0"
        return "\n".join(
            f"{format_poly(c)} :: " + " (x) ".join(format_matrix(d) for d in key)
            for key, c in self.items()
        )

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {"factors": [d.tolist() for d in key], "coeff": poly_to_json(c)}
                for key, c in self.items()
            ]
        }


def poly_to_json(c: DeformPoly) -> list[dict]:
    return [{"qc_exp": a, "qs_exp": b, "coeff": v} for (a, b), v in c.items()]


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def sum_combine(op: str, *args) -> DiagramSum:
    """``add(x, y, ...)`` or ``scale(c, x)``."""
    if op == "add":
        out = DiagramSum()
        for x in args:
            out = out + x
        return out
    if op == "scale":
        c, x = args
        return x.scale(c)
    raise ValueError(f"unknown op {op!r}")


def bilinear_extend(f: Callable, x: DiagramSum, y: DiagramSum, kind: type | None = None):
    """``sum x[d] * y[e] * f(d, e)``.

    The result has the type returned by ``f``; pass ``kind`` to fix it when
    either argument may be zero.
    """
    acc: dict = {}
    for d, cx in x.items():
        for e, cy in y.items():
            val = f(d, e)
            kind = kind or type(val)
            coef = cx * cy
            for k, c in val.items():
                acc[k] = acc.get(k, ZERO) + coef * c
    return (kind or DiagramSum)(acc)
