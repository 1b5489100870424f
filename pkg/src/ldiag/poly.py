"""Exact polynomials in Z[qc, qs]."""
from __future__ import annotations

import re
from typing import Iterable, Mapping, Union

from .errors import ParseError

Exp = tuple[int, int]
Scalar = Union[int, "DeformPoly"]


def _key(e: Exp) -> tuple[int, int, int]:
    return (e[0] + e[1], e[0], e[1])


class DeformPoly:
    """Sparse polynomial ``sum c * qc^a * qs^b`` with integer coefficients.

    Immutable.  Terms are stored as ``{(a, b): c}`` with every ``c != 0``.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exp, int] | Iterable[tuple[Exp, int]] = ()):
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[Exp, int] = {}
        for (a, b), c in items:
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent {(a, b)}")
            acc[(a, b)] = acc.get((a, b), 0) + c
        self._terms = {e: acc[e] for e in sorted(acc, key=_key) if acc[e]}
        self._hash = None

    @classmethod
    def _trusted(cls, terms: dict[Exp, int]) -> DeformPoly:
        """Wrap an already normalized, already ordered term dict."""
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> DeformPoly:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, c: int = 1) -> DeformPoly:
        if a < 0 or b < 0:
            raise ValueError(f"negative exponent {(a, b)}")
        return cls._trusted({(a, b): c} if c else {})

    @property
    def terms(self) -> dict[Exp, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = DeformPoly.const(other)
        if not isinstance(other, DeformPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: Scalar) -> DeformPoly:
        if isinstance(other, int):
            other = DeformPoly.const(other)
        if not isinstance(other, DeformPoly):
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return DeformPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> DeformPoly:
        return DeformPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> DeformPoly:
        if isinstance(other, int):
            other = DeformPoly.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> DeformPoly:
        return DeformPoly.const(other) - self

    def __mul__(self, other: Scalar) -> DeformPoly:
        if isinstance(other, int):
            return DeformPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, DeformPoly):
            return NotImplemented
        if len(self._terms) == 1 and len(other._terms) == 1:
            ((a1, b1), c1), = self._terms.items()
            ((a2, b2), c2), = other._terms.items()
            return DeformPoly._trusted({(a1 + a2, b1 + b2): c1 * c2})
        acc: dict[Exp, int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                e = (a1 + a2, b1 + b2)
                acc[e] = acc.get(e, 0) + c1 * c2
        return DeformPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> DeformPoly:
        if n < 0:
            raise ValueError("negative power")
        out = DeformPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, qc: int, qs: int) -> int:
        return poly_eval(self, qc, qs)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"DeformPoly({format_poly(self)!r})"


ZERO = DeformPoly()
ONE = DeformPoly.const(1)
QC = DeformPoly.monomial(1, 0)
QS = DeformPoly.monomial(0, 1)


def poly_arith(op: str, x: DeformPoly, y: DeformPoly) -> DeformPoly:
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown op {op!r}")


def poly_eval(x: DeformPoly, qc0: int, qs0: int) -> int:
    """Exact value at ``(qc0, qs0)``, with ``0**0 == 1``."""
    return sum(c * qc0**a * qs0**b for (a, b), c in x.items())


def _format_monomial(a: int, b: int) -> str:
    parts = []
    for name, e in (("qc", a), ("qs", b)):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(x: DeformPoly) -> str:
    """Render as ``"1 + 2*qc + qc*qs^2"``; terms in graded-lex order."""
    if x.is_zero():
        return "0"
    out = []
    for i, ((a, b), c) in enumerate(x.items()):
        mono = _format_monomial(a, b)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


_TERM = re.compile(
    r"^(?:(?P<coef>\d+)(?:\*(?=q))?)?(?P<mono>(?:q[cs](?:\^\d+)?)(?:\*q[cs](?:\^\d+)?)*)?$"
)


def parse_poly(s: str) -> DeformPoly:
    """Inverse of :func:`format_poly`."""
    text = s.strip()
    if not text:
        raise ParseError("empty polynomial")
    if text == "0":
        return ZERO
    parts = re.split(r"\s*([+-])\s*", text)
    if parts[0] == "":
        parts = parts[1:]
    else:
        parts = ["+"] + parts
    if len(parts) % 2:
        raise ParseError(f"malformed polynomial {s!r}")
    chunks = [sign + body for sign, body in zip(parts[::2], parts[1::2])]
    if any(not c[1:] or re.search(r"\s", c) for c in chunks):
        raise ParseError(f"malformed polynomial {s!r}")
    acc: dict[Exp, int] = {}
    for chunk in chunks:
        sign = -1 if chunk[0] == "-" else 1
        body = chunk.lstrip("+-")
        m = _TERM.match(body)
        if not body or m is None or (m.group("coef") is None and not m.group("mono")):
            raise ParseError(f"malformed term {chunk!r} in {s!r}")
        coef = int(m.group("coef")) if m.group("coef") else 1
        a = b = 0
        if m.group("mono"):
            for factor in m.group("mono").split("*"):
                name, _, e = factor.partition("^")
                power = int(e) if e else 1
                if name == "qc":
                    a += power
                else:
                    b += power
        acc[(a, b)] = acc.get((a, b), 0) + sign * coef
    return DeformPoly(acc)
