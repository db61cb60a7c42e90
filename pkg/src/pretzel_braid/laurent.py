"""Exact Laurent polynomials in one variable ``A`` with integer coefficients."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable ``sum c_e A^e`` with Python-int coefficients; zeros are never stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    # -- inspection --------------------------------------------------------
    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(iter(self._terms))

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(reversed(self._terms))

    def coefficient(self, e: int) -> int:
        return self._terms.get(e, 0)

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials have integer inverses")
            return LaurentPoly({e * k: c if k % 2 else 1})
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``A^k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def mirror(self) -> LaurentPoly:
        """Substitute ``A -> A^-1``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    # -- comparison / display ----------------------------------------------
    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self._terms!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = "A" if e == 1 else f"A^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in self._terms.items()]


def _coerce(x) -> LaurentPoly | None:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    return None


A = LaurentPoly.monomial(1)
#: loop value of the bracket, ``-A^2 - A^-2``
LOOP = LaurentPoly({2: -1, -2: -1})


@lru_cache(maxsize=None)
def loop_power(k: int) -> LaurentPoly:
    """``(-A^2 - A^-2)^k`` for ``k >= 0`` (cached)."""
    if k < 0:
        raise ValueError("negative loop power")
    if k == 0:
        return LaurentPoly.constant(1)
    return loop_power(k - 1) * LOOP


def framing_unit(k: int) -> LaurentPoly:
    """``(-A^3)^k``."""
    return LaurentPoly.monomial(3 * k, -1 if k % 2 else 1)
