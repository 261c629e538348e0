"""Dense integer polynomials for counting sequences.

Coefficients are exact Python ints (never floats), index ``i`` holds the
coefficient of ``x**i`` and trailing zeros are trimmed.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        if any(c < 0 for c in cs):
            raise ValueError(f"counting polynomial with negative coefficient: {cs}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int | None:
        """Highest index with a nonzero coefficient, ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: Polynomial) -> Polynomial:
        k = max(len(self), len(other))
        return Polynomial(self[i] + other[i] for i in range(k))

    def __mul__(self, other: Polynomial) -> Polynomial:
        return multiply(self, other)

    def __str__(self) -> str:
        return format_poly(self)


ZERO = Polynomial()
ONE = Polynomial([1])


def multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    if not p.coeffs or not q.coeffs:
        return ZERO
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                out[i + j] += a * b
    return Polynomial(out)


def subtract(p: Polynomial, q: Polynomial) -> Polynomial:
    """``p - q``; the result must still have non-negative coefficients."""
    k = max(len(p), len(q))
    return Polynomial(p[i] - q[i] for i in range(k))


def binomial_power(n: int) -> Polynomial:
    """(1 + x)**n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return Polynomial(comb(n, i) for i in range(n + 1))


def unimodality_witness(p: Polynomial | Sequence[int]) -> tuple[int, int] | None:
    """Return ``(j, j + 1)`` for the first rise ``a_j < a_{j+1}`` that follows a
    strict fall, or ``None`` when the sequence is unimodal."""
    cs = list(p)
    fallen = False
    for i in range(len(cs) - 1):
        if cs[i] > cs[i + 1]:
            fallen = True
        elif cs[i] < cs[i + 1] and fallen:
            return (i, i + 1)
    return None


def is_unimodal(p: Polynomial | Sequence[int]) -> bool:
    return unimodality_witness(p) is None


def is_log_concave(p: Polynomial | Sequence[int]) -> bool:
    cs = list(p)
    nz = [i for i, c in enumerate(cs) if c]
    if nz and any(cs[i] == 0 for i in range(nz[0], nz[-1] + 1)):
        return False
    return all(cs[i] * cs[i] >= cs[i - 1] * cs[i + 1] for i in range(1, len(cs) - 1))


def format_poly(p: Polynomial) -> str:
    """Canonical text form ``a_0 + a_1 x + a_2 x^2 + ...`` (all terms, zeros kept)."""
    if not p.coeffs:
        return "0"
    terms = []
    for i, c in enumerate(p.coeffs):
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append(f"{c} x")
        else:
            terms.append(f"{c} x^{i}")
    return " + ".join(terms)


_TERM = re.compile(r"^\s*(\d+)?\s*(?:(x)(?:\s*\^\s*(\d+))?)?\s*$")


def parse_poly(text: str) -> Polynomial:
    """Inverse of :func:`format_poly`; also accepts terms in any order."""
    text = text.strip()
    if text == "0":
        return ZERO
    coeffs: dict[int, int] = {}
    for raw in text.split("+"):
        m = _TERM.match(raw)
        if not m:
            raise ValueError(f"cannot parse polynomial term {raw!r}")
        c, x, e = m.groups()
        if c is None and x is None:
            raise ValueError(f"empty polynomial term in {text!r}")
        c = 1 if c is None else c
        exp = 0 if x is None else (int(e) if e is not None else 1)
        coeffs[exp] = coeffs.get(exp, 0) + int(c)
    top = max(coeffs)
    return Polynomial(coeffs.get(i, 0) for i in range(top + 1))


def to_json(p: Polynomial) -> str:
    return json.dumps([str(c) for c in p.coeffs])


def from_json(text: str) -> Polynomial:
    return Polynomial(int(s) for s in json.loads(text))
