"""Characteristic polynomials of path adjacency matrices over GF(2).

Polynomials over GF(2) pack into a single int, one bit per coefficient,
mirroring the row packing in :mod:`nilpath.gf2`. The characteristic
polynomial of the n-path's tridiagonal adjacency matrix obeys the
three-term recurrence p_t = x * p_(t-1) - p_(t-2), which over GF(2) is an
XOR of a shift with the grandparent. A matrix over a field is nilpotent
exactly when its characteristic polynomial is the bare power x^n, so
checking that every coefficient below the top vanishes gives a second,
independent route to the nilpotency results of :mod:`nilpath.gf2`.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "GF2Poly",
    "poly_add",
    "poly_shift_mul",
    "charpoly_path",
    "charpoly_is_monomial",
]


@dataclass(frozen=True)
class GF2Poly:
    """Polynomial over GF(2); bit i of ``bits`` is the coefficient of x^i."""

    bits: int

    def __post_init__(self) -> None:
        if self.bits < 0:
            raise ValueError("coefficient bits must be non-negative")

    @classmethod
    def zero(cls) -> GF2Poly:
        return cls(0)

    @classmethod
    def one(cls) -> GF2Poly:
        return cls(1)

    @classmethod
    def monomial(cls, d: int) -> GF2Poly:
        """The single term x^d."""
        if d < 0:
            raise ValueError(f"monomial degree must be non-negative, got {d}")
        return cls(1 << d)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return self.bits.bit_length() - 1

    def coefficient(self, d: int) -> int:
        if d < 0:
            raise ValueError(f"degree must be non-negative, got {d}")
        return (self.bits >> d) & 1

    def is_zero(self) -> bool:
        return self.bits == 0

    def __str__(self) -> str:
        if self.bits == 0:
            return "0"
        terms = []
        for d in range(self.degree, -1, -1):
            if self.coefficient(d):
                if d == 0:
                    terms.append("1")
                elif d == 1:
                    terms.append("x")
                else:
                    terms.append(f"x^{d}")
        return " + ".join(terms)


def poly_add(p: GF2Poly, q: GF2Poly) -> GF2Poly:
    """Sum over GF(2): coefficient-wise XOR."""
    return GF2Poly(p.bits ^ q.bits)


def poly_shift_mul(p: GF2Poly, d: int) -> GF2Poly:
    """Multiply by x^d."""
    if d < 0:
        raise ValueError(f"shift must be non-negative, got {d}")
    return GF2Poly(p.bits << d)


def charpoly_path(n: int) -> GF2Poly:
    """Characteristic polynomial of the n-path adjacency matrix, mod 2.

    Runs the tridiagonal recurrence p_0 = 1, p_1 = x,
    p_t = x * p_(t-1) + p_(t-2); the leading principal minors of xI - A
    satisfy it, and signs vanish mod 2. n = 0 gives the empty matrix's
    polynomial, the constant 1.
    """
    if n < 0:
        raise ValueError(f"matrix size must be non-negative, got {n}")
    prev = GF2Poly.one()
    if n == 0:
        return prev
    cur = GF2Poly.monomial(1)
    for _ in range(n - 1):
        prev, cur = cur, poly_add(poly_shift_mul(cur, 1), prev)
    return cur


def charpoly_is_monomial(n: int) -> bool:
    """Whether the n-path's characteristic polynomial mod 2 is exactly x^n."""
    return charpoly_path(n).bits == 1 << n
