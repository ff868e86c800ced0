"""Inverses modulo cyclotomic-type moduli with prescribed support window.

Given a period r and weights a_1..a_n, set

    A = prod(1 - t^(a_j)),   h = hcf(1 - t^r, A),   F = (1 - t^r) / h.

F is monic with simple roots exactly at the r-th roots of unity where A
does not vanish, so A is invertible modulo F.  Because any d = deg F
consecutive Laurent monomials form a basis of Q[t]/(F), the inverse has a
unique representative supported in [gamma, gamma + d - 1] for every
integer gamma; `inv_mod` computes it by the extended Euclidean algorithm.
Negative gamma is handled by multiplying through by t^(m*r), which is 1
modulo F.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exactpoly import (
    LaurentPoly,
    divides,
    exact_div,
    poly_ext_gcd,
    poly_gcd,
    reduce_to_window,
)

__all__ = ["ModulusData", "NotCoprimeError", "build_modulus", "inv_mod", "integer_inverse"]


class NotCoprimeError(ValueError):
    """The polynomial to invert shares a factor with the modulus."""


@dataclass(frozen=True)
class ModulusData:
    """The (A, h, F) data attached to a period r and weights a_1..a_n.

    Invariants: h * F == 1 - t^r exactly, F is monic with nonzero constant
    term, and gcd(A, F) is a unit.
    """

    r: int
    A: LaurentPoly
    h: LaurentPoly
    F: LaurentPoly
    d: int


def build_modulus(r: int, a_list: Sequence[int]) -> ModulusData:
    """Compute A = prod(1-t^a), h = hcf(1-t^r, A) and F = (1-t^r)/h.

    h is normalized so that F comes out monic (h gets leading coefficient
    -1, matching the 1 - t^a shape of its factors).
    """
    if r < 1:
        raise ValueError("period r must be >= 1")
    if not a_list:
        raise ValueError("a_list must be nonempty")
    A = LaurentPoly.term(1)
    for a in a_list:
        if a < 1:
            raise ValueError("weights must be positive")
        A = A * LaurentPoly.one_minus(a)
    one_minus_tr = LaurentPoly.one_minus(r)
    h = -poly_gcd(one_minus_tr, A)
    F = exact_div(one_minus_tr, h)
    d = F.degree
    return ModulusData(r=r, A=A, h=h, F=F, d=d)


def integer_inverse(a: int, r: int) -> int:
    """Least nonnegative inverse of a modulo r (0 when r == 1)."""
    if r < 1:
        raise ValueError("modulus must be >= 1")
    return pow(a % r, -1, r)


def inv_mod(A: LaurentPoly, F: LaurentPoly, gamma: int, r: int) -> LaurentPoly:
    """Inverse of A modulo F supported in [gamma, gamma + deg F - 1].

    Preconditions: A is a polynomial coprime to F; F is monic with nonzero
    constant term; t^r == 1 modulo F (true for every F produced by
    `build_modulus`, which is what licenses the shift trick for gamma < 0).
    F == 1 is the degenerate period-1 case and returns 0.
    """
    if not A.is_polynomial or A.is_zero:
        raise ValueError("A must be a nonzero polynomial")
    if F.is_zero or not F.is_polynomial:
        raise ValueError("F must be a nonzero polynomial")
    if F.degree == 0:
        return LaurentPoly()
    if F.coeff(F.degree) != 1 or F.coeff(0) == 0:
        raise ValueError("F must be monic with nonzero constant term")
    if r < 1 or not divides(F, LaurentPoly.one_minus(r)):
        raise ValueError("t^r must be congruent to 1 modulo F")
    m = 0 if gamma >= 0 else -(gamma // r)
    # reduce t^(gamma + m r) A modulo F first so the Euclidean step runs on
    # degree < deg F; the answer is unchanged since the window representative
    # is unique
    shifted = reduce_to_window(A.shift(gamma + m * r), F, 0, period=r)
    if shifted.is_zero:
        raise NotCoprimeError("A is congruent to 0 modulo F")
    g, u, _ = poly_ext_gcd(shifted, F)
    if g.degree > 0:
        raise NotCoprimeError(
            f"gcd(A, F) = {g} is not a unit; build the modulus with build_modulus first"
        )
    B = reduce_to_window(u, F, 0, period=r)
    return B.shift(gamma)
