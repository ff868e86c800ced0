"""Hilbert series construction and the orbifold Riemann-Roch parse.

The central operation is `parse_main`: given a Gorenstein-symmetric
Hilbert series P of a polarized n-fold of canonical weight k and a basket
of isolated orbifold points, split

    P = P_I + sum of multiplicities * P_orb(Q, k),

where the initial part P_I = A(t)/(1-t)^(n+1) has A integral and
palindromic of degree c = k+n+1 (P_I = 0 when c < 0).  The parse is a
verification tool: a wrong basket, a non-Gorenstein input or an
unsupported positive-dimensional stratum shows up as a named check
failure with the offending residual attached.

Also here: the unique initial part from the first floor(c/2)+1 plurigenera,
the decomposition of A/(1-t)^(n+1) into integral combinations of standard
binomial terms, and the classical closed forms for K3 surfaces and Q-Fano
3-folds.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Iterable, Sequence

from .dedekind import OrbifoldType
from .exactpoly import (
    DenomSpec,
    ExactDivisionError,
    LaurentPoly,
    MathCheckError,
    RationalFn,
    SeriesWindow,
    exact_div,
    expand,
    is_gorenstein_symmetric,
    is_palindromic,
)
from .icecream import OrbifoldPart, p_orb
from .invmod import integer_inverse

__all__ = [
    "DecompositionError",
    "VarietyInput",
    "Decomposition",
    "Basket",
    "variety_series",
    "decompose_variety",
    "normalize_basket",
    "hilbert_ci",
    "parse_main",
    "initial_from_plurigenera",
    "binom_decompose",
    "binom_reassemble",
    "k3_series",
    "fano3_series",
    "degree_from_decomposition",
]

# basket = multiset of orbifold point types, as (type, multiplicity) pairs
Basket = Sequence[tuple[OrbifoldType, int]]


class DecompositionError(MathCheckError):
    """A decomposition check failed (wrong basket or bad input)."""


def normalize_basket(
    basket: Iterable[OrbifoldType | tuple[OrbifoldType, int]],
) -> tuple[tuple[OrbifoldType, int], ...]:
    out: list[tuple[OrbifoldType, int]] = []
    for entry in basket:
        if isinstance(entry, OrbifoldType):
            q, mult = entry, 1
        else:
            q, mult = entry
        if mult < 0:
            raise ValueError("basket multiplicities must be nonnegative")
        out.append((q, int(mult)))
    return tuple(out)


@dataclass(frozen=True)
class VarietyInput:
    """A weighted complete intersection plus its orbifold data."""

    weights: tuple[int, ...]
    degrees: tuple[int, ...] = ()
    basket: tuple[tuple[OrbifoldType, int], ...] = ()
    k_override: int | None = None
    irregularity: LaurentPoly | None = None

    @property
    def n(self) -> int:
        return len(self.weights) - 1 - len(self.degrees)


def variety_series(v: VarietyInput) -> tuple[RationalFn, int, int]:
    """Hilbert series, canonical weight and dimension of a variety record."""
    P, k, n = hilbert_ci(v.weights, v.degrees)
    if v.k_override is not None:
        k = v.k_override
    return P, k, n


def decompose_variety(v: VarietyInput) -> Decomposition:
    """Parse the Hilbert series of a variety record against its basket."""
    P, k, n = variety_series(v)
    return parse_main(P, n, k, v.basket, v.irregularity)


@dataclass(frozen=True)
class Decomposition:
    """Named parts whose sum equals the input Hilbert series exactly."""

    initial: RationalFn
    orbifold_parts: tuple[tuple[OrbifoldPart, int], ...]
    k: int
    n: int
    c: int
    irregularity: LaurentPoly | None = None

    @property
    def initial_numerator(self) -> LaurentPoly:
        return self.initial.num

    def total(self) -> RationalFn:
        out = self.initial
        if self.irregularity is not None:
            out = out + RationalFn(self.irregularity, ())
        for part, mult in self.orbifold_parts:
            out = out + part.fn * mult
        return out


def hilbert_ci(
    weights: Sequence[int], degrees: Sequence[int] = ()
) -> tuple[RationalFn, int, int]:
    """Hilbert series of a weighted complete intersection.

    Returns (P, k, n) with P = prod(1-t^d) / prod(1-t^a), canonical weight
    k = sum(d) - sum(a), and dimension n = #weights - 1 - #degrees.
    """
    weights = tuple(int(a) for a in weights)
    degrees = tuple(int(d) for d in degrees)
    if not weights or any(a < 1 for a in weights):
        raise ValueError("weights must be a nonempty list of positive integers")
    if any(d < 1 for d in degrees):
        raise ValueError("degrees must be positive integers")
    n = len(weights) - 1 - len(degrees)
    if n < 1:
        raise ValueError(f"dimension n = {n} must be >= 1")
    num = LaurentPoly.term(1)
    for d in degrees:
        num = num * LaurentPoly.one_minus(d)
    k = sum(degrees) - sum(weights)
    return RationalFn(num, weights), k, n


def parse_main(
    P: RationalFn,
    n: int,
    k: int,
    basket: Basket,
    irregularity: LaurentPoly | None = None,
) -> Decomposition:
    """Split P into initial part plus ice cream, verifying every claim.

    Raises DecompositionError naming the failed check (gorenstein_symmetry,
    residual_denominator, initial_vanishing, integrality, palindromy) and
    carrying the offending residual.
    """
    working = P
    if irregularity is not None and not irregularity.is_zero:
        if irregularity.degree > k:
            warnings.warn(
                f"irregularity polynomial has degree {irregularity.degree} > k = {k}",
                stacklevel=2,
            )
        working = working - RationalFn(irregularity, ())
    # the irregularity breaks the symmetry of P itself; P - J must have it
    if not is_gorenstein_symmetric(working, k, n):
        raise DecompositionError(
            f"input series is not Gorenstein symmetric of degree {k} in dimension {n}",
            check="gorenstein_symmetry",
            residual=working,
        )
    entries = normalize_basket(basket)
    parts = tuple((p_orb(q, k, n), mult) for q, mult in entries)
    residual = working
    for part, mult in parts:
        residual = residual - part.fn * mult
    c = k + n + 1
    one_minus_t = LaurentPoly.one_minus(1)
    try:
        A = exact_div(residual.num * one_minus_t ** (n + 1), residual.den.as_poly())
    except ExactDivisionError:
        raise DecompositionError(
            "residual is not of the form A(t)/(1-t)^(n+1); wrong basket, or the "
            "variety has positive-dimensional orbifold strata",
            check="residual_denominator",
            residual=residual.simplify(),
        ) from None
    if c < 0:
        if not A.is_zero:
            raise DecompositionError(
                f"coindex c = {c} < 0 forces a zero initial part, got {A}",
                check="initial_vanishing",
                residual=A,
            )
    else:
        if not A.is_integral:
            raise DecompositionError(
                f"initial numerator is not integral: {A}",
                check="integrality",
                residual=A,
            )
        in_range = A.is_zero or (A.valuation >= 0 and A.degree <= c)
        if not (in_range and is_palindromic(A, c)):
            raise DecompositionError(
                f"initial numerator is not palindromic of degree c = {c}: {A}",
                check="palindromy",
                residual=A,
            )
    return Decomposition(
        initial=RationalFn(A, (1,) * (n + 1)),
        orbifold_parts=parts,
        k=k,
        n=n,
        c=c,
        irregularity=irregularity,
    )


def initial_from_plurigenera(window: SeriesWindow, k: int, n: int) -> RationalFn:
    """The unique A(t)/(1-t)^(n+1) with A integral palindromic of degree
    c = k+n+1 whose series matches the given plurigenera through floor(c/2).

    The window must supply integer coefficients for degrees 0..floor(c/2);
    matching coefficients of (1-t)^(n+1) * P_I gives a triangular system
    for the lower half of A, and palindromy supplies the rest.
    """
    c = k + n + 1
    if c < 0:
        if any(v != 0 for _, v in window):
            raise DecompositionError(
                f"coindex c = {c} < 0 but plurigenera are not all zero",
                check="initial_vanishing",
            )
        return RationalFn(LaurentPoly(), (1,) * (n + 1))
    half = c // 2
    if window.start > 0 or window.start + len(window.coeffs) - 1 < half:
        raise ValueError(f"window must cover degrees 0..{half}")
    values = []
    for m in range(half + 1):
        v = window.coeff(m)
        if v.denominator != 1:
            raise DecompositionError(
                f"plurigenus P_{m} = {v} is not an integer", check="integrality"
            )
        values.append(v)
    lower: list[Fraction] = []
    for m in range(half + 1):
        acc = values[m]
        for i in range(m):
            acc -= lower[i] * comb(m - i + n, n)
        lower.append(acc)
    terms = {}
    for i, v in enumerate(lower):
        terms[i] = v
        terms[c - i] = v
    return RationalFn(LaurentPoly(terms), (1,) * (n + 1))


def _standard_numerator(nu: int, k: int, n: int) -> LaurentPoly:
    # t^((nu+k+1)/2) when n and k have opposite parity, else (1+t) t^((nu+k)/2)
    if (n - k) % 2 == 1:
        e, rem = divmod(nu + k + 1, 2)
        assert rem == 0
        return LaurentPoly.term(1, e)
    e, rem = divmod(nu + k, 2)
    assert rem == 0
    return LaurentPoly({e: 1, e + 1: 1})


def binom_decompose(A: LaurentPoly, k: int, n: int) -> tuple[tuple[int, int], ...]:
    """Integer coefficients b_nu expressing A/(1-t)^(n+1) as an integral
    combination of standard Gorenstein-symmetric terms.

    The terms run over nu == n mod 2, from n down to the last value whose
    numerator exponent stays nonnegative (-k for odd coindex, -k-1 for
    even); the term of index nu is t^((nu+k+1)/2)/(1-t)^(nu+1) when
    n != k mod 2 and (1+t)t^((nu+k)/2)/(1-t)^(nu+1) when n == k mod 2.
    Returns (nu, b_nu) pairs; the zero polynomial gives an empty tuple.
    """
    if A.is_zero:
        return ()
    c = k + n + 1
    in_range = A.valuation >= 0 and A.degree <= c
    if not (A.is_integral and in_range and is_palindromic(A, c)):
        raise DecompositionError(
            f"numerator is not integral palindromic of degree c = {c}: {A}",
            check="palindromy",
            residual=A,
        )
    nu_min = -k if (-k - n) % 2 == 0 else -k - 1
    one_minus_t_sq = LaurentPoly.one_minus(1) ** 2
    out: list[tuple[int, int]] = []
    R = A
    for nu in range(n, nu_min - 1, -2):
        numer = _standard_numerator(nu, k, n)
        b = R.at_one() / numer.at_one()
        if b.denominator != 1:
            raise DecompositionError(
                f"coefficient b_{nu} = {b} is not an integer",
                check="integrality",
                residual=R,
            )
        out.append((nu, int(b)))
        R = R - numer * b
        if nu > nu_min:
            try:
                R = exact_div(R, one_minus_t_sq)
            except ExactDivisionError:
                raise DecompositionError(
                    "peeling failed: residual not divisible by (1-t)^2",
                    check="binomial_peel",
                    residual=R,
                ) from None
    if not R.is_zero:
        raise DecompositionError(
            f"binomial decomposition left a nonzero remainder {R}",
            check="binomial_peel",
            residual=R,
        )
    return tuple(out)


def binom_reassemble(
    coeffs: Iterable[tuple[int, int]], k: int, n: int
) -> RationalFn:
    """Sum the standard terms back into a rational function."""
    total = RationalFn(LaurentPoly(), (1,))
    for nu, b in coeffs:
        numer = _standard_numerator(nu, k, n) * b
        if nu + 1 >= 0:
            term = RationalFn(numer, (1,) * (nu + 1))
        else:
            term = RationalFn(numer * LaurentPoly.one_minus(1) ** (-(nu + 1)), ())
        total = total + term
    return total


def _periodic_loss(r: int, a: int) -> RationalFn:
    # sum_{i=1..r-1} bi_bar (r - bi_bar) / (2r) t^i over 1 - t^r
    b = integer_inverse(a, r)
    terms = {}
    for i in range(1, r):
        bi = (b * i) % r
        terms[i] = Fraction(bi * (r - bi), 2 * r)
    return RationalFn(LaurentPoly(terms), (r,))


def _check_transverse_pairs(basket: Sequence[tuple[int, int]]) -> None:
    for r, a in basket:
        if r < 2 or not 0 < a % r or gcd(a, r) != 1:
            raise ValueError(f"basket entry ({r},{a}) must have 0 < a and gcd(a,r) = 1")


def k3_series(
    g: int, basket: Sequence[tuple[int, int]] = ()
) -> tuple[RationalFn, Fraction, Decomposition]:
    """Hilbert series of a polarized K3 surface with basket of (r, a) points.

    Each entry (r, a) is a cyclic point of type (1/r)(a, r-a).  Returns the
    series assembled from surface Riemann-Roch,

        P = (1+t)/(1-t) + (D^2/2)(t+t^2)/(1-t)^3 - periodic loss terms,

    together with D^2 = 2g - 2 + sum b(r-b)/r (b the inverse of a mod r)
    and the ice cream parse, which is verified to agree exactly.
    """
    if g < -1:
        raise ValueError("genus must be >= -1")
    _check_transverse_pairs(basket)
    dsq = Fraction(2 * g - 2)
    for r, a in basket:
        b = integer_inverse(a, r)
        dsq += Fraction(b * (r - b), r)
    series = RationalFn(LaurentPoly({0: 1, 1: 1}), (1,))
    series = series + RationalFn(LaurentPoly({1: 1, 2: 1}), (1, 1, 1)) * (dsq / 2)
    for r, a in basket:
        series = series - _periodic_loss(r, a)
    types = [(OrbifoldType(r, (a, r - a)), 1) for r, a in basket]
    dec = parse_main(series, n=2, k=0, basket=types)
    expected = LaurentPoly({0: 1, 1: g - 2, 2: g - 2, 3: 1})
    if dec.initial_numerator != expected:
        raise MathCheckError(
            f"K3 initial part {dec.initial_numerator} does not match genus formula",
            check="k3_initial",
            residual=dec.initial_numerator,
        )
    return series, dsq, dec


def fano3_series(
    g: int, basket: Sequence[tuple[int, int]] = ()
) -> tuple[RationalFn, Fraction, Decomposition]:
    """Anticanonical Hilbert series of a Q-Fano 3-fold with terminal basket.

    Entries (r, a) are points of type (1/r)(1, a, r-a); the canonical
    weight is -1.  Returns the Riemann-Roch series, -K^3 = 2g - 2 +
    sum b(r-b)/r, and the verified ice cream parse; h^0(-K) = g + 2 is
    checked on the t coefficient.
    """
    _check_transverse_pairs(basket)
    minus_k3 = Fraction(2 * g - 2)
    for r, a in basket:
        b = integer_inverse(a, r)
        minus_k3 += Fraction(b * (r - b), r)
    series = RationalFn(LaurentPoly({0: 1, 1: 1}), (1, 1))
    series = series + RationalFn(LaurentPoly({1: 1, 2: 1}), (1, 1, 1, 1)) * (minus_k3 / 2)
    for r, a in basket:
        loss = _periodic_loss(r, a)
        series = series - RationalFn(loss.num, loss.den.plus((1,)))
    types = [(OrbifoldType(r, (1, a, r - a)), 1) for r, a in basket]
    dec = parse_main(series, n=3, k=-1, basket=types)
    expected = LaurentPoly({0: 1, 1: g - 2, 2: g - 2, 3: 1})
    if dec.initial_numerator != expected:
        raise MathCheckError(
            f"Fano initial part {dec.initial_numerator} does not match genus formula",
            check="fano_initial",
            residual=dec.initial_numerator,
        )
    p1 = expand(series, 1).coeff(1)
    if p1 != g + 2:
        raise MathCheckError(
            f"h^0(-K) = {p1} does not equal g + 2 = {g + 2}", check="fano_h0"
        )
    return series, minus_k3, dec


def degree_from_decomposition(dec: Decomposition) -> Fraction:
    """Recover the degree D^n = A(1) + sum mult * B_Q(1)/r_Q.

    The orbifold numerators contribute to the leading growth of the
    plurigenera; summing coefficients of the initial numerator alone gives
    the wrong degree whenever the basket is nonempty.
    """
    total = dec.initial_numerator.at_one()
    for part, mult in dec.orbifold_parts:
        total += mult * Fraction(part.numerator.at_one(), part.source.r)
    return total
