"""Calabi-Yau 3-fold decompositions with curve orbifold locus.

Two alternative splittings of the Hilbert series of a polarized CY3
(canonical weight 0, dimension 3) whose orbifold locus consists of curves
C of transverse type (1/s)(a, s-a) and points Q = (1/r)(a1,a2,a3) with
a1+a2+a3 == 0 mod r:

* `cy3_rr_parts` takes the Riemann-Roch route: rational parts with small
  denominators, driven by the geometric inputs D.c2, D^3, the curve
  degrees D.C and one rational prefactor per curve.  The parts are

      I   = 1 + (D.c2/12) t/(1-t)^2 + (D^3/6)(t+4t^2+t^3)/(1-t)^4
      II  = Delta(Q)/(1-t^r)                          per point
      III = DC * ( s t^s Delta/(1-t^s)^2 + t Delta'/(1-t^s)
                   - sigma_0 t/(1-t)^2 )              per curve
      IV  = prefactor * B/(1-t^s)                     per curve

  with Delta, sigma_0 the Dedekind data of the transverse type and B the
  unique polynomial supported in [1, s-1] with
  (1-t^a)^2 (1-t^(s-a))^2 B == t^a - t^(s-a) mod (1-t^s)/(1-t).
  `cy3_rr_fit` recovers the scalar inputs from the series instead, by
  exact linear solve on the low-degree coefficients.

* `cy3_ice_parts` produces the integral Gorenstein-symmetric splitting
  P = P_I + sum P_orb(Q, 0) + sum A_C + sum B_C, where A_C is
  delta_C * P_orb((1/s)(a,s-a), s)/(1-t^s) with an integer delta_C, and
  Num B_C is integral palindromic of degree s+3 supported in [3, s].
  The unknowns (delta_C and the Num B_C coefficients) are recovered by an
  exact linear solve over Q and all integrality constraints are verified
  afterwards; dissident points are absorbed by the generalized ice cream
  at the point strata.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .dedekind import DeltaPoly, OrbifoldType, delta, sigma
from .exactpoly import (
    DenomSpec,
    LaurentPoly,
    RationalFn,
    expand,
    is_gorenstein_symmetric,
)
from .hilbert import (
    Basket,
    DecompositionError,
    initial_from_plurigenera,
    normalize_basket,
)
from .icecream import OrbifoldPart, p_orb, p_orb_general
from .invmod import inv_mod

__all__ = [
    "CurveStratum",
    "CY3Parts",
    "CY3IceParts",
    "CurveIcePart",
    "cy3_rr_parts",
    "cy3_rr_fit",
    "cy3_ice_parts",
    "delta_derivative",
    "iv_numerator",
]


@dataclass(frozen=True)
class CurveStratum:
    """A curve of the orbifold locus, with its Riemann-Roch scalars.

    `dc` is the degree of the polarization on the curve; `iv_prefactor`
    is the single rational N_C/(72 s tau_C) multiplying part IV (it
    flips sign under a <-> s-a, and is irrelevant when s = 2, where
    B = 0 identically).
    """

    s: int
    a: int
    dc: Fraction = Fraction(0)
    iv_prefactor: Fraction = Fraction(0)

    def __post_init__(self):
        if self.s < 2:
            raise ValueError("curve transverse period s must be >= 2")
        a = self.a % self.s
        if a == 0 or gcd(a, self.s) != 1:
            raise ValueError(f"transverse type 1/{self.s}({self.a},..) must have gcd(a,s)=1")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "dc", Fraction(self.dc))
        object.__setattr__(self, "iv_prefactor", Fraction(self.iv_prefactor))

    @property
    def transverse_type(self) -> OrbifoldType:
        return OrbifoldType(self.s, (self.a, self.s - self.a))


@dataclass(frozen=True)
class CY3Parts:
    """Riemann-Roch parts; their sum is the Hilbert series."""

    part_i: RationalFn
    part_ii: tuple[tuple[OrbifoldType, int, RationalFn], ...]
    part_iii: tuple[tuple[CurveStratum, RationalFn], ...]
    part_iv: tuple[tuple[CurveStratum, RationalFn], ...]
    dc2: Fraction
    d3: Fraction

    def total(self) -> RationalFn:
        out = self.part_i
        for _, mult, fn in self.part_ii:
            out = out + fn * mult
        for _, fn in self.part_iii:
            out = out + fn
        for _, fn in self.part_iv:
            out = out + fn
        return out


def delta_derivative(d: DeltaPoly) -> LaurentPoly:
    """Formal derivative of the Dedekind sum polynomial."""
    return d.poly.derivative()


def iv_numerator(s: int, a: int) -> LaurentPoly:
    """The part-IV numerator B, supported in [1, s-1], determined by

        (1-t^a)^2 (1-t^(s-a))^2 B == t^a - t^(s-a)  mod (1-t^s)/(1-t).

    Computed as the difference of two InverseMods; B == 0 when s = 2 and
    B flips sign under a <-> s-a.
    """
    Fs = LaurentPoly.geometric(s)
    a1 = LaurentPoly.one_minus(a) ** 2 * LaurentPoly.one_minus(s - a)
    a2 = LaurentPoly.one_minus(a) * LaurentPoly.one_minus(s - a) ** 2
    if a1 == a2:
        return LaurentPoly()
    b1 = inv_mod(a1.shift(1), Fs, 0, s)
    b2 = inv_mod(a2.shift(1), Fs, 0, s)
    return (b1 - b2).shift(1)


def _part_i(dc2: Fraction, d3: Fraction) -> RationalFn:
    out = RationalFn(LaurentPoly.term(1), ())
    out = out + RationalFn(LaurentPoly.term(1, 1), (1, 1)) * (Fraction(dc2) / 12)
    out = out + RationalFn(LaurentPoly({1: 1, 2: 4, 3: 1}), (1, 1, 1, 1)) * (Fraction(d3) / 6)
    return out


def _part_iii(curve: CurveStratum) -> RationalFn:
    q = curve.transverse_type
    d = delta(q).poly
    s = curve.s
    s0 = sigma(q)[0]
    growth = RationalFn(d.shift(s) * s, (s, s)) + RationalFn(d.derivative().shift(1), (s,))
    return (growth - RationalFn(LaurentPoly.term(s0, 1), (1, 1))) * curve.dc


def _check_points(points: Basket) -> tuple[tuple[OrbifoldType, int], ...]:
    entries = normalize_basket(points)
    for q, _ in entries:
        if q.n != 3:
            raise ValueError(f"CY3 point {q} must have three weights")
        if sum(q.a_list) % q.r != 0:
            raise ValueError(f"CY3 point {q} must satisfy a1+a2+a3 == 0 mod r")
    return entries


def cy3_rr_parts(
    dc2: Fraction,
    d3: Fraction,
    points: Basket = (),
    curves: Sequence[CurveStratum] = (),
) -> CY3Parts:
    """Assemble the four Riemann-Roch part families from geometric inputs.

    The caller supplies D.c2, D^3, and per curve the degree and the part-IV
    prefactor; use `cy3_rr_fit` to recover the scalars from the series when
    only the strata are known.
    """
    entries = _check_points(points)
    part_ii = tuple(
        (q, mult, RationalFn(delta(q).poly, (q.r,))) for q, mult in entries
    )
    part_iii = tuple((c, _part_iii(c)) for c in curves)
    part_iv = tuple(
        (c, RationalFn(iv_numerator(c.s, c.a) * c.iv_prefactor, (c.s,))) for c in curves
    )
    return CY3Parts(
        part_i=_part_i(dc2, d3),
        part_ii=part_ii,
        part_iii=part_iii,
        part_iv=part_iv,
        dc2=Fraction(dc2),
        d3=Fraction(d3),
    )


def _solve_exact(
    columns: Sequence[LaurentPoly], target: LaurentPoly, what: str
) -> list[Fraction]:
    """Solve sum x_j columns[j] == target exactly; unique solution required."""
    exps: set[int] = set(target._terms)
    for c in columns:
        exps |= set(c._terms)
    rows = [[c.coeff(e) for c in columns] + [target.coeff(e)] for e in sorted(exps)]
    ncols = len(columns)
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if r < ncols:
        raise DecompositionError(
            f"{what}: linear system is underdetermined (rank {r} < {ncols} unknowns)",
            check="linear_solve",
        )
    if any(all(x == 0 for x in row[:ncols]) and row[ncols] != 0 for row in rows):
        raise DecompositionError(
            f"{what}: linear system is inconsistent; the strata data do not "
            "match the series",
            check="linear_solve",
        )
    sol = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        sol[col] = rows[i][ncols]
    return sol


def cy3_rr_fit(
    P: RationalFn,
    points: Basket = (),
    curves: Sequence[CurveStratum] = (),
) -> CY3Parts:
    """Recover D.c2, D^3 and the part-IV prefactors from the series.

    Curve degrees must be supplied on the strata; the scalars are the
    unique solution making I + II + III + IV equal P, found by exact
    linear solve and then verified by cross-multiplied identity.
    """
    entries = _check_points(points)
    base = RationalFn(LaurentPoly.term(1), ())
    for q, mult in entries:
        base = base + RationalFn(delta(q).poly, (q.r,)) * mult
    for c in curves:
        base = base + _part_iii(c)
    residual = P - base
    columns_fn = [
        RationalFn(LaurentPoly.term(1, 1), (1, 1)),
        RationalFn(LaurentPoly({1: 1, 2: 4, 3: 1}), (1, 1, 1, 1)),
    ]
    has_iv = [not iv_numerator(c.s, c.a).is_zero for c in curves]
    for c, flag in zip(curves, has_iv):
        if flag:
            columns_fn.append(RationalFn(iv_numerator(c.s, c.a), (c.s,)))
    den = residual.den
    for fn in columns_fn:
        den = den.lcm(fn.den)
    target = residual.num * den.sub(residual.den).as_poly()
    columns = [fn.num * den.sub(fn.den).as_poly() for fn in columns_fn]
    sol = _solve_exact(columns, target, "cy3_rr_fit")
    dc2 = sol[0] * 12
    d3 = sol[1] * 6
    prefs = iter(sol[2:])
    fitted = [
        CurveStratum(c.s, c.a, c.dc, next(prefs) if flag else Fraction(0))
        for c, flag in zip(curves, has_iv)
    ]
    parts = cy3_rr_parts(dc2, d3, points, fitted)
    if parts.total() != P:
        raise DecompositionError(
            "cy3_rr_fit: fitted parts do not reassemble the series; the strata "
            "data are wrong",
            check="reassembly",
            residual=(P - parts.total()).simplify(),
        )
    return parts


@dataclass(frozen=True)
class CurveIcePart:
    """Integral curve contribution: A_C = delta_c * P_orb/(1-t^s), plus B_C."""

    stratum: CurveStratum
    delta_c: int
    a_part: RationalFn
    b_numerator: LaurentPoly
    b_part: RationalFn


@dataclass(frozen=True)
class CY3IceParts:
    """Integral Gorenstein-symmetric splitting of a CY3 Hilbert series."""

    initial: RationalFn
    point_parts: tuple[tuple[OrbifoldPart, int], ...]
    curve_parts: tuple[CurveIcePart, ...]

    def total(self) -> RationalFn:
        out = self.initial
        for part, mult in self.point_parts:
            out = out + part.fn * mult
        for cp in self.curve_parts:
            out = out + cp.a_part + cp.b_part
        return out


def _b_support(s: int) -> list[tuple[int, LaurentPoly]]:
    # palindromic basis monomials of degree s+3 with support in [3, s]
    out = []
    for e in range(3, (s + 3) // 2 + 1):
        m = s + 3 - e
        out.append((e, LaurentPoly({e: 1}) if m == e else LaurentPoly({e: 1, m: 1})))
    return out


def cy3_ice_parts(
    P: RationalFn,
    points: Basket = (),
    curves: Sequence[tuple[int, int] | CurveStratum] = (),
) -> CY3IceParts:
    """Split a CY3 Hilbert series into integral Gorenstein-symmetric parts.

    P must be Gorenstein symmetric with k = 0, n = 3.  The initial part
    comes from the plurigenera P_0..P_2; point parts are generalized ice
    cream (dissident points included); per curve (s, a) the integer
    delta_C and the palindromic Num B_C (symmetric degree s+3, support
    [3, s]) are found by exact linear solve.  Non-integral solutions or a
    failed reassembly raise DecompositionError: the strata data are wrong.
    """
    if not is_gorenstein_symmetric(P, 0, 3):
        raise DecompositionError(
            "series is not Gorenstein symmetric with k = 0, n = 3",
            check="gorenstein_symmetry",
            residual=P,
        )
    strata = [c if isinstance(c, CurveStratum) else CurveStratum(c[0], c[1]) for c in curves]
    seen: set[int] = set()
    for c in strata:
        if c.s in seen:
            raise DecompositionError(
                f"two curve strata share the transverse period s = {c.s}; "
                "the recombination solve is not well posed",
                check="duplicate_period",
            )
        seen.add(c.s)
    entries = _check_points(points)
    initial = initial_from_plurigenera(expand(P, 2), 0, 3)
    point_parts = tuple((p_orb_general(q, 0, 3), mult) for q, mult in entries)
    residual = P - initial
    for part, mult in point_parts:
        residual = residual - part.fn * mult

    columns_fn: list[RationalFn] = []
    layout: list[tuple[CurveStratum, OrbifoldPart, int]] = []
    for c in strata:
        pb = p_orb(c.transverse_type, c.s, 2)
        columns_fn.append(RationalFn(pb.numerator, pb.fn.den.plus((c.s,))))
        nb = len(_b_support(c.s))
        for _, mono in _b_support(c.s):
            columns_fn.append(RationalFn(mono, (1, 1, 1, c.s)))
        layout.append((c, pb, nb))

    if columns_fn:
        den = residual.den
        for fn in columns_fn:
            den = den.lcm(fn.den)
        target = residual.num * den.sub(residual.den).as_poly()
        columns = [fn.num * den.sub(fn.den).as_poly() for fn in columns_fn]
        sol = _solve_exact(columns, target, "cy3_ice_parts")
    else:
        if not residual.is_zero:
            raise DecompositionError(
                "no curve strata given but the residual after the initial and "
                "point parts is nonzero",
                check="reassembly",
                residual=residual.simplify(),
            )
        sol = []

    curve_parts: list[CurveIcePart] = []
    pos = 0
    for c, pb, nb in layout:
        dc = sol[pos]
        coeffs = sol[pos + 1 : pos + 1 + nb]
        pos += 1 + nb
        if dc.denominator != 1:
            raise DecompositionError(
                f"delta for the 1/{c.s} curve is not an integer: {dc}",
                check="integrality",
            )
        b_num = LaurentPoly()
        for (e, mono), v in zip(_b_support(c.s), coeffs):
            if v.denominator != 1:
                raise DecompositionError(
                    f"Num B coefficient t^{e} for the 1/{c.s} curve is not an "
                    f"integer: {v}",
                    check="integrality",
                )
            b_num = b_num + mono * v
        a_part = RationalFn(pb.numerator * dc, pb.fn.den.plus((c.s,)))
        b_part = RationalFn(b_num, (1, 1, 1, c.s))
        curve_parts.append(CurveIcePart(c, int(dc), a_part, b_num, b_part))

    result = CY3IceParts(
        initial=initial, point_parts=point_parts, curve_parts=tuple(curve_parts)
    )
    if result.total() != P:
        raise DecompositionError(
            "ice cream parts do not reassemble the series; the strata data are wrong",
            check="reassembly",
            residual=(P - result.total()).simplify(),
        )
    return result
