"""Propagator components on the quadratic lattice, exactly and in the limit.

Three routes to the same four numbers live here. The exact route sums a
sector's path amplitudes in closed combinatorial form: the sum over paths
with a fixed number of reversals factorizes into elementary symmetric
polynomials of the odd numbers {1, 3, ..., 2n-1}, one factor per light-cone
axis, so the whole sector collapses to a short polynomial in (i * eps0)
with exact integer coefficients. The limit route is the classical series
in s = sqrt(t^2 - x^2) that those polynomials approach as the lattice
refines. The closed route evaluates the Bessel expressions

    psi_mp = psi_pm = J0(s)
    psi_pp = i ((t + x) / s) J1(s)
    psi_mm = i ((t - x) / s) J1(s)

directly. Convergence sweeps tabulate the exact-versus-closed deviation as
the lattice is refined at fixed velocity.

Component naming: the first sign is the direction of the path's final
segment, the second the direction of its first segment, with p (plus) for
right-moving and m (minus) for left-moving. psi_pp therefore collects the
sector of paths that start and end moving right.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import sqrt
from typing import Optional, Sequence, Union

import numpy as np

from .bessel import bessel_j0, bessel_j1
from .errors import DomainError, InvalidParameterError
from .paths import AmplitudePolynomial, Direction
from .spacetime import rational_square_root, spectrum_membership

RationalLike = Union[int, Fraction]

COMPONENT_ORDER = ("psi_pp", "psi_pm", "psi_mp", "psi_mm")


@dataclass(frozen=True)
class SymmetricTable:
    """Elementary symmetric polynomials e_k of the first n odd numbers.

    values[k] = e_k({1, 3, ..., 2n-1}) for k = 0..n, exact integers.
    """

    n: int
    values: tuple[int, ...]

    def e(self, k: int) -> int:
        if 0 <= k <= self.n:
            return self.values[k]
        return 0


@lru_cache(maxsize=32)
def elem_sym_table(n: int) -> SymmetricTable:
    """Build the full e_k table for the odd-number set of size n.

    Grows the set one odd number at a time with the recurrence
    e_k(new set) = e_k(old) + (2n-1) * e_{k-1}(old), which is O(n^2)
    integer operations. e_1 comes out as n^2, the sum of the first n
    odd numbers, which makes a handy spot check.
    """
    if n < 0:
        raise InvalidParameterError("table size n must be >= 0")
    row = [1]
    for j in range(1, n + 1):
        odd = 2 * j - 1
        nxt = row + [0]
        for k in range(1, len(nxt)):
            nxt[k] = (row[k] if k < len(row) else 0) + odd * row[k - 1]
        row = nxt
    return SymmetricTable(n=n, values=tuple(row))


def exact_component(P: int, Q: int, start: Direction, end: Direction) -> AmplitudePolynomial:
    """Exact sector sum as a polynomial in (i * eps0), no enumeration.

    For the mixed sectors (start and end differ) the paths with 2k + 1
    reversals contribute e_k(O_{P-1}) * e_k(O_{Q-1}) at order 2k: the
    counted reversal coordinates form a free k-subset of {1..P-1} on the
    right axis and of {1..Q-1} on the left axis, and summing the products
    of (2j - 1) over all subset pairs is exactly the product of the two
    elementary symmetric values. The start=end=right sector pairs
    e_k(O_{P-1}) with e_{k-1}(O_{Q-1}) at odd order 2k - 1, and the
    start=end=left sector swaps P with Q. Agreement with the brute-force
    enumeration oracle is what pins these bounds down (the sums stop at
    P - 1 and Q - 1, not P and Q).
    """
    if P < 1 or Q < 1:
        raise InvalidParameterError("sector sums need P >= 1 and Q >= 1")
    ep = elem_sym_table(P - 1)
    eq = elem_sym_table(Q - 1)
    coeffs: dict[int, int] = {}
    if start is not end:
        for k in range(0, min(P - 1, Q - 1) + 1):
            coeffs[2 * k] = ep.e(k) * eq.e(k)
    elif start is Direction.R:
        for k in range(1, min(P - 1, Q) + 1):
            coeffs[2 * k - 1] = ep.e(k) * eq.e(k - 1)
    else:
        for k in range(1, min(Q - 1, P) + 1):
            coeffs[2 * k - 1] = eq.e(k) * ep.e(k - 1)
    return AmplitudePolynomial(coeffs)


@dataclass(frozen=True)
class LatticeSpec:
    """Quadratic lattice endpoint: P right segments, Q left segments, time t.

    The endpoint sits at x = t (P^2 - Q^2) / (P^2 + Q^2), and the base
    segment length is eps0 = t / (P^2 + Q^2), which places the j-th
    right (left) segment endpoint at light-cone coordinate j^2 eps0.
    """

    P: int
    Q: int
    t: Fraction

    def __post_init__(self):
        if self.P < 1 or self.Q < 1:
            raise InvalidParameterError("LatticeSpec requires P >= 1 and Q >= 1")
        object.__setattr__(self, "t", Fraction(self.t))
        if self.t <= 0:
            raise InvalidParameterError("LatticeSpec requires t > 0")

    @property
    def eps0(self) -> Fraction:
        return self.t / (self.P * self.P + self.Q * self.Q)

    @property
    def v(self) -> Fraction:
        return Fraction(self.P * self.P - self.Q * self.Q,
                        self.P * self.P + self.Q * self.Q)

    @property
    def x(self) -> Fraction:
        return self.t * self.v


@dataclass(frozen=True)
class PropagatorMatrix:
    """The four propagator components at one spacetime point.

    Inside the forward light cone psi_pm and psi_mp are real while psi_pp
    and psi_mm are purely imaginary; at x = 0 parity forces
    psi_pp = psi_mm and psi_pm = psi_mp.
    """

    psi_pp: complex
    psi_pm: complex
    psi_mp: complex
    psi_mm: complex

    def component(self, name: str) -> complex:
        if name not in COMPONENT_ORDER:
            raise InvalidParameterError(f"unknown component {name!r}")
        return getattr(self, name)


_SECTORS = {
    "psi_pp": (Direction.R, Direction.R),
    "psi_pm": (Direction.L, Direction.R),
    "psi_mp": (Direction.R, Direction.L),
    "psi_mm": (Direction.L, Direction.L),
}


def exact_parts(spec: LatticeSpec) -> dict[str, tuple[Fraction, Fraction]]:
    """All four components evaluated at eps0, as exact (real, imag) pairs.

    The alternating coefficient sums are evaluated in Fraction arithmetic
    throughout, so cancellation costs nothing; the result is the exact
    Gaussian rational value of each finite path sum.
    """
    out = {}
    for name, (start, end) in _SECTORS.items():
        poly = exact_component(spec.P, spec.Q, start, end)
        out[name] = poly.evaluate_exact(spec.eps0)
    return out


def exact_matrix(spec: LatticeSpec) -> PropagatorMatrix:
    """Exact finite-lattice components, rounded to complex at the very end."""
    parts = exact_parts(spec)
    return PropagatorMatrix(**{name: complex(float(re), float(im))
                               for name, (re, im) in parts.items()})


def closed_matrix(t: float, x: float, series_tol: float = 1e-16) -> PropagatorMatrix:
    """Limiting components at a real point strictly inside the light cone.

    With s = sqrt(t^2 - x^2): psi_mp = psi_pm = J0(s), and the diagonal
    components are i (t +/- x) / s times J1(s).
    """
    t = float(t)
    x = float(x)
    if t <= abs(x):
        raise DomainError(
            f"point (t={t}, x={x}) is outside the open forward light cone")
    s = sqrt((t - x) * (t + x))
    j0 = float(bessel_j0(s, tol=series_tol).value)
    j1 = float(bessel_j1(s, tol=series_tol).value)
    return PropagatorMatrix(
        psi_pp=complex(0.0, (t + x) / s * j1),
        psi_pm=complex(j0, 0.0),
        psi_mp=complex(j0, 0.0),
        psi_mm=complex(0.0, (t - x) / s * j1),
    )


def gamma_of(v: Union[RationalLike, float]) -> Union[Fraction, float]:
    """Lorentz factor 1 / sqrt(1 - v^2), exact when the input allows it.

    Rational v with 1 - v^2 a rational square (always the case for
    spectrum velocities) gives back an exact Fraction; anything else
    falls through to floating point.
    """
    if isinstance(v, (int, Fraction)):
        v = Fraction(v)
        if abs(v) >= 1:
            raise DomainError(f"|v| must be < 1, got {v}")
        root = rational_square_root(1 - v * v)
        if root is not None:
            return 1 / root
        v = float(v)
    if abs(v) >= 1.0:
        raise DomainError(f"|v| must be < 1, got {v}")
    return 1.0 / sqrt(1.0 - v * v)


def pq_identity_check(P: int, Q: int) -> bool:
    """Exact check of 2 P Q gamma = P^2 + Q^2 at the lattice velocity.

    Equivalent to 4 P^2 Q^2 = (P^2 + Q^2)^2 (1 - v^2) with
    v = (P^2 - Q^2) / (P^2 + Q^2); this is the identity that turns the
    series over lattice reversals into the J0 series in s = t / gamma.
    """
    if P < 1 or Q < 1:
        raise InvalidParameterError("identity check needs P, Q >= 1")
    ss = P * P + Q * Q
    v = Fraction(P * P - Q * Q, ss)
    g = gamma_of(v)
    return 4 * P * P * Q * Q == ss * ss * (1 - v * v) and 2 * P * Q * g == ss


def series_psi_mp(t: float, v: float, terms: int) -> complex:
    """Partial sum of the limiting series for the mixed components.

    Sums (-1)^k (s/2)^(2k) / (k!)^2 for k < terms with s = t / gamma.
    Accumulation runs in extended precision; one term is the k = 0 value 1.
    """
    if terms < 1:
        raise InvalidParameterError("terms must be >= 1")
    v = float(v)
    if abs(v) >= 1.0:
        raise DomainError(f"|v| must be < 1, got {v}")
    s = abs(float(t)) * sqrt(1.0 - v * v)
    half = np.longdouble(s) / 2
    total = np.longdouble(0.0)
    term = np.longdouble(1.0)
    for k in range(terms):
        total += term
        term *= -(half * half) / np.longdouble((k + 1) * (k + 1))
    return complex(float(total), 0.0)


def psi_mp_term(P: int, Q: int, t: RationalLike, R: int) -> complex:
    """Large-P form of the order-R contribution to the mixed components.

    For odd R = 2k + 1 the bend sum e_k(O_{P-1}) e_k(O_{Q-1}) approaches
    (P Q)^(2k) / (k!)^2, giving (i eps0)^(R-1) (P Q)^(R-1) / (((R-1)/2)!)^2.
    Useful for watching individual reversal orders approach the limit.
    """
    if P < 1 or Q < 1:
        raise InvalidParameterError("P, Q must be >= 1")
    if R < 1 or R % 2 == 0:
        raise InvalidParameterError("mixed-sector contributions need odd R >= 1")
    k = (R - 1) // 2
    eps0 = float(Fraction(t) / (P * P + Q * Q))
    mag = (P * Q * eps0) ** (2 * k)
    for j in range(1, k + 1):
        mag /= j * j
    return complex((-1) ** k * mag, 0.0)


@dataclass(frozen=True)
class ConvergenceRow:
    """One component of one lattice size in a convergence sweep."""

    P: int
    Q: int
    t: Fraction
    v: Fraction
    component: str
    exact_re: float
    exact_im: float
    closed_re: float
    closed_im: float
    abs_err: float
    rel_err: float


def _deviation_rows(P: int, Q: int, t: Fraction, v: Fraction,
                    parts: dict[str, tuple[Fraction, Fraction]],
                    closed: PropagatorMatrix) -> list[ConvergenceRow]:
    rows = []
    for name in COMPONENT_ORDER:
        ex_re, ex_im = parts[name]
        cl = closed.component(name)
        exf = complex(float(ex_re), float(ex_im))
        abs_err = abs(exf - cl)
        if cl == 0:
            rel_err = 0.0 if abs_err == 0.0 else float("inf")
        else:
            rel_err = abs_err / abs(cl)
        rows.append(ConvergenceRow(
            P=P, Q=Q, t=t, v=v, component=name,
            exact_re=float(ex_re), exact_im=float(ex_im),
            closed_re=cl.real, closed_im=cl.imag,
            abs_err=abs_err, rel_err=rel_err))
    return rows


def convergence_sweep(t: RationalLike, v: RationalLike, P_list: Sequence[int],
                      series_tol: float = 1e-16,
                      jobs: int = 1) -> list[ConvergenceRow]:
    """Deviation of the exact lattice components from the closed forms.

    The velocity fixes the generator shape (P0, Q0); every requested P
    must be a multiple of P0 so that Q = P Q0 / P0 keeps v exact. Rows
    come out grouped by lattice size in input order, components in
    COMPONENT_ORDER within each group. The row computations are
    independent, so jobs > 1 fans them out across a thread pool without
    changing the output order.
    """
    t = Fraction(t)
    v = Fraction(v)
    if t <= 0:
        raise InvalidParameterError("sweep requires t > 0")
    gen = spectrum_membership(v)
    if gen is None:
        raise DomainError(
            f"velocity {v} is not in the spectrum (p^2-q^2)/(p^2+q^2)")
    P0, Q0 = gen

    def rows_for(P: int) -> list[ConvergenceRow]:
        if P < 1 or P % P0 != 0:
            raise DomainError(
                f"P = {P} cannot realize v = {v}: P must be a positive "
                f"multiple of {P0}")
        Q = (P // P0) * Q0
        spec = LatticeSpec(P=P, Q=Q, t=t)
        parts = exact_parts(spec)
        closed = closed_matrix(float(t), float(t * v), series_tol=series_tol)
        return _deviation_rows(P, Q, t, v, parts, closed)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            groups = list(pool.map(rows_for, P_list))
    else:
        groups = [rows_for(P) for P in P_list]
    return [row for group in groups for row in group]
