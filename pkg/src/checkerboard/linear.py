"""Uniform-lattice checkerboard baseline.

Same path sums, same reversal-counting convention, but every segment has
the constant length eps = t / N. Each counted reversal then contributes
the same factor i * eps, so the order-(R-1) coefficient of a sector sum is
simply the number of paths with R reversals, and the binomial counts do
all the work. This model converges to the same closed forms as the
quadratic lattice; keeping it around isolates what the quadratic geometry
actually changes (the coefficient structure, not the limit).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import InvalidParameterError
from .paths import AmplitudePolynomial, Direction, count_paths
from .propagator import (ConvergenceRow, PropagatorMatrix, _SECTORS,
                         _deviation_rows, closed_matrix)

RationalLike = Union[int, Fraction]


@dataclass(frozen=True)
class LinearSpec:
    """Uniform lattice endpoint: N = P + Q segments of length t / N."""

    N: int
    P: int
    Q: int
    t: Fraction

    def __post_init__(self):
        if self.P < 1 or self.Q < 1:
            raise InvalidParameterError("LinearSpec requires P >= 1 and Q >= 1")
        if self.N != self.P + self.Q:
            raise InvalidParameterError("LinearSpec requires N = P + Q")
        object.__setattr__(self, "t", Fraction(self.t))
        if self.t <= 0:
            raise InvalidParameterError("LinearSpec requires t > 0")

    @property
    def epsilon(self) -> Fraction:
        return self.t / self.N

    @property
    def v(self) -> Fraction:
        return Fraction(self.P - self.Q, self.N)

    @property
    def x(self) -> Fraction:
        return self.t * self.v


def split_counts(N: int, v: RationalLike) -> Optional[tuple[int, int]]:
    """Split N segments into (P, Q) realizing velocity v = (P - Q) / N.

    Needs N (1 + v) even in the exact sense; returns None when no valid
    split exists (that N is then skipped by the sweep).
    """
    if N < 2:
        return None
    v = Fraction(v)
    p = Fraction(N) * (1 + v) / 2
    if p.denominator != 1:
        return None
    P = int(p)
    Q = N - P
    if P < 1 or Q < 1:
        return None
    return P, Q


def linear_component(P: int, Q: int, start: Direction,
                     end: Direction) -> AmplitudePolynomial:
    """Sector sum on the uniform lattice as a polynomial in (i * eps).

    The coefficient at order R - 1 is count_paths(P, Q, start, end, R):
    all counted reversals weigh the same here.
    """
    if P < 1 or Q < 1:
        raise InvalidParameterError("sector sums need P >= 1 and Q >= 1")
    coeffs = {}
    for R in range(1, P + Q):
        c = count_paths(P, Q, start, end, R)
        if c:
            coeffs[R - 1] = c
    return AmplitudePolynomial(coeffs)


def linear_parts(spec: LinearSpec) -> dict[str, tuple[Fraction, Fraction]]:
    """All four components at eps = t / N as exact (real, imag) pairs."""
    out = {}
    for name, (start, end) in _SECTORS.items():
        poly = linear_component(spec.P, spec.Q, start, end)
        out[name] = poly.evaluate_exact(spec.epsilon)
    return out


def linear_matrix(spec: LinearSpec) -> PropagatorMatrix:
    parts = linear_parts(spec)
    return PropagatorMatrix(**{name: complex(float(re), float(im))
                               for name, (re, im) in parts.items()})


WARNING_COMPONENT = "warning"


def linear_converge(t: RationalLike, v: RationalLike, N_list: Sequence[int],
                    series_tol: float = 1e-16) -> list[ConvergenceRow]:
    """Deviation of the uniform-lattice components from the closed forms.

    Same row schema as the quadratic sweep. An N that cannot realize v
    exactly is not an error; it yields a single marker row with
    component = "warning", the skipped N in the P column, Q = 0, and
    zeroed numeric fields, so consumers can tell silence from omission.
    """
    t = Fraction(t)
    v = Fraction(v)
    if t <= 0:
        raise InvalidParameterError("sweep requires t > 0")
    if abs(v) >= 1:
        raise InvalidParameterError("sweep requires |v| < 1")
    rows: list[ConvergenceRow] = []
    for N in N_list:
        split = split_counts(N, v)
        if split is None:
            rows.append(ConvergenceRow(
                P=N, Q=0, t=t, v=v, component=WARNING_COMPONENT,
                exact_re=0.0, exact_im=0.0, closed_re=0.0, closed_im=0.0,
                abs_err=0.0, rel_err=0.0))
            continue
        P, Q = split
        spec = LinearSpec(N=N, P=P, Q=Q, t=t)
        parts = linear_parts(spec)
        closed = closed_matrix(float(t), float(t * v), series_tol=series_tol)
        rows.extend(_deviation_rows(P, Q, t, v, parts, closed))
    return rows
