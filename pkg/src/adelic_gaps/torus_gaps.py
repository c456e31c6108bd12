"""Rotation orbits on the adelic torus and their nearest-neighbor gap statistics."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .adele import AdelePoint, TorusPoint, _reduced_distance, reduce, scale_by_integer


class DegenerateOrbitError(ValueError):
    """Raised when every pairwise orbit distance is zero, so no gap is defined."""


@dataclass(frozen=True)
class GapReport:
    """Nearest-neighbor distances of one (alpha, N) instance."""

    N: int
    deltas: list[Fraction]  # deltas[n-1] is the distance for the n-th orbit point
    distinct_gaps: list[Fraction]  # sorted, duplicate-free
    gap_count: int
    witnesses: dict[Fraction, int]  # gap value -> one index n attaining it

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "deltas": [str(d) for d in self.deltas],
            "distinct_gaps": [str(g) for g in self.distinct_gaps],
            "gap_count": self.gap_count,
            "witnesses": {str(g): n for g, n in self.witnesses.items()},
        }


def orbit(alpha: AdelePoint, N: int) -> list[TorusPoint]:
    """The reduced points n*alpha for 1 <= n <= N."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    return [reduce(scale_by_integer(alpha, n))[0] for n in range(1, N + 1)]


def _distance_matrix(points: list[TorusPoint]) -> list[list[Fraction]]:
    N = len(points)
    mat = [[Fraction(0)] * N for _ in range(N)]
    for i in range(N):
        for j in range(i + 1, N):
            d = _reduced_distance(points[i], points[j])
            mat[i][j] = d
            mat[j][i] = d
    return mat


def _deltas(points: list[TorusPoint]) -> list[Fraction]:
    mat = _distance_matrix(points)
    deltas = []
    for row in mat:
        positive = [d for d in row if d > 0]
        if not positive:
            raise DegenerateOrbitError(
                "degenerate orbit: all orbit points coincide, no positive distance"
            )
        deltas.append(min(positive))
    return deltas


def nn_distance(alpha: AdelePoint, N: int, n: int) -> Fraction:
    """Distance from the n-th orbit point to its nearest distinct neighbor."""
    if not 1 <= n <= N:
        raise ValueError(f"need 1 <= n <= N, got n={n}, N={N}")
    points = orbit(alpha, N)
    target = points[n - 1]
    positive = [_reduced_distance(target, q) for q in points]
    positive = [d for d in positive if d > 0]
    if not positive:
        raise DegenerateOrbitError(
            "degenerate orbit: all orbit points coincide, no positive distance"
        )
    return min(positive)


def gap_report(alpha: AdelePoint, N: int) -> GapReport:
    """All nearest-neighbor distances, the distinct values, and their count."""
    deltas = _deltas(orbit(alpha, N))
    distinct = sorted(set(deltas))
    witnesses = {}
    for idx, d in enumerate(deltas, start=1):
        if d not in witnesses:
            witnesses[d] = idx
    return GapReport(N, deltas, distinct, len(distinct), witnesses)


def three_gap_check(alpha: AdelePoint, N: int) -> tuple[bool, GapReport]:
    """True iff the number of distinct gaps is at most three.

    A False return would contradict the three gap bound and signals an
    implementation bug; callers should surface it loudly.
    """
    report = gap_report(alpha, N)
    return report.gap_count <= 3, report
