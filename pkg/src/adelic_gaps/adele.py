"""Points of the restricted product A_P, the torus X_P = A_P / Gamma_P, and their metrics.

A point is stored with finite data: the coordinate at infinity, a default
coordinate shared by every prime of the prime set that is not explicitly
overridden, and a finite override map.  The prime set is either a finite
explicit list or cofinite ("all primes except ...") , which keeps the
sup in the ambient metric exactly computable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor, gcd

from .arith import is_prime, next_prime, padic_abs, valuation


@dataclass(frozen=True)
class PrimeSet:
    """Finite explicit set of primes, or the cofinite complement of one.

    `listed` holds the members when `finite`, the exclusions otherwise.
    """

    finite: bool
    listed: tuple[int, ...]

    def __post_init__(self):
        listed = tuple(self.listed)
        object.__setattr__(self, "listed", listed)
        for p in listed:
            if not is_prime(p):
                raise ValueError(f"invalid prime: {p}")
        if list(listed) != sorted(set(listed)):
            raise ValueError("prime list must be sorted and duplicate-free")
        if self.finite and not listed:
            raise ValueError("finite prime set must be non-empty")

    @classmethod
    def of(cls, *primes: int) -> "PrimeSet":
        return cls(True, tuple(sorted(primes)))

    @classmethod
    def all_except(cls, *excluded: int) -> "PrimeSet":
        return cls(False, tuple(sorted(excluded)))

    @classmethod
    def all_primes(cls) -> "PrimeSet":
        return cls(False, ())

    def __contains__(self, p: int) -> bool:
        if self.finite:
            return p in self.listed
        return is_prime(p) and p not in self.listed

    def smallest(self) -> int:
        if self.finite:
            return self.listed[0]
        p = 2
        while p in self.listed:
            p = next_prime(p)
        return p

    def smallest_outside(self, avoid) -> int | None:
        """Smallest member not in `avoid`; None if the finite set is exhausted."""
        if self.finite:
            for p in self.listed:
                if p not in avoid:
                    return p
            return None
        p = 2
        while p in self.listed or p not in self or p in avoid:
            p = next_prime(p)
        return p

    def first_members(self, k: int) -> list[int]:
        """The k smallest primes of the set (fewer if the set is smaller)."""
        if self.finite:
            return list(self.listed[:k])
        out: list[int] = []
        p = 2
        while len(out) < k:
            if p in self:
                out.append(p)
            p = next_prime(p)
        return out

    def contains_all_factors(self, n: int) -> bool:
        """True iff every prime factor of the nonzero integer n lies in the set."""
        n = abs(n)
        d = 2
        while d * d <= n:
            if n % d == 0:
                if d not in self:
                    return False
                while n % d == 0:
                    n //= d
            d += 1
        return n == 1 or n in self

    def __str__(self) -> str:
        if self.finite:
            return ",".join(str(p) for p in self.listed)
        if not self.listed:
            return "all"
        return "all-except:" + ",".join(str(p) for p in self.listed)


@dataclass(frozen=True)
class AdelePoint:
    """Element of A_P with finite data.

    Coordinates: `at_infinity` at the real place; at a prime p of the set,
    `overrides[p]` if present, else `default_value`.  The restricted-product
    condition forces the default to be p-integral wherever it applies.
    """

    at_infinity: Fraction
    default_value: Fraction
    overrides: dict[int, Fraction]
    primes: PrimeSet

    def __post_init__(self):
        object.__setattr__(self, "at_infinity", Fraction(self.at_infinity))
        object.__setattr__(self, "default_value", Fraction(self.default_value))
        object.__setattr__(
            self, "overrides", {p: Fraction(v) for p, v in sorted(self.overrides.items())}
        )
        for p in self.overrides:
            if not is_prime(p) or p not in self.primes:
                raise ValueError(f"override key {p} is not a prime of the prime set")
        den = self.default_value.denominator
        if den > 1:
            for p in _prime_factors(den):
                if p in self.primes and p not in self.overrides:
                    raise ValueError(
                        f"default coordinate {self.default_value} is not {p}-integral "
                        f"and {p} is not overridden"
                    )

    def coordinate(self, p: int) -> Fraction:
        if p not in self.primes:
            raise ValueError(f"{p} is not in the prime set")
        return self.overrides.get(p, self.default_value)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AdelePoint):
            return NotImplemented
        if self.primes != other.primes or self.at_infinity != other.at_infinity:
            return False
        keys = set(self.overrides) | set(other.overrides)
        if any(self.coordinate(p) != other.coordinate(p) for p in keys):
            return False
        return self.default_value == other.default_value

    def __str__(self) -> str:
        parts = [f"inf={self.at_infinity}", f"default={self.default_value}"]
        parts += [f"{p}={v}" for p, v in self.overrides.items()]
        return ";".join(parts)


class TorusPoint(AdelePoint):
    """An AdelePoint lying in the fundamental domain [0,1) x prod Z_p."""

    def __post_init__(self):
        super().__post_init__()
        if not 0 <= self.at_infinity < 1:
            raise ValueError(f"coordinate at infinity {self.at_infinity} not in [0,1)")
        for p, v in self.overrides.items():
            if padic_abs(v, p) > 1:
                raise ValueError(f"coordinate {v} at prime {p} is not p-integral")
        # non-overridden primes are covered by the base-class default check


@lru_cache(maxsize=1 << 16)
def _prime_factors(n: int) -> tuple[int, ...]:
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def make_point(at_infinity, default_value, overrides, primes: PrimeSet) -> AdelePoint:
    """Validated constructor; rejects invariant violations."""
    return AdelePoint(Fraction(at_infinity), Fraction(default_value), dict(overrides), primes)


def zero_point(primes: PrimeSet) -> AdelePoint:
    return AdelePoint(Fraction(0), Fraction(0), {}, primes)


def _require_same_primes(x: AdelePoint, y: AdelePoint) -> None:
    if x.primes != y.primes:
        raise ValueError("points live over different prime sets")


def add(x: AdelePoint, y: AdelePoint) -> AdelePoint:
    """Coordinatewise sum."""
    _require_same_primes(x, y)
    keys = set(x.overrides) | set(y.overrides)
    return AdelePoint(
        x.at_infinity + y.at_infinity,
        x.default_value + y.default_value,
        {p: x.coordinate(p) + y.coordinate(p) for p in keys},
        x.primes,
    )


def negate(x: AdelePoint) -> AdelePoint:
    return AdelePoint(
        -x.at_infinity, -x.default_value, {p: -v for p, v in x.overrides.items()}, x.primes
    )


def sub(x: AdelePoint, y: AdelePoint) -> AdelePoint:
    return add(x, negate(y))


def scale_by_integer(x: AdelePoint, n: int) -> AdelePoint:
    return AdelePoint(
        n * x.at_infinity,
        n * x.default_value,
        {p: n * v for p, v in x.overrides.items()},
        x.primes,
    )


def add_diagonal(x: AdelePoint, gamma) -> AdelePoint:
    """Add the diagonal embedding of gamma in Gamma_P to every coordinate."""
    gamma = Fraction(gamma)
    den_primes = _prime_factors(gamma.denominator)
    for p in den_primes:
        if p not in x.primes:
            raise ValueError(f"{gamma} is not in Gamma_P: denominator prime {p} outside the set")
    keys = set(x.overrides) | {p for p in den_primes if p in x.primes}
    return AdelePoint(
        x.at_infinity + gamma,
        x.default_value + gamma,
        {p: x.coordinate(p) + gamma for p in keys},
        x.primes,
    )


def diagonal_point(gamma, primes: PrimeSet) -> AdelePoint:
    """The diagonal embedding of gamma in Gamma_P as an AdelePoint."""
    return add_diagonal(zero_point(primes), gamma)


def _raw_abs(at_infinity: Fraction, default: Fraction, coords: dict[int, Fraction], primes: PrimeSet) -> Fraction:
    """Max-metric norm from raw coordinate data (coords = explicit prime coordinates)."""
    best = abs(at_infinity)
    if primes.finite:
        for p in primes.listed:
            term = padic_abs(coords.get(p, default), p)
            if term > best:
                best = term
        return best
    # Cofinite: the term at p is |x_p|_p / p.  Outside a finite candidate set the
    # coordinate is the default d with |d|_p = 1 (or 0), so only the smallest
    # remaining prime can matter.
    candidates = set(coords)
    if default != 0:
        for p in _prime_factors(default.numerator):
            if p in primes:
                candidates.add(p)
        for p in _prime_factors(default.denominator):
            if p in primes:
                candidates.add(p)
    for p in candidates:
        term = padic_abs(coords.get(p, default), p) / p
        if term > best:
            best = term
    if default != 0:
        p = primes.smallest_outside(candidates)
        if p is not None:
            best = max(best, Fraction(1, p))
    return best


def ambient_abs(x: AdelePoint) -> Fraction:
    """Distance to zero under the max metric (with weight 1/p when the set is infinite)."""
    return _raw_abs(x.at_infinity, x.default_value, x.overrides, x.primes)


def ambient_metric(x: AdelePoint, y: AdelePoint) -> Fraction:
    _require_same_primes(x, y)
    return ambient_abs(sub(x, y))


def _fractional_p_part(v: Fraction, p: int) -> Fraction:
    """c/p^k with 0 <= c < p^k such that v - c/p^k is p-integral."""
    k = -valuation(v, p)
    if k <= 0:
        return Fraction(0)
    pk = p**k
    b = v.denominator // pk  # p-free part of the denominator
    c = (v.numerator * pow(b, -1, pk)) % pk
    return Fraction(c, pk)


def reduce(x: AdelePoint) -> tuple[TorusPoint, Fraction]:
    """Reduce into the fundamental domain; returns (xbar, gamma) with xbar = x - gamma.

    Per-prime peeling: at each override prime whose coordinate is not p-integral,
    subtract its fractional p-part diagonally (this leaves every other prime
    coordinate's integrality untouched, by the strong triangle inequality);
    finish by subtracting the floor of the coordinate at infinity.
    """
    gamma = Fraction(0)
    for p, v in x.overrides.items():
        gamma += _fractional_p_part(v, p)
    gamma += floor(x.at_infinity - gamma)
    reduced = add_diagonal(x, -gamma)
    point = TorusPoint(
        reduced.at_infinity, reduced.default_value, reduced.overrides, reduced.primes
    )
    return point, gamma


def torus_distance(x: AdelePoint, y: AdelePoint) -> Fraction:
    """Quotient-metric distance between the cosets of x and y.

    Both points are reduced to the fundamental domain first, after which the
    minimum over Gamma_P is attained at a diagonal shift in {-1, 0, 1}.
    """
    _require_same_primes(x, y)
    xbar, _ = reduce(x)
    ybar, _ = reduce(y)
    return _reduced_distance(xbar, ybar)


def _reduced_distance(xbar: AdelePoint, ybar: AdelePoint) -> Fraction:
    # raw-coordinate hot path: avoids intermediate AdelePoint construction
    inf = xbar.at_infinity - ybar.at_infinity
    default = xbar.default_value - ybar.default_value
    keys = set(xbar.overrides) | set(ybar.overrides)
    coords = {p: xbar.coordinate(p) - ybar.coordinate(p) for p in keys}
    best = None
    for g in (0, 1, -1):
        val = _raw_abs(inf - g, default - g, {p: v - g for p, v in coords.items()}, xbar.primes)
        if best is None or val < best:
            best = val
            if best == 0:
                break
    return best


def gamma_elements(primes: PrimeSet, height_bound: int):
    """All a/b in Gamma_P with |a| <= bound, 1 <= b <= bound, in lowest terms."""
    for b in range(1, height_bound + 1):
        if b > 1 and not primes.contains_all_factors(b):
            continue
        for a in range(-height_bound, height_bound + 1):
            if gcd(a, b) == 1:
                yield Fraction(a, b)


def brute_force_torus_distance(x: AdelePoint, y: AdelePoint, height_bound: int) -> Fraction:
    """Independent oracle: minimize the ambient metric over all gamma of bounded height.

    gamma in {-1, 0, 1} is always included, even for height_bound 1, so on
    reduced points the result never exceeds the three-shift minimum.
    """
    _require_same_primes(x, y)
    diff = sub(x, y)
    best = min(ambient_abs(add_diagonal(diff, g)) for g in (0, 1, -1))
    for g in gamma_elements(x.primes, height_bound):
        val = ambient_abs(add_diagonal(diff, -g))
        if val < best:
            best = val
    return best
