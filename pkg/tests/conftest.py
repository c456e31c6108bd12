import random
from fractions import Fraction

import pytest

from adelic_gaps import AdelePoint, PrimeSet, make_point

# Prime-set mix used by the seeded sweeps: small finite sets plus the two
# cofinite shapes exercised throughout.
PRIMESET_POOL = [
    PrimeSet.of(2),
    PrimeSet.of(3),
    PrimeSet.of(5),
    PrimeSet.of(2, 3),
    PrimeSet.of(2, 5),
    PrimeSet.of(3, 7),
    PrimeSet.of(2, 3, 5),
    PrimeSet.of(3, 5, 11),
    PrimeSet.all_primes(),
    PrimeSet.all_except(2),
]


def random_rational(rng: random.Random, height: int) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def random_point(rng: random.Random, primes: PrimeSet, height: int = 30) -> AdelePoint:
    overrides = {}
    for p in primes.first_members(4):
        if rng.random() < 0.4:
            overrides[p] = random_rational(rng, height)
    return make_point(random_rational(rng, height), 0, overrides, primes)


def random_primeset(rng: random.Random) -> PrimeSet:
    return rng.choice(PRIMESET_POOL)


@pytest.fixture
def rng():
    return random.Random(20260823)
