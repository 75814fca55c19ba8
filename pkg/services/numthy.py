"""
Integer arithmetic behind every graph family: factorization, divisors,
the n*/n_* pair, Euler phi and exponent signatures.

Everything here is a pure function of its arguments and cached; sympy does
the factoring, which is deterministic over the 64-bit range we accept.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache, reduce
from operator import mul
from typing import Iterable, List, Sequence, Tuple

import sympy

from services.errors import InvalidInput

logger = logging.getLogger(__name__)

MAX_INT = 2**64 - 1


def _check_range(n: int, minimum: int, name: str = "n") -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidInput(f"{name} must be an integer, got {n!r}")
    if n < minimum:
        raise InvalidInput(f"{name} must be >= {minimum}, got {n}")
    if n > MAX_INT:
        raise InvalidInput(f"{name}={n} is outside the unsigned 64-bit range")
    return n


def checked_product(values: Iterable[int]) -> int:
    """Product of values, rejecting results beyond the 64-bit range"""
    total = 1
    for v in values:
        total *= v
        if total > MAX_INT:
            raise InvalidInput("product overflows the unsigned 64-bit range")
    return total


@dataclass(frozen=True)
class PrimeSignature:
    """Exponent multiset of a factorization, stored in descending order."""

    exponents: Tuple[int, ...]

    @classmethod
    def of(cls, exponents: Iterable[int]) -> "PrimeSignature":
        return cls(tuple(sorted(exponents, reverse=True)))

    def __len__(self) -> int:
        return len(self.exponents)

    def as_list(self) -> List[int]:
        return list(self.exponents)


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: Tuple[Tuple[int, int], ...]

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def exponents(self) -> Tuple[int, ...]:
        return tuple(a for _, a in self.factors)

    @property
    def signature(self) -> PrimeSignature:
        return PrimeSignature.of(self.exponents)

    @property
    def distinct_prime_count(self) -> int:
        return len(self.factors)

    @property
    def is_prime(self) -> bool:
        return self.exponents == (1,)

    @property
    def is_prime_power(self) -> bool:
        return len(self.factors) == 1

    @property
    def is_squarefree(self) -> bool:
        return all(a == 1 for a in self.exponents)


@lru_cache(maxsize=65536)
def factorize(n: int) -> Factorization:
    """Canonical prime decomposition of n, primes ascending"""
    _check_range(n, 1)
    factors = tuple(sorted(sympy.factorint(n).items()))
    return Factorization(n=n, factors=factors)


@lru_cache(maxsize=16384)
def _divisors(n: int) -> Tuple[int, ...]:
    return tuple(int(d) for d in sympy.divisors(n))


def divisors(n: int) -> List[int]:
    """All divisors of n in ascending order"""
    _check_range(n, 1)
    return list(_divisors(n))


def star_pair(n: int) -> Tuple[int, int]:
    """
    Return (n_star, n_substar): exponents halved rounding up and down.

    n_star * n_substar == n for every n, so n divides their product.
    """
    _check_range(n, 2)
    fac = factorize(n)
    n_star = checked_product(p ** ((a + 1) // 2) for p, a in fac.factors)
    n_substar = checked_product(p ** (a // 2) for p, a in fac.factors)
    return n_star, n_substar


def euler_phi(n: int) -> int:
    _check_range(n, 1)
    return int(sympy.totient(n))


def combined_signature(dims: Sequence[int]) -> PrimeSignature:
    """
    Signature of the product of the dims after renaming primes so that no
    two dims share one.
    """
    if not dims:
        raise InvalidInput("dims must be nonempty")
    exponents: List[int] = []
    for d in dims:
        _check_range(d, 2, "dim")
        exponents.extend(factorize(d).exponents)
    return PrimeSignature.of(exponents)


def canonical_representative(signature: PrimeSignature) -> int:
    """Smallest integer with the given signature (largest exponent on 2)"""
    primes = [int(sympy.prime(i + 1)) for i in range(len(signature))]
    return checked_product(p**a for p, a in zip(primes, signature.exponents))


def odd_exponent_count(n: int) -> int:
    return sum(1 for a in factorize(n).exponents if a % 2 == 1)


def radical(n: int) -> int:
    return reduce(mul, factorize(n).primes, 1)


def is_prime(n: int) -> bool:
    return n >= 2 and bool(sympy.isprime(n))
