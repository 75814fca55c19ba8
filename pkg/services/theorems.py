"""
Closed-form classification of Gamma(Z_n).

Every function here reads only the factorization of n; the graph oracles
in services.graph are the independent side these values are checked
against.
"""
import logging
from math import prod
from typing import List

from models import ZnTheoremReport
from services.errors import InvalidInput
from services.numthy import (
    PrimeSignature,
    factorize,
    is_prime,
    odd_exponent_count,
    star_pair,
)
from services.zn import is_vertex, type_partition

logger = logging.getLogger(__name__)


def is_smith_signature(signature: PrimeSignature) -> bool:
    """Signatures of the perfect forms p^a, p^a q^b, p^a q r and p q r s"""
    exps = signature.exponents
    if len(exps) in (1, 2):
        return True
    if len(exps) == 3:
        return exps[1] == exps[2] == 1
    if len(exps) == 4:
        return exps == (1, 1, 1, 1)
    return False


def is_smith_perfect(n: int) -> bool:
    return n == 1 or is_smith_signature(factorize(n).signature)


def closed_clique_number(n: int) -> int:
    """n / n* + (number of odd exponents) - 1, and 0 for the empty Gamma(Z_p)"""
    if is_prime(n):
        return 0
    n_star, _ = star_pair(n)
    return n // n_star + odd_exponent_count(n) - 1


def closed_domination_number(n: int) -> int:
    fac = factorize(n)
    if fac.is_prime:
        return 0
    if fac.is_prime_power:
        return 1
    if n % 2 == 0 and is_prime(n // 2) and n != 4:
        # Gamma(Z_2p) is a star centred at p
        return 1
    return fac.distinct_prime_count


def is_chordal_closed(n: int) -> bool:
    fac = factorize(n)
    if fac.is_prime_power:
        return True
    if n % 2:
        return False
    half = factorize(n // 2)
    return half.is_prime or (half.signature.exponents == (2,) and half.n % 2 == 1)


def is_gamma_beta_perfect(n: int) -> bool:
    if n in (8, 9) or is_prime(n):
        return True
    if n % 2 == 0 and is_prime(n // 2) and n != 4:
        return True
    return n % 3 == 0 and is_prime(n // 3)


def simplicial_exists_closed(n: int) -> bool:
    fac = factorize(n)
    return not fac.is_prime and (n % 2 == 0 or not fac.is_squarefree)


def zn_report(n: int) -> ZnTheoremReport:
    if n < 2:
        raise InvalidInput(f"n must be >= 2, got {n}")
    fac = factorize(n)
    r = fac.distinct_prime_count
    return ZnTheoremReport(
        n=n,
        perfect=is_smith_signature(fac.signature),
        complete=fac.signature.exponents == (2,),
        chordal=is_chordal_closed(n),
        clique_number=closed_clique_number(n),
        gamma=closed_domination_number(n),
        gamma_beta_perfect=is_gamma_beta_perfect(n),
        simplicial_exists=simplicial_exists_closed(n),
        kpartite_k_squarefree=r if fac.is_squarefree else None,
        min_dominating_count=prod(p - 1 for p in fac.primes) if r >= 3 else None,
    )


def simplicial_set_closed(n: int) -> List[int]:
    """Vertices in T_2 or in T_g for a divisor g > 1 of n_*"""
    if n < 2:
        raise InvalidInput(f"n must be >= 2, got {n}")
    if is_prime(n):
        return []
    _, n_substar = star_pair(n)
    members: List[int] = []
    for a, cls in type_partition(n).items():
        if a == 2 or n_substar % a == 0:
            members.extend(cls)
    return sorted(members)


def self_annihilator_closed(v: int, n: int) -> bool:
    if not is_vertex(v, n):
        raise InvalidInput(f"{v} is not a vertex of Gamma(Z_{n})")
    n_star, _ = star_pair(n)
    return v % n_star == 0
