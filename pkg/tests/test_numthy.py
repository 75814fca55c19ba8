import pytest

from services.errors import InvalidInput
from services.numthy import (
    MAX_INT,
    PrimeSignature,
    canonical_representative,
    checked_product,
    combined_signature,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    odd_exponent_count,
    radical,
    star_pair,
)


class TestFactorize:
    def test_primes_ascending(self):
        fac = factorize(360)
        assert fac.factors == ((2, 3), (3, 2), (5, 1))
        assert fac.primes == (2, 3, 5)
        assert fac.signature == PrimeSignature((3, 2, 1))

    def test_one_has_no_factors(self):
        assert factorize(1).factors == ()

    def test_flags(self):
        assert factorize(13).is_prime
        assert factorize(49).is_prime_power
        assert not factorize(49).is_prime
        assert factorize(30).is_squarefree
        assert not factorize(12).is_squarefree

    @pytest.mark.parametrize("bad", [0, -4, 2**64, 2.5, True])
    def test_rejects_out_of_range(self, bad):
        with pytest.raises(InvalidInput):
            factorize(bad)

    def test_accepts_largest_value(self):
        assert factorize(MAX_INT).n == MAX_INT


class TestDivisorArithmetic:
    def test_divisors(self):
        assert divisors(12) == [1, 2, 3, 4, 6, 12]

    @pytest.mark.parametrize(
        "n, expected",
        [(72, (12, 6)), (12, (6, 2)), (30, (30, 1)), (16, (4, 4)), (7, (7, 1))],
    )
    def test_star_pair(self, n, expected):
        n_star, n_substar = star_pair(n)
        assert (n_star, n_substar) == expected
        assert n_star * n_substar == n

    def test_euler_phi(self):
        assert [euler_phi(n) for n in (1, 9, 12, 30)] == [1, 6, 4, 8]

    def test_odd_exponents_and_radical(self):
        assert odd_exponent_count(72) == 1
        assert odd_exponent_count(30) == 3
        assert radical(360) == 30

    def test_is_prime(self):
        assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


class TestSignatures:
    def test_combined_signature_renames_shared_primes(self):
        assert combined_signature([12, 2]).as_list() == [2, 1, 1]
        assert combined_signature([4, 9]).as_list() == [2, 2]

    def test_combined_signature_needs_dims(self):
        with pytest.raises(InvalidInput):
            combined_signature([])

    def test_canonical_representative(self):
        assert canonical_representative(PrimeSignature((2, 1, 1))) == 60
        assert canonical_representative(factorize(675).signature) == 72

    def test_checked_product_overflow(self):
        assert checked_product([2, 3, 7]) == 42
        with pytest.raises(InvalidInput):
            checked_product([2**40, 2**40])
