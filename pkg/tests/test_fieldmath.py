import pytest
from hypothesis import given, strategies as st

from dragon_crypto.errors import NotAResidue
from dragon_crypto.fieldmath import (
    is_probable_prime,
    is_quadratic_residue,
    mod_pow,
    mod_sqrt,
    random_prime_3mod4,
)

from oracles import naive_pow, small_primes_3mod4, square_table

PRIMES_3MOD4 = small_primes_3mod4(10007)


def test_mod_pow_examples():
    assert mod_pow(3, 6, 23) == naive_pow(3, 6, 23) == 16
    assert mod_pow(12345, 0, 97) == 1
    assert mod_pow(0, 5, 23) == 0


@given(st.integers(0, 2**10), st.integers(0, 2**10), st.integers(2, 2**16))
def test_mod_pow_matches_repeated_multiplication(base, exp, m):
    assert mod_pow(base, exp, m) == naive_pow(base, exp, m)


def test_mod_pow_rejects_bad_arguments():
    with pytest.raises(ValueError):
        mod_pow(2, -1, 7)
    with pytest.raises(ValueError):
        mod_pow(2, 3, 1)


@pytest.mark.parametrize("n,expected", [(23, True), (25, False), (2, True), (0, False), (1, False), (65539, True), (561, False)])
def test_is_probable_prime_examples(n, expected):
    assert is_probable_prime(n) is expected


def test_is_probable_prime_agrees_with_sieve():
    sieve = set(small_primes_3mod4(5000)) | {p for p in range(2, 5000) if all(p % q for q in range(2, int(p**0.5) + 1))}
    for n in range(5000):
        assert is_probable_prime(n) == (n in sieve), n


def test_is_probable_prime_is_reproducible():
    n = 2**127 - 1
    assert all(is_probable_prime(n) for _ in range(3))
    assert not is_probable_prime((2**61 - 1) * (2**31 - 1))


def test_quadratic_residue_examples():
    table = square_table(23)
    assert is_quadratic_residue(3, 23) and 3 in table
    assert not is_quadratic_residue(15, 23) and 15 not in table
    assert is_quadratic_residue(0, 23)


def test_mod_sqrt_examples():
    assert mod_sqrt(3, 23) == 16
    assert 16 in square_table(23)[3]
    assert mod_sqrt(1, 10007) == 1
    assert mod_sqrt(0, 10007) == 0


def test_mod_sqrt_non_residue_raises():
    with pytest.raises(NotAResidue):
        mod_sqrt(15, 23)


def test_mod_sqrt_rejects_1_mod_4():
    with pytest.raises(ValueError):
        mod_sqrt(4, 13)


def test_residue_and_sqrt_exhaustive_up_to_10007():
    assert PRIMES_3MOD4[-1] == 10007
    for p in PRIMES_3MOD4:
        table = square_table(p)
        for s in range(p):
            qr = is_quadratic_residue(s, p)
            assert qr == (s in table), (s, p)
            if qr:
                assert mod_sqrt(s, p) ** 2 % p == s


def test_random_prime_3mod4():
    import random

    rng = random.Random(7)
    for bits in (3, 8, 24, 64):
        p = random_prime_3mod4(bits, rng)
        assert p.bit_length() == bits
        assert p % 4 == 3
        assert is_probable_prime(p)
