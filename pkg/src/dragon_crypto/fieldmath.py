"""Integer arithmetic modulo a prime.

Everything here works on plain Python ints, so there is no size limit
beyond memory. Square roots are only provided for primes p = 3 (mod 4).
"""
import random

from .errors import NotAResidue

MILLER_RABIN_ROUNDS = 64

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)


def mod_pow(base: int, exp: int, m: int) -> int:
    """Return ``base**exp mod m`` in ``[0, m)``."""
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    if m < 2:
        raise ValueError("modulus must be at least 2")
    return pow(base, exp, m)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with a reproducible base schedule.

    The witnesses are drawn from a PRNG seeded with ``n`` itself, so the
    answer for a given ``n`` never changes between runs or machines.
    """
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n == q:
            return True
        if n % q == 0:
            return False

    r, s = 0, n - 1
    while s % 2 == 0:
        r += 1
        s //= 2

    rng = random.Random(n)
    for _ in range(MILLER_RABIN_ROUNDS):
        a = rng.randrange(2, n - 1)
        x = mod_pow(a, s, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_quadratic_residue(s: int, p: int) -> bool:
    """True iff ``s**((p+1)/2) == s (mod p)``; zero counts as a residue."""
    if not 0 <= s < p:
        raise ValueError(f"s must lie in [0, {p})")
    return mod_pow(s, (p + 1) // 2, p) == s


def mod_sqrt(s: int, p: int) -> int:
    """The root ``s**((p+1)/4) mod p`` (never its negation). Needs p = 3 mod 4."""
    if p % 4 != 3:
        raise ValueError("mod_sqrt requires p = 3 (mod 4)")
    if not is_quadratic_residue(s, p):
        raise NotAResidue(f"{s} is not a quadratic residue mod {p}")
    return mod_pow(s, (p + 1) // 4, p)


def random_prime_3mod4(bits: int, rng: random.Random) -> int:
    """Draw a probable prime of exactly ``bits`` bits with p = 3 (mod 4)."""
    if bits < 3:
        raise ValueError("need at least 3 bits for a prime = 3 mod 4")
    while True:
        candidate = rng.getrandbits(bits) | (1 << (bits - 1)) | 3
        if candidate >= 7 and is_probable_prime(candidate):
            return candidate
