"""Exact integer number theory behind every closed form.

All functions are pure. Ramanujan sums are evaluated through the
Mobius/totient closed form so no tolerance enters at this layer.
"""

from dataclasses import dataclass
from functools import cache
from math import gcd, prod
from typing import NamedTuple

from src.spectral.errors import InvalidInputError

# n beyond 32-bit range is out of scope
MAX_N = 2**31 - 1


class PrimePower(NamedTuple):
    """One factor p^e of a factorization."""

    prime: int
    exponent: int


Factorization = tuple[PrimePower, ...]


@dataclass(frozen=True)
class RamanujanIndex:
    """Residue index k together with t_k = n / gcd(k, n)."""

    k: int
    t_k: int


def _check_positive(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise InvalidInputError(f"{name} must be an integer, got {n!r}")
    if n < 1:
        raise InvalidInputError(f"{name} must be >= 1, got {n}")
    if n > MAX_N:
        raise InvalidInputError(f"{name} must fit in 32 bits, got {n}")


@cache
def factorize(n: int) -> Factorization:
    """Factor n by trial division.

    Args:
        n: Positive integer

    Returns:
        Prime powers in ascending prime order; empty for n = 1

    Raises:
        InvalidInputError: If n < 1
    """
    _check_positive(n)
    factors: list[PrimePower] = []
    remaining = n
    p = 2
    while p * p <= remaining:
        if remaining % p == 0:
            e = 0
            while remaining % p == 0:
                remaining //= p
                e += 1
            factors.append(PrimePower(p, e))
        p += 1 if p == 2 else 2
    if remaining > 1:
        factors.append(PrimePower(remaining, 1))
    return tuple(factors)


def euler_phi(n: int) -> int:
    """Euler's totient: count of 1..n coprime to n (phi(1) = 1)."""
    factors = factorize(n)
    result = n
    for p, _ in factors:
        result = result // p * (p - 1)
    return result


def mobius(n: int) -> int:
    """Mobius function: 0 on a squared prime factor, else (-1)^(prime count)."""
    factors = factorize(n)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def units(n: int) -> tuple[int, ...]:
    """Units of Z_n in ascending order.

    Raises:
        InvalidInputError: If n < 2
    """
    _check_positive(n)
    if n < 2:
        raise InvalidInputError(f"units require n >= 2, got {n}")
    return tuple(a for a in range(1, n) if gcd(a, n) == 1)


def squarefree_kernel(n: int) -> tuple[int, int]:
    """Largest squarefree divisor s of n and the number r of distinct primes."""
    factors = factorize(n)
    return prod(p for p, _ in factors), len(factors)


def is_squarefree(n: int) -> bool:
    return squarefree_kernel(n)[0] == n


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, m) when n = p^m with m >= 1, else None."""
    factors = factorize(n)
    if len(factors) != 1:
        return None
    return factors[0].prime, factors[0].exponent


def is_power_of_two(n: int) -> bool:
    """True for n = 2^m with m >= 1."""
    _check_positive(n)
    return n > 1 and n & (n - 1) == 0


def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of n in ascending order."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


def ramanujan_index(k: int, n: int) -> RamanujanIndex:
    """Pair k with t_k = n / gcd(k, n).

    Raises:
        InvalidInputError: If n < 2 or k is outside 0..n-1
    """
    _check_positive(n)
    if n < 2:
        raise InvalidInputError(f"Ramanujan sums require n >= 2, got {n}")
    if not isinstance(k, int) or not 0 <= k < n:
        raise InvalidInputError(f"k must lie in 0..{n - 1}, got {k!r}")
    return RamanujanIndex(k, n // gcd(k, n))


def ramanujan_sum(k: int, n: int) -> int:
    """Ramanujan sum c(k, n) = mu(t_k) * phi(n) / phi(t_k).

    These are the eigenvalues of the right circulant gcd-indicator matrix.
    phi(t_k) divides phi(n) because t_k divides n, so the division is exact.
    """
    t = ramanujan_index(k, n).t_k
    return mobius(t) * (euler_phi(n) // euler_phi(t))


def ramanujan_sums(n: int) -> tuple[int, ...]:
    """c(k, n) for k = 0..n-1."""
    return tuple(ramanujan_sum(k, n) for k in range(n))


def unitary_cayley_energy(n: int) -> int:
    """Adjacency energy of the unitary Cayley graph X_n, 2^r * phi(n)."""
    _, r = squarefree_kernel(n)
    return 2**r * euler_phi(n)
