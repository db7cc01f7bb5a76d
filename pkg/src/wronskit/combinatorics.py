"""Exact combinatorial primitives.

Falling factorials, binomial coefficients with arbitrary rational upper
argument, signed Stirling numbers of the first kind, and the two
binomial-sum identity checkers used by the determinant verifiers.
All arithmetic is over int / fractions.Fraction; nothing here rounds.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction
from functools import lru_cache

from .report import VerificationReport, finish_report

Rat = int | Fraction


def falling_factorial(x: Rat, n: int) -> Rat:
    """x (x-1) ... (x-n+1), with the empty product 1 for n = 0."""
    if n < 0:
        raise ValueError("falling factorial needs n >= 0")
    out: Rat = 1
    for i in range(n):
        out = out * (x - i)
    return out


def binomial(x: Rat, k: int) -> Rat:
    """Binomial coefficient falling_factorial(x, k) / k! for rational x.

    Integer x stays integer, including negative x: a product of k consecutive
    integers is always divisible by k!.  For 0 <= x < k the value is 0.
    """
    if k < 0:
        raise ValueError("binomial needs k >= 0")
    if isinstance(x, Fraction) and x.denominator == 1:
        x = int(x)
    if isinstance(x, int) and x >= 0:
        return math.comb(x, k)
    ff = falling_factorial(x, k)
    if isinstance(ff, int):
        # a product of k consecutive integers is divisible by k!
        return ff // math.factorial(k)
    return ff / math.factorial(k)


@lru_cache(maxsize=None)
def stirling_first(n: int, k: int) -> int:
    """Signed Stirling number of the first kind.

    Defined by falling_factorial(x, n) = sum_k stirling_first(n, k) x^k,
    computed through s(n, k) = s(n-1, k-1) - (n-1) s(n-1, k).
    """
    if n < 0 or k < 0:
        raise ValueError("stirling_first needs n, k >= 0")
    if k > n:
        return 0
    if n == 0:
        return 1
    if k == 0:
        return 0
    return stirling_first(n - 1, k - 1) - (n - 1) * stirling_first(n - 1, k)


def check_odd_binomial_sum(n: int, j: int) -> VerificationReport:
    """Check sum_{k=1}^{n} (-1/2)^(n-k) C(2j-1, k-1) C(2n-k-1, n-1)
    against the closed form 2^(n-1) C(j-1, n-1), both sides exact."""
    started = time.perf_counter()
    if n < 1 or j < 1:
        raise ValueError("check needs n >= 1 and j >= 1")
    lhs = Fraction(0)
    for k in range(1, n + 1):
        lhs += (Fraction(-1, 2) ** (n - k)) * binomial(2 * j - 1, k - 1) * binomial(2 * n - k - 1, n - 1)
    rhs = Fraction(2) ** (n - 1) * binomial(j - 1, n - 1)
    return finish_report("odd-binomial-sum", {"n": n, "j": j}, rhs, lhs, started)


def check_even_binomial_sum(n: int, j: int) -> VerificationReport:
    """Check the conjectural even-column analogue:
    sum_{k=1}^{n} (-1/2)^(n-k) C(2j, k-1) sum_{v=0}^{floor((n-k)/2)} C(2n-k+1, n+1+2v)
    against 2^(n-1) C(j-1, n-1).

    No general proof is known for this sum; each report records a single
    exact instance and says so in its note.
    """
    started = time.perf_counter()
    if n < 1 or j < 1:
        raise ValueError("check needs n >= 1 and j >= 1")
    lhs = Fraction(0)
    for k in range(1, n + 1):
        inner = 0
        for v in range((n - k) // 2 + 1):
            inner += binomial(2 * n - k + 1, n + 1 + 2 * v)
        lhs += (Fraction(-1, 2) ** (n - k)) * binomial(2 * j, k - 1) * inner
    rhs = Fraction(2) ** (n - 1) * binomial(j - 1, n - 1)
    return finish_report(
        "even-binomial-sum", {"n": n, "j": j}, rhs, lhs, started,
        note="empirical instance; the general statement is unproved",
    )
