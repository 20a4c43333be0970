"""Exact rational arithmetic helpers: Bernoulli numbers, generalized Bernoulli
numbers attached to Kronecker characters, the Kronecker symbol, and the
fundamental-discriminant decomposition behind the quadratic-field invariants.

All values are `fractions.Fraction` (arbitrary precision, always reduced);
nothing here ever rounds.
"""
from fractions import Fraction
from functools import lru_cache
from math import comb

_BERNOULLI = [Fraction(1)]


def bernoulli_number(m):
    """m-th Bernoulli number, convention B_1 = -1/2.

    Computed by the defining recurrence sum(C(n+1, j) B_j, j < n+1) = 0.
    """
    if m < 0:
        raise ValueError("Bernoulli index must be >= 0")
    while len(_BERNOULLI) <= m:
        n = len(_BERNOULLI)
        s = sum(comb(n + 1, j) * _BERNOULLI[j] for j in range(n))
        _BERNOULLI.append(-s / Fraction(n + 1))
    return _BERNOULLI[m]


def bernoulli_poly_value(m, t):
    """Value of the m-th Bernoulli polynomial at the rational t."""
    t = Fraction(t)
    return sum(comb(m, j) * bernoulli_number(j) * t ** (m - j) for j in range(m + 1))


def kronecker_symbol(d, n):
    """Kronecker symbol (d/n), fully extended (n may be 0, negative, even)."""
    if n == 0:
        return 1 if d in (1, -1) else 0
    if n < 0:
        return (1 if d >= 0 else -1) * kronecker_symbol(d, -n)
    r = 1
    while n % 2 == 0:
        n //= 2
        if d % 2 == 0:
            return 0
        if d % 8 in (3, 5):
            r = -r
    a = d % n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                r = -r
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            r = -r
        a %= n
    return r if n == 1 else 0


def factorize(n):
    """Prime factorization {p: e} of n >= 1 by trial division."""
    f = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            f[d] = f.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        f[n] = f.get(n, 0) + 1
    return f


def prime_divisors(n):
    return sorted(factorize(n)) if n > 1 else []


def fundamental_discriminant_split(N):
    """Write the negative integer N (0 or 1 mod 4) as N = d*f^2 with d a
    fundamental discriminant and f a positive integer; return (d, f)."""
    if N >= 0 or N % 4 not in (0, 1):
        raise ValueError("need N < 0 with N = 0 or 1 mod 4, got %r" % (N,))
    g = 1
    for p, e in factorize(-N).items():
        g *= p ** (e // 2)
    s = N // (g * g)  # squarefree part, negative
    if s % 4 == 1:
        return s, g
    # s = 2 or 3 mod 4: the discriminant is 4s, and N = 0 mod 4 forces g even
    assert g % 2 == 0, (N, s, g)
    return 4 * s, g // 2


def is_fundamental_discriminant(d):
    return d < 0 and d % 4 in (0, 1) and fundamental_discriminant_split(d) == (d, 1)


@lru_cache(maxsize=None)
def generalized_bernoulli(m, d):
    """Generalized Bernoulli number B_{m,chi} for the Kronecker character chi
    of the negative fundamental discriminant d:

        B_{m,chi} = |d|^(m-1) * sum_{a=1}^{|d|} chi(a) B_m(a/|d|).
    """
    if not is_fundamental_discriminant(d):
        raise ValueError("%r is not a negative fundamental discriminant" % (d,))
    D = abs(d)
    return D ** (m - 1) * sum(
        kronecker_symbol(d, a) * bernoulli_poly_value(m, Fraction(a, D))
        for a in range(1, D + 1))


def p_valuation(p, n):
    """Largest e with p^e dividing n (n nonzero)."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v
