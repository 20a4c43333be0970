"""The Fourier index lattice: triples eta = (x, y, z) in Z^3 with the norm
form m_eta, the positivity cone, grade-by-grade enumeration, additive
decompositions (convolution support), and the quadratic-field invariants
(a, d, f) attached to each cone point.

The "grade" of an index is its x-coordinate.  It is additive under index
addition and zero only at the origin, which is what makes it the right
truncation parameter for series products.
"""
from collections import namedtuple
from functools import lru_cache
from math import gcd, isqrt

from .exactnum import fundamental_discriminant_split

ZERO = (0, 0, 0)

QuadInvariants = namedtuple("QuadInvariants", "a d f")


def norm_m(eta):
    x, y, z = eta
    return -(5 * x * x + 5 * y * y + 24 * z * z - 2 * x * y + 24 * z * x)


def grade(eta):
    return eta[0]


def is_positive(eta):
    return eta[0] > 0 and norm_m(eta) > 0


def index_key(eta):
    """Canonical sort key (x, m_eta, y, z)."""
    return (eta[0], norm_m(eta), eta[1], eta[2])


@lru_cache(maxsize=None)
def layer(x):
    """All positive indices of grade exactly x, canonically ordered.

    Positivity forces 5z^2 + 5xz + x^2 < 0, which pins z to a short interval
    strictly inside (-x, 0); for each such z the admissible y lie strictly
    between the roots of 5y^2 - 2xy + (5x^2 + 24z^2 + 24zx).  Both intervals
    are scanned with integer arithmetic only.
    """
    pts = []
    for z in range(-x, 1):
        if 5 * z * z + 5 * x * z + x * x >= 0:
            continue
        Ry = -24 * x * x - 120 * z * z - 120 * x * z  # discriminant/5 of the y-quadratic
        if Ry <= 0:
            continue
        ty = isqrt(Ry - 1)  # largest integer strictly below sqrt(Ry)
        ylo = -((ty - x) // 5)
        for y in range(ylo, (x + ty) // 5 + 1):
            eta = (x, y, z)
            assert is_positive(eta), eta
            pts.append(eta)
    pts.sort(key=index_key)
    return tuple(pts)


@lru_cache(maxsize=None)
def enumerate_cone(X):
    """All positive indices of grade <= X in canonical order."""
    out = []
    for x in range(1, X + 1):
        out.extend(layer(x))
    return tuple(out)


@lru_cache(maxsize=None)
def decompositions(eta):
    """All ordered pairs (a, b) of zero-or-positive indices with a + b = eta."""
    if eta == ZERO:
        return ((ZERO, ZERO),)
    out = [(ZERO, eta), (eta, ZERO)]
    for x1 in range(2, eta[0] - 1):
        for a in layer(x1):
            b = (eta[0] - a[0], eta[1] - a[1], eta[2] - a[2])
            if is_positive(b):
                out.append((a, b))
    return tuple(out)


def quad_invariants(eta):
    """Content a = gcd(|x|,|y|,|z|), then -m_eta/a^2 = d*f^2 with d a negative
    fundamental discriminant; only defined on cone points."""
    if not is_positive(eta):
        raise ValueError("quad_invariants needs a positive index, got %r" % (eta,))
    a = gcd(gcd(abs(eta[0]), abs(eta[1])), abs(eta[2]))
    d, f = fundamental_discriminant_split(-norm_m(eta) // (a * a))
    return QuadInvariants(a, d, f)
