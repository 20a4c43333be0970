"""Truncated formal Fourier series over the index cone, with exact rational
coefficients: linear combinations, convolution products, formal square roots,
exact division, and exact linear algebra on coefficient vectors.

A series is truncated at a grade bound `prec`: every coefficient with grade
<= prec is stored exactly (absent key = 0).  Because grade is additive and
only the origin has grade 0, products of truncated series are again exact at
every retained grade.
"""
from fractions import Fraction

from .lattice import ZERO, enumerate_cone, decompositions, grade, index_key, is_positive


class FourierSeries:
    """Weight-tagged, precision-tagged finite coefficient table."""

    __slots__ = ("weight", "prec", "coeffs")

    def __init__(self, weight, prec, coeffs):
        if prec < 1:
            raise ValueError("prec must be >= 1")
        clean = {}
        for eta, v in coeffs.items():
            if not v:
                continue
            if eta != ZERO and not is_positive(eta):
                raise ValueError("index %r outside the closed cone" % (eta,))
            if grade(eta) > prec:
                raise ValueError("index %r beyond prec %d" % (eta, prec))
            clean[eta] = Fraction(v)
        self.weight = weight
        self.prec = prec
        self.coeffs = clean

    def coeff(self, eta):
        return self.coeffs.get(eta, Fraction(0))

    def is_cusp(self):
        return ZERO not in self.coeffs

    def truncate(self, X):
        if X >= self.prec:
            return self
        return FourierSeries(self.weight, X,
                             {e: v for e, v in self.coeffs.items() if grade(e) <= X})

    def sorted_items(self):
        return sorted(self.coeffs.items(), key=lambda kv: index_key(kv[0]))

    def __eq__(self, other):
        return (isinstance(other, FourierSeries)
                and (self.weight, self.prec, self.coeffs)
                == (other.weight, other.prec, other.coeffs))

    __hash__ = None

    def __repr__(self):
        return "FourierSeries(weight=%r, prec=%r, %d coefficients)" % (
            self.weight, self.prec, len(self.coeffs))


def one(prec):
    """The multiplicative unit: weight 0, constant term 1."""
    return FourierSeries(0, prec, {ZERO: Fraction(1)})


def from_function(weight, prec, coeff_fn):
    """Series whose coefficient at each closed-cone index of grade <= prec is
    coeff_fn(eta)."""
    c = {ZERO: coeff_fn(ZERO)}
    for eta in enumerate_cone(prec):
        v = coeff_fn(eta)
        if v:
            c[eta] = v
    if not c[ZERO]:
        del c[ZERO]
    return FourierSeries(weight, prec, c)


def linear_combine(terms):
    """Coefficientwise sum(scalar * series); all series must share one weight,
    the result precision is the minimum of the inputs."""
    if not terms:
        raise ValueError("empty linear combination")
    weight = terms[0][1].weight
    prec = min(s.prec for _, s in terms)
    out = {}
    for sc, s in terms:
        if s.weight != weight:
            raise ValueError("mixed weights %r and %r" % (weight, s.weight))
        if not sc:
            continue
        for eta, v in s.coeffs.items():
            if grade(eta) > prec:
                continue
            w = out.get(eta, 0) + sc * v
            if w:
                out[eta] = w
            else:
                out.pop(eta, None)
    return FourierSeries(weight, prec, out)


def multiply(f, g):
    """Convolution product; the coefficient at eta is the sum of
    C_f(a) * C_g(b) over all decompositions a + b = eta."""
    prec = min(f.prec, g.prec)
    cf, cg = f.coeffs, g.coeffs
    out = {}
    for eta in (ZERO,) + enumerate_cone(prec):
        acc = 0
        for a, b in decompositions(eta):
            va = cf.get(a)
            if va:
                vb = cg.get(b)
                if vb:
                    acc += va * vb
        if acc:
            out[eta] = acc
    return FourierSeries(f.weight + g.weight, prec, out)


def power(f, n):
    if n < 0:
        raise ValueError("negative power")
    if n == 0:
        return one(f.prec)
    r = f
    for _ in range(n - 1):
        r = multiply(r, f)
    return r


def _slices(coeffs):
    """Split a coefficient dict into per-grade dicts."""
    out = {}
    for eta, v in coeffs.items():
        out.setdefault(grade(eta), {})[eta] = v
    return out


def _conv_slices(s1, s2):
    out = {}
    for a, va in s1.items():
        for b, vb in s2.items():
            eta = (a[0] + b[0], a[1] + b[1], a[2] + b[2])
            out[eta] = out.get(eta, 0) + va * vb
    return {e: v for e, v in out.items() if v}


def _add_into(acc, d, sc=1):
    for eta, v in d.items():
        w = acc.get(eta, 0) + sc * v
        if w:
            acc[eta] = w
        else:
            acc.pop(eta, None)


def _conv_bounded(cf, cg, X):
    """Support-by-support convolution keeping only closed-cone indices of
    grade <= X (used for a-posteriori verification of roots and quotients)."""
    out = {}
    for a, va in cf.items():
        if grade(a) > X:
            continue
        for b, vb in cg.items():
            eta = (a[0] + b[0], a[1] + b[1], a[2] + b[2])
            if grade(eta) <= X and (eta == ZERO or is_positive(eta)):
                out[eta] = out.get(eta, 0) + va * vb
    return {e: v for e, v in out.items() if v}


def sqrt_monic(g, lead, sign):
    """Formal square root h of g with C_h(lead) = sign (sign is +-1), g having
    unit coefficient at 2*lead and no support below grade 2*grade(lead).

    Solved grade by grade: the grade-(m + grade(lead)) slice of g minus the
    already-known cross terms equals 2*sign times the grade-m slice of h.
    The result is verified by re-expanding h*h to the precision of g; any
    residual raises, it is never returned silently.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if g.weight % 2:
        raise ValueError("square root of an odd-weight series")
    if not is_positive(lead):
        raise ValueError("leading index must be positive")
    g0 = grade(lead)
    S = _slices(g.coeffs)
    for n in range(0, 2 * g0):
        if n in S:
            raise ValueError("not a square: support below twice the leading grade")
    lead2 = (2 * lead[0], 2 * lead[1], 2 * lead[2])
    if S.get(2 * g0) != {lead2: Fraction(1)}:
        raise ValueError("leading slice is not a unit concentrated at 2*lead")
    H = {g0: {lead: Fraction(sign)}}
    for n in range(2 * g0 + 1, g.prec + 1):
        m = n - g0  # grade of the new slice of h
        r = dict(S.get(n, {}))
        for m1 in range(g0 + 1, n // 2 + 1):
            m2 = n - m1
            if m2 >= m or m1 not in H or m2 not in H:
                continue
            _add_into(r, _conv_slices(H[m1], H[m2]), -(2 if m1 != m2 else 1))
        hm = {}
        for eta, v in r.items():
            ep = (eta[0] - lead[0], eta[1] - lead[1], eta[2] - lead[2])
            if not (is_positive(ep) and grade(ep) == m):
                raise ValueError("not a square: residual at %r lies outside "
                                 "lead + cone" % (eta,))
            hm[ep] = v / (2 * sign)
        if hm:
            H[m] = hm
    ch = {}
    for sl in H.values():
        ch.update(sl)
    if _conv_bounded(ch, ch, g.prec) != g.coeffs:
        raise ValueError("not a square: re-expansion residual is nonzero")
    return FourierSeries(g.weight // 2, g.prec - g0, ch)


def divide_exact(g, b, lead):
    """Exact quotient h with b*h = g, where the divisor b has its leading
    grade slice concentrated at the single index `lead` (any nonzero
    coefficient there) and g has no support below grade(lead).

    prec(h) = prec(g) - grade(lead).  Verified by re-multiplication; a nonzero
    residual raises.
    """
    if b.prec < g.prec:
        raise ValueError("divisor must carry at least the dividend's precision")
    g0 = grade(lead)
    B = _slices(b.coeffs)
    for n in range(0, g0):
        if n in B:
            raise ValueError("divisor has support below its leading grade")
    beta = B.get(g0, {}).get(lead)
    if not beta or list(B[g0]) != [lead]:
        raise ValueError("divisor leading slice is not concentrated at %r" % (lead,))
    S = _slices(g.coeffs)
    for n in range(0, g0):
        if n in S:
            raise ValueError("not divisible: dividend support below the leading grade")
    H = {}
    maxb = max(B)
    for n in range(g0, g.prec + 1):
        m = n - g0
        r = dict(S.get(n, {}))
        for j in range(g0 + 1, min(n, maxb) + 1):
            mp = n - j
            if mp >= m or j not in B or mp not in H:
                continue
            _add_into(r, _conv_slices(B[j], H[mp]), -1)
        hm = {}
        for eta, v in r.items():
            ep = (eta[0] - lead[0], eta[1] - lead[1], eta[2] - lead[2])
            if not ((ep == ZERO or is_positive(ep)) and grade(ep) == m):
                raise ValueError("not divisible at %r" % (eta,))
            hm[ep] = v / beta
        if hm:
            H[m] = hm
    ch = {}
    for sl in H.values():
        ch.update(sl)
    if _conv_bounded(b.coeffs, ch, g.prec) != g.coeffs:
        raise ValueError("not divisible: re-multiplication residual is nonzero")
    return FourierSeries(g.weight - b.weight, g.prec - g0, ch)


def _coefficient_rows(forms):
    if len({s.weight for s in forms}) > 1:
        raise ValueError("forms must share one weight")
    if len({s.prec for s in forms}) > 1:
        raise ValueError("forms must share one precision")
    idx = (ZERO,) + enumerate_cone(forms[0].prec)
    return [[s.coeffs.get(eta, Fraction(0)) for eta in idx] for s in forms]


def _eliminate(rows, ncols):
    """In-place Gauss-Jordan over the rationals; returns the pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        pv = rows[r][c]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                fac = rows[i][c]
                rows[i] = [v - fac * w for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank_of_span(forms):
    """Rank over Q of the span of the given series (shared weight and prec),
    by exact elimination on their coefficient vectors."""
    if not forms:
        return 0
    rows = _coefficient_rows(forms)
    return len(_eliminate(rows, len(rows[0])))


def relation_nullspace(forms):
    """Basis of all rational vectors v with sum(v_i * forms_i) = 0 to the
    shared precision."""
    cols = _coefficient_rows(forms)
    nf = len(forms)
    rows = [[cols[j][i] for j in range(nf)] for i in range(len(cols[0]))]
    pivots = _eliminate(rows, nf)
    free = [c for c in range(nf) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * nf
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(tuple(v))
    return basis
