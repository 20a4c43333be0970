"""The four-argument determinant bracket on Fourier expansions.

{f1,f2,f3,f4} maps forms of weights k1..k4 to a cusp series of weight
k1+k2+k3+k4+3.  On coefficients it is a convolution over 4-part
decompositions of the target index, weighted by the 4x4 determinant with rows
(k1..k4), (x1..x4), (y1..y4), (z1..z4).  Differentiation in the analytic
picture multiplies coefficients by the frequency vector, a fixed invertible
linear image of (x, y, z); by multilinearity the coordinate-row determinant
used here differs from the analytic bracket only by one fixed nonzero scalar,
so divisibility, vanishing and span statements are unaffected.
"""
from .fourier import FourierSeries
from .lattice import ZERO, decompositions, enumerate_cone


def _det3(u, v, w):
    return (u[0] * (v[1] * w[2] - v[2] * w[1])
            - v[0] * (u[1] * w[2] - u[2] * w[1])
            + w[0] * (u[1] * v[2] - u[2] * v[1]))


def bracket(f1, f2, f3, f4):
    """Determinant bracket of four series; output weight sum(k_i) + 3, output
    precision the minimum input precision, constant term 0 by construction."""
    fs = (f1, f2, f3, f4)
    ks = tuple(f.weight for f in fs)
    X = min(f.prec for f in fs)
    cs = tuple(f.coeffs for f in fs)
    out = {}
    for eta in enumerate_cone(X):
        acc = 0
        for u, v in decompositions(eta):
            du = decompositions(u)
            dv = decompositions(v)
            for e1, e2 in du:
                c1 = cs[0].get(e1)
                if not c1:
                    continue
                c2 = cs[1].get(e2)
                if not c2:
                    continue
                c12 = c1 * c2
                for e3, e4 in dv:
                    c3 = cs[2].get(e3)
                    if not c3:
                        continue
                    c4 = cs[3].get(e4)
                    if not c4:
                        continue
                    d = (ks[0] * _det3(e2, e3, e4) - ks[1] * _det3(e1, e3, e4)
                         + ks[2] * _det3(e1, e2, e4) - ks[3] * _det3(e1, e2, e3))
                    if d:
                        acc += c12 * c3 * c4 * d
        if acc:
            out[eta] = acc
    return FourierSeries(sum(ks) + 3, X, out)
