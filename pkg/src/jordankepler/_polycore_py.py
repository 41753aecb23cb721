"""Pure-Python sparse-polynomial kernels.

Terms are dicts mapping exponent tuples to exact rational coefficients.
The compiled extension ``_polycore`` implements the same five functions
with identical semantics; one of the two is selected when ``poly`` is
imported.  Coefficients are opaque Python objects (gmpy2.mpq or
Fraction), so all arithmetic stays exact under either kernel.
"""


def poly_addmul(dst, src, factor):
    """dst += factor * src, in place, dropping cancelled terms."""
    if not factor:
        return
    if factor == 1:
        for k, c in src.items():
            nv = dst.get(k)
            nv = c if nv is None else nv + c
            if nv:
                dst[k] = nv
            else:
                del dst[k]
    else:
        for k, c in src.items():
            nv = dst.get(k)
            fc = factor * c
            nv = fc if nv is None else nv + fc
            if nv:
                dst[k] = nv
            else:
                del dst[k]


def poly_fma(dst, a, b, factor):
    """dst += factor * (a * b), in place."""
    if not factor or not a or not b:
        return
    if len(a) > len(b):
        a, b = b, a
    for ka, ca in a.items():
        fca = factor * ca
        for kb, cb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            nv = dst.get(k)
            fc = fca * cb
            nv = fc if nv is None else nv + fc
            if nv:
                dst[k] = nv
            else:
                del dst[k]


def poly_mul(a, b):
    out = {}
    poly_fma(out, a, b, 1)
    return out


def poly_diff(a, var):
    """Partial derivative with respect to variable index ``var``."""
    out = {}
    for k, c in a.items():
        e = k[var]
        if e:
            nk = k[:var] + (e - 1,) + k[var + 1:]
            out[nk] = c * e
    return out


def poly_eval(a, point):
    """Exact evaluation; powers are cached per variable."""
    pows = [{0: 1} for _ in point]
    total = 0
    for k, c in a.items():
        val = c
        for i, e in enumerate(k):
            if e:
                cache = pows[i]
                p = cache.get(e)
                if p is None:
                    p = point[i] ** e
                    cache[e] = p
                val = val * p
        total = total + val if total else val
    return total
