"""Real division-algebra arithmetic via Cayley-Dickson doubling.

Convention (used consistently for complexes, quaternions, octonions):

    (a, b) * (c, d) = (a c - d* b,  d a + b c*)
    (a, b)*         = (a*, -b)

where * is conjugation on the half-size algebra.  Units are indexed
0..dim-1 with unit 0 the real one and unit ``dim/2 + i`` the pair
(0, e_i).  Under this convention quaternions satisfy e1*e2 = e3 and the
octonions form the standard composition algebra (norm multiplicative,
conjugation an anti-automorphism); only those structural properties -
not the specific table signs - are relied on downstream, because the
hermitian Jordan product symmetrizes away the non-associativity.

Coefficients are kept generic: anything supporting + - * works, in
practice exact rationals.
"""

from functools import lru_cache

from .rational import ONE, ZERO

DIMS = (1, 2, 4, 8)


def _mul_rec(a, b):
    """Cayley-Dickson product of coefficient tuples (len 1, 2, 4, 8)."""
    n = len(a)
    if n == 1:
        return (a[0] * b[0],)
    h = n // 2
    a1, a2 = a[:h], a[h:]
    b1, b2 = b[:h], b[h:]
    left = _sub(_mul_rec(a1, b1), _mul_rec(_conj(b2), a2))
    right = _add(_mul_rec(b2, a1), _mul_rec(a2, _conj(b1)))
    return left + right


def _conj(a):
    return (a[0],) + tuple(-x for x in a[1:])


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def mult_table(dim):
    """table[i][j] = (k, sign) with e_i e_j = sign * e_k."""
    if dim not in DIMS:
        raise ValueError(f"no Cayley-Dickson algebra of dimension {dim}")
    table = []
    for i in range(dim):
        ei = tuple(ONE if t == i else ZERO for t in range(dim))
        row = []
        for j in range(dim):
            ej = tuple(ONE if t == j else ZERO for t in range(dim))
            prod = _mul_rec(ei, ej)
            nz = [(k, c) for k, c in enumerate(prod) if c]
            if len(nz) != 1 or nz[0][1] not in (ONE, -ONE):
                raise AssertionError("unit product is not a signed unit")
            row.append((nz[0][0], 1 if nz[0][1] == ONE else -1))
        table.append(tuple(row))
    return tuple(table)


def fmul(dim, a, b):
    """Product of two coefficient sequences using the cached table."""
    table = mult_table(dim)
    out = [ZERO] * dim
    for i, x in enumerate(a):
        if not x:
            continue
        ti = table[i]
        for j, y in enumerate(b):
            if y:
                k, s = ti[j]
                out[k] = out[k] + x * y if s > 0 else out[k] - x * y
    return tuple(out)


def fconj(a):
    return _conj(tuple(a))


def fnorm(dim, a):
    """Composition-algebra norm sum of squared coefficients."""
    return sum((x * x for x in a), ZERO)
