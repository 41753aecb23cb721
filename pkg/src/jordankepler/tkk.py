"""Conformal Lie algebra co = V* + str + V over a catalogued Jordan
algebra.

An element is a triple (y, s, x): a covector part Y_y (identified with
an algebra element through the invariant metric), a structure-algebra
part s (a raw matrix, audited to lie in span{S_ab}), and a vector part
X_x.  The bracket follows the grading rules

    [X_u, X_v] = 0          [Y_u, Y_v] = 0       [X_u, Y_v] = -2 S_uv
    [S, X_z]   = X_{S z}    [S, Y_z]   = -Y_{S' z}
    [S, T]     = S T - T S

where S' is the metric adjoint (S_ab' = S_ba, so the single-symbol
rules [S_uv, X_z] = X_{uvz} and [S_uv, Y_z] = -Y_{vuz} are the special
cases).  Structure parts are raw matrices because the bracket only ever
needs the matrix action; closure is guaranteed by the structure-algebra
commutation relation.
"""

import random

from . import linalg
from .jordan import (DimensionError, Element, Endo, L_op, S_op, mul,
                     random_element, triple)
from .rational import ONE, ZERO
from .report import Suite, dump_inputs


class SpanError(ValueError):
    """Structure part of a TkkElement is not in span{S_ab}."""


def str_span(alg):
    """Row-echelon basis of span{S_op(e_a, e_b)}, cached on the algebra."""
    if alg._str_span is None:
        span = linalg.RowSpan(alg.dim * alg.dim)
        for a in range(alg.dim):
            ea = alg.basis_element(a)
            for b in range(alg.dim):
                s = S_op(ea, alg.basis_element(b))
                span.add(linalg.mat_to_sparse(s.mat))
        alg._str_span = span
    return alg._str_span


def str_dim(alg):
    """Dimension of the structure algebra (exact rank)."""
    return str_span(alg).rank


def str_dim_reordered(alg, seed=0):
    """Independent rank recomputation with a shuffled pair ordering."""
    rng = random.Random(seed)
    pairs = [(a, b) for a in range(alg.dim) for b in range(alg.dim)]
    rng.shuffle(pairs)
    span = linalg.RowSpan(alg.dim * alg.dim)
    for a, b in pairs:
        s = S_op(alg.basis_element(a), alg.basis_element(b))
        span.add(linalg.mat_to_sparse(s.mat))
    return span.rank


def co_dim(alg):
    """dim co = 2 dim V + dim str."""
    return 2 * alg.dim + str_dim(alg)


class TkkElement:
    """y + s + x decomposition of a conformal-algebra element."""

    __slots__ = ("algebra", "y", "s", "x")

    def __init__(self, algebra, y, s, x, check=True):
        if y.algebra is not algebra or x.algebra is not algebra \
                or s.algebra is not algebra:
            raise DimensionError("components from different algebras")
        if check and not s.is_zero():
            if not str_span(algebra).contains(linalg.mat_to_sparse(s.mat)):
                raise SpanError("matrix not in the structure algebra span")
        self.algebra = algebra
        self.y = y
        self.s = s
        self.x = x

    def __add__(self, other):
        return TkkElement(self.algebra, self.y + other.y, self.s + other.s,
                          self.x + other.x, check=False)

    def __sub__(self, other):
        return TkkElement(self.algebra, self.y - other.y, self.s - other.s,
                          self.x - other.x, check=False)

    def __neg__(self):
        return TkkElement(self.algebra, -self.y, -self.s, -self.x,
                          check=False)

    def __eq__(self, other):
        return (isinstance(other, TkkElement)
                and self.algebra is other.algebra
                and self.y == other.y and self.x == other.x
                and self.s == other.s)

    def is_zero(self):
        return self.y.is_zero() and self.x.is_zero() and self.s.is_zero()

    def __repr__(self):
        return f"TkkElement(dim={self.algebra.dim})"


def zero_endo(alg):
    return Endo(alg, linalg.zeros(alg.dim))


def zero_element(alg):
    return Element(alg, [ZERO] * alg.dim)


def x_part(z):
    """Embed z in V as X_z."""
    alg = z.algebra
    return TkkElement(alg, zero_element(alg), zero_endo(alg), z, check=False)


def y_part(w):
    """Embed <w|.> in V* as Y_w."""
    alg = w.algebra
    return TkkElement(alg, w, zero_endo(alg), zero_element(alg), check=False)


def s_part(endo, check=True):
    alg = endo.algebra
    return TkkElement(alg, zero_element(alg), endo, zero_element(alg),
                      check=check)


def tkk_element(alg, y, s, x):
    """Public constructor: audits the structure part against the span."""
    return TkkElement(alg, y, s, x, check=True)


def bracket(A, B):
    """Lie bracket on co, assembled component by component."""
    if A.algebra is not B.algebra:
        raise DimensionError("elements from different algebras")
    alg = A.algebra
    sa, sb = A.s, B.s
    s_out = sa.commutator(sb) - S_op(A.x, B.y).scale(2 * ONE) \
        + S_op(B.x, A.y).scale(2 * ONE)
    x_out = sa.apply(B.x) - sb.apply(A.x)
    y_out = sb.adjoint().apply(A.y) - sa.adjoint().apply(B.y)
    return TkkElement(alg, y_out, s_out, x_out, check=False)


def random_tkk(alg, rng: random.Random, terms=2):
    """Random mixed element; structure part is a short sum of S_uv."""
    s = zero_endo(alg)
    for _ in range(terms):
        s = s + S_op(random_element(alg, rng), random_element(alg, rng))
    return tkk_element(alg, random_element(alg, rng), s,
                       random_element(alg, rng))


def verify_tkk(alg, trials, seed=0):
    """Bracket component rules, antisymmetry, bilinearity and Jacobi."""
    suite = Suite("tkk", algebra=alg.selector, trials=trials, seed=seed)
    rng = random.Random(seed)
    rel_xx = suite.relation("eq7.XX")
    rel_yy = suite.relation("eq7.YY")
    rel_xy = suite.relation("eq7.XY")
    rel_sx = suite.relation("eq7.SX")
    rel_sy = suite.relation("eq7.SY")
    rel_ss = suite.relation("eq7.SS")
    rel_anti = suite.relation("bracket.antisymmetric")
    rel_jac = suite.relation("bracket.jacobi")
    for _ in range(trials):
        u, v, z, w = (random_element(alg, rng) for _ in range(4))
        dump = dump_inputs(u=u.coords, v=v.coords, z=z.coords, w=w.coords)
        rel_xx.record(bracket(x_part(u), x_part(v)).is_zero(), dump)
        rel_yy.record(bracket(y_part(u), y_part(v)).is_zero(), dump)

        xy = bracket(x_part(u), y_part(v))
        ok = (xy.x.is_zero() and xy.y.is_zero()
              and xy.s == S_op(u, v).scale(-2 * ONE))
        rel_xy.record(ok, dump)

        suv = s_part(S_op(u, v), check=False)
        sx = bracket(suv, x_part(z))
        rel_sx.record(sx.s.is_zero() and sx.y.is_zero()
                      and sx.x == triple(u, v, z), dump)
        sy = bracket(suv, y_part(z))
        rel_sy.record(sy.s.is_zero() and sy.x.is_zero()
                      and sy.y == -triple(v, u, z), dump)
        ss = bracket(suv, s_part(S_op(z, w), check=False))
        rhs = S_op(triple(u, v, z), w) - S_op(z, triple(v, u, w))
        rel_ss.record(ss.x.is_zero() and ss.y.is_zero() and ss.s == rhs, dump)

        A = random_tkk(alg, rng)
        B = random_tkk(alg, rng)
        C = random_tkk(alg, rng)
        rel_anti.record((bracket(A, B) + bracket(B, A)).is_zero()
                        and bracket(A, A).is_zero(), dump)
        jac = bracket(A, bracket(B, C)) + bracket(B, bracket(C, A)) \
            + bracket(C, bracket(A, B))
        rel_jac.record(jac.is_zero(), dump)
    return suite.to_dict()


def jacobi_check(alg, trials, seed=0):
    """Jacobi identity alone, on random mixed triples."""
    suite = Suite("tkk-jacobi", algebra=alg.selector, trials=trials,
                  seed=seed)
    rng = random.Random(seed)
    log = suite.relation("bracket.jacobi")
    for _ in range(trials):
        A, B, C = (random_tkk(alg, rng) for _ in range(3))
        jac = bracket(A, bracket(B, C)) + bracket(B, bracket(C, A)) \
            + bracket(C, bracket(A, B))
        log.record(jac.is_zero())
    return suite.to_dict()


def verify_dimensions(alg, seed=0):
    """Dimension audit: rank of the S-span, stable under reordering."""
    suite = Suite("tkk-dims", algebra=alg.selector, seed=seed)
    expected = {"real": (1, 3), "spin:3": (7, 15), "albert": (79, 133)}
    sd = str_dim(alg)
    cd = co_dim(alg)
    log = suite.relation("dims.reorder-stable")
    log.record(sd == str_dim_reordered(alg, seed=seed or 1))
    cons = suite.relation("dims.codim-consistent")
    cons.record(cd == 2 * alg.dim + sd)
    if alg.selector in expected:
        known = suite.relation("dims.known-values")
        known.record((sd, cd) == expected[alg.selector],
                     {"computed": [sd, cd],
                      "expected": list(expected[alg.selector])})
    out = suite.to_dict()
    out["str_dim"] = sd
    out["co_dim"] = cd
    return out
