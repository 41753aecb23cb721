"""Exact phase-space observables over a Jordan algebra.

Coordinates on TV are x^1..x^dim, pi^1..pi^dim over the canonical
(metric-orthogonal) basis.  In these coordinates the elementary Poisson
brackets are {x^a, pi^b} = delta^ab / G_a with G the diagonal Gram; the
textbook delta^ab form is recovered for orthonormal bases (G = 1), and
the twist keeps every coefficient rational for the matrix families.

``PhasePoly`` is a sparse multivariate polynomial; ``Observable`` is a
quotient of two of them.  Observable equality is cross-multiplication,
so no gcd reduction is ever needed for correctness.

The term-level arithmetic is delegated to a kernel module selected at
import time: the compiled extension ``_polycore`` when it is available
(and not disabled through JORDANKEPLER_PURE=1), else the pure-Python
``_polycore_py``.  Both expose identical semantics.
"""

import os

if os.environ.get("JORDANKEPLER_PURE") == "1":
    from . import _polycore_py as _kernel

    KERNEL = "python"
else:
    try:
        from . import _polycore as _kernel

        KERNEL = "cython"
    except ImportError:
        from . import _polycore_py as _kernel

        KERNEL = "python"

from .jordan import DimensionError
from .rational import ONE, Rat, ZERO, rat_str

poly_addmul = _kernel.poly_addmul
poly_fma = _kernel.poly_fma
poly_mul = _kernel.poly_mul
poly_diff = _kernel.poly_diff
poly_eval = _kernel.poly_eval


class PhasePoly:
    """Sparse polynomial in the 2*dim phase-space variables."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms=None):
        self.algebra = algebra
        self.terms = {} if terms is None else terms

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, alg):
        return cls(alg)

    @classmethod
    def const(cls, alg, c):
        c = Rat(c)
        if not c:
            return cls(alg)
        return cls(alg, {(0,) * (2 * alg.dim): c})

    @classmethod
    def x_var(cls, alg, a):
        key = [0] * (2 * alg.dim)
        key[a] = 1
        return cls(alg, {tuple(key): ONE})

    @classmethod
    def pi_var(cls, alg, a):
        key = [0] * (2 * alg.dim)
        key[alg.dim + a] = 1
        return cls(alg, {tuple(key): ONE})

    # -- arithmetic -------------------------------------------------------

    def _same(self, other):
        if self.algebra is not other.algebra:
            raise DimensionError("polynomials over different algebras")

    def __add__(self, other):
        if not isinstance(other, PhasePoly):
            other = PhasePoly.const(self.algebra, other)
        self._same(other)
        out = dict(self.terms)
        poly_addmul(out, other.terms, 1)
        return PhasePoly(self.algebra, out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, PhasePoly):
            other = PhasePoly.const(self.algebra, other)
        self._same(other)
        out = dict(self.terms)
        poly_addmul(out, other.terms, -ONE)
        return PhasePoly(self.algebra, out)

    def __neg__(self):
        return PhasePoly(self.algebra,
                         {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, PhasePoly):
            self._same(other)
            return PhasePoly(self.algebra, poly_mul(self.terms, other.terms))
        c = Rat(other)
        if not c:
            return PhasePoly(self.algebra)
        return PhasePoly(self.algebra,
                         {k: c * v for k, v in self.terms.items()})

    def __rmul__(self, scalar):
        return self.__mul__(scalar)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = PhasePoly.const(self.algebra, ONE)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def diff(self, var):
        return PhasePoly(self.algebra, poly_diff(self.terms, var))

    def evaluate(self, point):
        val = poly_eval(self.terms, point)
        return Rat(val) if val == 0 else val

    def degree(self):
        return max((sum(k) for k in self.terms), default=0)

    def is_zero(self):
        return not self.terms

    def is_one(self):
        if len(self.terms) != 1:
            return False
        (k, c), = self.terms.items()
        return c == 1 and not any(k)

    def constant_value(self):
        """The coefficient if the polynomial is constant, else None."""
        if not self.terms:
            return ZERO
        if len(self.terms) == 1:
            (k, c), = self.terms.items()
            if not any(k):
                return c
        return None

    def __eq__(self, other):
        return (isinstance(other, PhasePoly)
                and self.algebra is other.algebra
                and self.terms == other.terms)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        dim = self.algebra.dim
        bits = []
        for key, c in self.sorted_terms():
            vars_ = []
            for i, e in enumerate(key):
                if not e:
                    continue
                name = f"x{i + 1}" if i < dim else f"p{i - dim + 1}"
                vars_.append(name if e == 1 else f"{name}^{e}")
            body = "*".join(vars_)
            coeff = rat_str(c)
            bits.append(f"{coeff}*{body}" if body else coeff)
        return " + ".join(bits)


def poisson_poly(f: PhasePoly, g: PhasePoly) -> PhasePoly:
    """Poisson bracket of two polynomials (Gram-twisted coordinates)."""
    f._same(g)
    alg = f.algebra
    dim = alg.dim
    out = {}
    for a in range(dim):
        w = ONE / alg.gram[a]
        fx = poly_diff(f.terms, a)
        if fx:
            gp = poly_diff(g.terms, dim + a)
            if gp:
                poly_fma(out, fx, gp, w)
        fp = poly_diff(f.terms, dim + a)
        if fp:
            gx = poly_diff(g.terms, a)
            if gx:
                poly_fma(out, fp, gx, -w)
    return PhasePoly(alg, out)


class Observable:
    """Exact rational function on phase space: num / den."""

    __slots__ = ("num", "den")

    def __init__(self, num: PhasePoly, den: PhasePoly = None):
        if den is None:
            den = PhasePoly.const(num.algebra, ONE)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator polynomial")
        # constant denominators are folded into the numerator
        c = den.constant_value()
        if c is not None and not den.is_one():
            num = num * (ONE / c)
            den = PhasePoly.const(num.algebra, ONE)
        self.num = num
        self.den = den

    @property
    def algebra(self):
        return self.num.algebra

    @classmethod
    def const(cls, alg, c):
        return cls(PhasePoly.const(alg, c))

    @classmethod
    def of(cls, poly):
        return cls(poly)

    def is_polynomial(self):
        return self.den.is_one()

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Observable):
            return other
        if isinstance(other, PhasePoly):
            return Observable(other)
        return Observable.const(self.algebra, other)

    def __add__(self, other):
        other = self._coerce(other)
        if self.den == other.den:
            return Observable(self.num + other.num, self.den)
        return Observable(self.num * other.den + other.num * self.den,
                          self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if self.den == other.den:
            return Observable(self.num - other.num, self.den)
        return Observable(self.num * other.den - other.num * self.den,
                          self.den * other.den)

    def __rsub__(self, other):
        return self._coerce(other).__sub__(self)

    def __neg__(self):
        return Observable(-self.num, self.den)

    def __mul__(self, other):
        other = self._coerce(other)
        return Observable(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero observable")
        return Observable(self.num * other.den, self.den * other.num)

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        """Cross-multiplication equality num1*den2 == num2*den1."""
        other = self._coerce(other)
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    def evaluate(self, point):
        dval = self.den.evaluate(point)
        if not dval:
            raise ZeroDivisionError("denominator vanishes at this point")
        return self.num.evaluate(point) / dval

    def __repr__(self):
        if self.is_polynomial():
            return repr(self.num)
        return f"({self.num!r}) / ({self.den!r})"


def poisson(f: Observable, g: Observable) -> Observable:
    """Poisson bracket of rational observables via the quotient rule."""
    if not isinstance(f, Observable):
        f = Observable(f)
    if not isinstance(g, Observable):
        g = Observable(g)
    if f.algebra is not g.algebra:
        raise DimensionError("observables over different algebras")
    if f.is_polynomial() and g.is_polynomial():
        return Observable(poisson_poly(f.num, g.num))
    alg = f.algebra
    dim = alg.dim
    nf, df, ng, dg = f.num, f.den, g.num, g.den
    f_poly, g_poly = f.is_polynomial(), g.is_polynomial()

    def deriv(num, den, is_poly, var):
        dn = num.diff(var)
        if is_poly:
            return dn
        return dn * den - num * den.diff(var)

    out = PhasePoly.zero(alg)
    for a in range(dim):
        w = ONE / alg.gram[a]
        fx = deriv(nf, df, f_poly, a)
        gp = deriv(ng, dg, g_poly, dim + a)
        if not (fx.is_zero() or gp.is_zero()):
            out = out + w * (fx * gp)
        fp = deriv(nf, df, f_poly, dim + a)
        gx = deriv(ng, dg, g_poly, a)
        if not (fp.is_zero() or gx.is_zero()):
            out = out - w * (fp * gx)
    den = PhasePoly.const(alg, ONE)
    if not f_poly:
        den = den * df * df
    if not g_poly:
        den = den * dg * dg
    return Observable(out, den)
