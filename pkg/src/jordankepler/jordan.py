"""Catalogue of the simple euclidean Jordan algebras with exact structure
constants.

Families and canonical bases:

* ``real``      dimension 1, basis {1}.
* ``spin:n``    R + R^n with (s,u)(t,v) = (st + u.v, sv + tu); basis is
                the scalar unit followed by the standard R^n basis.
* ``herm-r:n``  real symmetric n x n matrices under (ab+ba)/2; basis is
                the diagonal units E_ii followed by E_ij + E_ji.
* ``herm-c:n``  complex hermitian matrices, realified; off-diagonal
                basis elements are E_ij u + E_ji u* for each complex
                unit u.
* ``herm-h:n``  quaternionic hermitian matrices, same pattern.
* ``albert``    3 x 3 octonionic hermitian matrices (27-dimensional).

The invariant metric is <a|b> = Tr(L_{ab}) / dim, normalized so the unit
element has unit length.  These bases are metric-orthogonal but not
orthonormal, so the metric is carried as its diagonal Gram vector; this
keeps every number in the package an exact rational.
"""

import random
from functools import lru_cache

from . import linalg
from .rational import ONE, ZERO, Rat, rand_rat, rat_str
from .report import Suite, dump_inputs
from .cayley import fconj, fmul

FAMILIES = ("real", "spin", "herm-r", "herm-c", "herm-h", "albert")

_HERM_UNITS = {"herm-r": 1, "herm-c": 2, "herm-h": 4, "albert": 8}


class ConfigurationError(ValueError):
    """Unsupported algebra selection (family/parameter combination)."""


class DimensionError(ValueError):
    """Operands belong to different algebras or have wrong length."""


class JordanAlgebra:
    """Immutable bundle of structure constants plus the diagonal Gram.

    ``pairs[alpha][beta]`` lists the nonzero coordinates of
    e_alpha o e_beta as (gamma, coefficient) tuples.
    """

    def __init__(self, family, n, pairs, check=True):
        self.family = family
        self.n = n
        self.dim = len(pairs)
        self.pairs = pairs
        self._l_nonzero = None
        self._str_span = None
        self.unit = self._find_unit()
        self.gram = self._compute_gram(check=check)
        if check:
            self._check_invariants()

    # -- construction helpers ------------------------------------------

    def _find_unit(self):
        if self.family == "real":
            return (ONE,)
        if self.family == "spin":
            return (ONE,) + (ZERO,) * (self.dim - 1)
        coords = [ZERO] * self.dim
        for i in range(self.n):
            coords[i] = ONE
        return tuple(coords)

    def _compute_gram(self, check=True):
        # Tr L_gamma, then <e_a|e_b> = sum_g c[a][b][g] Tr L_g / dim.
        tr = [ZERO] * self.dim
        for gamma in range(self.dim):
            s = ZERO
            for beta in range(self.dim):
                for g, c in self.pairs[gamma][beta]:
                    if g == beta:
                        s += c
            tr[gamma] = s
        dim = Rat(self.dim)
        gram = []
        for alpha in range(self.dim):
            row_alpha = self.pairs[alpha]
            for beta in range(self.dim):
                val = sum((c * tr[g] for g, c in row_alpha[beta]), ZERO)
                val /= dim
                if alpha == beta:
                    gram.append(val)
                elif check and val:
                    raise AssertionError(
                        f"basis not metric-orthogonal at ({alpha},{beta})")
        return tuple(gram)

    def _check_invariants(self):
        for a in range(self.dim):
            for b in range(a):
                if self.pairs[a][b] != self.pairs[b][a]:
                    raise AssertionError("structure constants not symmetric")
        if any(g <= 0 for g in self.gram):
            raise AssertionError("Gram diagonal not positive")
        e = Element(self, self.unit)
        if sum((g * x * x for g, x in zip(self.gram, self.unit)), ZERO) != ONE:
            raise AssertionError("unit element does not have unit length")
        if not linalg.mat_eq(L_op(e).mat, linalg.identity(self.dim)):
            raise AssertionError("L_e is not the identity")

    # -- cached derived data -------------------------------------------

    @property
    def l_nonzero(self):
        """Per-basis sparse triples (gamma, beta, c) of the maps L_alpha."""
        if self._l_nonzero is None:
            table = []
            for alpha in range(self.dim):
                entries = []
                for beta in range(self.dim):
                    for g, c in self.pairs[alpha][beta]:
                        entries.append((g, beta, c))
                table.append(tuple(entries))
            self._l_nonzero = tuple(table)
        return self._l_nonzero

    def element(self, coords):
        return Element(self, coords)

    def basis_element(self, alpha):
        coords = [ZERO] * self.dim
        coords[alpha] = ONE
        return Element(self, coords)

    def unit_element(self):
        return Element(self, self.unit)

    @property
    def selector(self):
        if self.family in ("real", "albert"):
            return self.family
        return f"{self.family}:{self.n}"

    def __repr__(self):
        return f"JordanAlgebra({self.selector}, dim={self.dim})"


class Element:
    """Coordinate vector over the canonical basis of one algebra."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        coords = tuple(Rat(c) for c in coords)
        if len(coords) != algebra.dim:
            raise DimensionError(
                f"expected {algebra.dim} coordinates, got {len(coords)}")
        self.algebra = algebra
        self.coords = coords

    def _same(self, other):
        if self.algebra is not other.algebra:
            raise DimensionError("elements from different algebras")

    def __add__(self, other):
        self._same(other)
        return Element(self.algebra,
                       [x + y for x, y in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._same(other)
        return Element(self.algebra,
                       [x - y for x, y in zip(self.coords, other.coords)])

    def __neg__(self):
        return Element(self.algebra, [-x for x in self.coords])

    def __mul__(self, other):
        if isinstance(other, Element):
            return mul(self, other)
        return Element(self.algebra, [x * other for x in self.coords])

    def __rmul__(self, scalar):
        return Element(self.algebra, [x * scalar for x in self.coords])

    def __eq__(self, other):
        return (isinstance(other, Element)
                and self.algebra is other.algebra
                and self.coords == other.coords)

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    def is_zero(self):
        return not any(self.coords)

    def __repr__(self):
        return f"Element[{', '.join(rat_str(c) for c in self.coords)}]"


class Endo:
    """Linear map on one algebra as an exact dim x dim matrix."""

    __slots__ = ("algebra", "mat")

    def __init__(self, algebra, mat):
        if len(mat) != algebra.dim or any(len(r) != algebra.dim for r in mat):
            raise DimensionError("endomorphism matrix has wrong shape")
        self.algebra = algebra
        self.mat = [list(row) for row in mat]

    def apply(self, el):
        if el.algebra is not self.algebra:
            raise DimensionError("element from a different algebra")
        return Element(self.algebra, linalg.mat_vec(self.mat, el.coords))

    def compose(self, other):
        return Endo(self.algebra, linalg.mat_mul(self.mat, other.mat))

    def __add__(self, other):
        return Endo(self.algebra, linalg.mat_add(self.mat, other.mat))

    def __sub__(self, other):
        return Endo(self.algebra, linalg.mat_sub(self.mat, other.mat))

    def __neg__(self):
        return Endo(self.algebra, linalg.mat_scale(self.mat, -ONE))

    def scale(self, c):
        return Endo(self.algebra, linalg.mat_scale(self.mat, c))

    def commutator(self, other):
        return Endo(self.algebra, linalg.commutator(self.mat, other.mat))

    def adjoint(self):
        """Adjoint with respect to the diagonal Gram: A' = G^-1 A^T G."""
        g = self.algebra.gram
        n = self.algebra.dim
        return Endo(self.algebra,
                    [[g[j] * self.mat[j][i] / g[i] for j in range(n)]
                     for i in range(n)])

    def __eq__(self, other):
        return (isinstance(other, Endo)
                and self.algebra is other.algebra
                and linalg.mat_eq(self.mat, other.mat))

    def is_zero(self):
        return linalg.is_zero_mat(self.mat)

    def __repr__(self):
        return f"Endo(dim={self.algebra.dim})"


# -- family constructors -----------------------------------------------


def _real_pairs():
    entry = ((0, ONE),)
    return ((entry,),)


def _spin_pairs(n):
    dim = n + 1
    pairs = [[() for _ in range(dim)] for _ in range(dim)]
    pairs[0][0] = ((0, ONE),)
    for i in range(1, dim):
        pairs[0][i] = pairs[i][0] = ((i, ONE),)
        pairs[i][i] = ((0, ONE),)
    return tuple(tuple(row) for row in pairs)


def _herm_basis(n, units):
    """Matrix representatives: n x n arrays of coefficient tuples."""
    basis = []
    zero = tuple(ZERO for _ in range(units))
    one = (ONE,) + zero[1:]
    for i in range(n):
        mat = [[zero] * n for _ in range(n)]
        mat[i][i] = one
        basis.append(mat)
    for i in range(n):
        for j in range(i + 1, n):
            for u in range(units):
                unit = tuple(ONE if t == u else ZERO for t in range(units))
                mat = [[zero] * n for _ in range(n)]
                mat[i][j] = unit
                mat[j][i] = fconj(unit)
                basis.append(mat)
    return basis


def _herm_mat_mul(n, units, a, b):
    zero = tuple(ZERO for _ in range(units))
    out = [[zero] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            if not any(a[i][k]):
                continue
            for j in range(n):
                if any(b[k][j]):
                    prod = fmul(units, a[i][k], b[k][j])
                    out[i][j] = tuple(x + y for x, y in zip(out[i][j], prod))
    return out


def _herm_expand(n, units, h):
    """Coordinates of a hermitian matrix over the canonical basis."""
    coords = []
    for i in range(n):
        entry = h[i][i]
        if any(entry[1:]):
            raise AssertionError("diagonal entry not real")
        coords.append(entry[0])
    for i in range(n):
        for j in range(i + 1, n):
            coords.extend(h[i][j])
    return coords


def _herm_pairs(family, n):
    units = _HERM_UNITS[family]
    basis = _herm_basis(n, units)
    dim = len(basis)
    half = Rat(1, 2)
    pairs = [[None] * dim for _ in range(dim)]
    for a in range(dim):
        for b in range(a, dim):
            ab = _herm_mat_mul(n, units, basis[a], basis[b])
            ba = _herm_mat_mul(n, units, basis[b], basis[a])
            sym = [[tuple(half * (x + y) for x, y in zip(p, q))
                    for p, q in zip(ra, rb)]
                   for ra, rb in zip(ab, ba)]
            coords = _herm_expand(n, units, sym)
            entry = tuple((g, c) for g, c in enumerate(coords) if c)
            pairs[a][b] = entry
            pairs[b][a] = entry
    return tuple(tuple(row) for row in pairs)


@lru_cache(maxsize=None)
def make_algebra(family, n=None):
    """Construct a catalogued algebra; raises ConfigurationError otherwise."""
    if family == "real":
        if n not in (None, 1):
            raise ConfigurationError("real takes no size parameter")
        return JordanAlgebra("real", 1, _real_pairs())
    if family == "spin":
        if n is None or n < 1:
            raise ConfigurationError("spin requires n >= 1")
        return JordanAlgebra("spin", n, _spin_pairs(n))
    if family in ("herm-r", "herm-c", "herm-h"):
        if n is None or n < 2:
            raise ConfigurationError(f"{family} requires n >= 2")
        return JordanAlgebra(family, n, _herm_pairs(family, n))
    if family == "albert":
        if n not in (None, 3):
            raise ConfigurationError("albert takes no size parameter")
        return JordanAlgebra("albert", 3, _herm_pairs("albert", 3))
    raise ConfigurationError(f"unknown family {family!r}")


def parse_algebra(selector):
    """Resolve a selection string like "spin:3" or "albert"."""
    selector = selector.strip().lower()
    if ":" in selector:
        family, _, param = selector.partition(":")
        try:
            n = int(param)
        except ValueError:
            raise ConfigurationError(f"bad size parameter in {selector!r}")
        return make_algebra(family, n)
    return make_algebra(selector)


# -- operations ---------------------------------------------------------


def _same_algebra(*els):
    alg = els[0].algebra
    for e in els[1:]:
        if e.algebra is not alg:
            raise DimensionError("elements from different algebras")
    return alg


def mul(a, b):
    """Jordan product, bilinear and commutative."""
    alg = _same_algebra(a, b)
    out = [ZERO] * alg.dim
    pairs = alg.pairs
    for alpha, x in enumerate(a.coords):
        if not x:
            continue
        row = pairs[alpha]
        for beta, y in enumerate(b.coords):
            if y:
                xy = x * y
                for gamma, c in row[beta]:
                    out[gamma] += xy * c
    return Element(alg, out)


def inner(a, b):
    """Invariant metric <a|b> = Tr(L_{ab}) / dim (Gram-diagonal form)."""
    alg = _same_algebra(a, b)
    return sum((g * x * y for g, x, y in zip(alg.gram, a.coords, b.coords)),
               ZERO)


def triple(a, b, c):
    """Jordan triple product {abc} = a(bc) - b(ca) + c(ab)."""
    _same_algebra(a, b, c)
    return mul(a, mul(b, c)) - mul(b, mul(c, a)) + mul(c, mul(a, b))


def L_op(a):
    """Multiplication operator L_a as an exact matrix."""
    alg = a.algebra
    mat = linalg.zeros(alg.dim)
    for alpha, x in enumerate(a.coords):
        if x:
            for gamma, beta, c in alg.l_nonzero[alpha]:
                mat[gamma][beta] += x * c
    return Endo(alg, mat)


def S_op(a, b):
    """Structure operator S_ab = [L_a, L_b] + L_{ab} (c -> {abc})."""
    _same_algebra(a, b)
    la, lb = L_op(a), L_op(b)
    return la.commutator(lb) + L_op(mul(a, b))


def random_element(alg, rng: random.Random):
    return Element(alg, [rand_rat(rng) for _ in range(alg.dim)])


def verify_structure_relation(alg, trials, seed=0):
    """Check [S_ab, S_cd] = S_{abc},d - S_c,{bad} on random rationals."""
    suite = Suite("jordan-structure", algebra=alg.selector,
                  trials=trials, seed=seed)
    rng = random.Random(seed)
    log = suite.relation("eq6.SS")
    for _ in range(trials):
        a, b, c, d = (random_element(alg, rng) for _ in range(4))
        lhs = S_op(a, b).commutator(S_op(c, d))
        rhs = S_op(triple(a, b, c), d) - S_op(c, triple(b, a, d))
        log.record(lhs == rhs,
                   dump_inputs(a=a.coords, b=b.coords,
                               c=c.coords, d=d.coords))
    return suite.to_dict()


def verify_jordan_axioms(alg, trials, seed=0):
    """Commutativity, Jordan identity, unit law and metric self-adjointness."""
    suite = Suite("jordan-axioms", algebra=alg.selector,
                  trials=trials, seed=seed)
    rng = random.Random(seed)
    e = alg.unit_element()
    comm = suite.relation("jordan.commutative")
    jid = suite.relation("jordan.identity")
    unit = suite.relation("jordan.unit")
    selfadj = suite.relation("metric.selfadjoint")
    for _ in range(trials):
        a = random_element(alg, rng)
        b = random_element(alg, rng)
        c = random_element(alg, rng)
        dump = dump_inputs(a=a.coords, b=b.coords)
        comm.record(mul(a, b) == mul(b, a), dump)
        aa = mul(a, a)
        jid.record(mul(a, mul(aa, b)) == mul(aa, mul(a, b)), dump)
        unit.record(mul(e, a) == a, dump_inputs(a=a.coords))
        selfadj.record(inner(mul(a, b), c) == inner(b, mul(a, c)),
                       dump_inputs(a=a.coords, b=b.coords, c=c.coords))
    return suite.to_dict()


# -- JSON interchange ----------------------------------------------------


def export_json(alg):
    """Dense structure constants and Gram as "p/q" strings."""
    dim = alg.dim
    c = [[[rat_str(ZERO)] * dim for _ in range(dim)] for _ in range(dim)]
    for alpha in range(dim):
        for beta in range(dim):
            for gamma, coeff in alg.pairs[alpha][beta]:
                c[alpha][beta][gamma] = rat_str(coeff)
    return {
        "family": alg.family,
        "n": alg.n,
        "dim": dim,
        "c": c,
        "gram": [rat_str(g) for g in alg.gram],
    }


def from_json(data):
    """Rebuild an algebra from exported structure constants."""
    dim = data["dim"]
    pairs = []
    for alpha in range(dim):
        row = []
        for beta in range(dim):
            entry = tuple(
                (gamma, Rat(val))
                for gamma, val in enumerate(data["c"][alpha][beta])
                if Rat(val))
            row.append(entry)
        pairs.append(tuple(row))
    alg = JordanAlgebra(data["family"], data["n"], tuple(pairs))
    if [rat_str(g) for g in alg.gram] != data["gram"]:
        raise ConfigurationError("gram data inconsistent with constants")
    return alg
