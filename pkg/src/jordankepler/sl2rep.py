"""The lowest-weight representation family of sl(2,R) on the half-line.

Working basis: f_k = x^(nu/2 + k) e^(-x), k = 0, 1, 2, ....  The three
generators act as first/second-order differential operators; on the
f-basis their actions reduce to exact tridiagonal recurrences, derived
once by symbolic differentiation (re-checked against sympy in the test
suite) and frozen here:

    S f_k = f_{k+1} - (nu/2 + k) f_k
    Y f_k = -i f_{k+1}
    X f_k = i [ k(k + nu - 1) f_{k-1} - (nu + 2k) f_k + f_{k+1} ]

Every operator in play is a real rational recurrence times a global
phase in {1, i, -i}; compositions track the phase as an integer power
of i, so all checks stay inside rational arithmetic.  Because vectors
are plain growing coefficient lists, the recurrences are applied
exactly - there is no truncation boundary to contaminate identities.

The normalized pairing of basis vectors in L^2(R_+, dx/x) is the
rising-factorial ratio

    <f_j, f_k> / <f_0, f_0> = (nu)(nu+1)...(nu+j+k-1) / 2^(j+k),

positive definite precisely for nu > 0, which is the representation's
unitarity window.  Unitarity of the module is the statement that each
generator times the appropriate power of i is symmetric for this Gram:
the real parts of X and Y are Gram-symmetric and S itself is
Gram-skew (its exact matrix element is ((k-j)/2) <f_j, f_k>, so the
dilation generator S exponentiates to the unitary scaling group).
"""

from . import linalg
from .rational import ONE, Rat, ZERO, rat_str, rising
from .report import Suite

OPERATOR_KINDS = ("S", "X", "Y", "Eplus", "Eminus", "h")

_PHASE_NAMES = {0: "1", 1: "i", 2: "-1", 3: "-i"}


def check_nu(nu):
    nu = Rat(nu)
    if nu <= 0:
        raise ValueError("nu must be a positive rational")
    return nu


class DomainVector:
    """Coefficients over f_k = x^(nu/2+k) e^(-x); trailing zeros trimmed."""

    __slots__ = ("nu", "coeffs")

    def __init__(self, nu, coeffs):
        self.nu = Rat(nu)
        coeffs = [Rat(c) for c in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def basis(cls, nu, k):
        return cls(nu, [ZERO] * k + [ONE])

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return (isinstance(other, DomainVector)
                and self.nu == other.nu and self.coeffs == other.coeffs)

    def __neg__(self):
        return DomainVector(self.nu, [-c for c in self.coeffs])

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [ZERO] * (n - len(self.coeffs))
        b = list(other.coeffs) + [ZERO] * (n - len(other.coeffs))
        return DomainVector(self.nu, [x + y for x, y in zip(a, b)])

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c):
        return DomainVector(self.nu, [Rat(c) * x for x in self.coeffs])

    def __repr__(self):
        return f"DomainVector[{', '.join(rat_str(c) for c in self.coeffs)}]"


def _band_S(nu, k):
    return ((k, -(nu / 2 + k)), (k + 1, ONE))


def _band_Y(nu, k):
    return ((k + 1, ONE),)


def _x_lower(nu, k):
    return k * (k + nu - 1)


def _band_X(nu, k):
    out = []
    if k:
        out.append((k - 1, _x_lower(nu, Rat(k))))
    out.append((k, -(nu + 2 * k)))
    out.append((k + 1, ONE))
    return tuple(out)


def _band_Eplus(nu, k):
    out = []
    if k:
        out.append((k - 1, -_x_lower(nu, Rat(k)) / 2))
    out.append((k, nu + 2 * k))
    out.append((k + 1, Rat(-2)))
    return tuple(out)


def _band_Eminus(nu, k):
    if k:
        return ((k - 1, -_x_lower(nu, Rat(k)) / 2),)
    return ()


def _band_h(nu, k):
    out = []
    if k:
        out.append((k - 1, -_x_lower(nu, Rat(k)) / 2))
    out.append((k, nu / 2 + k))
    return tuple(out)


# kind -> (phase power of i, real band)
_OPERATORS = {
    "S": (0, _band_S),
    "X": (1, _band_X),
    "Y": (3, _band_Y),
    "Eplus": (0, _band_Eplus),
    "Eminus": (0, _band_Eminus),
    "h": (0, _band_h),
}


class RepOperator:
    """One generator: a real banded recurrence with a global i-phase."""

    __slots__ = ("kind", "nu", "phase", "_band")

    def __init__(self, kind, nu):
        if kind not in _OPERATORS:
            raise ValueError(f"unknown operator kind {kind!r}")
        self.kind = kind
        self.nu = check_nu(nu)
        self.phase, self._band = _OPERATORS[kind]

    def band(self, k):
        """Nonzero images of f_k as (index, coefficient) pairs."""
        return self._band(self.nu, k)

    def apply_real(self, coeffs):
        """The real recurrence applied to a coefficient list."""
        out = [ZERO] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            if not c:
                continue
            for j, b in enumerate(self._band(self.nu, k)):
                idx, coeff = b
                out[idx] += c * coeff
        return out

    def __repr__(self):
        return f"RepOperator({self.kind}, nu={rat_str(self.nu)}, " \
               f"phase={_PHASE_NAMES[self.phase]})"


def rep_operator(kind, nu):
    return RepOperator(kind, nu)


def apply(op: RepOperator, v: DomainVector):
    """Apply a generator: returns (phase power of i, real DomainVector).

    The mathematical image is i**phase times the returned vector.
    """
    if op.nu != v.nu:
        raise ValueError("operator and vector have different nu")
    return op.phase, DomainVector(v.nu, op.apply_real(list(v.coeffs)))


def phased_equal(p1, v1, p2, v2):
    """i**p1 * v1 == i**p2 * v2 as complex vectors."""
    if v1.is_zero() or v2.is_zero():
        return v1.is_zero() and v2.is_zero()
    d = (p1 - p2) % 4
    if d == 0:
        return v1 == v2
    if d == 2:
        return v1 == -v2
    return False


def commutator_check(nu, degree=20):
    """[S,X] = X, [S,Y] = -Y, [X,Y] = -2S, exactly on f_0..f_degree."""
    nu = check_nu(nu)
    suite = Suite("sl2-commutators", nu=rat_str(nu), degree=degree)
    ops = {k: RepOperator(k, nu) for k in ("S", "X", "Y")}
    cases = (
        ("sl2.SX", "S", "X", "X", ONE),
        ("sl2.SY", "S", "Y", "Y", -ONE),
        ("sl2.XY", "X", "Y", "S", Rat(-2)),
    )
    for name, a_kind, b_kind, rhs_kind, rhs_scale in cases:
        log = suite.relation(name)
        a, b = ops[a_kind], ops[b_kind]
        rhs_op = ops[rhs_kind]
        for k in range(degree + 1):
            f = [ZERO] * k + [ONE]
            lhs = [x - y for x, y in
                   _pad(a.apply_real(b.apply_real(f)),
                        b.apply_real(a.apply_real(f)))]
            rhs = [rhs_scale * c for c in rhs_op.apply_real(f)]
            ok = phased_equal((a.phase + b.phase) % 4, DomainVector(nu, lhs),
                              rhs_op.phase, DomainVector(nu, rhs))
            log.record(ok, {"k": k})
    return suite.to_dict()


def _pad(a, b):
    n = max(len(a), len(b))
    return zip(a + [ZERO] * (n - len(a)), b + [ZERO] * (n - len(b)))


def gram(nu, j, k):
    """<f_j, f_k> / <f_0, f_0> = (nu)_(j+k) / 2^(j+k), any rational nu."""
    if j < 0 or k < 0:
        raise ValueError("basis indices must be nonnegative")
    nu = Rat(nu)
    return rising(nu, j + k) / Rat(2) ** (j + k)


def gram_matrix(nu, size):
    return [[gram(nu, j, k) for k in range(size)] for j in range(size)]


def gram_positive(nu, size):
    """Positive definiteness of the size x size Gram, exact minors."""
    return linalg.is_positive_definite(gram_matrix(nu, size))


def _real_matrix_element(op, j, k):
    """<R f_j, f_k> for the operator's real part R, in <f_0,f_0> units."""
    return sum((c * gram(op.nu, idx, k) for idx, c in op.band(j)), ZERO)


def hermiticity_check(nu, degree=15):
    """Unitarity of the action, via exact Gram algebra.

    X and Y carry phase +-i with Gram-symmetric real parts, so their
    matrix elements satisfy <O f_j, f_k> = <f_j, O f_k> with the phase
    carried along; S is real and Gram-skew, equivalently iS is the
    symmetric (self-adjoint) dilation observable.  Together these are
    exactly the statement that the module is unitary for nu > 0.
    """
    nu = check_nu(nu)
    suite = Suite("sl2-hermiticity", nu=rat_str(nu), degree=degree)
    for kind, want in (("S", "skew"), ("X", "symmetric"),
                       ("Y", "symmetric")):
        op = RepOperator(kind, nu)
        log = suite.relation(f"hermitian.{kind}")
        for j in range(degree + 1):
            for k in range(j, degree + 1):
                left = _real_matrix_element(op, j, k)
                right = _real_matrix_element(op, k, j)
                ok = left == (right if want == "symmetric" else -right)
                log.record(ok, {"j": j, "k": k,
                                "left": rat_str(left),
                                "right": rat_str(right)})
    return suite.to_dict()


def lowest_weight_check(nu, depth=10):
    """f_0 is annihilated by E_- and generates the module under E_+."""
    nu = check_nu(nu)
    suite = Suite("sl2-lowest-weight", nu=rat_str(nu), depth=depth)
    eplus = RepOperator("Eplus", nu)
    eminus = RepOperator("Eminus", nu)
    h = RepOperator("h", nu)

    annih = suite.relation("lw.annihilated")
    annih.record(DomainVector(nu, eminus.apply_real([ONE])).is_zero())

    ladder = suite.relation("lw.h-eigenvalues")
    vectors = []
    cur = [ONE]
    for m in range(depth + 1):
        vec = DomainVector(nu, cur)
        vectors.append(vec)
        hv = DomainVector(nu, h.apply_real(list(vec.coeffs)))
        ladder.record(hv == (nu / 2 + m) * vec, {"m": m})
        cur = eplus.apply_real(cur)

    back = suite.relation("lw.lowering-returns")
    e_minus_e_plus = DomainVector(nu, eminus.apply_real(
        eplus.apply_real([ONE])))
    back.record(e_minus_e_plus == nu * DomainVector(nu, [ONE]),
                {"value": rat_str(nu)})

    rank_log = suite.relation("lw.full-rank")
    rows = []
    width = max(len(v.coeffs) for v in vectors)
    for v in vectors:
        rows.append(list(v.coeffs) + [ZERO] * (width - len(v.coeffs)))
    rank_log.record(linalg.mat_rank(rows) == depth + 1,
                    {"depth": depth})
    return suite.to_dict()


def domain_distinct(nu):
    """The X-recurrences of nu and 2-nu differ at k=1 unless nu = 1.

    This realizes the inequivalence of the nu and 2-nu modules at the
    level of frozen recurrences (their domains share the weight
    exponent only when nu = 2 - nu).
    """
    nu = Rat(nu)
    return _x_lower(nu, ONE) != _x_lower(2 - nu, ONE)


def rep_check(nu, degree=20, depth=None):
    """Full representation suite for one nu (CLI surface)."""
    nu = check_nu(nu)
    depth = depth if depth is not None else min(degree, 10)
    suite = {"suite": "rep-check", "params": {"nu": rat_str(nu),
                                              "degree": degree},
             "relations": {}, "passed": True}
    for part in (commutator_check(nu, degree),
                 hermiticity_check(nu, min(degree, 15)),
                 lowest_weight_check(nu, depth)):
        suite["relations"].update(part["relations"])
        suite["passed"] = suite["passed"] and part["passed"]
    pos = {"trials": 1, "failures": 0 if gram_positive(nu, 11) else 1}
    suite["relations"]["gram.positive-definite"] = pos
    dd = {"trials": 1,
          "failures": 0 if (nu == 1 or domain_distinct(nu)) else 1}
    suite["relations"]["domain.distinct-from-mirror"] = dd
    suite["passed"] = suite["passed"] and all(
        r["failures"] == 0 for r in suite["relations"].values())
    suite["relations"] = dict(sorted(suite["relations"].items()))
    return suite
