"""Exact rational linear algebra: dense helpers, rank, LDL^T, row spans.

Matrices are lists (or tuples) of row lists holding exact rationals.
Everything here is fraction-exact; no pivoting heuristics are needed
beyond skipping zero pivots.
"""

from .rational import ONE, ZERO, Rat


def zeros(n, m=None):
    m = n if m is None else m
    return [[ZERO] * m for _ in range(n)]


def identity(n):
    mat = zeros(n)
    for i in range(n):
        mat[i][i] = ONE
    return mat


def mat_copy(a):
    return [list(row) for row in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = zeros(n, m)
    for i in range(n):
        row = a[i]
        acc = out[i]
        for t in range(k):
            x = row[t]
            if x:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        acc[j] += x * bt[j]
    return out


def mat_vec(a, v):
    out = []
    for row in a:
        s = ZERO
        for x, y in zip(row, v):
            if x and y:
                s += x * y
        out.append(s)
    return out


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def is_zero_mat(a):
    return all(not x for row in a for x in row)


def commutator(a, b):
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def mat_rank(rows):
    """Rank by exact Gaussian elimination (destroys a copy)."""
    a = [list(r) for r in rows]
    if not a:
        return 0
    m = len(a[0])
    rank = 0
    row = 0
    for col in range(m):
        piv = None
        for r in range(row, len(a)):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = ONE / a[row][col]
        a[row] = [x * inv for x in a[row]]
        for r in range(len(a)):
            if r != row and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        rank += 1
        row += 1
        if row == len(a):
            break
    return rank


def solve(a, b):
    """Solve a x = b exactly (square a); returns None if singular."""
    n = len(a)
    aug = [list(row) + [bv] for row, bv in zip(a, b)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if aug[r][col]:
                piv = r
                break
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = ONE / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def ldl(g):
    """LDL^T factorization of a symmetric matrix.

    Returns (L, D) with L unit lower triangular and D the diagonal
    pivots as a list.  Raises ValueError on a zero pivot (matrix not
    strongly nonsingular); pivot signs decide positive definiteness.
    """
    n = len(g)
    a = mat_copy(g)
    low = identity(n)
    d = []
    for k in range(n):
        piv = a[k][k]
        if not piv:
            raise ValueError(f"zero pivot at index {k}")
        d.append(piv)
        for i in range(k + 1, n):
            f = a[i][k] / piv
            low[i][k] = f
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return low, d


def leading_minors(g):
    """Leading principal minors det(g[:k][:k]) for k = 1..n, exact.

    Uses fraction Gaussian elimination without pivoting; works for any
    symmetric matrix (zero pivots shortcut the remaining minors to the
    determinant expansion computed directly).
    """
    n = len(g)
    minors = []
    for k in range(1, n + 1):
        minors.append(_det([row[:k] for row in g[:k]]))
    return minors


def _det(a):
    a = mat_copy(a)
    n = len(a)
    det = ONE
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            return ZERO
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = ONE / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                for j in range(col, n):
                    a[r][j] -= f * a[col][j]
    return det


def is_positive_definite(g):
    """Sylvester criterion with exact minors."""
    return all(m > 0 for m in leading_minors(g))


def forward_solve_matrix(low, b):
    """Solve L X = B for unit lower triangular L, exact."""
    n = len(low)
    m = len(b[0])
    x = [list(row) for row in b]
    for i in range(n):
        li = low[i]
        xi = x[i]
        for k in range(i):
            f = li[k]
            if f:
                xk = x[k]
                for j in range(m):
                    if xk[j]:
                        xi[j] -= f * xk[j]
    return x


class RowSpan:
    """Incremental row-echelon span of sparse rational vectors.

    Rows are dicts {column: value}.  Used both for rank computations
    (dimension audits) and for fast membership tests against a frozen
    span.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = {}  # pivot column -> reduced row dict

    @property
    def rank(self):
        return len(self.rows)

    def _reduce(self, vec):
        vec = dict(vec)
        for col in sorted(vec):
            if not vec.get(col):
                continue
            row = self.rows.get(col)
            if row is None:
                continue
            f = vec[col]
            for c, x in row.items():
                nv = vec.get(c, ZERO) - f * x
                if nv:
                    vec[c] = nv
                else:
                    vec.pop(c, None)
        return {c: x for c, x in vec.items() if x}

    def add(self, vec):
        """Insert a vector; returns True if it enlarged the span."""
        red = self._reduce(vec)
        if not red:
            return False
        piv = min(red)
        inv = ONE / red[piv]
        red = {c: x * inv for c, x in red.items()}
        # keep existing rows reduced against the new pivot
        for p, row in self.rows.items():
            f = row.get(piv)
            if f:
                for c, x in red.items():
                    nv = row.get(c, ZERO) - f * x
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
        self.rows[piv] = red
        return True

    def contains(self, vec):
        return not self._reduce(vec)


def mat_to_sparse(a):
    """Flatten a dense matrix into a sparse {flat_index: value} row."""
    m = len(a[0])
    out = {}
    for i, row in enumerate(a):
        base = i * m
        for j, x in enumerate(row):
            if x:
                out[base + j] = x
    return out
