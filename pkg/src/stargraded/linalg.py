"""Exact linear algebra over the rationals: RREF, rank, nullspace, canonical subspaces."""

from fractions import Fraction


def _as_num(x):
    # keep exact ints as ints, everything else as Fraction
    if isinstance(x, int):
        return x
    f = Fraction(x)
    return f.numerator if f.denominator == 1 else f


def rref(rows):
    """Reduced row echelon form. Returns (rows, pivot_columns); input is not mutated."""
    m = [[_as_num(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        if pv != 1:
            m[r] = [_as_num(Fraction(x, 1) / pv) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [_as_num(a - f * b) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows):
    """Exact rank over the rationals."""
    return len(rref(rows)[0])


def rank_mod_p(rows, p):
    """Rank of an integer matrix modulo the prime p."""
    m = [[x % p for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(r + 1, len(m)):
            if m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def nullspace(rows, ncols=None):
    """Canonical basis of {x : rows @ x = 0}; ncols needed when rows is empty."""
    if rows:
        ncols = len(rows[0])
    assert ncols is not None
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -Fraction(red[i][f])
        basis.append([_as_num(x) for x in v])
    return rref(basis)[0]


def solve(rows, rhs):
    """One exact solution of rows @ x = rhs, or None if inconsistent."""
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    n = len(rows[0]) if rows else 0
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = Fraction(red[i][-1])
    return [_as_num(v) for v in x]


def mat_vec(m, v):
    """Matrix times column vector."""
    assert all(len(row) == len(v) for row in m)
    return [_as_num(sum(a * b for a, b in zip(row, v))) for row in m]


def mat_mul(a, b):
    """Matrix product."""
    bt = list(zip(*b))
    return [[_as_num(sum(x * y for x, y in zip(row, col))) for col in bt] for row in a]


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def coordinate_span(ambient_dim, indices):
    """The subspace spanned by the given coordinate axes."""
    rows = []
    for k in indices:
        row = [0] * ambient_dim
        row[k] = 1
        rows.append(row)
    return Subspace(ambient_dim, rows)


class Subspace:
    """A linear subspace of F^ambient_dim held as a canonical RREF basis."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim, basis_rows=()):
        red, _ = rref([list(r) for r in basis_rows])
        assert all(len(r) == ambient_dim for r in red)
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(r) for r in red)

    @property
    def dim(self):
        return len(self.basis)

    def is_zero(self):
        return not self.basis

    def contains(self, v):
        assert len(v) == self.ambient_dim
        w = [_as_num(x) for x in v]
        for row in self.basis:
            c = next((j for j, x in enumerate(row) if x != 0), None)
            if c is not None and w[c] != 0:
                f = w[c]
                w = [_as_num(a - f * b) for a, b in zip(w, row)]
        return all(x == 0 for x in w)

    def contains_subspace(self, other):
        return all(self.contains(list(r)) for r in other.basis)

    def add(self, other):
        assert self.ambient_dim == other.ambient_dim
        return Subspace(self.ambient_dim, list(self.basis) + list(other.basis))

    def intersect(self, other):
        """Exact intersection via the kernel of the stacked coefficient relation."""
        assert self.ambient_dim == other.ambient_dim
        if self.is_zero() or other.is_zero():
            return Subspace(self.ambient_dim)
        cols = [list(r) for r in self.basis] + [list(r) for r in other.basis]
        # x in both spaces: sum c_i u_i - sum d_j v_j = 0; columns are the basis vectors
        m = [[cols[k][a] for k in range(len(cols))] for a in range(self.ambient_dim)]
        for row in m:
            for j in range(self.dim, len(cols)):
                row[j] = -row[j]
        vecs = []
        for coeffs in nullspace(m, len(cols)):
            v = [Fraction(0)] * self.ambient_dim
            for k in range(self.dim):
                if coeffs[k]:
                    for a in range(self.ambient_dim):
                        v[a] += coeffs[k] * self.basis[k][a]
            vecs.append([_as_num(x) for x in v])
        return Subspace(self.ambient_dim, vecs)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of F^{self.ambient_dim})"


class RankTracker:
    """Incremental exact rank of a growing set of vectors (kept in reduced form)."""

    __slots__ = ("rows", "pivots")

    def __init__(self):
        self.rows = []
        self.pivots = []

    @property
    def rank(self):
        return len(self.rows)

    def add(self, vec):
        """Insert a vector; returns True if it increased the rank."""
        w = list(vec)
        for row, c in zip(self.rows, self.pivots):
            if w[c] != 0:
                f = w[c]
                w = [_as_num(a - f * b) for a, b in zip(w, row)]
        c = next((j for j, x in enumerate(w) if x != 0), None)
        if c is None:
            return False
        pv = w[c]
        if pv != 1:
            w = [_as_num(Fraction(x, 1) / pv) for x in w]
        for i, row in enumerate(self.rows):
            if row[c] != 0:
                f = row[c]
                self.rows[i] = [_as_num(a - f * b) for a, b in zip(row, w)]
        self.rows.append(w)
        self.pivots.append(c)
        return True


class RankTrackerModP:
    """Incremental rank of a growing set of integer vectors modulo a prime."""

    __slots__ = ("p", "rows", "pivots")

    def __init__(self, p):
        self.p = p
        self.rows = []
        self.pivots = []

    @property
    def rank(self):
        return len(self.rows)

    def add(self, vec):
        p = self.p
        w = [x % p for x in vec]
        for row, c in zip(self.rows, self.pivots):
            if w[c]:
                f = w[c]
                w = [(a - f * b) % p for a, b in zip(w, row)]
        c = next((j for j, x in enumerate(w) if x), None)
        if c is None:
            return False
        inv = pow(w[c], p - 2, p)
        w = [(x * inv) % p for x in w]
        self.rows.append(w)
        self.pivots.append(c)
        return True
