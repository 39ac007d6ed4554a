"""Exact dense matrices over the rationals or a Galois field.

Rows are stored as nested tuples, so matrices are immutable and hashable;
canonical reduced row echelon form gives O(1) equality for row spaces.
Everything is plain Gaussian elimination with exact division.
"""

from .fields import QQ


class Matrix:
    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field, rows, ncols=None):
        rows = tuple(tuple(field.elem(x) for x in r) for r in rows)
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        if rows:
            self.ncols = len(rows[0])
            if any(len(r) != self.ncols for r in rows):
                raise ValueError("ragged rows")
        else:
            if ncols is None:
                raise ValueError("empty matrix needs explicit ncols")
            self.ncols = ncols

    # -- constructors --------------------------------------------------
    @classmethod
    def zeros(cls, field, m, n):
        z = field.zero
        return cls(field, [[z] * n for _ in range(m)], ncols=n)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)]
                           for i in range(n)])

    @classmethod
    def unit(cls, field, n, i, j):
        """The n x n matrix with a single 1 in row i, column j."""
        z, o = field.zero, field.one
        return cls(field, [[o if (r == i and c == j) else z
                            for c in range(n)] for r in range(n)])

    @classmethod
    def diagonal(cls, field, entries):
        n = len(entries)
        z = field.zero
        return cls(field, [[field.elem(entries[i]) if i == j else z
                            for j in range(n)] for i in range(n)])

    @classmethod
    def row_vector(cls, field, entries):
        return cls(field, [list(entries)], ncols=len(entries))

    @classmethod
    def column_vector(cls, field, entries):
        return cls(field, [[e] for e in entries], ncols=1)

    # -- basic ops -------------------------------------------------------
    def __add__(self, other):
        self._compat(other)
        return Matrix(self.field,
                      [[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)],
                      ncols=self.ncols)

    def __sub__(self, other):
        self._compat(other)
        return Matrix(self.field,
                      [[a - b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)],
                      ncols=self.ncols)

    def __neg__(self):
        return Matrix(self.field, [[-a for a in r] for r in self.rows],
                      ncols=self.ncols)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in product")
        cols = list(zip(*other.rows)) if other.rows else []
        z = self.field.zero
        out = []
        for r in self.rows:
            row = []
            for c in range(other.ncols):
                s = z
                col = cols[c] if cols else ()
                for a, b in zip(r, col):
                    s = s + a * b
                row.append(s)
            out.append(row)
        return Matrix(self.field, out, ncols=other.ncols)

    def scale(self, s):
        s = self.field.elem(s)
        return Matrix(self.field, [[s * a for a in r] for r in self.rows],
                      ncols=self.ncols)

    def transpose(self):
        if self.nrows == 0:
            return Matrix(self.field, [()] * self.ncols, ncols=0)
        return Matrix(self.field, list(zip(*self.rows)), ncols=self.nrows)

    def map(self, fn):
        return Matrix(self.field, [[fn(a) for a in r] for r in self.rows],
                      ncols=self.ncols)

    def entry(self, i, j):
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def trace(self):
        s = self.field.zero
        for i in range(min(self.nrows, self.ncols)):
            s = s + self.rows[i][i]
        return s

    def is_zero(self):
        z = self.field.zero
        return all(a == z for r in self.rows for a in r)

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return Matrix(self.field,
                      [r1 + r2 for r1, r2 in zip(self.rows, other.rows)],
                      ncols=self.ncols + other.ncols)

    def vstack(self, other):
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        return Matrix(self.field, self.rows + other.rows, ncols=self.ncols)

    def submatrix(self, rows, cols):
        return Matrix(self.field,
                      [[self.rows[i][j] for j in cols] for i in rows],
                      ncols=len(cols))

    def _compat(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        if self.field != other.field:
            raise ValueError("field mismatch")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field
                and (self.nrows, self.ncols) == (other.nrows, other.ncols)
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols, self.rows))

    def __repr__(self):
        if not self.rows:
            return f"Matrix({self.field}, 0x{self.ncols})"
        body = "; ".join(" ".join(str(a) for a in r) for r in self.rows)
        return f"Matrix[{body}]"


def rref(m):
    """Reduced row echelon form; returns (R, pivot_columns)."""
    rows = [list(r) for r in m.rows]
    z = m.field.zero
    pivots = []
    pr = 0
    for pc in range(m.ncols):
        pivot_row = None
        for r in range(pr, len(rows)):
            if rows[r][pc] != z:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[pr], rows[pivot_row] = rows[pivot_row], rows[pr]
        inv = m.field.one / rows[pr][pc]
        rows[pr] = [inv * a for a in rows[pr]]
        for r in range(len(rows)):
            if r != pr and rows[r][pc] != z:
                f = rows[r][pc]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[pr])]
        pivots.append(pc)
        pr += 1
        if pr == len(rows):
            break
    return Matrix(m.field, rows, ncols=m.ncols), tuple(pivots)


def rank(m):
    return len(rref(m)[1])


def row_space(m):
    """Canonical basis (RREF, zero rows dropped) of the row space."""
    r, pivots = rref(m)
    return Matrix(m.field, r.rows[:len(pivots)], ncols=m.ncols)


def column_space(m):
    """Canonical row-basis of the column space (rows span it)."""
    return row_space(m.transpose())


def nullspace(m):
    """Canonical row-basis of {x : m @ x = 0} (right null space)."""
    r, pivots = rref(m)
    z, o = m.field.zero, m.field.one
    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [z] * m.ncols
        v[fc] = o
        for pr, pc in enumerate(pivots):
            v[pc] = -r.rows[pr][fc]
        basis.append(v)
    return row_space(Matrix(m.field, basis, ncols=m.ncols))


def left_nullspace(m):
    """Canonical row-basis of {x : x @ m = 0}."""
    return nullspace(m.transpose())


def solve_right(a, b):
    """Solve a @ X = b for X (b a Matrix); None if inconsistent."""
    if a.nrows != b.nrows:
        raise ValueError("shape mismatch")
    aug = a.hstack(b)
    r, pivots = rref(aug)
    z = a.field.zero
    # inconsistent iff a pivot lands in the b-part
    for pc in pivots:
        if pc >= a.ncols:
            return None
    rows = [[z] * b.ncols for _ in range(a.ncols)]
    for pr, pc in enumerate(pivots):
        for j in range(b.ncols):
            rows[pc][j] = r.rows[pr][a.ncols + j]
    return Matrix(a.field, rows, ncols=b.ncols)


def inverse(m):
    """Inverse matrix, or None if singular."""
    if m.nrows != m.ncols:
        return None
    aug = m.hstack(Matrix.identity(m.field, m.nrows))
    r, pivots = rref(aug)
    if list(pivots[:m.nrows]) != list(range(m.nrows)):
        return None
    return Matrix(m.field, [row[m.ncols:] for row in r.rows[:m.nrows]],
                  ncols=m.ncols)


def det(m):
    """Determinant by fraction-producing Gaussian elimination (exact)."""
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    rows = [list(r) for r in m.rows]
    z = m.field.zero
    d = m.field.one
    for c in range(n):
        piv = None
        for r in range(c, n):
            if rows[r][c] != z:
                piv = r
                break
        if piv is None:
            return z
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            d = -d
        d = d * rows[c][c]
        inv = m.field.one / rows[c][c]
        for r in range(c + 1, n):
            if rows[r][c] != z:
                f = rows[r][c] * inv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[c])]
    return d


def intersect_row_spaces(u, w):
    """Canonical basis of (row space of u) meet (row space of w)."""
    if u.ncols != w.ncols:
        raise ValueError("ambient dimension mismatch")
    if u.nrows == 0 or w.nrows == 0:
        return Matrix(u.field, [], ncols=u.ncols)
    stacked = u.vstack(-w)
    combos = left_nullspace(stacked)  # rows (alpha | beta): alpha u = beta w
    vecs = []
    for combo in combos.rows:
        alpha = combo[:u.nrows]
        vec = [u.field.zero] * u.ncols
        for a, urow in zip(alpha, u.rows):
            vec = [v + a * x for v, x in zip(vec, urow)]
        vecs.append(vec)
    return row_space(Matrix(u.field, vecs, ncols=u.ncols))


def kron_solve_axa(a):
    """Some x with a @ x @ a == a, or None.

    The equation is linear in the entries of x; build the flat system
    and solve it exactly.
    """
    n = a.nrows
    f = a.field
    rows = []
    rhs = []
    for i in range(n):
        for j in range(n):
            row = []
            for k in range(n):
                for l in range(n):
                    row.append(a.rows[i][k] * a.rows[l][j])
            rows.append(row)
            rhs.append([a.rows[i][j]])
    sol = solve_right(Matrix(f, rows, ncols=n * n),
                      Matrix(f, rhs, ncols=1))
    if sol is None:
        return None
    entries = [e for r in sol.rows for e in r]
    return Matrix(f, [entries[r * n:(r + 1) * n] for r in range(n)], ncols=n)


def leading_principal_minors(m):
    return [det(m.submatrix(range(k), range(k))) for k in range(1, m.nrows + 1)]


def matrices_over(field, nrows, ncols):
    """Iterate all matrices of the given shape over a finite field."""
    elems = field.elements()
    if elems is None:
        raise ValueError("cannot enumerate matrices over an infinite field")
    total = nrows * ncols

    def rec(pos, flat):
        if pos == total:
            yield Matrix(field, [flat[r * ncols:(r + 1) * ncols]
                                 for r in range(nrows)], ncols=ncols)
            return
        for e in elems:
            yield from rec(pos + 1, flat + [e])

    yield from rec(0, [])


def vectors_over(field, n, include_zero=True):
    elems = field.elements()
    if elems is None:
        raise ValueError("cannot enumerate vectors over an infinite field")

    def rec(pos, flat):
        if pos == n:
            yield tuple(flat)
            return
        for e in elems:
            yield from rec(pos + 1, flat + [e])

    for v in rec(0, []):
        if include_zero or any(x != field.zero for x in v):
            yield v


def random_fraction_matrix(rng, n, m=None, lo=-4, hi=4):
    """Small random rational matrix for seeded property runs."""
    from fractions import Fraction
    m = n if m is None else m
    return Matrix(QQ, [[Fraction(rng.randint(lo, hi)) for _ in range(m)]
                       for _ in range(n)])


def random_invertible(rng, field, n, lo=-4, hi=4):
    """Seeded random invertible matrix (rationals or finite field)."""
    while True:
        if field == QQ:
            m = random_fraction_matrix(rng, n, lo=lo, hi=hi)
        else:
            elems = field.elements()
            m = Matrix(field, [[elems[rng.randrange(len(elems))]
                                for _ in range(n)] for _ in range(n)])
        if inverse(m) is not None:
            return m
