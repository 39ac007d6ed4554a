"""Exact inner product spaces over the rationals or small Galois fields.

A space carries an invertible hermitian Gram matrix J and a field
involution sigma; the form is <v, w> = sigma(v)^T J w (linear in the
second slot).  Anisotropy is certified exactly: leading principal
minors over the rationals (definite forms only), exhaustion over finite
fields.  Subspaces are canonical row-echelon bases, so equality is
matrix equality.
"""

from .errors import Isotropic, NotClosed, NotInvertibleGram, NotOrthosymmetric
from .fields import QQ
from .linalg import (Matrix, intersect_row_spaces, inverse, leading_principal_minors,
                     nullspace, row_space, vectors_over)


class IPSpace:
    __slots__ = ("field", "dim", "gram", "sigma_name", "sigma", "_gram_inv")

    def __init__(self, field, dim, gram, sigma_name="id"):
        self.field = field
        self.dim = dim
        self.gram = gram
        self.sigma_name = sigma_name
        self.sigma = field.sigma(sigma_name)
        self._gram_inv = inverse(gram)

    def form(self, v, w):
        """<v, w> for row tuples v, w."""
        lhs = Matrix.row_vector(self.field, [self.sigma(x) for x in v])
        rhs = Matrix.column_vector(self.field, list(w))
        return (lhs @ self.gram @ rhs).entry(0, 0)

    def full(self):
        return Subspace(self.field, self.dim,
                        Matrix.identity(self.field, self.dim))

    def zero_subspace(self):
        return Subspace(self.field, self.dim,
                        Matrix(self.field, [], ncols=self.dim))

    def __repr__(self):
        return f"IPSpace({self.field}, dim={self.dim})"


def validate_space(field, dim, gram, sigma="id"):
    """Checked construction: invertible, hermitian, anisotropic."""
    if gram.nrows != dim or gram.ncols != dim:
        raise NotInvertibleGram(f"gram must be {dim}x{dim}")
    space = IPSpace(field, dim, gram, sigma)
    if space._gram_inv is None:
        raise NotInvertibleGram("gram matrix is singular")
    # hermitian symmetry makes the form orthosymmetric
    sig = space.sigma
    herm = gram.map(sig).transpose()
    if herm != gram:
        for i in range(dim):
            for j in range(dim):
                if herm.entry(i, j) != gram.entry(i, j):
                    ei = tuple(field.one if k == i else field.zero
                               for k in range(dim))
                    ej = tuple(field.one if k == j else field.zero
                               for k in range(dim))
                    raise NotOrthosymmetric(ei, ej)
    _check_anisotropic(space)
    return space


def _check_anisotropic(space):
    field, dim, gram = space.field, space.dim, space.gram
    if field == QQ:
        minors = leading_principal_minors(gram)
        pos = all(m > 0 for m in minors)
        neg = all((m > 0 if k % 2 == 0 else m < 0)
                  for k, m in enumerate(minors, start=1))
        if pos or neg:
            return
        # not definite: hunt for a small isotropic witness to report
        from fractions import Fraction
        coords = [Fraction(c) for c in range(-3, 4)]
        def search(prefix):
            if len(prefix) == dim:
                if any(x != 0 for x in prefix) and space.form(prefix, prefix) == 0:
                    return tuple(prefix)
                return None
            for c in coords:
                r = search(prefix + [c])
                if r:
                    return r
            return None
        w = search([])
        raise Isotropic(w, detail="rational forms must be definite")
    for v in vectors_over(field, dim, include_zero=False):
        if space.form(v, v) == field.zero:
            raise Isotropic(v)


class Subspace:
    """Row space with canonical (RREF) basis inside an ambient space."""

    __slots__ = ("field", "ambient", "basis")

    def __init__(self, field, ambient, basis):
        if basis.ncols != ambient:
            raise ValueError("basis has wrong ambient dimension")
        self.field = field
        self.ambient = ambient
        self.basis = row_space(basis)

    @classmethod
    def from_vectors(cls, field, ambient, vectors):
        return cls(field, ambient, Matrix(field, list(vectors), ncols=ambient))

    @classmethod
    def column_space(cls, matrix):
        """Span of the columns of a matrix, as a subspace of F^nrows."""
        return cls(matrix.field, matrix.nrows, matrix.transpose())

    def dim(self):
        return self.basis.nrows

    def contains_vector(self, v):
        if not any(x != self.field.zero for x in v):
            return True
        from .linalg import rank
        stacked = self.basis.vstack(Matrix.row_vector(self.field, list(v)))
        return rank(stacked) == self.dim()

    def contains(self, other):
        from .linalg import rank
        if other.dim() == 0:
            return True
        return rank(self.basis.vstack(other.basis)) == self.dim()

    def add(self, other):
        return Subspace(self.field, self.ambient,
                        self.basis.vstack(other.basis))

    def intersect(self, other):
        return Subspace(self.field, self.ambient,
                        intersect_row_spaces(self.basis, other.basis))

    def vectors(self):
        """All vectors (finite fields only)."""
        span = set()
        for combo in vectors_over(self.field, self.dim()):
            v = [self.field.zero] * self.ambient
            for c, row in zip(combo, self.basis.rows):
                v = [x + c * y for x, y in zip(v, row)]
            span.add(tuple(v))
        return span

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient == other.ambient and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field, self.ambient, self.basis))

    def __repr__(self):
        rows = "; ".join(" ".join(str(x) for x in r)
                         for r in self.basis.rows)
        return f"Subspace[{rows}]" if rows else f"Subspace[0 of {self.ambient}]"


def orthogonal(space, sub):
    """All vectors orthogonal to the subspace (exact null-space computation)."""
    if sub.dim() == 0:
        return space.full()
    a = sub.basis.map(space.sigma) @ space.gram
    return Subspace(space.field, space.dim, nullspace(a))


def is_closed(space, sub):
    """U = U-perp-perp; always true in finite dimension, still verified."""
    return orthogonal(space, orthogonal(space, sub)) == sub


def ortho_projection(space, sub):
    """Orthogonal projection onto the subspace, as a matrix on columns.

    For column basis C the projector is C (C'JC)^-1 C'J with C' the
    sigma-transpose; anisotropy makes the middle factor invertible.
    """
    if not is_closed(space, sub):
        raise NotClosed(f"{sub} is not closed")
    if sub.dim() == 0:
        return Matrix.zeros(space.field, space.dim, space.dim)
    c = sub.basis.transpose()
    cstar = sub.basis.map(space.sigma)  # = C'^T conj, rows
    mid = inverse(cstar @ space.gram @ c)
    if mid is None:
        raise NotClosed("form degenerates on the subspace")
    return c @ mid @ cstar @ space.gram


def adjoint(space, m):
    """phi* with <phi v, w> = <v, phi* w>: J^-1 phi^(sigma,T) J."""
    return space._gram_inv @ m.map(space.sigma).transpose() @ space.gram


def image(m):
    return Subspace.column_space(m)


def kernel(m):
    return Subspace(m.field, m.ncols, nullspace(m))


def subspaces_orthogonal_to_each_other(space, u, w):
    """True iff <x, y> = 0 for every x in u, y in w."""
    if u.dim() == 0 or w.dim() == 0:
        return True
    prod = u.basis.map(space.sigma) @ space.gram @ w.basis.transpose()
    return prod.is_zero()


def fact9_check(space, phi):
    """Two independent verdicts that must coincide:

    (a) phi is a projection in the adjoint ring (idempotent, self-adjoint),
    (b) phi equals the orthogonal projection onto its image.
    """
    is_star_projection = (phi @ phi == phi) and (adjoint(space, phi) == phi)
    equals_pi_image = phi == ortho_projection(space, image(phi))
    return is_star_projection, equals_pi_image


class StarEndo:
    """Endomorphism of an inner product space, with its adjoint."""

    __slots__ = ("space", "m")

    def __init__(self, space, m):
        if m.nrows != space.dim or m.ncols != space.dim:
            raise ValueError("matrix does not act on the space")
        self.space = space
        self.m = m

    def adjoint(self):
        return StarEndo(self.space, adjoint(self.space, self.m))

    def image(self):
        return image(self.m)

    def kernel(self):
        return kernel(self.m)

    def __add__(self, other):
        return StarEndo(self.space, self.m + other.m)

    def __sub__(self, other):
        return StarEndo(self.space, self.m - other.m)

    def __neg__(self):
        return StarEndo(self.space, -self.m)

    def __matmul__(self, other):
        return StarEndo(self.space, self.m @ other.m)

    def __eq__(self, other):
        return isinstance(other, StarEndo) and self.m == other.m \
            and self.space is other.space

    def __hash__(self):
        return hash(self.m)

    def __repr__(self):
        return f"StarEndo({self.m!r})"


def all_subspaces(field, ambient):
    """Every subspace of F^ambient for a finite field, by closure.

    Starts from the zero space and repeatedly extends by vectors not yet
    contained; small ambient dimensions only.
    """
    zero = Subspace(field, ambient, Matrix(field, [], ncols=ambient))
    seen = {zero}
    frontier = [zero]
    allv = [v for v in vectors_over(field, ambient, include_zero=False)]
    while frontier:
        sub = frontier.pop()
        for v in allv:
            if not sub.contains_vector(v):
                bigger = Subspace(field, ambient,
                                  sub.basis.vstack(
                                      Matrix.row_vector(field, list(v))))
                if bigger not in seen:
                    seen.add(bigger)
                    frontier.append(bigger)
    return sorted(seen, key=lambda s: (s.dim(), repr(s.basis.rows)))
