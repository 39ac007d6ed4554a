"""Deterministic builders for every catalog structure used in tests.

Each builder validates its output, so constructing the catalog is
itself a self-check.
"""

from .errors import PreconditionFailed
from .fields import GF, QQ
from .frames import FrameWitness, SubspaceContext
from .lattice import validate_lattice
from .linalg import Matrix
from .ortho import OrthoLattice, validate_ortholattice
from .rings import MatrixBlock, MatrixRing, TableRing
from .spaces import Subspace, all_subspaces, orthogonal, validate_space


# ---------------------------------------------------------------- lattices

def chain_lattice(n):
    return validate_lattice(n=n, covers=[(i, i + 1) for i in range(n - 1)])


def boolean_lattice(n_atoms):
    n = 1 << n_atoms
    leq = [[(i | j) == j for j in range(n)] for i in range(n)]
    return validate_lattice(n=n, leq=leq)


def product_lattice(l1, l2):
    """Direct product, indexed i * l2.n + j."""
    n = l1.n * l2.n
    leq = [[l1.leq[i1][j1] and l2.leq[i2][j2]
            for j1 in range(l1.n) for j2 in range(l2.n)]
           for i1 in range(l1.n) for i2 in range(l2.n)]
    return validate_lattice(n=n, leq=leq)


def mo_n(k):
    """The modular ortholattice with 2k atoms paired by the involution.

    Element 0 is the bottom, 1..2k the atoms (2t+1 and 2t+2 are a
    perp pair), 2k+1 the top.  MO_1 is the Boolean square.
    """
    if k < 1:
        raise PreconditionFailed("k must be >= 1")
    n = 2 * k + 2
    top = n - 1
    covers = [(0, a) for a in range(1, top)] + [(a, top) for a in range(1, top)]
    base = validate_lattice(n=n, covers=covers)
    perp = [top] + [0] * (n - 2) + [0]
    for t in range(k):
        perp[2 * t + 1] = 2 * t + 2
        perp[2 * t + 2] = 2 * t + 1
    perp[0], perp[top] = top, 0
    return validate_ortholattice(base, perp)


def boolean_ortholattice(n_atoms):
    base = boolean_lattice(n_atoms)
    full = (1 << n_atoms) - 1
    return validate_ortholattice(base, [full ^ i for i in range(base.n)])


def subspace_ortholattice(field, dim, gram=None, sigma="id"):
    """The ortholattice of subspaces of an exact inner product space.

    Finite fields enumerate fully and return (OrthoLattice, subspaces,
    space); the rationals return a symbolic SubspaceContext instead.
    """
    gram = gram if gram is not None else Matrix.identity(field, dim)
    space = validate_space(field, dim, gram, sigma)
    if field == QQ:
        return SubspaceContext(space)
    subs = all_subspaces(field, dim)
    index = {s: i for i, s in enumerate(subs)}
    n = len(subs)
    leq = [[subs[j].contains(subs[i]) for j in range(n)] for i in range(n)]
    base = validate_lattice(n=n, leq=leq)
    perp = [index[orthogonal(space, s)] for s in subs]
    return validate_ortholattice(base, perp), subs, space


# ------------------------------------------------------------------- rings

def matrix_star_ring(field, dim, gram=None, sigma="id"):
    """M_dim(field) with the adjoint involution of the given Gram form."""
    gram = gram if gram is not None else Matrix.identity(field, dim)
    return MatrixRing([MatrixBlock(field, dim, gram, sigma)])


def matrix_ring(field, dim):
    """M_dim(field) without involution."""
    return MatrixRing([MatrixBlock(field, dim, None, "id")])


def block_product(*rings):
    """Concatenate the blocks of descriptor rings."""
    blocks = []
    for r in rings:
        blocks.extend(r.blocks)
    return MatrixRing(blocks)


def finite_matrix_ring(q, n, star=None):
    """M_n(GF(q)) as an honest finite table ring.

    star: None or "transpose" (valid as an involution for any q, n).
    """
    from .linalg import matrices_over
    field = GF(q)
    mats = list(matrices_over(field, n, n))
    index = {m: i for i, m in enumerate(mats)}
    names = ["[" + ";".join("".join(str(x.code) for x in row)
                            for row in m.rows) + "]" for m in mats]
    add = [[index[a + b] for b in mats] for a in mats]
    mul = [[index[a @ b] for b in mats] for a in mats]
    one = index[Matrix.identity(field, n)]
    st = None
    if star == "transpose":
        st = [index[m.transpose()] for m in mats]
    ring = TableRing(names, add, mul, one, star=st)
    ring.matrices = mats
    return ring


def field_table_ring(q, star_identity=True):
    """GF(q) as a table ring, optionally with the identity involution."""
    field = GF(q)
    elems = field.elements()
    index = {e: i for i, e in enumerate(elems)}
    names = [str(e.code) for e in elems]
    add = [[index[a + b] for b in elems] for a in elems]
    mul = [[index[a * b] for b in elems] for a in elems]
    st = list(range(q)) if star_identity else None
    return TableRing(names, add, mul, index[field.one], star=st)


def zmod_ring(n):
    """The integers mod n as a table ring (identity involution)."""
    names = [str(i) for i in range(n)]
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return TableRing(names, add, mul, 1 % n, star=list(range(n)))


def product_ring(r1, r2):
    """Direct product of two table rings, indexed i * r2.n + j."""
    n = r1.n * r2.n

    def pack(i, j):
        return i * r2.n + j

    names = [f"({r1.names[i]},{r2.names[j]})"
             for i in range(r1.n) for j in range(r2.n)]
    add = [[pack(r1.add[i1][j1], r2.add[i2][j2])
            for j1 in range(r1.n) for j2 in range(r2.n)]
           for i1 in range(r1.n) for i2 in range(r2.n)]
    mul = [[pack(r1.mul[i1][j1], r2.mul[i2][j2])
            for j1 in range(r1.n) for j2 in range(r2.n)]
           for i1 in range(r1.n) for i2 in range(r2.n)]
    one = pack(r1.one_idx, r2.one_idx)
    star = None
    if r1.has_star and r2.has_star:
        star = [pack(r1.star_map[i], r2.star_map[j])
                for i in range(r1.n) for j in range(r2.n)]
    return TableRing(names, add, mul, one, star=star)


# ------------------------------------------------------------------ frames

def canonical_frame(n, target):
    """The coordinate frame of order n.

    * for an inner product space (or plain field, dim pair): parts are
      the coordinate axes grouped in n consecutive blocks, the axis
      a_0i is the graph of minus the identity between block 0 and i;
    * for an MO_k ortholattice (k >= 2): the first two atoms with the
      third as axis, a skew 2-2-frame.

    Returns a verified FrameWitness; distances n < 2 are rejected.
    """
    if n < 2:
        raise PreconditionFailed("a frame needs n >= 2")
    if isinstance(target, OrthoLattice):
        # MO_k shape: atoms at 1..2k, axis needs a third atom
        k = (target.n - 2) // 2
        if target.n != 2 * k + 2 or k < 2:
            raise PreconditionFailed(
                "canonical lattice frames exist for MO_k with k >= 2")
        if n != 2:
            raise PreconditionFailed("MO_k frames have order 2")
        return FrameWitness(kind="skew", n=2, m=2, a=(1, 2), a0=(3,), b=(1,))
    if isinstance(target, tuple):
        field, dim = target
    else:
        field, dim = target.field, target.dim
    if dim % n != 0:
        raise PreconditionFailed(f"dimension {dim} is not divisible by {n}")
    d = dim // n

    def block_span(i):
        rows = [[field.one if c == i * d + r else field.zero
                 for c in range(dim)] for r in range(d)]
        return Subspace(field, dim, Matrix(field, rows, ncols=dim))

    parts = tuple(block_span(i) for i in range(n))
    axes = []
    for i in range(1, n):
        rows = []
        for r in range(d):
            row = [field.zero] * dim
            row[r] = field.one
            row[i * d + r] = -field.one
            rows.append(row)
        axes.append(Subspace(field, dim, Matrix(field, rows, ncols=dim)))
    return FrameWitness(kind="skew", n=n, m=n, a=parts, a0=tuple(axes),
                        b=(parts[0],) * (n - 1))


def canonical_ring_semiframe(ring):
    """Cross-partner orthogonal semiframe from the diagonal matrix units
    of a one-block descriptor ring: e_i = E_ii, partner E_jj for the
    next index, axis generated by the column e_i - e_j."""
    if len(ring.blocks) != 1:
        raise PreconditionFailed("one-block descriptor rings only")
    blk = ring.blocks[0]
    n = blk.dim
    if n < 2:
        raise PreconditionFailed("semiframes need dimension >= 2")
    es, fs, gs = [], [], []
    for i in range(n):
        j = (i + 1) % n
        es.append(ring.unit(0, i, i))
        fs.append(ring.unit(0, j, j))
        gs.append(ring.unit(0, i, i) - ring.unit(0, j, i))
    return FrameWitness(kind="ortho_semiframe", n=n, m=n,
                        a=tuple(es), b=tuple(fs), axes=tuple(gs))
