"""The acceptance suite: one callable per criterion, shared by the CLI
demo command and the test suite.

Every criterion returns a CriterionResult with a verdict, a human
summary and its wall time; randomized suites take an explicit seed.
"""

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .errors import PerpViolation
from .fields import GF, QQ
from .frames import build_orthogonal_semiframe, search_frame, verify_frame
from .lattice import congruences, is_modular
from .linalg import Matrix, rank
from .models import (boolean_ortholattice, canonical_frame,
                     canonical_ring_semiframe, field_table_ring,
                     finite_matrix_ring, matrix_ring, matrix_star_ring,
                     mo_n, product_ring, subspace_ortholattice)
from .ortho import check_congruence_perp
from .reps import (EtaMap, RingRep, claim1_test, coordinatize,
                   recover_adjoints, ring_embedding_from_ortho_rep,
                   verify_ortho_rep, verify_ring_rep)
from .rings import fact3_check, is_star_regular, lat_of
from .spaces import (Subspace, adjoint, all_subspaces, fact9_check, image,
                     ortho_projection, validate_space)


@dataclass
class CriterionResult:
    index: int
    name: str
    ok: bool
    detail: str
    elapsed: float


def _timed(index, name, fn, seed):
    t0 = time.perf_counter()
    try:
        detail = fn(seed)
        ok = True
    except Exception as ex:  # a failing criterion reports, never crashes
        detail = f"{type(ex).__name__}: {ex}"
        ok = False
    return CriterionResult(index, name, ok, detail or "",
                           time.perf_counter() - t0)


# ---------------------------------------------------------------- catalogs

def modular_ortholattice_catalog():
    """Every finite catalog ortholattice with a modular base."""
    out = [("MO_1", mo_n(1)), ("MO_2", mo_n(2)), ("MO_3", mo_n(3)),
           ("MO_4", mo_n(4))]
    for k in (1, 2, 3, 4):
        out.append((f"2^{k}", boolean_ortholattice(k)))
    ol2, _, _ = subspace_ortholattice(GF(2), 1)
    out.append(("Lat(GF(2)^1)", ol2))
    ol3, _, _ = subspace_ortholattice(GF(3), 2)
    out.append(("Lat(GF(3)^2)", ol3))
    return out


def space_catalog():
    return [
        ("Q^2 dot", validate_space(QQ, 2, Matrix.identity(QQ, 2))),
        ("Q^2 diag(1,2)", validate_space(QQ, 2, Matrix.diagonal(QQ, [1, 2]))),
        ("Q^3 dot", validate_space(QQ, 3, Matrix.identity(QQ, 3))),
        ("GF(3)^2", validate_space(GF(3), 2, Matrix.identity(GF(3), 2))),
    ]


def _orthogonal_q():
    return Matrix(QQ, [[Fraction(3, 5), Fraction(4, 5), 0],
                       [Fraction(-4, 5), Fraction(3, 5), 0],
                       [0, 0, 1]])


# --------------------------------------------------------------- criteria

def criterion_1(seed=0):
    """Axiom suites: every catalog structure passes its validator."""
    count = 0
    for name, ol in modular_ortholattice_catalog():
        ok, w = is_modular(ol.base)
        if not ok:
            raise AssertionError(f"{name} not modular: {w}")
        count += 1
    for name, _space in space_catalog():
        count += 1  # validate_space already ran
    for ring in (matrix_star_ring(QQ, 2), matrix_star_ring(QQ, 3)):
        ok, w = is_star_regular(ring)
        if not ok:
            raise AssertionError(f"{ring!r} not star-regular: {w}")
        count += 1
    finite_matrix_ring(2, 2)          # table validation runs in the builder
    count += 1
    product_ring(field_table_ring(2), finite_matrix_ring(2, 2))
    count += 1
    return f"{count} structures validated"


def criterion_2(seed=0):
    """Orthogonal semiframes from every catalog skew 2-frame."""
    built = 0
    found_in = []
    for name, ol in modular_ortholattice_catalog():
        w = search_frame(ol, "skew", 2)
        if w is None:
            continue
        sf = build_orthogonal_semiframe(ol, w)
        rep = verify_frame(ol, sf)
        if not rep.valid:
            raise AssertionError(f"{name}: semiframe invalid: {rep.violations}")
        built += 1
        found_in.append(name)
    for must in ("MO_2", "MO_3", "Lat(GF(3)^2)"):
        if must not in found_in:
            raise AssertionError(f"no skew 2-frame found in {must}")
    return f"semiframes built in: {', '.join(found_in)}"


def criterion_3(seed=0):
    """Congruence/ideal correspondence on honest finite enumerations."""
    m2 = finite_matrix_ring(2, 2)
    r1 = fact3_check(m2)
    if not (r1.ok and r1.n_ideals == 2 and r1.n_congruences == 2):
        raise AssertionError(f"M_2(GF(2)): {r1!r}")
    prod = product_ring(field_table_ring(2), finite_matrix_ring(2, 2))
    r2 = fact3_check(prod)
    if not (r2.ok and r2.n_ideals == 4 and r2.n_congruences == 4):
        raise AssertionError(f"GF(2) x M_2(GF(2)): {r2!r}")
    return "2 <-> 2 and 4 <-> 4 isomorphisms verified"


def criterion_4(seed=0):
    """Projection verdicts coincide on 200 seeded random idempotents."""
    rng = random.Random(seed)
    total = 0
    for dim in (2, 3):
        space = validate_space(QQ, dim, Matrix.identity(QQ, dim))
        for _ in range(100):
            s = _random_invertible_q(rng, dim)
            sinv = _inv(s)
            d = Matrix.diagonal(QQ, [rng.randint(0, 1) for _ in range(dim)])
            phi = s @ d @ sinv
            a, b = fact9_check(space, phi)
            if a != b:
                raise AssertionError(f"verdicts differ for {phi!r}")
            total += 1
    return f"{total} idempotents, verdicts always coincide"


def criterion_5(seed=0):
    """Adjointness vs orthogonality equivalence, positives and negatives."""
    rng = random.Random(seed)
    checked = 0
    for name, space in space_catalog()[:3]:
        for _ in range(100):
            u, w = _random_orthogonal_pair(rng, space)
            pi_u = ortho_projection(space, u)
            pi_w = ortho_projection(space, w)
            m = _random_matrix_q(rng, space.dim)
            phi = pi_w @ m @ pi_u
            psi = adjoint(space, phi)
            s1, s2 = claim1_test(space, u, w, phi, psi)
            if not (s1 and s2):
                raise AssertionError(f"{name}: positive pair rejected")
            # perturbed negative: add a nonzero sandwiched offset
            offset = None
            for _try in range(20):
                cand = pi_u @ _random_matrix_q(rng, space.dim) @ pi_w
                if not cand.is_zero():
                    offset = cand
                    break
            if offset is not None:
                s1n, s2n = claim1_test(space, u, w, phi, psi + offset)
                if s1n or s2n:
                    raise AssertionError(f"{name}: negative pair accepted")
            checked += 1
    return f"{checked} sandwiched pairs, equivalence held throughout"


def criterion_6(seed=0):
    """Every congruence of every catalog modular ortholattice respects
    the orthocomplement."""
    total = 0
    for name, ol in modular_ortholattice_catalog():
        for theta in congruences(ol.base):
            if not check_congruence_perp(ol, theta):
                raise AssertionError(f"{name}: congruence ignores perp")
            total += 1
    return f"{total} congruences checked"


def criterion_7(seed=0):
    """Adjoint recovery end to end, plus the shear rejection."""
    m2 = matrix_star_ring(QQ, 2)
    v2 = validate_space(QQ, 2, Matrix.identity(QQ, 2))
    r = recover_adjoints(RingRep.identity(m2, v2),
                         canonical_ring_semiframe(m2))
    if not r.ok:
        raise AssertionError(f"M_2(Q) identity: {r.violations}")
    m3 = matrix_star_ring(QQ, 3)
    v3 = validate_space(QQ, 3, Matrix.identity(QQ, 3))
    r = recover_adjoints(RingRep.identity(m3, v3),
                         canonical_ring_semiframe(m3))
    if not r.ok:
        raise AssertionError(f"M_3(Q) identity: {r.violations}")
    r = recover_adjoints(RingRep.conjugation(m3, v3, _orthogonal_q()),
                         canonical_ring_semiframe(m3))
    if not r.ok:
        raise AssertionError(f"M_3(Q) orthogonal conjugation: {r.violations}")
    shear = RingRep.conjugation(m2, v2, Matrix(QQ, [[1, 1], [0, 1]]))
    try:
        recover_adjoints(shear, canonical_ring_semiframe(m2))
    except PerpViolation:
        return "three star-representations verified; shear rejected"
    raise AssertionError("the shear conjugation was not rejected")


def criterion_8(seed=0):
    """Restricted end-to-end pipeline over Q and the GF(3) lattice half."""
    rng = random.Random(seed)
    q = _orthogonal_q()
    qinv = _inv(q)
    m3 = matrix_star_ring(QQ, 3)
    v3 = validate_space(QQ, 3, Matrix.identity(QQ, 3))
    bundle = ring_embedding_from_ortho_rep(m3, EtaMap.from_matrix(q),
                                           space=v3, rng=rng)
    if not bundle.star_verified:
        raise AssertionError("star stage failed")
    for i in range(3):
        for j in range(3):
            if bundle.rep.images[(0, i, j)] != q @ Matrix.unit(QQ, 3, i, j) @ qinv:
                raise AssertionError(f"unit ({i},{j}) is not the conjugation")
    for _ in range(50):
        a = m3.sample(rng)
        m = bundle.rep.iota(a)
        if image(m) != Subspace(QQ, 3, (q @ a.h[0]).transpose()):
            raise AssertionError("image identity failed on a sample")
        if bundle.rep.iota(a.star()) != adjoint(v3, m):
            raise AssertionError("adjoint identity failed on a sample")
    # lattice half over GF(3): exhaustive against the 28-subspace lattice
    g3 = GF(3)
    m3gf3 = matrix_ring(g3, 3)
    bundle3 = ring_embedding_from_ortho_rep(
        m3gf3, EtaMap.from_matrix(Matrix.identity(g3, 3)), rng=rng)
    if not bundle3.reports["image"].ok:
        raise AssertionError("GF(3) lattice half failed")
    base = lat_of(m3gf3)
    if base.lattice.n != 28:
        raise AssertionError(f"expected 28 ideals, got {base.lattice.n}")
    for tag, gen in zip(base.tags, base.generators):
        if image(bundle3.rep.iota(gen)) != tag[0]:
            raise AssertionError("image identity failed exhaustively")
    return "conjugation reproduced; 50 samples; 28 ideals matched exactly"


def criterion_9(seed=0):
    """Coordinatization over GF(3)^3 against all 28 subspaces."""
    rng = random.Random(seed)
    g3 = GF(3)
    subs = all_subspaces(g3, 3)
    if len(subs) != 28:
        raise AssertionError(f"expected 28 subspaces, got {len(subs)}")
    frame = canonical_frame(3, (g3, 3))
    coord = coordinatize(g3, 3, subs, frame, rng=rng, samples=30)
    # rank classification: omega must hit 1 + 13 + 13 + 1 subspaces by dim
    from .linalg import column_space
    tags = all_subspaces(g3, 3)
    by_dim = {0: 0, 1: 0, 2: 0, 3: 0}
    for t in tags:
        w = coord.omega(t)
        if w.dim() != t.dim():
            raise AssertionError("omega changes dimension")
        by_dim[w.dim()] += 1
    if by_dim != {0: 1, 1: 13, 2: 13, 3: 1}:
        raise AssertionError(f"rank census wrong: {by_dim}")
    for _ in range(30):
        lam = Matrix(g3, [[rng.randrange(3) for _ in range(3)]
                          for _ in range(3)])
        phi = coord.element(lam)
        if image(phi) != coord.omega(Subspace(g3, 3, column_space(lam))):
            raise AssertionError("omega disagrees with an image")
    return "bijection onto 28 subspaces; 30 samples; rank census 1/13/13/1"


# ----------------------------------------------------------------- helpers

def _random_matrix_q(rng, n):
    return Matrix(QQ, [[Fraction(rng.randint(-4, 4)) for _ in range(n)]
                       for _ in range(n)])


def _random_invertible_q(rng, n):
    while True:
        m = _random_matrix_q(rng, n)
        if _inv(m) is not None:
            return m


def _inv(m):
    from .linalg import inverse
    return inverse(m)


def _random_orthogonal_pair(rng, space):
    """Two orthogonal subspaces, the first spanned by a random vector."""
    from .spaces import orthogonal
    while True:
        v = [Fraction(rng.randint(-3, 3)) for _ in range(space.dim)]
        if any(x != 0 for x in v):
            break
    u = Subspace.from_vectors(QQ, space.dim, [v])
    perp = orthogonal(space, u)
    keep = rng.randint(1, perp.dim()) if perp.dim() > 0 else 0
    rows = list(perp.basis.rows)[:keep]
    w = Subspace(QQ, space.dim,
                 Matrix(QQ, rows, ncols=space.dim))
    return u, w


CRITERIA = [
    (1, "axiom suites on the catalog", criterion_1),
    (2, "orthogonal semiframe construction", criterion_2),
    (3, "congruence/ideal correspondence", criterion_3),
    (4, "projection characterization (200 idempotents)", criterion_4),
    (5, "adjointness vs orthogonality equivalence", criterion_5),
    (6, "congruences respect the orthocomplement", criterion_6),
    (7, "adjoint recovery end to end", criterion_7),
    (8, "restricted representation pipeline", criterion_8),
    (9, "frame coordinatization over GF(3)^3", criterion_9),
]

TIME_BOUNDS = {1: 5.0, 2: 10.0, 3: 30.0, 4: 10.0, 5: 10.0, 6: 20.0,
               7: 15.0, 8: 30.0, 9: 30.0}


def run_all(seed=0):
    return [_timed(idx, name, fn, seed) for idx, name, fn in CRITERIA]
