"""Frames, semiframes, and the orthogonal-semiframe construction.

Three frame notions live here:

* large partial n-frame: a spanning family a_0..a_{m-1}, a_0 nonzero,
  the first n independent, each later part perspective (via a given
  axis) to a part of a_0, with full partners for indices below n;
* skew n-m-frame: additionally the whole family is independent;
* orthogonal semiframe: an independent spanning family where every part
  has an orthogonal perspective partner.

Frames are verified against explicit witnesses.  The constructions run
either on finite ortholattice tables or symbolically on the subspace
ortholattice of an exact inner product space; a small context protocol
hides the difference.
"""

from dataclasses import dataclass

from .errors import InternalProofViolation, PreconditionFailed, TooLarge
from .lattice import (DEFAULT_SEARCH_GUARD, FiniteLattice, enumeration_guard,
                      is_modular, perspectivity_axes, sub_perspective)
from .linalg import Matrix, rank
from .ortho import OrthoLattice
from .spaces import IPSpace, Subspace, orthogonal


@dataclass(frozen=True)
class FrameWitness:
    """Certified frame data.  For large partial and skew frames the
    lists a0 (axes) and b (partners) are indexed by i = 1..m-1; for
    semiframes b and axes run parallel to a."""

    kind: str                    # "large_partial" | "skew" | "ortho_semiframe"
    n: int
    m: int
    a: tuple
    a0: tuple = ()
    b: tuple = ()
    axes: tuple = ()

    @property
    def k(self):
        return len(self.a)


@dataclass
class FrameReport:
    kind: str
    violations: list

    @property
    def valid(self):
        return not self.violations


# ---------------------------------------------------------------- contexts

class TableContext:
    """Frame operations over a finite (ortho)lattice given by tables."""

    def __init__(self, lattice):
        if isinstance(lattice, OrthoLattice):
            self.ortho = lattice
            self.lat = lattice.base
        elif isinstance(lattice, FiniteLattice):
            self.ortho = None
            self.lat = lattice
        else:
            raise TypeError(f"not a lattice: {lattice!r}")
        self.bot = self.lat.bot
        self.top = self.lat.top

    @property
    def has_perp(self):
        return self.ortho is not None

    def join(self, x, y):
        return self.lat.join[x][y]

    def meet(self, x, y):
        return self.lat.meet[x][y]

    def leq(self, x, y):
        return self.lat.leq[x][y]

    def eq(self, x, y):
        return x == y

    def perp(self, x):
        if self.ortho is None:
            raise PreconditionFailed("lattice has no orthocomplementation")
        return self.ortho.perp[x]

    def is_bot(self, x):
        return x == self.bot

    def elements(self):
        return range(self.lat.n)

    def size(self):
        return self.lat.n

    def is_modular(self):
        return is_modular(self.lat)[0]

    def is_axis(self, a, b, c):
        ab = self.join(a, b)
        return (self.join(a, c) == ab and self.join(b, c) == ab
                and self.meet(a, c) == self.bot
                and self.meet(b, c) == self.bot)

    def axes(self, a, b):
        return perspectivity_axes(self.lat, a, b)

    def are_perspective(self, a, b):
        ax = self.axes(a, b)
        return (True, ax[0]) if ax else (False, None)

    def sub_perspective(self, a1, b, axis_hint=None):
        """Least partner search; the hint is ignored for determinism."""
        return sub_perspective(self.lat, a1, b)

    def orthogonal_partner(self, a):
        """Least x orthogonal and perspective to a, with its least axis."""
        pa = self.perp(a)
        for x in self.elements():
            if self.leq(x, pa):
                ax = self.axes(a, x)
                if ax:
                    return x, ax[0]
        return None


class SubspaceContext:
    """Frame operations on the subspace ortholattice of an inner product
    space, computed symbolically (the lattice is never materialized)."""

    def __init__(self, space):
        if not isinstance(space, IPSpace):
            raise TypeError(f"not an inner product space: {space!r}")
        self.space = space
        self.bot = space.zero_subspace()
        self.top = space.full()

    has_perp = True

    def join(self, x, y):
        return x.add(y)

    def meet(self, x, y):
        return x.intersect(y)

    def leq(self, x, y):
        return y.contains(x)

    def eq(self, x, y):
        return x == y

    def perp(self, x):
        return orthogonal(self.space, x)

    def is_bot(self, x):
        return x.dim() == 0

    def elements(self):
        raise TooLarge("infinite carrier", "symbolic context")

    def is_modular(self):
        return True

    def is_axis(self, a, b, c):
        ab = a.add(b)
        return (a.add(c) == ab and b.add(c) == ab
                and a.intersect(c).dim() == 0 and b.intersect(c).dim() == 0)

    def are_perspective(self, u, w):
        """Equal-dimensional subspaces are perspective; the axis is the
        graph of a basis pairing that extends a basis of the meet."""
        if u.dim() != w.dim():
            return False, None
        if u.dim() == 0:
            return True, self.bot
        uext = self._extension_rows(u.intersect(w), u)
        wext = self._extension_rows(u.intersect(w), w)
        axis_rows = [tuple(x + y for x, y in zip(r, s))
                     for r, s in zip(uext, wext)]
        axis = Subspace(self.space.field, self.space.dim,
                        Matrix(self.space.field, axis_rows,
                               ncols=self.space.dim))
        if not self.is_axis(u, w, axis):
            return False, None
        return True, axis

    def _extension_rows(self, inner, outer):
        rows = list(inner.basis.rows)
        out = []
        for r in outer.basis.rows:
            if rows:
                m = Matrix(self.space.field, rows, ncols=self.space.dim)
                stacked = m.vstack(Matrix.row_vector(self.space.field,
                                                     list(r)))
                if rank(stacked) == len(rows):
                    continue
            out.append(r)
            rows.append(r)
        return out

    def sub_perspective(self, a1, b, axis_hint=None):
        """Constructive sub-perspectivity: with a1 <= a and a ~_c b, the
        element b1 = b meet (a1 + c) is perspective to a1 via the axis
        c meet (a1 + b1)."""
        if axis_hint is None:
            raise PreconditionFailed(
                "symbolic sub-perspectivity needs the ambient axis")
        b1 = self.meet(b, self.join(a1, axis_hint))
        axis = self.meet(axis_hint, self.join(a1, b1))
        if not self.is_axis(a1, b1, axis):
            return None
        return b1, axis

    def orthogonal_partner(self, a):
        """A subspace of perp(a) with the dimension of a, plus an axis."""
        pa = self.perp(a)
        k = a.dim()
        if pa.dim() < k:
            return None
        cand = Subspace(self.space.field, self.space.dim,
                        Matrix(self.space.field, pa.basis.rows[:k],
                               ncols=self.space.dim))
        ok, axis = self.are_perspective(a, cand)
        if not ok:
            return None
        return cand, axis


def as_context(obj):
    if isinstance(obj, (TableContext, SubspaceContext)):
        return obj
    if isinstance(obj, IPSpace):
        return SubspaceContext(obj)
    return TableContext(obj)


# ------------------------------------------------------------ verification

def _independent(ctx, parts):
    acc = ctx.bot
    for p in parts:
        if not ctx.is_bot(ctx.meet(p, acc)):
            return False
        acc = ctx.join(acc, p)
    return True


def _join_all(ctx, parts):
    acc = ctx.bot
    for p in parts:
        acc = ctx.join(acc, p)
    return acc


def verify_frame(lattice, witness):
    """Check every defining clause of the witness's kind; the report
    lists each violated clause."""
    ctx = as_context(lattice)
    w = witness
    bad = []
    if w.kind in ("large_partial", "skew"):
        n, m = w.n, w.m
        if len(w.a) != m:
            bad.append(f"expected {m} parts, got {len(w.a)}")
            return FrameReport(w.kind, bad)
        if m < n:
            bad.append(f"m = {m} < n = {n}")
        if not ctx.eq(_join_all(ctx, w.a), ctx.top):
            bad.append("parts do not join to the top")
        if ctx.is_bot(w.a[0]):
            bad.append("a_0 must be nonzero")
        if not _independent(ctx, w.a[:n]):
            bad.append(f"first {n} parts are not independent")
        if w.kind == "skew" and not _independent(ctx, w.a):
            bad.append("parts are not independent")
        if len(w.a0) != m - 1 or len(w.b) != m - 1:
            bad.append(f"need {m - 1} axes and partners, got "
                       f"{len(w.a0)} and {len(w.b)}")
        else:
            for i in range(1, m):
                ai, bi, ci = w.a[i], w.b[i - 1], w.a0[i - 1]
                if not ctx.leq(bi, w.a[0]):
                    bad.append(f"partner of part {i} not below a_0")
                if i < n and not ctx.eq(bi, w.a[0]):
                    bad.append(f"partner of part {i} must equal a_0")
                if not ctx.is_axis(ai, bi, ci):
                    bad.append(f"axis for part {i} is not a common complement")
    elif w.kind == "ortho_semiframe":
        k = len(w.a)
        if not ctx.eq(_join_all(ctx, w.a), ctx.top):
            bad.append("parts do not join to the top")
        if not _independent(ctx, w.a):
            bad.append("parts are not independent")
        if len(w.b) != k:
            bad.append(f"need {k} partners, got {len(w.b)}")
            return FrameReport(w.kind, bad)
        axes = w.axes if len(w.axes) == k else (None,) * k
        for i in range(k):
            ai, bi, ci = w.a[i], w.b[i], axes[i]
            if not ctx.leq(bi, ctx.perp(ai)):
                bad.append(f"partner of part {i} is not orthogonal to it")
            if ci is not None:
                if not ctx.is_axis(ai, bi, ci):
                    bad.append(f"axis for part {i} is not a common complement")
            else:
                ok, _ = ctx.are_perspective(ai, bi)
                if not ok:
                    bad.append(f"part {i} is not perspective to its partner")
    else:
        bad.append(f"unknown frame kind {w.kind!r}")
    return FrameReport(w.kind, bad)


# ----------------------------------------------------------------- search

def search_frame(lattice, kind, n, m=None, guard=None):
    """Deterministic backtracking search for a frame witness; finite
    lattices only.  Returns a verified witness or None."""
    ctx = as_context(lattice)
    if isinstance(ctx, SubspaceContext):
        raise TooLarge("symbolic", "frame search needs a finite lattice")
    limit = enumeration_guard(DEFAULT_SEARCH_GUARD if guard is None else guard)
    if ctx.size() > limit:
        raise TooLarge(ctx.size(), limit)
    m = n if m is None else m
    if kind in ("large_partial", "skew"):
        witness = _search_partial(ctx, kind, n, m)
    elif kind == "ortho_semiframe":
        witness = _search_semiframe(ctx, n)
    else:
        raise ValueError(f"unknown frame kind {kind!r}")
    if witness is not None:
        report = verify_frame(lattice, witness)
        if not report.valid:
            raise InternalProofViolation(
                f"search produced an invalid witness: {report.violations}")
    return witness


def _search_partial(ctx, kind, n, m):
    elems = list(ctx.elements())

    def extend(parts):
        idx = len(parts)
        if idx == m:
            if not ctx.eq(_join_all(ctx, parts), ctx.top):
                return None
            axes, partners = [], []
            for i in range(1, m):
                found = None
                targets = [parts[0]] if i < n else [
                    b for b in elems if ctx.leq(b, parts[0])]
                for b in targets:
                    ax = ctx.axes(parts[i], b)
                    if ax:
                        found = (ax[0], b)
                        break
                if found is None:
                    return None
                axes.append(found[0])
                partners.append(found[1])
            return FrameWitness(kind=kind, n=n, m=m, a=tuple(parts),
                                a0=tuple(axes), b=tuple(partners))
        for x in elems:
            if idx == 0 and ctx.is_bot(x):
                continue
            need_indep = (kind == "skew") or idx < n
            if need_indep:
                acc = _join_all(ctx, parts)
                if not ctx.is_bot(ctx.meet(x, acc)):
                    continue
            got = extend(parts + [x])
            if got is not None:
                return got
        return None

    return extend([])


def _search_semiframe(ctx, k):
    elems = list(ctx.elements())

    def extend(parts):
        if len(parts) == k:
            if not ctx.eq(_join_all(ctx, parts), ctx.top):
                return None
            partners, axes = [], []
            for a in parts:
                got = ctx.orthogonal_partner(a)
                if got is None:
                    return None
                partners.append(got[0])
                axes.append(got[1])
            return FrameWitness(kind="ortho_semiframe", n=k, m=k,
                                a=tuple(parts), b=tuple(partners),
                                axes=tuple(axes))
        for x in elems:
            acc = _join_all(ctx, parts)
            if not ctx.is_bot(ctx.meet(x, acc)):
                continue
            got = extend(parts + [x])
            if got is not None:
                return got
        return None

    return extend([])


# ----------------------------------------------------- the key construction

def lemma1_step(lattice, v, b):
    """From v + b = top (directly) and perp(v) meet b = bot, produce
    v' = v meet (perp(v) + b) with perp(v) perspective to v' via the
    axis b; v' <= v and v' is orthogonal to perp(v)."""
    ctx = as_context(lattice)
    if not (ctx.eq(ctx.join(v, b), ctx.top)
            and ctx.is_bot(ctx.meet(v, b))):
        raise PreconditionFailed("v and b are not complementary")
    f = ctx.perp(v)
    if not ctx.is_bot(ctx.meet(f, b)):
        raise PreconditionFailed("perp(v) meets b")
    vp = ctx.meet(v, ctx.join(f, b))
    if not ctx.is_axis(f, vp, b):
        raise InternalProofViolation(
            "perp(v) is not perspective to v' via b; input not modular?")
    return vp


def build_orthogonal_semiframe(lattice, skew):
    """Turn a skew 2-m-frame of a modular ortholattice into an
    orthogonal semiframe.

    Processes the frame's parts in order.  Each step splits the next
    part a against the join u of everything processed so far (inside
    the interval [0, u + a]): d = a meet perp(u) extends u orthogonally,
    b = a meet perp(d) complements the extension, and the relative
    orthocomplement f of u + d picks up a perspective partner through
    the lemma1_step identity.  Partners for the d-parts come from
    sub-perspectivity below the frame's own partner witnesses; the
    leading part is partnered last, by symmetry or search.  Every
    intermediate identity of the derivation is checked and a failure
    raises InternalProofViolation (it means a non-modular input slipped
    through validation).
    """
    ctx = as_context(lattice)
    if not ctx.has_perp:
        raise PreconditionFailed("an ortholattice is required")
    if skew.kind != "skew" or skew.n != 2:
        raise PreconditionFailed("a skew 2-m-frame witness is required")
    report = verify_frame(lattice, skew)
    if not report.valid:
        raise PreconditionFailed(f"witness invalid: {report.violations}")
    if not ctx.is_modular():
        raise PreconditionFailed("the ortholattice must be modular")

    def check(cond, what):
        if not cond:
            raise InternalProofViolation(f"identity failed: {what}")

    parts = [skew.a[0]]
    partners = [None]
    axes = [None]
    u = skew.a[0]
    for i in range(1, skew.m):
        a = skew.a[i]
        frame_partner = skew.b[i - 1]
        frame_axis = skew.a0[i - 1]
        w = ctx.join(u, a)
        check(ctx.is_bot(ctx.meet(u, a)), f"u meets part {i}")
        d = ctx.meet(a, ctx.perp(u))
        v = ctx.join(u, d)
        check(ctx.is_bot(ctx.meet(a, ctx.perp(v))), f"a meet perp(v), part {i}")
        b = ctx.meet(a, ctx.perp(d))
        check(ctx.eq(ctx.join(b, d), a) and ctx.is_bot(ctx.meet(b, d)),
              f"b + d = a split, part {i}")
        check(ctx.eq(ctx.join(v, b), w) and ctx.is_bot(ctx.meet(v, b)),
              f"v + b = w split, part {i}")
        f = ctx.meet(ctx.perp(v), w)
        check(ctx.is_bot(ctx.meet(f, b)), f"f meets b, part {i}")
        fp = ctx.meet(v, ctx.join(f, b))
        if not ctx.is_bot(f):
            check(ctx.is_axis(f, fp, b), f"f ~ f' via b, part {i}")
            check(ctx.leq(fp, ctx.perp(f)), f"f' orthogonal to f, part {i}")
            parts.append(f)
            partners.append(fp)
            axes.append(b)
        if not ctx.is_bot(d):
            got = ctx.sub_perspective(d, frame_partner, axis_hint=frame_axis)
            if got is None:
                raise InternalProofViolation(
                    f"no sub-perspective partner for the d-part of part {i}")
            dp, dax = got
            check(ctx.leq(dp, ctx.perp(d)), f"d' orthogonal to d, part {i}")
            parts.append(d)
            partners.append(dp)
            axes.append(dax)
        u = w
    check(ctx.eq(u, ctx.top), "parts join to the top")

    # leading part: reuse symmetry of perspectivity if some partner
    # equals a_0 exactly, otherwise search/construct one
    lead = parts[0]
    for j in range(1, len(parts)):
        if ctx.eq(partners[j], lead):
            partners[0] = parts[j]
            axes[0] = axes[j]
            break
    else:
        got = ctx.orthogonal_partner(lead)
        if got is None:
            raise InternalProofViolation(
                "no orthogonal perspective partner for the leading part")
        partners[0], axes[0] = got

    out = FrameWitness(kind="ortho_semiframe", n=len(parts), m=len(parts),
                       a=tuple(parts), b=tuple(partners), axes=tuple(axes))
    result = verify_frame(lattice, out)
    if not result.valid:
        raise InternalProofViolation(
            f"constructed semiframe fails verification: {result.violations}")
    return out
