"""Finite lattices as explicit order and meet/join tables.

Elements are integers 0..n-1.  Construction cross-checks that the meet
and join tables really are infima and suprema of the order relation, so
everything downstream can trust the tables blindly.
"""

import os

from .errors import NoBounds, NotALattice, TooLarge

DEFAULT_CONGRUENCE_GUARD = 24
DEFAULT_SEARCH_GUARD = 64


def enumeration_guard(default):
    """Guard size for exhaustive enumerations; ORTHO_COORD_GUARD overrides."""
    v = os.environ.get("ORTHO_COORD_GUARD")
    if v:
        return int(v)
    return default


class FiniteLattice:
    """Immutable finite lattice: order matrix plus meet/join tables."""

    __slots__ = ("n", "leq", "meet", "join", "bot", "top")

    def __init__(self, n, leq, meet, join, bot, top):
        self.n = n
        self.leq = leq
        self.meet = meet
        self.join = join
        self.bot = bot
        self.top = top

    def elements(self):
        return range(self.n)

    def le(self, a, b):
        return self.leq[a][b]

    def mt(self, a, b):
        return self.meet[a][b]

    def jn(self, a, b):
        return self.join[a][b]

    def join_all(self, xs):
        acc = self.bot
        for x in xs:
            acc = self.join[acc][x]
        return acc

    def meet_all(self, xs):
        acc = self.top
        for x in xs:
            acc = self.meet[acc][x]
        return acc

    def downset(self, a):
        return [x for x in range(self.n) if self.leq[x][a]]

    def covers(self):
        """Cover pairs (a, b) with a < b and nothing strictly between."""
        out = []
        for a in range(self.n):
            for b in range(self.n):
                if a != b and self.leq[a][b]:
                    if not any(c != a and c != b and self.leq[a][c]
                               and self.leq[c][b] for c in range(self.n)):
                        out.append((a, b))
        return out

    def __repr__(self):
        return f"FiniteLattice(n={self.n})"


def _transitive_reflexive_closure(n, pairs):
    leq = [[False] * n for _ in range(n)]
    for i in range(n):
        leq[i][i] = True
    for lo, hi in pairs:
        leq[lo][hi] = True
    for k in range(n):
        for i in range(n):
            if leq[i][k]:
                row_k = leq[k]
                row_i = leq[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return leq


def validate_lattice(n=None, covers=None, leq=None, raw=None):
    """Build a checked FiniteLattice from covers or an order relation.

    Accepts either explicit arguments or a dict ``raw`` with keys
    "n" and one of "covers" / "leq".  Raises NotALattice when a pair
    lacks a unique infimum or supremum, NoBounds when there is no
    unique top/bottom element.
    """
    if raw is not None:
        n = raw["n"]
        covers = raw.get("covers")
        leq = raw.get("leq")
    if n is None or n < 1:
        raise NoBounds("a lattice needs at least one element")
    if leq is None:
        if covers is None:
            raise ValueError("need covers or leq")
        for lo, hi in covers:
            if not (0 <= lo < n and 0 <= hi < n):
                raise ValueError(f"cover ({lo},{hi}) out of range")
        leq = _transitive_reflexive_closure(n, covers)
    else:
        leq = [[bool(x) for x in row] for row in leq]
        for i in range(n):
            if not leq[i][i]:
                leq[i][i] = True
        leq = _transitive_reflexive_closure(
            n, [(i, j) for i in range(n) for j in range(n) if leq[i][j]])
    # antisymmetry
    for a in range(n):
        for b in range(a + 1, n):
            if leq[a][b] and leq[b][a]:
                raise NotALattice(a, b, what="order (cycle)")
    bots = [x for x in range(n) if all(leq[x][y] for y in range(n))]
    tops = [x for x in range(n) if all(leq[y][x] for y in range(n))]
    if len(bots) != 1 or len(tops) != 1:
        raise NoBounds(f"bottoms={bots}, tops={tops}")
    bot, top = bots[0], tops[0]

    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            lower = [x for x in range(n) if leq[x][a] and leq[x][b]]
            glb = [x for x in lower if all(leq[y][x] for y in lower)]
            if len(glb) != 1:
                raise NotALattice(a, b, what="infimum")
            meet[a][b] = glb[0]
            upper = [x for x in range(n) if leq[a][x] and leq[b][x]]
            lub = [x for x in upper if all(leq[x][y] for y in upper)]
            if len(lub) != 1:
                raise NotALattice(a, b, what="supremum")
            join[a][b] = lub[0]
    return FiniteLattice(n,
                         tuple(tuple(r) for r in leq),
                         tuple(tuple(r) for r in meet),
                         tuple(tuple(r) for r in join),
                         bot, top)


def lattice_from_tables(n, meet, join):
    """Rebuild a checked lattice from raw meet/join tables."""
    leq = [[meet[a][b] == a for b in range(n)] for a in range(n)]
    return validate_lattice(n=n, leq=leq)


# --------------------------------------------------------------- predicates

def is_modular(lat):
    """(verdict, witness): witness is a violating triple (a, b, c) or None."""
    for a in range(lat.n):
        for b in range(lat.n):
            if not lat.leq[a][b]:
                continue
            for c in range(lat.n):
                left = lat.join[a][lat.meet[c][b]]
                right = lat.meet[lat.join[a][c]][b]
                if left != right:
                    return False, (a, b, c)
    return True, None


def complements(lat, a):
    """All b with a join b = top and a meet b = bot."""
    return [b for b in range(lat.n)
            if lat.join[a][b] == lat.top and lat.meet[a][b] == lat.bot]


def is_complemented(lat):
    return all(complements(lat, a) for a in range(lat.n))


def height_of(lat, a):
    """Length of the longest chain from bot to a, on the cover DAG."""
    memo = {lat.bot: 0}
    order = sorted(range(lat.n), key=lambda x: sum(lat.leq[y][x]
                                                   for y in range(lat.n)))
    cover_below = {x: [] for x in range(lat.n)}
    for lo, hi in lat.covers():
        cover_below[hi].append(lo)
    for x in order:
        if x == lat.bot:
            continue
        memo[x] = 1 + max(memo[y] for y in cover_below[x])
    return memo[a]


def height(lat):
    return height_of(lat, lat.top)


# ------------------------------------------------------------ perspectivity

def perspectivity_axes(lat, a, b):
    """All common complements of a and b inside [bot, a+b]."""
    ab = lat.join[a][b]
    return [c for c in range(lat.n)
            if lat.join[a][c] == ab and lat.join[b][c] == ab
            and lat.meet[a][c] == lat.bot and lat.meet[b][c] == lat.bot]


def are_perspective(lat, a, b):
    return bool(perspectivity_axes(lat, a, b))


def sub_perspective(lat, a1, b):
    """Least b1 <= b with a1 perspective to b1, plus the least axis.

    Exists whenever a1 <= a for some a perspective to b and the lattice
    is modular; returns None when the search fails.
    """
    for b1 in range(lat.n):
        if not lat.leq[b1][b]:
            continue
        axes = perspectivity_axes(lat, a1, b1)
        if axes:
            return b1, axes[0]
    return None


def independent(lat, parts):
    """Incremental independence: each part meets the join of its
    predecessors at bot.  Equivalent to full independence in modular
    lattices."""
    acc = lat.bot
    for p in parts:
        if lat.meet[p][acc] != lat.bot:
            return False
        acc = lat.join[acc][p]
    return True


# -------------------------------------------------------------- congruences

class Congruence:
    """Partition of the element set, canonically stored as a leader tuple
    (each element mapped to the least element of its block)."""

    __slots__ = ("leader",)

    def __init__(self, leader):
        self.leader = tuple(leader)

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def indiscrete(cls, n):
        return cls([0] * n)

    @classmethod
    def from_blocks(cls, n, blocks):
        leader = [None] * n
        for blk in blocks:
            m = min(blk)
            for x in blk:
                leader[x] = m
        if any(v is None for v in leader):
            raise ValueError("blocks do not cover the element set")
        return cls(leader)

    def blocks(self):
        out = {}
        for x, l in enumerate(self.leader):
            out.setdefault(l, []).append(x)
        return [tuple(v) for _, v in sorted(out.items())]

    def same(self, a, b):
        return self.leader[a] == self.leader[b]

    def n_blocks(self):
        return len(set(self.leader))

    def refines(self, other):
        """True iff every block of self lies inside a block of other."""
        n = len(self.leader)
        return all(other.leader[a] == other.leader[self.leader[a]]
                   for a in range(n))

    def __eq__(self, other):
        return isinstance(other, Congruence) and self.leader == other.leader

    def __hash__(self):
        return hash(self.leader)

    def __repr__(self):
        return f"Congruence{self.blocks()}"


def is_congruence(lat, part):
    """Block-wise substitution test for meet and join."""
    n = lat.n
    for a in range(n):
        for b in range(n):
            if part.leader[a] != part.leader[b]:
                continue
            for c in range(n):
                if part.leader[lat.meet[a][c]] != part.leader[lat.meet[b][c]]:
                    return False
                if part.leader[lat.join[a][c]] != part.leader[lat.join[b][c]]:
                    return False
    return True


def congruence_closure(lat, pairs):
    """Smallest congruence containing all given element pairs."""
    n = lat.n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        if ry < rx:
            rx, ry = ry, rx
        parent[ry] = rx
        return True

    work = [(a, b) for a, b in pairs if union(a, b)]
    while work:
        a, b = work.pop()
        for c in range(n):
            for x, y in ((lat.meet[a][c], lat.meet[b][c]),
                         (lat.join[a][c], lat.join[b][c])):
                if union(x, y):
                    work.append((x, y))
    leader = [0] * n
    # canonicalize: leader = min of class
    cls = {}
    for x in range(n):
        cls.setdefault(find(x), []).append(x)
    for members in cls.values():
        m = min(members)
        for x in members:
            leader[x] = m
    return Congruence(leader)


def principal_congruence(lat, a, b):
    return congruence_closure(lat, [(a, b)])


def congruence_join(lat, c1, c2):
    pairs = [(x, c1.leader[x]) for x in range(lat.n)]
    pairs += [(x, c2.leader[x]) for x in range(lat.n)]
    return congruence_closure(lat, pairs)


def congruences(lat, guard=None):
    """All congruences, via principal congruences and join closure."""
    limit = enumeration_guard(DEFAULT_CONGRUENCE_GUARD if guard is None
                              else guard)
    if lat.n > limit:
        raise TooLarge(lat.n, limit)
    found = {Congruence.identity(lat.n)}
    principals = set()
    for a in range(lat.n):
        for b in range(a + 1, lat.n):
            principals.add(principal_congruence(lat, a, b))
    found |= principals
    frontier = set(found)
    while frontier:
        fresh = set()
        for c in frontier:
            for p in principals:
                j = congruence_join(lat, c, p)
                if j not in found:
                    fresh.add(j)
        found |= fresh
        frontier = fresh
    return sorted(found, key=lambda c: c.leader)


def congruence_lattice(lat, guard=None):
    """The congruences ordered by refinement, as a checked FiniteLattice.

    Returns (lattice, list of congruences) with indices aligned.
    """
    cons = congruences(lat, guard=guard)
    m = len(cons)
    leq = [[cons[i].refines(cons[j]) for j in range(m)] for i in range(m)]
    return validate_lattice(n=m, leq=leq), cons


def is_simple_lattice(lat, guard=None):
    return len(congruences(lat, guard=guard)) == 2


def is_subdirectly_irreducible(lat, guard=None):
    """True iff there is a unique minimal nontrivial congruence."""
    cons = congruences(lat, guard=guard)
    ident = Congruence.identity(lat.n)
    nontrivial = [c for c in cons if c != ident]
    minimal = [c for c in nontrivial
               if not any(d != c and d.refines(c) for d in nontrivial)]
    return len(minimal) == 1
