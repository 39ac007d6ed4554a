"""Ortholattices: a finite lattice with an orthocomplementation map.

The validator checks all three axiom families exhaustively (involution,
order reversal, complementation), so downstream frame machinery can rely
on them.
"""

from .errors import (LibraryInconsistency, NotComplement, NotInvolution,
                     NotOrderReversing)
from .lattice import FiniteLattice, is_modular, validate_lattice


class OrthoLattice:
    __slots__ = ("base", "perp")

    def __init__(self, base, perp):
        self.base = base
        self.perp = tuple(perp)

    @property
    def n(self):
        return self.base.n

    @property
    def bot(self):
        return self.base.bot

    @property
    def top(self):
        return self.base.top

    def orthogonal(self, a, b):
        """a and b orthogonal: b below the orthocomplement of a."""
        return self.base.leq[b][self.perp[a]]

    def __repr__(self):
        return f"OrthoLattice(n={self.n})"


def validate_ortholattice(base, perp):
    """Check involution, order reversal and complementation exhaustively."""
    if isinstance(base, dict):
        perp = base["perp"]
        base = validate_lattice(raw=base)
    if len(perp) != base.n:
        raise ValueError("perp map has wrong length")
    perp = tuple(int(x) for x in perp)
    for a in range(base.n):
        if perp[perp[a]] != a:
            raise NotInvolution(a)
    for a in range(base.n):
        for b in range(base.n):
            if base.leq[a][b] and not base.leq[perp[b]][perp[a]]:
                raise NotOrderReversing(a, b)
    for a in range(base.n):
        if base.join[a][perp[a]] != base.top or base.meet[a][perp[a]] != base.bot:
            raise NotComplement(a)
    return OrthoLattice(base, perp)


def section(ol, u):
    """The interval [bot, u] as an ortholattice with perp a -> u meet perp(a).

    Returns (ortholattice, carrier) where carrier[i] is the element of
    the ambient lattice represented by local index i.
    """
    base = ol.base
    carrier = [x for x in range(base.n) if base.leq[x][u]]
    index = {x: i for i, x in enumerate(carrier)}
    m = len(carrier)
    leq = [[base.leq[carrier[i]][carrier[j]] for j in range(m)]
           for i in range(m)]
    sub = validate_lattice(n=m, leq=leq)
    perp = [index[base.meet[u][ol.perp[x]]] for x in carrier]
    return validate_ortholattice(sub, perp), carrier


def check_congruence_perp(ol, theta):
    """True iff the lattice congruence also respects the perp map.

    Must hold for every lattice congruence of a modular ortholattice;
    a failure there is a library-level inconsistency, not a verdict.
    """
    for a in range(ol.n):
        for b in range(ol.n):
            if theta.leader[a] == theta.leader[b]:
                if theta.leader[ol.perp[a]] != theta.leader[ol.perp[b]]:
                    if is_modular(ol.base)[0]:
                        raise LibraryInconsistency(
                            f"congruence ignores perp at pair ({a},{b}) "
                            "although the ortholattice is modular")
                    return False
    return True
