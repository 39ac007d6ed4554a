import itertools

import pytest

from orthorep.errors import NoBounds, NotALattice, TooLarge
from orthorep.lattice import (Congruence, complements, congruence_lattice,
                              congruences, height, height_of, independent,
                              is_complemented, is_congruence, is_modular,
                              is_simple_lattice, is_subdirectly_irreducible,
                              perspectivity_axes, sub_perspective,
                              validate_lattice)
from orthorep.models import (boolean_lattice, chain_lattice, mo_n,
                             product_lattice)

MO2_COVERS = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 5), (3, 5), (4, 5)]


def mo2_lattice():
    return validate_lattice(n=6, covers=MO2_COVERS)


def n5_lattice():
    # 0 < a < c < 1 on one side, 0 < b < 1 on the other
    return validate_lattice(n=5, covers=[(0, 1), (1, 3), (3, 4), (0, 2),
                                         (2, 4)])


# ------------------------------------------------------------- validation

def test_two_chain():
    lat = validate_lattice(n=2, covers=[(0, 1)])
    assert lat.meet[0][1] == 0 and lat.join[0][1] == 1


def test_mo2_from_covers():
    lat = mo2_lattice()
    assert lat.n == 6 and lat.bot == 0 and lat.top == 5
    # oracle: pairwise inf/sup of distinct atoms by brute force
    for a, b in itertools.combinations(range(1, 5), 2):
        lower = [x for x in range(6) if lat.leq[x][a] and lat.leq[x][b]]
        assert max(lower, key=lambda x: sum(lat.leq[y][x] for y in lower)) == 0
        assert lat.meet[a][b] == 0 and lat.join[a][b] == 5


def test_no_bounds():
    with pytest.raises(NoBounds):
        validate_lattice(n=3, covers=[(0, 1), (0, 2)])


def test_cycle_rejected():
    with pytest.raises(NotALattice):
        validate_lattice(n=3, leq=[[1, 1, 0], [1, 1, 0], [1, 1, 1]])


def test_not_a_lattice_missing_sup():
    # two incomparable tops over two incomparable bottoms: no unique inf
    with pytest.raises((NotALattice, NoBounds)):
        validate_lattice(n=4, covers=[(0, 2), (0, 3), (1, 2), (1, 3)])


# -------------------------------------------------------------- modularity

def test_mo2_modular():
    ok, w = is_modular(mo2_lattice())
    assert ok and w is None


def test_pentagon_not_modular_with_witness():
    lat = n5_lattice()
    ok, w = is_modular(lat)
    assert not ok
    a, b, c = w
    assert lat.leq[a][b]
    assert lat.join[a][lat.meet[c][b]] != lat.meet[lat.join[a][c]][b]


def test_chains_modular():
    for n in (1, 2, 5):
        assert is_modular(chain_lattice(n))[0]


def _has_pentagon_sublattice(lat):
    """Independent oracle: search for an N5 sublattice directly."""
    n = lat.n
    for a in range(n):
        for c in range(n):
            if a == c or not lat.leq[a][c]:
                continue
            for b in range(n):
                if b in (a, c):
                    continue
                if (lat.join[a][b] == lat.join[c][b]
                        and lat.meet[a][b] == lat.meet[c][b]
                        and len({lat.meet[a][b], a, b, c,
                                 lat.join[a][b]}) == 5):
                    return True
    return False


@pytest.mark.parametrize("builder", [
    mo2_lattice, n5_lattice,
    lambda: chain_lattice(4),
    lambda: boolean_lattice(3),
    lambda: mo_n(3).base,
    lambda: product_lattice(chain_lattice(2), chain_lattice(3)),
])
def test_modularity_agrees_with_pentagon_search(builder):
    lat = builder()
    assert is_modular(lat)[0] == (not _has_pentagon_sublattice(lat))


# ------------------------------------------------------------- complements

def test_complements_mo2():
    lat = mo2_lattice()
    assert complements(lat, 1) == [2, 3, 4]
    assert complements(lat, lat.top) == [0]
    assert is_complemented(lat)


def test_chain_middle_has_no_complement():
    lat = chain_lattice(3)
    assert complements(lat, 1) == []
    assert not is_complemented(lat)


# ------------------------------------------------------------------ height

def test_heights():
    assert height(mo2_lattice()) == 2
    assert height(boolean_lattice(3)) == 3
    assert height(chain_lattice(1)) == 0
    lat = mo2_lattice()
    assert height_of(lat, 3) == 1


# ---------------------------------------------------------- perspectivity

def test_axes_in_mo2():
    lat = mo2_lattice()
    assert perspectivity_axes(lat, 1, 2) == [3, 4]
    assert 0 in perspectivity_axes(lat, 1, 1)  # a ~_bot a


def test_boolean_atoms_not_perspective():
    lat = boolean_lattice(2)
    atoms = [1, 2]
    assert perspectivity_axes(lat, atoms[0], atoms[1]) == []


def test_sub_perspective_search():
    lat = mo2_lattice()
    got = sub_perspective(lat, 1, 2)
    assert got == (2, 3)


@pytest.mark.parametrize("builder", [
    mo2_lattice, lambda: mo_n(3).base, lambda: boolean_lattice(3),
])
def test_sub_perspective_property_exhaustive(builder):
    """Whenever a' <= a ~ b, the returned partner b' <= b satisfies
    a' ~ b' (modular lattices)."""
    lat = builder()
    if not is_modular(lat)[0]:
        return
    for a in range(lat.n):
        for b in range(lat.n):
            if not perspectivity_axes(lat, a, b):
                continue
            for a1 in range(lat.n):
                if not lat.leq[a1][a]:
                    continue
                got = sub_perspective(lat, a1, b)
                assert got is not None
                b1, axis = got
                assert lat.leq[b1][b]
                assert axis in perspectivity_axes(lat, a1, b1)


def test_independence_incremental():
    lat = mo2_lattice()
    assert independent(lat, [1, 2])
    assert not independent(lat, [1, 1])
    assert independent(lat, [0, 1])


# -------------------------------------------------------------- congruences

def _all_partitions(xs):
    if not xs:
        yield []
        return
    first, rest = xs[0], xs[1:]
    for part in _all_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def _congruences_brute_force(lat):
    out = []
    for part in _all_partitions(list(range(lat.n))):
        c = Congruence.from_blocks(lat.n, part)
        if is_congruence(lat, c):
            out.append(c)
    return out


@pytest.mark.parametrize("builder,expected", [
    (mo2_lattice, 2),
    (lambda: product_lattice(chain_lattice(2), chain_lattice(2)), 4),
    (lambda: chain_lattice(1), 1),
    (lambda: chain_lattice(3), 4),
])
def test_congruence_counts_against_partition_oracle(builder, expected):
    lat = builder()
    assert len(congruences(lat)) == expected
    assert len(_congruences_brute_force(lat)) == expected


def test_congruence_lattice_is_lattice():
    lat = product_lattice(chain_lattice(2), chain_lattice(2))
    conlat, cons = congruence_lattice(lat)
    assert conlat.n == len(cons) == 4


def test_congruence_product_rule():
    l1 = mo2_lattice()
    l2 = chain_lattice(2)
    prod = product_lattice(l1, l2)
    assert len(congruences(prod)) == \
        len(congruences(l1)) * len(congruences(l2))


def test_simple_and_si():
    assert is_simple_lattice(mo2_lattice())
    assert is_subdirectly_irreducible(mo2_lattice())
    sq = product_lattice(chain_lattice(2), chain_lattice(2))
    assert not is_simple_lattice(sq)
    assert not is_subdirectly_irreducible(sq)


def test_congruence_guard(monkeypatch):
    big = boolean_lattice(3)
    monkeypatch.setenv("ORTHO_COORD_GUARD", "4")
    with pytest.raises(TooLarge):
        congruences(big)
    monkeypatch.delenv("ORTHO_COORD_GUARD")
    assert congruences(big)


# ---------------------------------------------- table sanity on the catalog

@pytest.mark.parametrize("builder", [
    mo2_lattice, lambda: mo_n(4).base, lambda: boolean_lattice(4),
    lambda: chain_lattice(5),
])
def test_meet_join_identities_exhaustive(builder):
    lat = builder()
    for a in range(lat.n):
        for b in range(lat.n):
            assert lat.meet[a][b] == lat.meet[b][a]
            assert lat.join[a][b] == lat.join[b][a]
            assert lat.join[a][lat.meet[a][b]] == a
            assert lat.meet[a][lat.join[a][b]] == a
            for c in range(lat.n):
                assert lat.meet[lat.meet[a][b]][c] == lat.meet[a][lat.meet[b][c]]
                assert lat.join[lat.join[a][b]][c] == lat.join[a][lat.join[b][c]]
