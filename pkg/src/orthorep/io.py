"""JSON (de)serialization for every structure the CLI exchanges.

Rationals travel as "p/q" strings (bit exact), finite field elements as
integer codes.  Frames serialize their elements as lattice indices or
as inline subspace objects, matching how the CLI references them.
"""

from .errors import OrthorepError
from .fields import (QQ, field_from_json, field_to_json, scalar_from_json,
                     scalar_to_json)
from .frames import FrameWitness
from .lattice import validate_lattice
from .linalg import Matrix
from .ortho import validate_ortholattice
from .rings import MatrixBlock, MatrixRing, TableRing
from .spaces import IPSpace, Subspace, validate_space


class MalformedInput(OrthorepError):
    pass


def _need(data, key, what):
    if key not in data:
        raise MalformedInput(f"{what}: missing key {key!r}")
    return data[key]


# ------------------------------------------------------------------ matrices

def matrix_to_json(m):
    return [[scalar_to_json(x) for x in row] for row in m.rows]


def matrix_from_json(field, rows, ncols=None):
    try:
        return Matrix(field, [[scalar_from_json(field, x) for x in row]
                              for row in rows], ncols=ncols)
    except (ValueError, TypeError) as ex:
        raise MalformedInput(f"bad matrix: {ex}")


# ------------------------------------------------------------------ lattices

def lattice_to_json(lat):
    return {"n": lat.n, "covers": [[lo, hi] for lo, hi in lat.covers()]}


def lattice_from_json(data):
    n = _need(data, "n", "lattice")
    if "covers" in data:
        return validate_lattice(n=n, covers=[tuple(c) for c in data["covers"]])
    if "leq" in data:
        return validate_lattice(n=n, leq=data["leq"])
    raise MalformedInput("lattice: need covers or leq")


def ortholattice_to_json(ol):
    out = lattice_to_json(ol.base)
    out["perp"] = list(ol.perp)
    return out


def ortholattice_from_json(data):
    base = lattice_from_json(data)
    return validate_ortholattice(base, _need(data, "perp", "ortholattice"))


# -------------------------------------------------------------------- frames

def frame_to_json(w, subspace_elements=False):
    def enc(x):
        if subspace_elements or isinstance(x, Subspace):
            return subspace_to_json(x)
        return x

    return {"kind": w.kind, "n": w.n, "m": w.m,
            "a": [enc(x) for x in w.a],
            "a0": [enc(x) for x in w.a0],
            "b": [enc(x) for x in w.b],
            "axes": [None if x is None else enc(x) for x in w.axes]}


def frame_from_json(data, subspaces=None, field=None, dim=None):
    """Frame elements are lattice indices, indices into a provided
    subspace list, or inline subspace objects."""

    def dec(x):
        if x is None:
            return None
        if isinstance(x, int):
            if subspaces is not None:
                return subspaces[x]
            return x
        if isinstance(x, dict):
            if field is None or dim is None:
                raise MalformedInput(
                    "inline subspaces need ambient field and dimension")
            return subspace_from_json(field, dim, x)
        raise MalformedInput(f"bad frame element {x!r}")

    kind = _need(data, "kind", "frame")
    a = tuple(dec(x) for x in _need(data, "a", "frame"))
    return FrameWitness(kind=kind,
                        n=int(data.get("n", len(a))),
                        m=int(data.get("m", len(a))),
                        a=a,
                        a0=tuple(dec(x) for x in data.get("a0", [])),
                        b=tuple(dec(x) for x in data.get("b", [])),
                        axes=tuple(dec(x) for x in data.get("axes", [])))


# -------------------------------------------------------------------- spaces

def space_to_json(space):
    return {"field": field_to_json(space.field), "dim": space.dim,
            "gram": matrix_to_json(space.gram), "sigma": space.sigma_name}


def space_from_json(data):
    field = field_from_json(_need(data, "field", "space"))
    dim = int(_need(data, "dim", "space"))
    gram = matrix_from_json(field, _need(data, "gram", "space"))
    return validate_space(field, dim, gram, data.get("sigma", "id"))


def subspace_to_json(sub):
    return {"basis": matrix_to_json(sub.basis), "ambient": sub.ambient}


def subspace_from_json(field, dim, data):
    rows = _need(data, "basis", "subspace")
    ambient = int(data.get("ambient", dim))
    return Subspace(field, ambient,
                    matrix_from_json(field, rows, ncols=ambient))


# --------------------------------------------------------------------- rings

def ring_to_json(ring):
    if isinstance(ring, TableRing):
        out = {"elements": list(ring.names),
               "add": [list(r) for r in ring.add],
               "mul": [list(r) for r in ring.mul],
               "one": ring.one_idx}
        if ring.star_map is not None:
            out["star"] = list(ring.star_map)
        return out
    return {"blocks": [{
        "field": field_to_json(b.field),
        "dim": b.dim,
        "gram": None if b.gram is None else matrix_to_json(b.gram),
        "sigma": b.sigma_name} for b in ring.blocks]}


def ring_from_json(data):
    if "blocks" in data:
        blocks = []
        for bd in data["blocks"]:
            field = field_from_json(_need(bd, "field", "ring block"))
            dim = int(_need(bd, "dim", "ring block"))
            gram = bd.get("gram")
            gram = None if gram is None else matrix_from_json(field, gram)
            blocks.append(MatrixBlock(field, dim, gram, bd.get("sigma", "id")))
        return MatrixRing(blocks)
    if "elements" in data:
        return TableRing(_need(data, "elements", "ring"),
                         _need(data, "add", "ring"),
                         _need(data, "mul", "ring"),
                         _need(data, "one", "ring"),
                         star=data.get("star"))
    raise MalformedInput("ring: need blocks or elements")


# ----------------------------------------------------------- representations

def rep_to_json(rep):
    from .rings import TableRing as TR
    out = {"ring": ring_to_json(rep.ring)}
    if rep.space is not None:
        out["space"] = space_to_json(rep.space)
    else:
        out["space"] = {"field": field_to_json(rep.field), "dim": rep.dim,
                        "gram": None}
    if isinstance(rep.ring, TR):
        out["images"] = {rep.ring.names[i]: matrix_to_json(m)
                         for i, m in rep.images.items()}
    else:
        out["images"] = {f"E{b}_{i}_{j}": matrix_to_json(m)
                         for (b, i, j), m in rep.images.items()}
    return out


def rep_from_json(data):
    from .reps import RingRep
    ring = ring_from_json(_need(data, "ring", "rep"))
    sdata = _need(data, "space", "rep")
    field = field_from_json(_need(sdata, "field", "space"))
    dim = int(_need(sdata, "dim", "space"))
    if sdata.get("gram") is not None:
        space = space_from_json(sdata)
    else:
        space = (field, dim)
    raw = _need(data, "images", "rep")
    images = {}
    if isinstance(ring, TableRing):
        name_index = {n: i for i, n in enumerate(ring.names)}
        for name, rows in raw.items():
            if name not in name_index:
                raise MalformedInput(f"rep: unknown element {name!r}")
            images[name_index[name]] = matrix_from_json(field, rows)
    else:
        for key, rows in raw.items():
            try:
                b, i, j = key.lstrip("E").split("_")
                images[(int(b), int(i), int(j))] = matrix_from_json(field, rows)
            except ValueError:
                raise MalformedInput(f"rep: bad image key {key!r}")
    return RingRep(ring, space, images)


def ring_element_to_json(a):
    if isinstance(a.h, int):
        return a.ring.names[a.h]
    return [matrix_to_json(m) for m in a.h]


def ring_element_from_json(ring, data):
    if isinstance(data, str):
        return ring.element(ring.names.index(data))
    mats = [matrix_from_json(blk.field, rows, ncols=blk.dim)
            for blk, rows in zip(ring.blocks, data)]
    return ring.element(mats)


def ring_semiframe_to_json(sf):
    return {"kind": sf.kind, "n": sf.n, "m": sf.m,
            "a": [ring_element_to_json(x) for x in sf.a],
            "b": [ring_element_to_json(x) for x in sf.b],
            "axes": [ring_element_to_json(x) for x in sf.axes]}


def ring_semiframe_from_json(ring, data):
    a = tuple(ring_element_from_json(ring, x) for x in _need(data, "a",
                                                             "semiframe"))
    return FrameWitness(kind=data.get("kind", "ortho_semiframe"),
                        n=int(data.get("n", len(a))),
                        m=int(data.get("m", len(a))), a=a,
                        b=tuple(ring_element_from_json(ring, x)
                                for x in data.get("b", [])),
                        axes=tuple(ring_element_from_json(ring, x)
                                   for x in data.get("axes", [])))


def eta_to_json(eta):
    if eta.kind == "matrix":
        return {"kind": "matrix", "matrix": matrix_to_json(eta.data)}
    if eta.kind == "table":
        return {"kind": "table",
                "field": field_to_json(eta.field), "dim": eta.dim,
                "entries": [{"tag": [subspace_to_json(s) for s in tag],
                             "image": subspace_to_json(img)}
                            for tag, img in eta.data.items()]}
    raise MalformedInput("only matrix and table eta maps serialize")


def eta_from_json(data, ring=None):
    from .reps import EtaMap
    kind = data.get("kind", "matrix")
    if kind == "matrix":
        field = field_from_json(data["field"]) if "field" in data else (
            ring.blocks[0].field if ring is not None else QQ)
        return EtaMap.from_matrix(matrix_from_json(field,
                                                   _need(data, "matrix",
                                                         "eta")))
    if kind == "table":
        field = field_from_json(_need(data, "field", "eta"))
        dim = int(_need(data, "dim", "eta"))
        mapping = {}
        for ent in _need(data, "entries", "eta"):
            tag = tuple(subspace_from_json(field, dim, s)
                        for s in ent["tag"])
            mapping[tag] = subspace_from_json(field, dim, ent["image"])
        return EtaMap.from_table(field, dim, mapping)
    raise MalformedInput(f"eta: unknown kind {kind!r}")
