"""Command-line front end.

Subcommands load JSON structures, run the validators and constructions,
and emit a report.  Exit codes: 0 the checked property holds, 1 a
property is violated (the report carries a witness), 2 malformed input.
"""

import argparse
import json
import sys
import time

from . import io as ojson
from . import models
from .acceptance import TIME_BOUNDS, run_all
from .errors import OrthorepError
from .fields import QQ, field_to_json
from .frames import build_orthogonal_semiframe, search_frame, verify_frame
from .io import MalformedInput
from .linalg import Matrix
from .reps import (EtaMap, recover_adjoints, induce_lattice_rep,
                   ring_embedding_from_ortho_rep, verify_ortho_rep,
                   verify_ring_rep, coordinatize)
from .rings import fact3_check, is_star_regular, is_regular
from .spaces import validate_space

EXIT_PASS, EXIT_FAIL, EXIT_MALFORMED = 0, 1, 2


class Report:
    def __init__(self, argv, seed):
        self.data = {"command": list(argv), "verdict": "pass",
                     "violations": [], "result": None,
                     "time_s": 0.0, "seed": seed, "inputs": {}}

    def violate(self, claim, witness):
        self.data["verdict"] = "fail"
        self.data["violations"].append({"claim": str(claim),
                                        "witness": str(witness)})

    def echo_input(self, path, parsed):
        self.data["inputs"][path] = parsed

    def emit(self, as_json):
        if as_json:
            print(json.dumps(self.data, indent=2, default=str))
        else:
            print(f"verdict: {self.data['verdict']}")
            for v in self.data["violations"]:
                print(f"  violated: {v['claim']} at {v['witness']}")
            if self.data["result"] is not None:
                print(json.dumps(self.data["result"], indent=2, default=str))
        return EXIT_PASS if self.data["verdict"] == "pass" else EXIT_FAIL


def _load(path, report):
    try:
        with open(path) as fh:
            parsed = json.load(fh)
    except FileNotFoundError:
        raise MalformedInput(f"{path}: no such file")
    except json.JSONDecodeError as ex:
        raise MalformedInput(f"{path}: line {ex.lineno} column {ex.colno}: "
                             f"{ex.msg}")
    report.echo_input(path, parsed)
    return parsed


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = _build_parser()
    args = parser.parse_args(argv)
    report = Report(argv, getattr(args, "seed", 0))
    t0 = time.perf_counter()
    try:
        code = args.run(args, report)
    except MalformedInput as ex:
        print(f"malformed input: {ex}", file=sys.stderr)
        return EXIT_MALFORMED
    except OrthorepError as ex:
        report.violate(type(ex).__name__, ex)
        report.data["time_s"] = round(time.perf_counter() - t0, 4)
        report.emit(args.json)
        return EXIT_FAIL
    report.data["time_s"] = round(time.perf_counter() - t0, 4)
    if code is None:
        code = report.emit(args.json)
    return code


def _build_parser():
    p = argparse.ArgumentParser(prog="orthorep")
    p.add_argument("--json", action="store_true",
                   help="machine-readable report")
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("check", help="validate a structure file")
    c.add_argument("what", choices=["lattice", "ortholattice", "ring",
                                    "space"])
    c.add_argument("file")
    c.set_defaults(run=_cmd_check)

    f = sub.add_parser("frame", help="verify or search frames")
    fsub = f.add_subparsers(dest="sub", required=True)
    fv = fsub.add_parser("verify")
    fv.add_argument("structure")
    fv.add_argument("frame")
    fv.set_defaults(run=_cmd_frame_verify)
    fs = fsub.add_parser("search")
    fs.add_argument("structure")
    fs.add_argument("--kind", required=True,
                    choices=["large_partial", "skew", "ortho_semiframe"])
    fs.add_argument("--n", type=int, required=True)
    fs.add_argument("--m", type=int, default=None)
    fs.set_defaults(run=_cmd_frame_search)

    s = sub.add_parser("semiframe", help="run the orthogonal semiframe "
                                         "construction")
    ssub = s.add_subparsers(dest="sub", required=True)
    sb = ssub.add_parser("build")
    sb.add_argument("ortholattice")
    sb.add_argument("frame")
    sb.set_defaults(run=_cmd_semiframe_build)

    r = sub.add_parser("rep", help="representation checks")
    rsub = r.add_subparsers(dest="sub", required=True)
    for name, fn in (("verify", _cmd_rep_verify),
                     ("induce", _cmd_rep_induce),
                     ("ortho-check", _cmd_rep_ortho)):
        rp = rsub.add_parser(name)
        rp.add_argument("rep")
        rp.set_defaults(run=fn)
    rr = rsub.add_parser("recover-star")
    rr.add_argument("rep")
    rr.add_argument("--semiframe", default=None)
    rr.add_argument("--seed", type=int, default=0)
    rr.set_defaults(run=_cmd_rep_recover)

    co = sub.add_parser("coord", help="frame coordinatization")
    cosub = co.add_subparsers(dest="sub", required=True)
    cb = cosub.add_parser("build")
    cb.add_argument("subspaces")
    cb.add_argument("frame")
    cb.add_argument("--seed", type=int, default=0)
    cb.set_defaults(run=_cmd_coord_build)

    pl = sub.add_parser("pipeline", help="end-to-end pipelines")
    plsub = pl.add_subparsers(dest="sub", required=True)
    t1 = plsub.add_parser("theorem1")
    t1.add_argument("ring")
    t1.add_argument("eta")
    t1.add_argument("--space", default=None)
    t1.add_argument("--seed", type=int, default=0)
    t1.set_defaults(run=_cmd_theorem1)

    f3 = sub.add_parser("fact3", help="congruence/ideal correspondence")
    f3.add_argument("ring")
    f3.set_defaults(run=_cmd_fact3)

    m = sub.add_parser("model", help="emit a catalog structure as JSON")
    m.add_argument("name")
    m.set_defaults(run=_cmd_model)

    d = sub.add_parser("demo", help="run the acceptance suite")
    d.add_argument("which", choices=["all"])
    d.add_argument("--seed", type=int, default=0)
    d.set_defaults(run=_cmd_demo)
    return p


# ----------------------------------------------------------------- commands

def _cmd_check(args, report):
    data = _load(args.file, report)
    if args.what == "lattice":
        lat = ojson.lattice_from_json(data)
        report.data["result"] = {"n": lat.n, "bot": lat.bot, "top": lat.top}
    elif args.what == "ortholattice":
        ol = ojson.ortholattice_from_json(data)
        report.data["result"] = {"n": ol.n}
    elif args.what == "ring":
        ring = ojson.ring_from_json(data)
        ok, w = is_regular(ring)
        report.data["result"] = {"regular": ok,
                                 "has_star": ring.has_star}
        if ring.has_star:
            oks, ws = is_star_regular(ring)
            report.data["result"]["star_regular"] = oks
    elif args.what == "space":
        space = ojson.space_from_json(data)
        report.data["result"] = {"field": field_to_json(space.field),
                                 "dim": space.dim}
    return None


def _structure_from_json(data):
    if "perp" in data:
        return ojson.ortholattice_from_json(data)
    if "n" in data:
        return ojson.lattice_from_json(data)
    raise MalformedInput("expected a lattice or ortholattice")


def _cmd_frame_verify(args, report):
    struct = _structure_from_json(_load(args.structure, report))
    witness = ojson.frame_from_json(_load(args.frame, report))
    rep = verify_frame(struct, witness)
    for v in rep.violations:
        report.violate("frame-clause", v)
    return None


def _cmd_frame_search(args, report):
    struct = _structure_from_json(_load(args.structure, report))
    witness = search_frame(struct, args.kind, args.n, args.m)
    report.data["result"] = {"found": witness is not None}
    if witness is not None:
        report.data["result"]["frame"] = ojson.frame_to_json(witness)
    return None


def _cmd_semiframe_build(args, report):
    ol = ojson.ortholattice_from_json(_load(args.ortholattice, report))
    witness = ojson.frame_from_json(_load(args.frame, report))
    sf = build_orthogonal_semiframe(ol, witness)
    report.data["result"] = {"semiframe": ojson.frame_to_json(sf)}
    return None


def _cmd_rep_verify(args, report):
    rep = ojson.rep_from_json(_load(args.rep, report))
    res = verify_ring_rep(rep)
    for v in res.violations:
        report.violate(v["claim"], v["witness"])
    return None


def _cmd_rep_induce(args, report):
    rep = ojson.rep_from_json(_load(args.rep, report))
    _eta, res = induce_lattice_rep(rep)
    for v in res.violations:
        report.violate(v["claim"], v["witness"])
    return None


def _cmd_rep_ortho(args, report):
    rep = ojson.rep_from_json(_load(args.rep, report))
    res = verify_ortho_rep(rep)
    for v in res.violations:
        report.violate("PerpViolation", v["witness"])
    return None


def _cmd_rep_recover(args, report):
    rep = ojson.rep_from_json(_load(args.rep, report))
    if args.semiframe:
        sf = ojson.ring_semiframe_from_json(rep.ring,
                                            _load(args.semiframe, report))
    else:
        sf = models.canonical_ring_semiframe(rep.ring)
    import random
    res = recover_adjoints(rep, sf, rng=random.Random(args.seed))
    for v in res.violations:
        report.violate(v["claim"], v["witness"])
    if res.ok:
        report.data["result"] = {"verdict": "star-representation"}
    return None


def _cmd_coord_build(args, report):
    import random
    data = _load(args.subspaces, report)
    field = ojson.field_from_json(data["field"])
    dim = int(data["dim"])
    subs = data.get("subspaces", "all")
    if subs == "all":
        membership = lambda s: True
        sub_list = None
    else:
        sub_list = [ojson.subspace_from_json(field, dim, s) for s in subs]
        membership = sub_list
    fdata = _load(args.frame, report)
    witness = ojson.frame_from_json(fdata, subspaces=sub_list, field=field,
                                    dim=dim)
    coord = coordinatize(field, dim, membership, witness,
                         rng=random.Random(args.seed))
    report.data["result"] = {
        "order": coord.n, "block_dim": coord.block_dim,
        "basis": ojson.matrix_to_json(coord.basis)}
    return None


def _cmd_theorem1(args, report):
    import random
    ring = ojson.ring_from_json(_load(args.ring, report))
    eta = ojson.eta_from_json(_load(args.eta, report), ring=ring)
    space = None
    if args.space:
        space = ojson.space_from_json(_load(args.space, report))
    elif ring.has_star:
        space = validate_space(eta.field, eta.dim,
                               Matrix.identity(eta.field, eta.dim))
    bundle = ring_embedding_from_ortho_rep(ring, eta, space=space,
                                           rng=random.Random(args.seed))
    for name, rep in bundle.reports.items():
        for v in rep.violations:
            report.violate(f"{name}:{v['claim']}", v["witness"])
    report.data["result"] = {
        "star_verified": bundle.star_verified,
        "images": {f"E{k[0]}_{k[1]}_{k[2]}": ojson.matrix_to_json(m)
                   for k, m in bundle.rep.images.items()}}
    return None


def _cmd_fact3(args, report):
    ring = ojson.ring_from_json(_load(args.ring, report))
    res = fact3_check(ring)
    report.data["result"] = {"ideals": res.n_ideals,
                             "congruences": res.n_congruences}
    if not res.ok:
        report.violate("fact3", res.detail)
    return None


def _cmd_model(args, report):
    name = args.name
    builders = _model_builders()
    if name not in builders:
        raise MalformedInput(
            f"unknown model {name!r}; available: {', '.join(sorted(builders))}")
    print(json.dumps(builders[name](), indent=2))
    return EXIT_PASS


def _model_builders():
    from fractions import Fraction
    from .fields import GF

    def orth(ol):
        return ojson.ortholattice_to_json(ol)

    def q3_rot():
        return [[str(Fraction(3, 5)), str(Fraction(4, 5)), "0"],
                [str(Fraction(-4, 5)), str(Fraction(3, 5)), "0"],
                ["0", "0", "1"]]

    def rep_json(ring, space, images):
        from .reps import RingRep
        return ojson.rep_to_json(RingRep(ring, space, images))

    def m2q_rep(matrix_s=None):
        from .reps import RingRep
        ring = models.matrix_star_ring(QQ, 2)
        space = validate_space(QQ, 2, Matrix.identity(QQ, 2))
        if matrix_s is None:
            rep = RingRep.identity(ring, space)
        else:
            rep = RingRep.conjugation(ring, space, matrix_s)
        return ojson.rep_to_json(rep)

    def m3q_rep(matrix_s=None):
        from .reps import RingRep
        ring = models.matrix_star_ring(QQ, 3)
        space = validate_space(QQ, 3, Matrix.identity(QQ, 3))
        if matrix_s is None:
            rep = RingRep.identity(ring, space)
        else:
            rep = RingRep.conjugation(ring, space, matrix_s)
        return ojson.rep_to_json(rep)

    return {
        "mo1": lambda: orth(models.mo_n(1)),
        "mo2": lambda: orth(models.mo_n(2)),
        "mo3": lambda: orth(models.mo_n(3)),
        "mo4": lambda: orth(models.mo_n(4)),
        "boolean1": lambda: orth(models.boolean_ortholattice(1)),
        "boolean2": lambda: orth(models.boolean_ortholattice(2)),
        "boolean3": lambda: orth(models.boolean_ortholattice(3)),
        "boolean4": lambda: orth(models.boolean_ortholattice(4)),
        "gf2-line": lambda: orth(models.subspace_ortholattice(GF(2), 1)[0]),
        "gf3-plane": lambda: orth(models.subspace_ortholattice(GF(3), 2)[0]),
        "m2q": lambda: ojson.ring_to_json(models.matrix_star_ring(QQ, 2)),
        "m3q": lambda: ojson.ring_to_json(models.matrix_star_ring(QQ, 3)),
        "m2gf3": lambda: ojson.ring_to_json(models.matrix_star_ring(GF(3), 2)),
        "m3gf3": lambda: ojson.ring_to_json(models.matrix_ring(GF(3), 3)),
        "m2gf2-table": lambda: ojson.ring_to_json(
            models.finite_matrix_ring(2, 2)),
        "gf2-table": lambda: ojson.ring_to_json(models.field_table_ring(2)),
        "gf3-table": lambda: ojson.ring_to_json(models.field_table_ring(3)),
        "z4-table": lambda: ojson.ring_to_json(models.zmod_ring(4)),
        "gf2xm2gf2-table": lambda: ojson.ring_to_json(
            models.product_ring(models.field_table_ring(2),
                                models.finite_matrix_ring(2, 2))),
        "gf2xgf3-table": lambda: ojson.ring_to_json(
            models.product_ring(models.field_table_ring(2),
                                models.field_table_ring(3))),
        "q2-space": lambda: ojson.space_to_json(
            validate_space(QQ, 2, Matrix.identity(QQ, 2))),
        "q3-space": lambda: ojson.space_to_json(
            validate_space(QQ, 3, Matrix.identity(QQ, 3))),
        "q2-diag12-space": lambda: ojson.space_to_json(
            validate_space(QQ, 2, Matrix.diagonal(QQ, [1, 2]))),
        "gf3-plane-space": lambda: ojson.space_to_json(
            validate_space(GF(3), 2, Matrix.identity(GF(3), 2))),
        "frame-mo2": lambda: ojson.frame_to_json(
            search_frame(models.mo_n(2), "skew", 2)),
        "frame-q3": lambda: ojson.frame_to_json(
            models.canonical_frame(3, (QQ, 3)), subspace_elements=True),
        "frame-gf3": lambda: ojson.frame_to_json(
            models.canonical_frame(3, (GF(3), 3)), subspace_elements=True),
        "rep-m2q-identity": lambda: m2q_rep(),
        "rep-m3q-identity": lambda: m3q_rep(),
        "rep-m2q-shear": lambda: m2q_rep(Matrix(QQ, [[1, 1], [0, 1]])),
        "rep-m3q-rot": lambda: m3q_rep(Matrix(QQ, [
            [Fraction(3, 5), Fraction(4, 5), 0],
            [Fraction(-4, 5), Fraction(3, 5), 0], [0, 0, 1]])),
        "eta-q3-identity": lambda: {"kind": "matrix", "field": "Q",
                                    "matrix": [["1", "0", "0"],
                                               ["0", "1", "0"],
                                               ["0", "0", "1"]]},
        "eta-q3-rot": lambda: {"kind": "matrix", "field": "Q",
                               "matrix": q3_rot()},
        "eta-gf3-identity": lambda: {"kind": "matrix",
                                     "field": {"p": 3, "k": 1},
                                     "matrix": [[1, 0, 0], [0, 1, 0],
                                                [0, 0, 1]]},
        "semiframe-m2q": lambda: ojson.ring_semiframe_to_json(
            models.canonical_ring_semiframe(models.matrix_star_ring(QQ, 2))),
        "semiframe-m3q": lambda: ojson.ring_semiframe_to_json(
            models.canonical_ring_semiframe(models.matrix_star_ring(QQ, 3))),
    }


def _cmd_demo(args, report):
    results = run_all(args.seed)
    all_ok = True
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        bound = TIME_BOUNDS.get(r.index)
        if bound is not None and r.elapsed > bound:
            status = "SLOW"
            all_ok = False
        if not r.ok:
            all_ok = False
        print(f"[{status}] criterion {r.index}: {r.name} "
              f"({r.elapsed:.2f}s) {r.detail}")
    report.data["result"] = {
        "criteria": [{"index": r.index, "name": r.name, "ok": r.ok,
                      "time_s": round(r.elapsed, 3), "detail": r.detail}
                     for r in results]}
    if not all_ok:
        report.violate("acceptance", "one or more criteria failed")
    return None


if __name__ == "__main__":
    sys.exit(main())
