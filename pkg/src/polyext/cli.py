"""polyext command line: enumerate, ext, verify, quiver, certify, counts, gallery, suite.

Exit codes: 0 success, 1 a verification failed, 2 input error, 3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

import jsonschema

from .config import load_caps, require
from .errors import InputError, CapExceeded, UnsupportedError
from .ratgeom import polyhedron_from_json, polyhedron_to_json, dumps, Lattice

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _schema(name):
    text = resources.files("polyext").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def load_polytope(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e}") from e
    try:
        jsonschema.validate(data, _schema("polytope"))
    except jsonschema.ValidationError as e:
        raise InputError(f"{path}: {e.message}") from e
    return polyhedron_from_json(data)


def _emit(out, text):
    if not text.endswith("\n"):
        text += "\n"
    out.write(text)


def cmd_enumerate(args, caps, out):
    from .matroid import enumerate_schubert, enumerate_delta_schubert, base_polytope, independence_polytope, feasible_polytope

    default = {"perm": "loopless", "stell": "all", "permB": "loopless"}[args.family]
    filt = args.filter or default
    if args.family == "permB":
        objs = enumerate_delta_schubert(args.n, filt, caps)
        polys = [feasible_polytope(D) for D in objs]
    else:
        objs = enumerate_schubert(args.n, filt, caps)
        make = base_polytope if args.family == "perm" else independence_polytope
        polys = [make(M) for M in objs]
    records = []
    for i, (o, P) in enumerate(zip(objs, polys), start=1):
        records.append({"id": i, "source": o.to_json(), "lattice_points": len(P.lattice_points()),
                        "polytope": polyhedron_to_json(P)})
    _emit(out, dumps({"family": args.family, "n": args.n, "filter": filt, "count": len(records),
                      "records": records}))
    return EXIT_OK


def cmd_ext(args, caps, out):
    from .homology import ext_table

    P, Q = load_polytope(args.p), load_polytope(args.q)
    lattice = Lattice.even(P.ambient) if args.lattice == "even" else None
    t = ext_table(P, Q, equivariant=args.equivariant, lattice=lattice)
    _emit(out, dumps(t.to_json()))
    return EXIT_OK


def _collection(args, caps):
    from .collections import build_collection

    require(caps, f"verify_{args.family}_n", args.n)
    return build_collection(args.family, args.n, caps)


def cmd_verify(args, caps, out):
    from .collections import verify_strong_exceptionality, euler_pairing_matrix, is_unitriangular

    c = _collection(args, caps)
    rep = verify_strong_exceptionality(c, jobs=args.jobs)
    M = euler_pairing_matrix(c, jobs=args.jobs)
    rep["euler_unitriangular"] = is_unitriangular(M)
    rep["passed"] = rep["passed"] and rep["euler_unitriangular"]
    if args.format == "csv":
        _emit(out, "\n".join(",".join(str(x) for x in row) for row in M))
    else:
        rep["euler_pairing"] = M
        rep["status"] = "PASS" if rep["passed"] else "FAIL"
        _emit(out, dumps(rep))
    return EXIT_OK if rep["passed"] else EXIT_FAIL


def cmd_quiver(args, caps, out):
    from .quiver import tilting_quiver, export_dot, export_json

    q = tilting_quiver(_collection(args, caps))
    _emit(out, export_dot(q) if args.format == "dot" else export_json(q))
    return EXIT_OK


def cmd_certify(args, caps, out):
    from .collections import fullness_certificate, verify_certificate

    T = load_polytope(args.polytope)
    n = T.ambient
    require(caps, f"{args.family}_n", n)
    cert = fullness_certificate(args.family, n, T, caps=caps)
    rep = verify_certificate(cert)
    _emit(out, dumps({"verification": rep, "certificate": cert.to_json()}))
    return EXIT_OK if rep["passed"] else EXIT_FAIL


def cmd_counts(args, caps, out):
    from .collections import build_collection, cuspidal_subcollection

    c = build_collection(args.family, args.n, caps)
    count = len(cuspidal_subcollection(c)) if args.cuspidal else len(c)
    _emit(out, dumps({"family": args.family, "n": args.n, "cuspidal": args.cuspidal, "count": count}))
    return EXIT_OK


def cmd_gallery(args, caps, out):
    from .collections import classical_gallery, type_c_probe

    if args.kind == "typeC":
        p = type_c_probe()
        rep = {"kind": "typeC", "interior_points": p["interior_points"], "exceptional": p["exceptional"],
               "witness": p["witness"].to_json(), "violations": len(p["report"]["violations"])}
        _emit(out, dumps(rep))
        return EXIT_OK
    if args.param is None:
        raise InputError("--param is required for projective and hirzebruch")
    coll, rep, wit = classical_gallery(args.kind, args.param)
    res = {"kind": args.kind, "param": args.param, "collection": coll.to_json(),
           "strongly_exceptional": rep["passed"],
           "witnesses": [{k: v for k, v in w.items() if k != "complex"} for w in wit]}
    res["witnesses"] = [{**w, "terms": {str(k): v for k, v in w["terms"].items()}} for w in res["witnesses"]]
    ok = rep["passed"] and all(w["exact"] and w["leaves_in_collection"] for w in wit)
    _emit(out, dumps(res))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_suite(args, caps, out):
    from .suites import SUITES

    rep = SUITES[args.name](args.count, args.seed)
    _emit(out, dumps(rep))
    return EXIT_OK if rep["passed"] else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="polyext", description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", "-o", help="write to this file instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    def fam(sp):
        sp.add_argument("--family", required=True, choices=["perm", "stell", "permB"])
        sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("enumerate", help="list Schubert (delta) matroids and their polytopes")
    fam(sp)
    sp.add_argument("--filter", choices=["all", "loopless", "loopless_and_coloopless"])
    sp = sub.add_parser("ext", help="Ext table between two polytopes (JSON files)")
    sp.add_argument("p")
    sp.add_argument("q")
    sp.add_argument("--equivariant", action="store_true")
    sp.add_argument("--lattice", choices=["standard", "even"], default="standard")
    sp = sub.add_parser("verify", help="strong exceptionality sweep of a collection")
    fam(sp)
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp = sub.add_parser("quiver", help="tilting quiver of a collection")
    fam(sp)
    sp.add_argument("--format", choices=["dot", "json"], default="dot")
    sp = sub.add_parser("certify", help="fullness certificate for a target polytope")
    sp.add_argument("--polytope", required=True)
    sp.add_argument("--family", required=True, choices=["perm", "stell", "permB"])
    sp = sub.add_parser("counts", help="collection or cuspidal sub-collection size")
    fam(sp)
    sp.add_argument("--cuspidal", action="store_true")
    sp = sub.add_parser("gallery", help="projective spaces, Hirzebruch surfaces, type-C probe")
    sp.add_argument("--kind", required=True, choices=["projective", "hirzebruch", "typeC"])
    sp.add_argument("--param", type=int)
    sp = sub.add_parser("suite", help="seeded randomized verification suites")
    sp.add_argument("name", choices=["oracle-gp", "oracle-b2", "bg-stalks", "derksen-fink", "certificates", "cp1"])
    sp.add_argument("--count", type=int)
    return p


COMMANDS = {
    "enumerate": cmd_enumerate, "ext": cmd_ext, "verify": cmd_verify, "quiver": cmd_quiver,
    "certify": cmd_certify, "counts": cmd_counts, "gallery": cmd_gallery, "suite": cmd_suite,
}


def _run_config(args, caps):
    cfg = {"command": args.command, "seed": args.seed, "jobs": args.jobs, "caps": caps}
    for k in ("family", "n", "filter", "format"):
        v = getattr(args, k, None)
        if v is not None:
            cfg[k] = v
    jsonschema.validate(cfg, _schema("runconfig"))
    return cfg


def main(argv=None, out=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    out = out or sys.stdout
    try:
        caps = load_caps()
        try:
            _run_config(args, caps)
        except jsonschema.ValidationError as e:
            raise InputError(e.message) from e
        if args.output:
            with open(args.output, "w") as fh:
                return COMMANDS[args.command](args, caps, fh)
        return COMMANDS[args.command](args, caps, out)
    except CapExceeded as e:
        print(f"polyext: cap exceeded: {e}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, UnsupportedError) as e:
        print(f"polyext: input error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
