"""Command-line front end.

Setup files are JSON: ``{"k": 2, "blocks": [{"polys": [[0,1],[1,1],[2,1]]}],
"free_rank": 1}`` with polynomials as ascending coefficient lists.

Exit codes: 0 success, 1 invalid input, 2 internal consistency failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction

from . import charspace, cohomology, geometry, sigma
from .exactalg import InvalidSetup, LocalizedElement, Setup, setup_validate
from .polynomial import Poly
from .valuations import INF, parse_valuation, val_eval

CHAR_HELP = ("character values on the basis (q_-1, q_{1,0}, ..., q_{1,n}, further blocks), "
             "comma separated, rationals as p/q; write --char=-1,0,0,0 when the first value is negative")
ELEMENT_HELP = ("ring element as POLY[@e0,e1,...[@kexp]], meaning POLY * prod f_i^e_i * k^kexp; "
                "e.g. 1@-1,0,0 is 1/x")


class UsageError(Exception):
    """Invalid input; reported with exit code 1."""

    def __init__(self, message, violations=None):
        super().__init__(message)
        self.violations = violations or []


class ConsistencyFailure(Exception):
    """A result contradicts a checked invariant; exit code 2."""

    def __init__(self, message, report):
        super().__init__(message)
        self.report = report


# ---------------------------------------------------------------- encoding


def encode(obj):
    """JSON-safe form with exact numbers: Fractions as "p/q", infinity as "inf"."""
    if obj is INF:
        return "inf"
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, charspace.Character):
        return [encode(c) for c in obj.coords]
    if isinstance(obj, LocalizedElement):
        return str(obj)
    if isinstance(obj, Poly):
        return [encode(Fraction(c)) for c in obj.coeffs]
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(x) for x in obj]
    if isinstance(obj, float):
        raise TypeError("floats are not allowed in reports")
    return str(obj)


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def setup_digest(setup: Setup | None) -> str | None:
    if setup is None:
        return None
    return hashlib.sha256(dumps(setup.to_json()).encode()).hexdigest()


# ---------------------------------------------------------------- parsing


def load_setup(path: str) -> Setup:
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read setup file: {exc}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"setup file is not valid JSON: {exc}")
    if not isinstance(raw, dict):
        raise UsageError("setup file must hold a JSON object")
    try:
        return setup_validate(raw)
    except InvalidSetup as exc:
        raise UsageError("invalid setup", [str(v) for v in exc.violations])


def parse_element(text: str, setup: Setup) -> LocalizedElement:
    parts = text.strip().split("@")
    if len(parts) > 3:
        raise ValueError(f"cannot parse element {text!r}")
    numer = Poly.parse(parts[0])
    exps = [int(t) for t in parts[1].split(",")] if len(parts) > 1 and parts[1] else None
    kexp = int(parts[2]) if len(parts) > 2 else 0
    if exps is not None and len(exps) != setup.n + 1:
        raise ValueError(f"expected {setup.n + 1} exponents in {text!r}")
    return setup.element(numer, exps, kexp)


def _ints(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def _elements(text: str, setup: Setup) -> list[LocalizedElement]:
    return [parse_element(t, setup) for t in text.split(";") if t.strip()]


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for {args.command}")
    return value


def _need_setup(args) -> Setup:
    return load_setup(_need(args, "setup"))


def _bounds(args) -> sigma.SearchBounds:
    if not args.bounds:
        return sigma.SearchBounds()
    vals = _ints(args.bounds)
    if not 1 <= len(vals) <= 3 or any(v < 0 for v in vals):
        raise UsageError("--bounds takes SUPPORT[,EXP_BOX[,MAX_DEGREE]] with nonnegative values")
    return sigma.SearchBounds(*vals)


def _character(args, setup: Setup) -> charspace.Character:
    v = charspace.parse_character(_need(args, "char"))
    if len(v) != setup.rank:
        raise UsageError(f"character has {len(v)} values, Q has rank {setup.rank}")
    if v.is_zero():
        raise UsageError("zero vector is not a character")
    return v


def _v_names(setup: Setup) -> dict[tuple, str]:
    V = charspace.build_V(setup)
    names = ["w"] + [f"v{i}" for i in range(setup.n + 1)]
    return {c.primitive().coords: name for (c, _), name in zip(V, names)}


# ---------------------------------------------------------------- commands
# each returns (text lines, result, certificates, anomalies)


def cmd_validate(args, setup):
    degs = list(setup.degrees)
    lines = [f"valid: k={setup.k}, block degrees [{','.join(map(str, degs))}], beta={setup.beta}"]
    lines += [f"note: {n}" for n in setup.notes]
    result = {"k": setup.k, "block_degrees": degs, "beta": setup.beta, "l": setup.l,
              "free_rank": setup.free_rank, "notes": list(setup.notes)}
    return lines, result, [], []


def cmd_val(args, setup):
    e = parse_element(_need(args, "element"), setup)
    names = [args.valuation] if args.valuation else ["w"] + [f"v{i}" for i in range(setup.n + 1)]
    values = {}
    for name in names:
        values[name] = val_eval(parse_valuation(name), e)
    lines = [f"{name}({e}) = {val}" for name, val in values.items()]
    return lines, {"element": e, "values": values}, [], []


def cmd_chars(args, setup):
    names = setup.basis_names()
    lines = [f"basis: ({', '.join(names)})"]
    rows = []
    for (c, q), name in zip(charspace.build_V(setup), ["w"] + [f"v{i}" for i in range(setup.n + 1)]):
        lines.append(f"{name} = {c}   q_{name} = {q}")
        rows.append({"name": name, "character": c, "q_v": list(q.exps)})
    total = sum((c for c, _ in charspace.build_V(setup)), charspace.Character([0] * setup.rank))
    lines.append(f"sum of V = {total}")
    return lines, {"basis": names, "V": rows, "sum": total}, [], []


def cmd_witness(args, setup):
    v = _character(args, setup)
    b = _bounds(args)
    verdict = sigma.centralizer_witness_search(setup, v, b.support, b.exp_box, b.max_degree)
    result = {"character": v, "in_sigma": verdict.in_sigma, "bounds": b.to_json()}
    certs = []
    if verdict.in_sigma:
        if not verdict.witness.check(setup, v):
            raise ConsistencyFailure("witness fails its own check", result)
        certs.append({"witness": verdict.witness.to_json(), "text": str(verdict.witness)})
    return [f"{v}: {verdict}"], result, certs, []


def _family(args, setup):
    if args.family == "theoremb":
        if setup.n != 2 or setup.l != 1:
            raise UsageError("the theoremb family is available for n = 2, l = 1 only")
        return sigma.sigma_c_theoremB_data(2)
    V = [c for c, _ in charspace.build_V(setup)]
    return charspace.ConeFamily.of_classes(V, ["w"] + [f"v{i}" for i in range(setup.n + 1)])


def cmd_tame(args, setup):
    m = _need(args, "m")
    if m < 1:
        raise UsageError("--m must be at least 1")
    res = charspace.m_tame_check(_family(args, setup), m)
    result = {"m": m, "family": args.family, "tame": res.tame}
    certs = []
    if res.tame:
        line = f"{m}-tame: true"
    else:
        names = _v_names(setup)
        order = list(names.values())
        labels = [names.get(c.primitive().coords, str(c)) for c in res.certificate]
        labels.sort(key=lambda t: order.index(t) if t in order else len(order))
        cert = "+".join(labels) + "=0"
        line = f"{m}-tame: false, certificate: {cert}"
        certs.append({"points": res.certificate, "cones": list(res.cone_indices), "text": cert})
    if res.plain_sum_certificate:
        result["plain_sum_zero"] = res.plain_sum_certificate
    return [line], result, certs, []


def cmd_verify_theoremb(args, setup):
    b = _bounds(args)
    radius = args.radius
    try:
        report = sigma.verify_theoremB(setup, radius, b, args.max_classes)
    except ValueError as exc:
        raise UsageError(str(exc))
    anomalies = [{"character": a.character, "kind": a.kind, "detail": a.detail} for a in report.anomalies]
    result = {"classes": len(report.rows), "inside_family": len(report.inside),
              "outside_family": len(report.outside), "bounds": b.to_json(), "radius": radius}
    certs = [{"character": v, "witness": verdict.witness.to_json()}
             for v, _, verdict in report.rows if verdict.in_sigma]
    lines = [f"classes: {len(report.rows)} (inside family {len(report.inside)}, "
             f"outside {len(report.outside)}), anomalies: {len(anomalies)}"]
    lines += [f"anomaly {a.kind}: {a.character} {a.detail}" for a in report.anomalies]
    if anomalies:
        raise ConsistencyFailure("sigma anomalies", (lines, result, certs, anomalies))
    return lines, result, certs, anomalies


def _ctx(args, setup):
    name = args.valuation or "v0"
    vid = parse_valuation(name)
    if vid.kind == "padic":
        raise UsageError("trees are built for w and v_i only")
    return geometry.tree_context(setup, vid)


def cmd_tree_ball(args, setup):
    ctx = _ctx(args, setup)
    seeds = _elements(_need(args, "seeds"), setup)
    window = _ints(_need(args, "window"))
    if len(window) != 2:
        raise UsageError("--window takes Z_LO,Z_HI")
    graph = geometry.tree_ball(ctx, seeds, tuple(window))
    if not graph.is_tree():
        raise ConsistencyFailure("ball is not a tree", None)
    result = {"vertices": [{"z": z, "label": a} for z, a in graph.vertices],
              "edges": [list(e) for e in graph.edges], "is_tree": True,
              "window": list(graph.window) if graph.window else None}
    sups = {f"{i},{j}": geometry.line_intersection_sup(ctx, seeds[i], seeds[j])
            for i in range(len(seeds)) for j in range(i + 1, len(seeds))}
    result["line_intersection_sup"] = sups
    lines = [f"vertices: {len(graph.vertices)}, edges: {len(graph.edges)}, tree: true"]
    if graph.window and tuple(graph.window) != tuple(window):
        lines.append(f"window lowered to {graph.window[0]} so the seed lines meet")
    lines += [f"z0(seed {k}) = {v}" for k, v in sups.items()]
    return lines, result, [], []


def cmd_orbits(args, setup):
    reps = geometry.orbit_reps(setup)
    result = {"representatives": reps}
    lines = [f"{len(reps)} orbit representatives: " + " ".join(str(r) for r in reps)]
    if args.point:
        pt = [Fraction(t) for t in args.point.split(",")]
        in_w, ceil, bound = geometry.w_project_ceil(pt, setup)
        rep, q = geometry.reduce_to_rep(ceil, setup)
        result.update({"point": pt, "in_W": in_w, "ceil": ceil, "bound_value": bound,
                       "representative": rep, "translation": list(q.exps)})
        lines.append(f"point in W: {str(in_w).lower()}, ceil {ceil}, bound {bound}, "
                     f"representative {rep} via {q}")
    return lines, result, [], []


def cmd_crt(args, setup):
    labels = _elements(_need(args, "labels"), setup)
    heights = _ints(args.heights) if args.heights else [0] * (setup.n + 2)
    try:
        res = geometry.crt_normalize(setup, labels, heights)
    except ValueError as exc:
        raise UsageError(str(exc))
    result = {"a": res.a, "a_prime": res.a_prime, "t": res.t, "normalized_heights": res.heights}
    if not geometry.crt_check(setup, labels, heights, res):
        raise ConsistencyFailure("CRT solution fails the coset check", result)
    return [f"a = {res.a}", f"a' = {res.a_prime}, t = {res.t}"], result, [], []


def cmd_stabilizer(args, setup):
    sw = _need(args, "sw")
    try:
        data = geometry.stabilizer_data(setup, sw)
    except ValueError as exc:
        raise UsageError(str(exc))
    result = {"s_w": sw, "d": data.d, "rank": data.rank, "basis": data.basis, "hnn": data.hnn}
    lines = [f"d = {data.d}, rank {data.rank}"]
    if data.hnn:
        lines.append(f"HNN: {len(data.hnn['generators']) - 1} generators, relation exponent "
                     f"{data.hnn['relation_exponent']}")
    return lines, result, [], []


def cmd_connectivity(args, setup):
    m = _need(args, "m")
    if m < 1:
        raise UsageError("--m must be at least 1")
    ok, subset = geometry.connectivity_precondition(setup, m)
    names = _v_names(setup)
    result = {"m": m, "holds": ok}
    line = f"every {m}-subset of V in an open halfspace: {str(ok).lower()}"
    certs = []
    if subset:
        labels = [names.get(c.primitive().coords, str(c)) for c in subset]
        result["failing_subset"] = labels
        certs.append({"subset": subset})
        line += f", failing subset {{{', '.join(labels)}}}"
    return [line], result, certs, []


def cmd_h2(args, setup):
    try:
        rep = cohomology.h2_report(setup)
    except NotImplementedError as exc:
        raise UsageError(str(exc))
    result = {"theorem_c_order": rep.theorem_c.order, "fixed_point_order": rep.fixed_points.order,
              "f_at_1": list(rep.values), "agree": rep.agree}
    anomalies = []
    if not rep.agree:
        anomalies.append({"kind": "h2-disagreement",
                          "detail": f"closed form {rep.theorem_c.order}, fixed points {rep.fixed_points.order}"})
    line = f"H2 order (Theorem C): {rep.theorem_c.order}; fixed-point order: {rep.fixed_points.order}"
    return [line], result, [], anomalies


def cmd_fixedpoints(args, setup):
    if args.k is not None:
        k = args.k
        values = _ints(args.values or "")
    elif setup is not None:
        k = setup.k
        values = [f(1) for f in setup.f[1:]]
    else:
        raise UsageError("fixedpoints needs --k (and --values) or --setup")
    if k < 2:
        raise UsageError("k must be at least 2")
    fast = cohomology.fixed_point_order(k, values)
    slow = cohomology.fixed_point_order_bruteforce(k, values)
    result = {"k": k, "values": values, "order": fast.order}
    if fast != slow:
        raise ConsistencyFailure("closed form and enumeration differ", result)
    return [f"fixed-point order: {fast.order}"], result, [], []


COMMANDS = {
    "validate": cmd_validate,
    "val": cmd_val,
    "chars": cmd_chars,
    "witness": cmd_witness,
    "tame": cmd_tame,
    "verify-theoremb": cmd_verify_theoremb,
    "tree-ball": cmd_tree_ball,
    "orbits": cmd_orbits,
    "crt": cmd_crt,
    "stabilizer": cmd_stabilizer,
    "connectivity": cmd_connectivity,
    "h2": cmd_h2,
    "fixedpoints": cmd_fixedpoints,
}

HELP = {
    "validate": "check a setup file",
    "val": "valuations of a ring element",
    "chars": "the characters w, v_0, ..., v_n",
    "witness": "centralizer witness search for one character",
    "tame": "m-tameness of a cone family",
    "verify-theoremb": "witness search against the Sigma^c cones on a grid",
    "tree-ball": "finite piece of a character tree",
    "orbits": "Q-orbit representatives of [[W]]",
    "crt": "common label for a vertex of the product of trees",
    "stabilizer": "module part of a vertex stabilizer",
    "connectivity": "open-halfspace condition on m-subsets of V",
    "h2": "order of H^2(Q, A), two ways",
    "fixedpoints": "fixed-point count of the units f_j(1) on Z/(k-1)",
}

# commands that work without a setup file
SETUP_OPTIONAL = {"fixedpoints"}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--setup", metavar="FILE", help="setup JSON file")
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--m", type=int)
    common.add_argument("--char", help=CHAR_HELP)
    common.add_argument("--valuation", help="v0, v1, ..., w (or pP for val)")
    common.add_argument("--element", help=ELEMENT_HELP)
    common.add_argument("--seeds", help="';'-separated elements (see --element)")
    common.add_argument("--window", help="Z_LO,Z_HI")
    common.add_argument("--bounds", help="SUPPORT[,EXP_BOX[,MAX_DEGREE]] (default 4,6,3)")
    common.add_argument("--sw", type=int, help="height s_w of the w coordinate")
    common.add_argument("--family", choices=["theoremb", "V"], default="theoremb")
    common.add_argument("--radius", type=int, default=2, help="grid box radius")
    common.add_argument("--max-classes", type=int, default=200)
    common.add_argument("--point", help="rational vector over V (w first)")
    common.add_argument("--labels", help="';'-separated labels a_v over V (w first)")
    common.add_argument("--heights", help="integer heights s_v over V (w first)")
    common.add_argument("--k", type=int)
    common.add_argument("--values", help="comma separated integers f_j(1)")

    parser = argparse.ArgumentParser(prog="metabelian", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=HELP[name])
    return parser


def _emit(args, lines, result, certs, anomalies, setup, out):
    if args.json:
        doc = {"command": args.command, "setup_digest": setup_digest(setup),
               "result": encode(result), "certificates": encode(certs), "anomalies": encode(anomalies)}
        print(dumps(doc), file=out)
    else:
        for line in lines:
            print(line, file=out)


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    setup = None
    try:
        if args.setup or args.command not in SETUP_OPTIONAL:
            setup = _need_setup(args)
        lines, result, certs, anomalies = COMMANDS[args.command](args, setup)
    except UsageError as exc:
        if args.json:
            doc = {"command": args.command, "setup_digest": None,
                   "result": {"error": str(exc), "violations": exc.violations},
                   "certificates": [], "anomalies": []}
            print(dumps(doc), file=out)
        else:
            print(f"error: {exc}", file=err)
            for v in exc.violations:
                print(f"  {v}", file=err)
        return 1
    except (ValueError, NotImplementedError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    except ConsistencyFailure as exc:
        if isinstance(exc.report, tuple):
            _emit(args, *exc.report, setup, out)
        print(f"consistency failure: {exc}", file=err)
        return 2
    except (AssertionError, ArithmeticError) as exc:
        print(f"consistency failure: {exc}", file=err)
        return 2
    _emit(args, lines, result, certs, anomalies, setup, out)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
