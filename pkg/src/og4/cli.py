"""Command-line front end: ``og4 construct | verify | quotients``.

Reports are JSON on stdout.  Exit codes: 0 pass, 2 precondition, 3 cap,
4 check failed, 5 I/O or schema problem.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from pathlib import Path

from . import coset, families
from .coset import (
    verify_core_free,
    verify_generates,
    verify_index_two,
    verify_not_reversing,
)
from .elements import SimpleGroupT, make_a5, make_psl2
from .errors import CapExceeded, NotPrime, OG4Error, PreconditionFailed
from .quotients import (
    algebraic_cycle_certificate,
    count_unoriented_cyclic_quotients,
    quotient_graph,
)

REPORT_SCHEMA = "og4-report/1"
CERT_SCHEMA = "og4-certificate/1"
FAMILIES = ("aff-unoriented", "aff-oriented", "nonab-unoriented", "nonab-oriented-24", "cr-vs", "lex")
EXPORTS = {"edgelist": "txt", "dot": "dot", "json": "json"}

EXIT_OK, EXIT_PRECONDITION, EXIT_CAP, EXIT_CHECK, EXIT_IO = 0, 2, 3, 4, 5


class SchemaError(OG4Error):
    pass


def parse_T(name: str) -> SimpleGroupT:
    """``A5`` or ``PSL2(q)`` (also ``PSL2-q``)."""
    text = name.strip().upper().replace("_", "")
    if text == "A5":
        return make_a5()
    m = re.fullmatch(r"PSL2[(-](\d+)\)?", text)
    if m:
        try:
            return make_psl2(int(m.group(1)))
        except NotPrime as exc:
            raise PreconditionFailed("q is a prime at least 5", str(exc)) from exc
    raise SchemaError(f"unknown simple group {name!r}; use A5 or PSL2(q)")


# -- building ----------------------------------------------------------------------


def _cr_vs_payload(r, v, s):
    graph = families.build_cr_vs(r, v, s)
    und = families.underlying_graph(graph)
    checks = {
        "vertex_count": graph.vertex_count == r * v**s,
        "out_valency": graph.out_valency() == {v},
        "connected": graph.is_connected(),
        "underlying_valency": und.valency() == {2 * v},
        "underlying_connected": und.is_connected(),
        "vertex_transitive": graph.vertex_orbit_count() == 1,
        "actions_preserve_arcs": graph.orientation_preserved(),
    }
    if s == 1 and v == 2:
        checks["isomorphic_to_lex"] = families.is_isomorphic(und, families.build_lex_c_r_2k1(r))
    payload = {
        "family": "cr-vs",
        "parameters": {"r": r, "v": v, "s": s},
        "vertices": graph.vertex_count,
        "edges": len(und.edges()),
        "checks": checks,
        "valid": all(checks.values()),
    }
    return payload, graph


def _lex_payload(r):
    g = families.build_lex_c_r_2k1(r)
    checks = {"vertex_count": g.n == 2 * r, "four_valent": g.valency() == {4}, "connected": g.is_connected()}
    payload = {
        "family": "lex",
        "parameters": {"r": r},
        "vertices": g.n,
        "edges": len(g.edges()),
        "bipartite": g.is_bipartite(),
        "girth": g.girth(),
        "checks": checks,
        "valid": all(checks.values()),
    }
    return payload, g


def build(family: str, params: dict, mode: str = "auto"):
    """(certificate payload, graph or None, ConstructionCertificate or None)."""
    if family == "aff-unoriented":
        c = families.construct_aff_unoriented(params["p"], params["r"], mode=mode)
    elif family == "aff-oriented":
        c = families.construct_aff_oriented(params["p"], params["r"], mode=mode)
    elif family == "nonab-unoriented":
        c = families.construct_nonabelian_unoriented(params["r"], parse_T(params["T"]))
    elif family == "nonab-oriented-24":
        c = families.construct_nonabelian_oriented_24(parse_T(params["T"]))
    elif family == "cr-vs":
        payload, graph = _cr_vs_payload(params["r"], params["v"], params["s"])
        return payload, graph, None
    elif family == "lex":
        payload, graph = _lex_payload(params["r"])
        return payload, graph, None
    else:
        raise SchemaError(f"unknown family {family!r}")
    return c.to_json(), c.graph, c


def _params_from_args(args) -> dict:
    need = {
        "aff-unoriented": ("p", "r"),
        "aff-oriented": ("p", "r"),
        "nonab-unoriented": ("r", "T"),
        "nonab-oriented-24": ("T",),
        "cr-vs": ("r", "v", "s"),
        "lex": ("r",),
    }[args.family]
    params = {}
    for key in need:
        value = getattr(args, key)
        if value is None:
            if key == "T":
                value = "A5"
            else:
                raise SchemaError(f"--{key} is required for {args.family}")
        params[key] = value
    return params


# -- exports -----------------------------------------------------------------------


def export_graph(graph, fmt: str) -> str:
    if isinstance(graph, families.Graph):
        if fmt == "edgelist":
            return "".join(f"{u + 1} {v + 1}\n" for u, v in graph.edges())
        if fmt == "dot":
            lines = ["graph G {"] + [f"  {v + 1};" for v in range(graph.n)]
            lines += [f"  {u + 1} -- {v + 1};" for u, v in graph.edges()]
            return "\n".join(lines + ["}"]) + "\n"
        return json.dumps({"vertices": graph.n, "edges": [[u + 1, v + 1] for u, v in graph.edges()]}, indent=1)
    if fmt == "edgelist":
        return coset.edge_list(graph)
    if fmt == "dot":
        return coset.to_dot(graph)
    return json.dumps(coset.to_json(graph), indent=1)


def render_figures(family: str, payload: dict, graph, directory: Path) -> list:
    from . import figures

    directory.mkdir(parents=True, exist_ok=True)
    made = []
    if family == "cr-vs" and graph is not None and graph.vertex_count <= 400:
        layer = [lab[0] for lab in graph.labels]
        made.append(figures.draw_layered_digraph(graph.out_neighbors, layer, directory / "cr_vs.png",
                                                 f"C_{payload['parameters']['r']}"
                                                 f"({payload['parameters']['v']},{payload['parameters']['s']})"))
    q = payload.get("quotient")
    if q:
        made.append(figures.draw_quotient_cycle(q["r"], q["oriented"], directory / "quotient.png",
                                                f"{q['classification']}({q['r']})"))
        blocks = q.get("graph", {}).get("blocks")
        if blocks:
            made.append(figures.draw_block_sizes([len(b) for b in blocks], directory / "blocks.png", "N-orbits"))
    return [str(p) for p in made]


# -- re-verification ---------------------------------------------------------------


def _diff(a, b, path="") -> list:
    if isinstance(a, dict) and isinstance(b, dict):
        out = []
        for k in sorted(set(a) | set(b)):
            sub = f"{path}.{k}" if path else k
            if k not in a or k not in b:
                out.append(sub)
            else:
                out += _diff(a[k], b[k], sub)
        return out
    if isinstance(a, list) and isinstance(b, list) and len(a) == len(b):
        out = []
        for i, (x, y) in enumerate(zip(a, b)):
            out += _diff(x, y, f"{path}[{i}]")
        return out
    return [] if a == b else [path or "<root>"]


def recheck_stored(payload: dict) -> dict:
    """Conditions (i)-(iv) recomputed from the stored generators."""
    gens = payload["generators"]
    G = [families.element_from_json(x) for x in gens["G"]]
    S = [families.element_from_json(x) for x in gens["S"]]
    g = families.element_from_json(gens["g"])
    n = families.element_from_json(gens["n"])
    out = {
        "core_free": verify_core_free(G, S)[0],
        "not_reversing": verify_not_reversing(S, g),
        "index_two": verify_index_two(S, g),
    }
    family = payload["family"]
    named = {k: families.element_from_json(v) for k, v in payload["named"].items()}
    out["g_equals_n_sigma"] = g == n * named["sigma"]
    if family in ("aff-unoriented", "aff-oriented"):
        p, r = payload["parameters"]["p"], payload["parameters"]["r"]
        order = p ** (r - 1) * 2 * r if family == "aff-unoriented" else p**r * 2**r * r
        out["generates"] = verify_generates(coset.GroupSpec(G, expected_order=order), S, g)[0]
    else:
        T = parse_T(payload["T"])
        m = len(g.x)
        inst = families.WreathInstance(
            family, T, m, m // 2 if family == "nonab-unoriented" else 3, G, S, g, n,
            named["sigma"].top, [x.top for x in G if not x.in_base()],
            s=S[0] if family == "nonab-unoriented" else None,
            phis=S if family == "nonab-oriented-24" else [],
        )
        out["generates"] = verify_generates(inst.group_spec(), S, g)[0]
    return out


# -- commands ----------------------------------------------------------------------


def _report(command, params, checks, payload, code, timings, extra=None) -> dict:
    rep = {
        "schema": REPORT_SCHEMA,
        "command": command,
        "parameters": params,
        "checks": checks,
        "certificate": payload,
        "exit": code,
        "timings": timings,
    }
    if extra:
        rep.update(extra)
    return rep


def _check_list(payload: dict) -> list:
    merged = dict(payload.get("conditions", {}))
    merged.update(payload.get("checks", {}))
    if "socle" in payload:
        merged["socle_equality"] = payload["socle"]["equality"]
    return [{"name": k, "passed": bool(v)} for k, v in merged.items()]


def cmd_construct(args) -> tuple[dict, int]:
    params = _params_from_args(args)
    t0 = time.perf_counter()
    payload, graph, _ = build(args.family, params, args.mode)
    timings = {"construct": time.perf_counter() - t0}
    checks = _check_list(payload)
    code = EXIT_OK if payload["valid"] else EXIT_CHECK
    extra = {}
    if args.out:
        Path(args.out).write_text(json.dumps({"schema": CERT_SCHEMA, "certificate": payload}, indent=1, sort_keys=True) + "\n")
        extra["certificate_path"] = args.out
    if args.export:
        if graph is None:
            raise SchemaError("graph export needs a materialized graph (graph mode)")
        path = Path(args.export_path or f"og4-{args.family}.{EXPORTS[args.export]}")
        path.write_text(export_graph(graph, args.export))
        extra["export_path"] = str(path)
    if args.figures:
        extra["figures"] = render_figures(args.family, payload, graph, Path(args.figures))
    return _report(["construct", args.family], params, checks, payload, code, timings, extra), code


def _load_certificate(path: str) -> dict:
    data = json.loads(Path(path).read_text())
    if not isinstance(data, dict) or data.get("schema") != CERT_SCHEMA:
        raise SchemaError(f"expected schema {CERT_SCHEMA!r}, found {data.get('schema') if isinstance(data, dict) else None!r}")
    return data["certificate"]


def cmd_verify(args) -> tuple[dict, int]:
    stored = _load_certificate(args.certificate)
    family, params = stored["family"], stored["parameters"]
    t0 = time.perf_counter()
    fresh, _, _ = build(family, params, stored.get("mode", "auto"))
    fresh = json.loads(json.dumps(fresh))
    timings = {"rebuild": time.perf_counter() - t0}
    mismatches = _diff(stored, fresh)
    checks = [{"name": "matches_fresh_construction", "passed": not mismatches}]
    if "generators" in stored:
        t1 = time.perf_counter()
        try:
            rechecked = recheck_stored(stored)
        except (OG4Error, KeyError, ValueError, TypeError) as exc:
            rechecked = {"stored_generators_readable": False}
            checks.append({"name": "stored_generators_error", "passed": False, "detail": str(exc)})
        timings["recheck"] = time.perf_counter() - t1
        checks += [{"name": f"stored:{k}", "passed": bool(v)} for k, v in rechecked.items()]
    checks += [{"name": f"fresh:{c['name']}", "passed": c["passed"]} for c in _check_list(fresh)]
    ok = all(c["passed"] for c in checks)
    code = EXIT_OK if ok else EXIT_CHECK
    return _report(["verify", args.certificate], params, checks, fresh, code, timings,
                   {"mismatches": mismatches}), code


def cmd_quotients(args) -> tuple[dict, int]:
    stored = _load_certificate(args.certificate)
    family, params = stored["family"], stored["parameters"]
    if family not in FAMILIES[:4]:
        raise PreconditionFailed("certificate carries a group construction", f"family {family}")
    t0 = time.perf_counter()
    _, graph, cert = build(family, params, stored.get("mode", "auto"))
    inst = cert.instance
    rows = []
    if family == "nonab-unoriented":
        wanted = set(args.divisors) if args.divisors else None
        for d, length, qc in count_unoriented_cyclic_quotients(inst):
            if wanted is None or d in wanted:
                rows.append({"subgroup": "N" if d == 1 else f"M_{d}", "d": d,
                             "classification": qc.classification, "r": qc.r})
    elif graph is not None:
        rep = quotient_graph(graph, inst.normal_spec())
        rows.append({"subgroup": "N", "classification": rep.classification, "r": rep.r,
                     "blocks": len(rep.blocks.blocks), "semiregular": rep.semiregular})
    else:
        qc = algebraic_cycle_certificate(inst.group_spec(), inst.S_gens, inst.g, inst.normal_spec())
        rows.append({"subgroup": "N", "classification": qc.classification, "r": qc.r})
    timings = {"quotients": time.perf_counter() - t0}
    checks = [{"name": f"{row['subgroup']}:cycle", "passed": row["classification"].endswith("Cycle")} for row in rows]
    code = EXIT_OK if all(c["passed"] for c in checks) else EXIT_CHECK
    return _report(["quotients", args.certificate], params, checks, None, code, timings, {"quotients": rows}), code


# -- entry point -------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="og4", description="Build and check 4-valent G-oriented graphs and their normal quotients.")
    ap.add_argument("--report", help="write the JSON report here instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a family member and verify it")
    c.add_argument("family", choices=FAMILIES)
    c.add_argument("--p", type=int)
    c.add_argument("--r", type=int)
    c.add_argument("--v", type=int)
    c.add_argument("--s", type=int)
    c.add_argument("--T", type=str, help="A5 or PSL2(q)")
    c.add_argument("--mode", choices=("auto", "graph", "algebraic"), default="auto")
    c.add_argument("--out", help="certificate JSON path")
    c.add_argument("--export", choices=tuple(EXPORTS))
    c.add_argument("--export-path")
    c.add_argument("--figures", help="directory for PNG figures")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="re-run every check on a stored certificate")
    v.add_argument("certificate")
    v.set_defaults(func=cmd_verify)

    q = sub.add_parser("quotients", help="classify the normal quotients of a certificate's group")
    q.add_argument("certificate")
    q.add_argument("--divisors", type=int, nargs="*", help="restrict to these divisors d of r")
    q.set_defaults(func=cmd_quotients)
    return ap


def _emit(report: dict, path: str | None):
    text = json.dumps(report, indent=1, sort_keys=True, default=str) + "\n"
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    command = [args.command] + ([args.family] if args.command == "construct" else [])
    try:
        report, code = args.func(args)
    except PreconditionFailed as exc:
        code = EXIT_PRECONDITION
        report = _report(command, {}, [], None, code, {},
                         {"error": {"kind": "PreconditionFailed", "hypothesis": exc.hypothesis, "detail": exc.detail}})
    except CapExceeded as exc:
        code = EXIT_CAP
        report = _report(command, {}, [], None, code, {}, {"error": {"kind": "CapExceeded", "detail": str(exc)}})
    except (SchemaError, OSError, json.JSONDecodeError) as exc:
        code = EXIT_IO
        report = _report(command, {}, [], None, code, {}, {"error": {"kind": type(exc).__name__, "detail": str(exc)}})
    except OG4Error as exc:
        code = EXIT_CHECK
        report = _report(command, {}, [], None, code, {}, {"error": {"kind": type(exc).__name__, "detail": str(exc)}})
    try:
        _emit(report, args.report)
    except OSError as exc:
        print(f"og4: cannot write report: {exc}", file=sys.stderr)
        return EXIT_IO
    if "error" in report:
        err = report["error"]
        print(f"og4: {err['kind']}: {err.get('hypothesis', '')} {err['detail']}".strip(), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
