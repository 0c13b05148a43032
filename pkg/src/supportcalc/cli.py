"""``engine``: supports, property suites, Koszul objects, totalization and poset models.

Every flag may also come from an ``ENGINE_``-prefixed environment variable
(``ENGINE_RING``, ``ENGINE_SEED``, ``ENGINE_GB_CEILING`` ...); flags win.

Exit codes: 0 pass, 1 check failure, 2 usage or parse error, 3 Groebner
resource ceiling, 4 window error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import io
from .algebra import AlgebraError
from .complexes import FreeComplex
from .dg import WindowError, totalize
from .groebner import ResourceError, limits, use_cache
from .specmodel import MODEL_CHECKS
from .suites import SUITES, SuiteConfig, replay, run_suite, standard_ring, standard_spec
from .support import (
    SupportSet,
    koszul_ideal,
    koszul_tower_triangle,
    local_global_filtration,
    supp_complex,
)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE, EXIT_WINDOW = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def parse_window(text):
    """``N`` means ``0..N``; ``lo:hi`` is taken literally."""
    if text is None:
        return None
    try:
        if ":" in str(text):
            lo, hi = (int(t) for t in str(text).split(":", 1))
        else:
            lo, hi = 0, int(text)
    except ValueError as exc:
        raise UsageError(f"bad window {text!r}; use N or LO:HI") from exc
    if lo > hi:
        raise WindowError(f"empty window [{lo}, {hi}]")
    return lo, hi


def _common(p):
    p.add_argument("--ring", help="ring JSON file")
    p.add_argument("--spec", help="spectrum JSON file")
    p.add_argument("--seed", type=int)
    p.add_argument("--window", help="N (meaning 0..N) or LO:HI")
    p.add_argument("--gb-ceiling", type=int, help="largest S-pair degree before giving up")
    p.add_argument("--cache", help="directory for cached Groebner bases")
    p.add_argument("--json", help="write the machine-readable result here")


def build_parser():
    ap = argparse.ArgumentParser(prog="engine", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("supp", help="print the support of a perfect complex")
    _common(p)
    p.add_argument("complex", nargs="?", help="complex JSON file")
    p.add_argument("--complex", dest="complex_flag", help="complex JSON file")

    p = sub.add_parser("check", help="run a seeded property suite")
    _common(p)
    p.add_argument("suite", nargs="?", help=", ".join(SUITES + ("all",)))
    p.add_argument("--instances", type=int)
    p.add_argument("--counterexamples", help="directory for failing-check files")
    p.add_argument("--timing", action="store_true", help="record per-check timings (reports stop being byte-stable)")
    p.add_argument("--replay", help="re-run a counterexample file instead of a suite")

    p = sub.add_parser("koszul", help="homology and support of X//(elements)")
    _common(p)
    p.add_argument("--complex", dest="complex_flag", help="complex JSON file (default: A)")
    p.add_argument("--elements", required=True, help="comma-separated ring elements")
    p.add_argument("--tower", help="R:N, also certify the tower triangle for r^N")

    p = sub.add_parser("totalize", help="DG homology table of tot F")
    _common(p)
    p.add_argument("bicomplex", nargs="?", help="bicomplex (or complex) JSON file")

    p = sub.add_parser("model", help="model-level checks on the spectrum's poset")
    _common(p)
    return ap


ENV_KEYS = ("ring", "spec", "seed", "window", "gb_ceiling", "cache", "json", "instances")


def apply_env(args, environ=None):
    env = os.environ if environ is None else environ
    for key in ENV_KEYS:
        if getattr(args, key, None) is None and hasattr(args, key):
            val = env.get("ENGINE_" + key.upper())
            if val is not None:
                setattr(args, key, int(val) if key in ("seed", "gb_ceiling", "instances") else val)
    return args


def _ring(args):
    return io.ring_from_json(args.ring) if args.ring else standard_ring()


def _spec(args, ring):
    return io.spec_from_json(args.spec, ring) if args.spec else standard_spec(ring)


def _emit(args, payload):
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(io.dumps(payload))


def _table(rows, header):
    widths = [max(len(str(r[k])) for r in rows + [header]) for k in range(len(header))]
    fmt = "  ".join(f"{{:>{w}}}" for w in widths)
    return "\n".join(fmt.format(*r) for r in [header] + rows)


def cmd_supp(args, out):
    path = args.complex_flag or args.complex
    if not path:
        raise UsageError("supp needs a complex file")
    ring = _ring(args)
    spec = _spec(args, ring)
    X = io.complex_from_json(path, ring)
    s = supp_complex(X, spec)
    print(str(s), file=out)
    _emit(args, {"command": "supp", "support": s.labels(), "ring": io.ring_to_json(ring),
                 "spec": io.spec_to_json(spec)})
    return EXIT_PASS


def cmd_check(args, out):
    if args.replay:
        ok, details = replay(args.replay)
        print(f"replay: {'pass' if ok else 'fail'}", file=out)
        _emit(args, {"command": "replay", "verdict": "pass" if ok else "fail", "details": details})
        return EXIT_PASS if ok else EXIT_FAIL
    if not args.suite:
        raise UsageError("check needs a suite name")
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES + ('all',))}")
    window = parse_window(args.window)
    try:
        config = SuiteConfig(
            seed=args.seed or 0,
            instances=args.instances or 100,
            window=None if window is None else window[1],
            gb_degree_ceiling=args.gb_ceiling or 64,
            cache_dir=args.cache,
            spec_file=args.spec,
            ring_file=args.ring,
            counterexample_dir=args.counterexamples,
            timing=args.timing,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = run_suite(args.suite, config)
    for line in report.summary_lines():
        print(line, file=out)
    _emit(args, report.to_json())
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_koszul(args, out):
    ring = _ring(args)
    spec = _spec(args, ring)
    X = io.complex_from_json(args.complex_flag, ring) if args.complex_flag else FreeComplex.free_module(ring)
    elements = [e.strip() for e in args.elements.split(",") if e.strip()]
    K = koszul_ideal(X, elements)
    window = parse_window(args.window)
    rows = []
    table = K.homology_table(window or K.default_window())
    for i, dims in sorted(table.items()):
        for d, n in sorted(dims.items()):
            if n:
                rows.append((i, d, n))
    s = supp_complex(K, spec)
    print(f"support: {s}", file=out)
    if rows:
        print(_table(rows, ("H^i", "internal", "dim")), file=out)
    result = {"command": "koszul", "elements": elements, "support": s.labels(),
              "homology": [{"i": i, "internal": d, "dim": n} for i, d, n in rows]}
    code = EXIT_PASS
    if args.tower:
        try:
            r, n = args.tower.rsplit(":", 1)
            n = int(n)
        except ValueError as exc:
            raise UsageError("--tower takes R:N") from exc
        rep = koszul_tower_triangle(X, r, n, window or (0, 40))
        print(f"tower {r}^{n}: {'pass' if rep.passed else 'fail'} ({rep.degrees_checked} cells)", file=out)
        result["tower"] = {"passed": rep.passed, "window": list(rep.window), "failures": rep.failures}
        code = EXIT_PASS if rep.passed else EXIT_FAIL
    _emit(args, result)
    return code


def cmd_totalize(args, out):
    if not args.bicomplex:
        raise UsageError("totalize needs a bicomplex file")
    window = parse_window(args.window) or (-4, 16)
    obj = io.load_json(args.bicomplex)
    # a ring flag wins; otherwise the file's own ring, then the standard one
    ring = _ring(args) if args.ring or "ring" not in obj else None
    F = io.bicomplex_from_json(obj, ring)
    T = totalize(F, window)
    rows = [(n, T.dim(n), h) for n, h in sorted(T.homology_table().items())]
    print(_table(rows, ("degree", "dim", "H")), file=out)
    if T.truncated:
        print("(window-truncated: nonzero pieces lie outside the window)", file=out)
    _emit(args, {"command": "totalize", "window": list(window), "truncated": T.truncated,
                 "homology": {str(n): h for n, _, h in rows}})
    return EXIT_PASS


def cmd_model(args, out):
    ring = _ring(args)
    spec = _spec(args, ring)
    P = spec.poset
    reports = [fn(P) for fn in MODEL_CHECKS]
    print(f"{len(spec)} primes, {2 ** len(spec)} subsets", file=out)
    for i, lab in enumerate(spec.labels):
        above = [spec.labels[j] for j in range(len(spec)) if j != i and P.leq(i, j)]
        print(f"  {lab} <= {', '.join(above) if above else '-'}", file=out)
    layers = local_global_filtration(SupportSet(spec, spec.full()))
    print("layers: " + " | ".join(str(L) for L in layers), file=out)
    for rep in reports:
        print(f"{rep.name}: {'pass' if rep.passed else 'fail'}", file=out)
    _emit(args, {"command": "model", "spec": io.spec_to_json(spec),
                 "checks": [{"name": r.name, "passed": r.passed, "failures": r.failures} for r in reports]})
    return EXIT_PASS if all(r.passed for r in reports) else EXIT_FAIL


COMMANDS = {"supp": cmd_supp, "check": cmd_check, "koszul": cmd_koszul, "totalize": cmd_totalize,
            "model": cmd_model}


def main(argv=None, out=None, environ=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        args = apply_env(args, environ)
    except ValueError as exc:
        print(f"engine: bad environment value: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        ceiling = args.gb_ceiling or 64
        with limits(degree_ceiling=ceiling), use_cache(args.cache):
            return COMMANDS[args.command](args, out)
    except WindowError as exc:
        print(f"engine: window error: {exc}", file=sys.stderr)
        return EXIT_WINDOW
    except ResourceError as exc:
        print(f"engine: resource ceiling: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, AlgebraError, OSError, KeyError) as exc:
        print(f"engine: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
