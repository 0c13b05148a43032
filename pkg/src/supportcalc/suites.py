"""Seeded property suites, their reports, and replayable counterexamples.

Every check is a registered function taking a JSON-shaped payload, so a
failing record's payload can be written to a file and re-run with
:func:`replay`.  Reports contain no timings unless ``SuiteConfig.timing`` is
set, which keeps the bytes identical for identical config and seed.
"""

from __future__ import annotations

import hashlib
import json
import os
import random
import time
from dataclasses import asdict, dataclass, field

from . import io
from .algebra import GradedRing
from .complexes import (
    FreeComplex,
    GradedModule,
    direct_sum,
    ext_module,
    hom_complex,
    shift,
    tensor,
)
from .dg import (
    BicomplexInput,
    check_tot_koszul,
    dg_ring,
    dg_shift,
    thick_witness_koszul_square,
    totalize,
)
from .groebner import Ideal, limits, use_cache
from .random_instances import random_acyclic_complex, random_complex
from .specmodel import MODEL_CHECKS, Poset, SpecModel, natural_posets, random_poset
from .support import (
    check_minimality_witness,
    is_torsion,
    koszul_ideal,
    koszul_object,
    koszul_tower_triangle,
    supp_complex,
    v_set,
)

SUITES = ("kos-props", "intersection", "tensor", "tot", "thick", "poset", "minimality")


@dataclass
class SuiteConfig:
    seed: int = 0
    instances: int = 100
    window: int | None = None
    gb_degree_ceiling: int = 64
    cache_dir: str | None = None
    spec_file: str | None = None
    ring_file: str | None = None
    counterexample_dir: str | None = None
    timing: bool = False

    def __post_init__(self):
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.instances <= 0 or self.gb_degree_ceiling <= 0 or (self.window is not None and self.window <= 0):
            raise ValueError("bounds must be positive")

    def describe(self) -> dict:
        d = asdict(self)
        d.pop("timing")
        d.pop("counterexample_dir")
        d.pop("cache_dir")
        return d


@dataclass
class Report:
    suite: str
    config: dict
    records: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r["verdict"] == "pass" for r in self.records)

    def failures(self) -> list:
        return [r for r in self.records if r["verdict"] != "pass"]

    def to_json(self) -> dict:
        recs = sorted(self.records, key=lambda r: r["check_id"])
        return {
            "suite": self.suite,
            "config": self.config,
            "summary": {"checks": len(recs), "failed": sum(r["verdict"] != "pass" for r in recs),
                        "verdict": "pass" if self.passed else "fail"},
            "records": recs,
        }

    def summary_lines(self) -> list:
        groups = {}
        for r in self.records:
            kind = r["check_id"].rsplit("/", 1)[0]
            g = groups.setdefault(kind, [0, 0])
            g[0] += 1
            g[1] += r["verdict"] != "pass"
        lines = [f"{k}: {n - f}/{n} pass" for k, (n, f) in sorted(groups.items())]
        lines.append(f"{self.suite}: {'PASS' if self.passed else 'FAIL'}")
        return lines


# ---------------------------------------------------------------------------
# standard settings


def standard_ring(relations=()) -> GradedRing:
    return GradedRing(101, [("x", 2), ("y", 2)], relations)


def standard_spec(ring: GradedRing) -> SpecModel:
    primes = [("(x)", ["x"]), ("(y)", ["y"]), ("(x,y)", ["x", "y"])]
    if not ring.relations:
        primes.insert(0, ("(0)", []))
    return SpecModel(ring, primes)


def _digest(payload) -> str:
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()[:16]


def _ctx(payload):
    ring = io.ring_from_json(payload["ring"])
    spec = io.spec_from_json(payload["spec"], ring) if "spec" in payload else None
    return ring, spec


def _cx(payload, key, ring):
    return io.complex_from_json(payload[key], ring)


# ---------------------------------------------------------------------------
# registered checks: payload -> (ok, details)

CHECKS = {}
STATEMENTS = {}


def check(name, statement):
    def deco(fn):
        CHECKS[name] = fn
        STATEMENTS[name] = statement
        return fn
    return deco


@check("koszul-support", "Koszul support: supp(X//r) = V(r) cap supp(X)")
def _koszul_support(payload):
    ring, spec = _ctx(payload)
    X = _cx(payload, "X", ring)
    r = ring(payload["r"])
    lhs = supp_complex(koszul_object(X, r), spec)
    rhs = v_set(Ideal(ring, [r]), spec) & supp_complex(X, spec)
    return lhs == rhs, {"lhs": lhs.labels(), "rhs": rhs.labels()}


@check("invertible-vanishing", "X//r is zero when r is invertible")
def _invertible(payload):
    ring, _ = _ctx(payload)
    X = _cx(payload, "X", ring)
    K = koszul_object(X, ring(payload["r"]))
    return K.is_acyclic(), {}


@check("koszul-order", "supports of Koszul objects do not depend on the generator order")
def _koszul_order(payload):
    ring, spec = _ctx(payload)
    X = _cx(payload, "X", ring)
    gens = payload["gens"]
    a = supp_complex(koszul_ideal(X, gens), spec)
    b = supp_complex(koszul_ideal(X, gens[::-1]), spec)
    return a == b, {"forward": a.labels(), "reverse": b.labels()}


@check("radical-insensitive", "V((a^2)) = V((a))")
def _radical(payload):
    ring, spec = _ctx(payload)
    gens = [ring(g) for g in payload["gens"]]
    a = v_set(Ideal(ring, gens), spec)
    b = v_set(Ideal(ring, [g * g for g in gens]), spec)
    return a == b, {"V(a)": a.labels(), "V(a^2)": b.labels()}


@check("torsion", "homology of X//r^n is r-torsion")
def _torsion(payload):
    ring, _ = _ctx(payload)
    X = _cx(payload, "X", ring)
    r = ring(payload["r"])
    K = koszul_object(X, r ** int(payload["n"]))
    bad = [i for i in K.degrees if not is_torsion(K.homology(i), r)]
    return not bad, {"non_torsion_degrees": bad}


@check("tower", "octahedral tower X//r^n -> X//r^(n+1) -> twisted X//r: long exact sequence dimensions")
def _tower(payload):
    ring, _ = _ctx(payload)
    X = _cx(payload, "X", ring)
    rep = koszul_tower_triangle(X, payload["r"], int(payload["n"]), tuple(payload["window"]))
    return rep.passed, {"window": list(rep.window), "cells": rep.degrees_checked, "failures": rep.failures[:5]}


@check("intersection", "supp Hom*(C, D) = supp C cap supp D, with finitely many nonzero Ext degrees both ways")
def _intersection(payload):
    ring, spec = _ctx(payload)
    C, D = _cx(payload, "C", ring), _cx(payload, "D", ring)
    E = ext_module(C, D)
    lhs = supp_complex(hom_complex(C, D), spec)
    rhs = supp_complex(C, spec) & supp_complex(D, spec)
    nz_cd = [n for n, M in E.items() if not M.is_zero()]
    nz_dc = [n for n, M in ext_module(D, C).items() if not M.is_zero()]
    # a perfect Hom complex lives in finitely many degrees; the sets are read off it
    finite = all(isinstance(n, int) for n in nz_cd + nz_dc)
    return lhs == rhs and finite, {"lhs": lhs.labels(), "rhs": rhs.labels(),
                                   "ext_degrees": nz_cd, "ext_degrees_reversed": nz_dc}


@check("tensor", "supp(X tensor Y) = supp X cap supp Y")
def _tensor(payload):
    ring, spec = _ctx(payload)
    X, Y = _cx(payload, "X", ring), _cx(payload, "Y", ring)
    lhs = supp_complex(tensor(X, Y), spec)
    rhs = supp_complex(X, spec) & supp_complex(Y, spec)
    sym = supp_complex(tensor(Y, X), spec)
    return lhs == rhs and sym == lhs, {"lhs": lhs.labels(), "rhs": rhs.labels()}


@check("tot-unit", "tot A = A")
def _tot_unit(payload):
    ring, _ = _ctx(payload)
    lo, hi = payload["window"]
    T = totalize(BicomplexInput.single(GradedModule.free(ring, [0])), (lo, hi))
    A = dg_ring(ring, T.lo, T.hi)
    return T.same_as(A), {}


@check("tot-module-shift", "tot N[d] = Sigma^d tot N")
def _tot_module_shift(payload):
    ring, _ = _ctx(payload)
    F = io.bicomplex_from_json(payload["F"], ring)
    d = int(payload["d"])
    lo, hi = payload["window"]
    lhs = totalize(F.module_shift(d), (lo, hi))
    rhs = dg_shift(totalize(F, (lo + d, hi + d)), d)
    return lhs.same_as(rhs), {}


@check("tot-shift", "tot Sigma^n F = Sigma^n tot F")
def _tot_shift(payload):
    ring, _ = _ctx(payload)
    F = BicomplexInput.from_free_complex(_cx(payload, "F", ring))
    n = int(payload["n"])
    lo, hi = payload["window"]
    lhs = totalize(F.shift(n), (lo, hi))
    rhs = dg_shift(totalize(F, (lo + n, hi + n)), n)
    return lhs.same_as(rhs), {}


@check("tot-acyclic", "tot of an acyclic complex is acyclic")
def _tot_acyclic(payload):
    ring, _ = _ctx(payload)
    X = _cx(payload, "F", ring)
    lo, hi = payload["window"]
    T = totalize(BicomplexInput.from_free_complex(X), (lo, hi))
    bad = {n: h for n, h in T.homology_table().items() if h}
    return not bad and X.is_acyclic(), {"nonzero": {str(k): v for k, v in bad.items()}}


@check("tot-koszul", "tot E is isomorphic to a suspension of A//a via a signed relabelling")
def _tot_koszul(payload):
    ring, _ = _ctx(payload)
    rep = check_tot_koszul(ring, payload["elements"])
    ok = rep.passed and rep.homology_match
    return ok, {"suspension": rep.shift, "signs": rep.signs, "window": list(rep.window),
                "other_suspension_matches": rep.positive_shift_homology_match, "detail": rep.detail}


@check("thick-witness", "Koszul complex on squares: (a^2)H = 0, p kills (a)H and H/(a)H, sqrt(a^2) = p")
def _thick(payload):
    ring, _ = _ctx(payload)
    rep = thick_witness_koszul_square(ring, payload["gens"])
    return rep.passed, {k: v for k, v in asdict(rep).items() if k != "passed"}


@check("minimality", "Hom*(X, Y) is nonzero when supp X = supp Y = {p}")
def _minimality(payload):
    ring, spec = _ctx(payload)
    X, Y = _cx(payload, "X", ring), _cx(payload, "Y", ring)
    rep = check_minimality_witness(X, Y, payload["prime"], spec)
    return rep.passed, {"ext_degrees": rep.nonzero_degrees}


def _model_check(fn):
    def run(payload):
        ok = True
        fails = []
        for up in payload["posets"]:
            rep = fn(Poset(up))
            if not rep.passed:
                ok = False
                fails.append({"poset": up, "failures": rep.failures[:3]})
        return ok, {"posets": len(payload["posets"]), "failing": fails[:5]}
    return run


for _fn in MODEL_CHECKS:
    _name = "model-" + _fn.__name__.removeprefix("check_").replace("_", "-")
    check(_name, "model-level: " + (_fn.__doc__ or _fn.__name__.removeprefix("check_").replace("_", " ")))(
        _model_check(_fn))


# ---------------------------------------------------------------------------
# running


class Runner:
    def __init__(self, suite: str, config: SuiteConfig):
        self.report = Report(suite, config.describe())
        self.config = config
        self.counts = {}

    def run(self, kind: str, payload: dict, tag: str | None = None):
        k = self.counts.get(kind, 0)
        self.counts[kind] = k + 1
        check_id = f"{self.report.suite}/{kind}/{tag or f'{k:04d}'}"
        t0 = time.perf_counter()
        ok, details = CHECKS[kind](payload)
        rec = {"check_id": check_id, "statement": STATEMENTS[kind], "inputs_digest": _digest(payload),
               "verdict": "pass" if ok else "fail", "details": details}
        if self.config.timing:
            rec["timing_s"] = round(time.perf_counter() - t0, 4)
        if not ok:
            ce = {"check": kind, "check_id": check_id, "payload": payload}
            rec["counterexample"] = ce
            self._write_counterexample(check_id, ce)
        self.report.records.append(rec)
        return ok

    def _write_counterexample(self, check_id, ce):
        d = self.config.counterexample_dir
        if not d:
            return
        os.makedirs(d, exist_ok=True)
        name = check_id.replace("/", "_") + ".json"
        with open(os.path.join(d, name), "w") as fh:
            fh.write(io.dumps(ce))


def replay(source) -> tuple:
    """Re-run a counterexample file; returns ``(ok, details)``."""
    ce = io.load_json(source)
    return CHECKS[ce["check"]](ce["payload"])


def _base_payload(ring, spec=None):
    out = {"ring": io.ring_to_json(ring)}
    if spec is not None:
        out["spec"] = io.spec_to_json(spec)
    return out


def _rng(config: SuiteConfig, name: str) -> random.Random:
    return random.Random(f"{config.seed}:{name}")


def _settings(config: SuiteConfig):
    if config.ring_file:
        ring = io.ring_from_json(config.ring_file)
    else:
        ring = standard_ring()
    spec = io.spec_from_json(config.spec_file, ring) if config.spec_file else standard_spec(ring)
    return ring, spec


KOSZUL_ELEMENTS = ("x", "y", "x + y", "x^2", "x + 2*y")


def kos_instances(config: SuiteConfig, ring) -> list:
    """The random complexes shared by the support and torsion checks."""
    rng = _rng(config, "kos-props")
    return [random_complex(ring, rng) for _ in range(config.instances)]


def _elements(ring):
    if all(v in ring.names for v in ("x", "y")):
        return list(KOSZUL_ELEMENTS)
    return [str(ring.gens[0])]


def koszul_support_part(config, runner, ring, spec, instances):
    base = _base_payload(ring, spec)
    for X in instances:
        xj = io.complex_to_json(X, include_ring=False)
        for r in _elements(ring):
            runner.run("koszul-support", {**base, "X": xj, "r": r})


def koszul_extras_part(config, runner, ring, spec, instances):
    base = _base_payload(ring, spec)
    rng = _rng(config, "kos-props:units")
    els = _elements(ring)
    for k, X in enumerate(instances):
        xj = io.complex_to_json(X, include_ring=False)
        runner.run("invertible-vanishing", {**base, "X": xj, "r": str(rng.randint(1, ring.p - 1))})
        if k < 20:
            runner.run("koszul-order", {**base, "X": xj, "gens": [els[k % len(els)], els[(k + 1) % len(els)]]})
    for r in els:
        runner.run("radical-insensitive", {**base, "gens": [r]})
    runner.run("radical-insensitive", {**base, "gens": [str(g) for g in ring.gens]})


def torsion_part(config, runner, ring, instances):
    base = _base_payload(ring)
    for X in instances:
        xj = io.complex_to_json(X, include_ring=False)
        for r in [str(g) for g in ring.gens]:
            for n in (1, 2, 3):
                runner.run("torsion", {**base, "X": xj, "r": r, "n": n})


def suite_kos_props(config: SuiteConfig, runner: Runner):
    ring, spec = _settings(config)
    instances = kos_instances(config, ring)
    koszul_support_part(config, runner, ring, spec, instances)
    koszul_extras_part(config, runner, ring, spec, instances)
    torsion_part(config, runner, ring, instances)
    tower_suite(config, runner, ring)


def tower_suite(config, runner, ring, window=(0, 40)):
    base = _base_payload(ring)
    A = FreeComplex.free_module(ring)
    x = str(ring.gens[0])
    objects = [("A", A), (f"A-mod-{x}", koszul_object(A, x))]
    for name, X in objects:
        for r in [str(g) for g in ring.gens]:
            for n in (1, 2, 3):
                runner.run("tower", {**base, "X": io.complex_to_json(X, include_ring=False), "r": r, "n": n,
                                     "window": list(window)}, tag=f"{name}-{r}-{n}")


def _pair_suite(kind, config, runner, rings):
    for label, ring in rings:
        spec = standard_spec(ring)
        base = _base_payload(ring, spec)
        rng = _rng(config, f"{kind}:{label}")
        for k in range(config.instances):
            X = random_complex(ring, rng)
            Y = random_complex(ring, rng)
            names = ("C", "D") if kind == "intersection" else ("X", "Y")
            runner.run(kind, {**base, names[0]: io.complex_to_json(X, include_ring=False),
                              names[1]: io.complex_to_json(Y, include_ring=False)}, tag=f"{label}-{k:04d}")


def suite_intersection(config, runner):
    if config.ring_file:
        ring, _ = _settings(config)
        rings = [("custom", ring)]
    else:
        rings = [("poly", standard_ring()), ("xy", standard_ring(["x*y"]))]
    _pair_suite("intersection", config, runner, rings)


def suite_tensor(config, runner):
    ring, _ = _settings(config)
    _pair_suite("tensor", config, runner, [("poly", ring)])


def suite_tot(config, runner):
    ring, _ = _settings(config)
    base = _base_payload(ring)
    hi = config.window or 16
    window = [0, hi]
    runner.run("tot-unit", {**base, "window": window}, tag="A")
    x = ring.gens[0]
    modules = [GradedModule.free(ring, [0]), GradedModule.cyclic(ring, [x]),
               GradedModule.cyclic(ring, [g * g for g in ring.gens], twist=2)]
    for m_idx, M in enumerate(modules):
        for d in (-2, -1, 0, 1, 2):
            F = BicomplexInput.single(M)
            runner.run("tot-module-shift", {**base, "F": io.bicomplex_to_json(F, include_ring=False), "d": d,
                                            "window": window}, tag=f"M{m_idx}-{d:+d}")
    rng = _rng(config, "tot")
    for k in range(max(1, config.instances // 10)):
        X = random_complex(ring, rng)
        n = rng.choice((-2, -1, 0, 1, 2))
        runner.run("tot-shift", {**base, "F": io.complex_to_json(X, include_ring=False), "n": n, "window": window})
    for k in range(50):
        X = random_acyclic_complex(ring, rng)
        runner.run("tot-acyclic", {**base, "F": io.complex_to_json(X, include_ring=False), "window": window})
    names = [str(g) for g in ring.gens]
    for c in range(0, min(2, len(names)) + 1):
        runner.run("tot-koszul", {**base, "elements": names[:c]}, tag="(" + ",".join(names[:c]) + ")")


def suite_thick(config, runner):
    for ring in (GradedRing(101, [("x", 2)]), standard_ring()):
        base = _base_payload(ring)
        gens = [str(g) for g in ring.gens]
        runner.run("thick-witness", {**base, "gens": gens}, tag="(" + ",".join(gens) + ")")
    ring = standard_ring()
    runner.run("thick-witness", {**_base_payload(ring), "gens": []}, tag="()")


def model_corpus(rng: random.Random, exhaustive_max: int = 5, random_count: int = 1000, random_max: int = 8):
    """Naturally labeled posets up to ``exhaustive_max`` points, and random ones up to ``random_max``."""
    exhaustive = [P for n in range(exhaustive_max + 1) for P in natural_posets(n)]
    randoms = [random_poset(rng, rng.randint(1, random_max)) for _ in range(random_count)]
    return exhaustive, randoms


def suite_poset(config, runner):
    if config.spec_file:
        _, spec = _settings(config)
        segments = [("spec", [spec.poset])]
    else:
        segments = [("diamond", [standard_spec(standard_ring()).poset])]
    exhaustive, randoms = model_corpus(_rng(config, "poset"))
    segments += [("exhaustive", exhaustive), ("random", randoms)]
    for seg, posets in segments:
        payload = {"posets": [list(P.up) for P in posets]}
        for fn in MODEL_CHECKS:
            name = "model-" + fn.__name__.removeprefix("check_").replace("_", "-")
            runner.run(name, payload, tag=seg)


def suite_minimality(config, runner):
    ring = GradedRing(101, [("x", 2)])
    spec = SpecModel(ring, [("(0)", []), ("(x)", ["x"])])
    base = _base_payload(ring, spec)
    A = FreeComplex.free_module(ring)
    kos = {i: koszul_object(A, ring.gens[0] ** i) for i in (1, 2, 3)}
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            runner.run("minimality", {**base, "X": io.complex_to_json(kos[i], include_ring=False),
                                      "Y": io.complex_to_json(kos[j], include_ring=False), "prime": "(x)"},
                       tag=f"x{i}-x{j}")
    runner.run("minimality", {**base, "X": io.complex_to_json(kos[1], include_ring=False),
                              "Y": io.complex_to_json(shift(kos[1], 3), include_ring=False), "prime": "(x)"},
               tag="x1-shift3")
    both = direct_sum(kos[1], kos[2])
    runner.run("minimality", {**base, "X": io.complex_to_json(both, include_ring=False),
                              "Y": io.complex_to_json(both, include_ring=False), "prime": "(x)"}, tag="sum-self")


DRIVERS = {
    "kos-props": suite_kos_props,
    "intersection": suite_intersection,
    "tensor": suite_tensor,
    "tot": suite_tot,
    "thick": suite_thick,
    "poset": suite_poset,
    "minimality": suite_minimality,
}


def run_suite(name: str, config: SuiteConfig | None = None) -> Report:
    config = config or SuiteConfig()
    if name != "all" and name not in DRIVERS:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    runner = Runner(name, config)
    with limits(degree_ceiling=config.gb_degree_ceiling), use_cache(config.cache_dir):
        for s in (SUITES if name == "all" else (name,)):
            DRIVERS[s](config, runner)
    return runner.report

