"""The ten acceptance criteria, each run at its time limit.

Every test records one line ``criterion N [name]: PASS|FAIL (t s / limit s)``;
the lines are printed at the end of the pytest run (see conftest.py) and by
running this file directly.
"""

import random
import time

import pytest

import curated
import oracles
from supportcalc import GradedRing
from supportcalc.specmodel import SpecModel
from supportcalc.suites import (
    Runner,
    SuiteConfig,
    kos_instances,
    koszul_support_part,
    standard_ring,
    standard_spec,
    suite_intersection,
    suite_minimality,
    suite_poset,
    suite_tensor,
    suite_tot,
    torsion_part,
    tower_suite,
)
from supportcalc.support import koszul_object, supp_complex

RESULTS = {}
SEED = 0
INSTANCES = 100


def record(number, name, limit, body):
    t0 = time.perf_counter()
    detail = body()
    elapsed = time.perf_counter() - t0
    ok = not detail and elapsed < limit
    RESULTS[number] = f"criterion {number} [{name}]: {'PASS' if ok else 'FAIL'} ({elapsed:.1f} s / limit {limit} s)"
    if elapsed >= limit:
        detail = (detail or []) + [f"took {elapsed:.1f} s, limit {limit} s"]
    assert not detail, "\n".join(map(str, detail[:10]))


def failures(runner):
    return [(r["check_id"], r["details"]) for r in runner.report.failures()]


def config(**kw):
    return SuiteConfig(seed=SEED, instances=INSTANCES, **kw)


def test_criterion_01_koszul_support():
    def body():
        ring = standard_ring()
        spec = standard_spec(ring)
        cfg = config()
        runner = Runner("kos-props", cfg)
        instances = kos_instances(cfg, ring)
        koszul_support_part(cfg, runner, ring, spec, instances)
        bad = failures(runner)
        if runner.counts.get("koszul-support", 0) < 5 * INSTANCES:
            bad.append("too few instances")
        # independent oracle: supports by evaluation at random points
        primes = [("(0)", []), ("(x)", ["x"]), ("(y)", ["y"]), ("(x,y)", ["x", "y"])]
        for k, X in enumerate(instances[:25]):
            for r in ("x", "x + 2*y"):
                K = koszul_object(X, r)
                if supp_complex(K, spec).labels() != oracles.support_by_evaluation(K, primes, k):
                    bad.append(f"instance {k}, r = {r}: evaluation oracle disagrees")
        return bad

    record(1, "Koszul support identity", 60, body)


def test_criterion_02_intersection():
    def body():
        cfg = config()
        runner = Runner("intersection", cfg)
        suite_intersection(cfg, runner)
        bad = failures(runner)
        if runner.counts.get("intersection", 0) < 2 * INSTANCES:
            bad.append("too few pairs")
        return bad

    record(2, "support of Hom between perfect complexes", 120, body)


def test_criterion_03_tensor():
    def body():
        cfg = config()
        runner = Runner("tensor", cfg)
        suite_tensor(cfg, runner)
        return failures(runner)

    record(3, "support of tensor products", 120, body)


def test_criterion_04_tower():
    def body():
        cfg = config()
        runner = Runner("kos-props", cfg)
        tower_suite(cfg, runner, standard_ring(), window=(0, 40))
        bad = failures(runner)
        if runner.counts.get("tower", 0) != 12:
            bad.append("expected 12 tower cases")
        return bad

    record(4, "Koszul tower octahedral certificate", 30, body)


def test_criterion_05_torsion():
    def body():
        ring = standard_ring()
        cfg = config()
        runner = Runner("kos-props", cfg)
        torsion_part(cfg, runner, ring, kos_instances(cfg, ring))
        return failures(runner)

    record(5, "torsion colimit surrogate", 30, body)


def test_criterion_06_totalization():
    def body():
        cfg = config()
        runner = Runner("tot", cfg)
        suite_tot(cfg, runner)
        bad = failures(runner)
        if runner.counts.get("tot-acyclic", 0) != 50:
            bad.append("expected 50 acyclic complexes")
        return bad

    record(6, "totalization", 30, body)


def test_criterion_07_thick_witness():
    """Literal check: (a^2) H = 0 and p kills both filtration subquotients, on F[x] and F[x,y]."""
    from supportcalc.dg import thick_witness_koszul_square

    def body():
        bad = []
        for ring in (GradedRing(101, [("x", 2)]), standard_ring()):
            gens = [str(g) for g in ring.gens]
            rep = thick_witness_koszul_square(ring, gens)
            if not rep.passed:
                bad.append(f"({','.join(gens)}): {rep.detail}; least p-power killing H is {rep.power_needed}")
        return bad

    record(7, "Thick(k) witness", 30, body)


def test_criterion_08_poset_model():
    def body():
        cfg = config()
        runner = Runner("poset", cfg)
        suite_poset(cfg, runner)
        return failures(runner)

    record(8, "poset model", 60, body)


def test_criterion_09_minimality():
    def body():
        cfg = config()
        runner = Runner("minimality", cfg)
        suite_minimality(cfg, runner)
        bad = failures(runner)
        if runner.counts.get("minimality", 0) < 9:
            bad.append("expected the nine (i, j) pairs")
        return bad

    record(9, "minimality witnesses", 10, body)


def test_criterion_10_groebner_oracle():
    def body():
        return curated.run_all(SEED)

    record(10, "Groebner kernel oracle", 60, body)


if __name__ == "__main__":
    import sys

    code = pytest.main([__file__, "-q", "-p", "no:cacheprovider"])
    sys.exit(code)
