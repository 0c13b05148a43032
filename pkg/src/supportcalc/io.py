"""JSON file formats for rings, spectra, complexes and bicomplexes.

Ring::

    {"characteristic": 101, "variables": [["x", 2], ["y", 2]],
     "relations": ["x*y"], "order": "grevlex"}

Spectrum (a bare list is accepted too)::

    {"primes": [{"label": "(x)", "generators": ["x"], "assert_prime": false}, ...]}

Complex: ``degrees`` in increasing order, each with its twists and the
differential to the next degree as rows of polynomial strings (rows indexed
by the next degree's twists)::

    {"ring": {...} (optional), "degrees": [
        {"degree": -1, "twists": [0], "differential": [["x"]]},
        {"degree": 0, "twists": [-2]}]}

Bicomplex: as a complex, with an optional ``relations`` block per degree
(``{"twists": [...], "matrix": [[...]]}``, rows indexed by generators) and
``differential`` giving the images of the generators.
"""

from __future__ import annotations

import json
import os

from .algebra import AlgebraError, GradedRing
from .complexes import FreeComplex, GradedModule
from .dg import BicomplexInput
from .groebner import PresentationMatrix
from .specmodel import SpecModel


class FormatError(AlgebraError):
    pass


def load_json(source):
    """Parse a path, JSON text or an already-parsed object."""
    if isinstance(source, (dict, list)):
        return source
    if isinstance(source, (str, os.PathLike)) and os.path.exists(source):
        with open(source) as fh:
            text = fh.read()
    else:
        text = str(source)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc


def _require(obj, key, where):
    if not isinstance(obj, dict) or key not in obj:
        raise FormatError(f"{where}: missing field {key!r}")
    return obj[key]


def ring_from_json(source) -> GradedRing:
    obj = load_json(source)
    p = _require(obj, "characteristic", "ring")
    variables = _require(obj, "variables", "ring")
    try:
        vs = [(v, 1) if isinstance(v, str) else (str(v[0]), int(v[1])) for v in variables]
    except (TypeError, IndexError, ValueError) as exc:
        raise FormatError(f"ring: bad variable list {variables!r}") from exc
    return GradedRing(int(p), vs, obj.get("relations", []), obj.get("order", "grevlex"))


def ring_to_json(ring: GradedRing) -> dict:
    return ring.describe()


def spec_from_json(source, ring: GradedRing) -> SpecModel:
    obj = load_json(source)
    entries = obj["primes"] if isinstance(obj, dict) else obj
    primes = []
    for k, e in enumerate(entries):
        label = _require(e, "label", f"prime {k}")
        gens = e.get("generators", [])
        primes.append((label, gens, bool(e.get("assert_prime", False))))
    return SpecModel(ring, primes)


def spec_to_json(spec: SpecModel) -> dict:
    return {"primes": [{"label": p.label, "generators": [str(g) for g in p.ideal.generators],
                        "assert_prime": p.status == "asserted"} for p in spec.primes]}


def _matrix(ring, rows, row_twists, col_twists, where):
    rows = rows if rows is not None else []
    if not rows and row_twists:
        rows = [["0"] * len(col_twists) for _ in row_twists]
    try:
        return PresentationMatrix(ring, [[ring(x if isinstance(x, str) else int(x)) for x in r] for r in rows],
                                  row_twists, col_twists)
    except AlgebraError as exc:
        raise FormatError(f"{where}: {exc}") from exc


def _degrees(obj, where):
    degs = _require(obj, "degrees", where)
    if not isinstance(degs, list):
        raise FormatError(f"{where}: 'degrees' must be a list")
    nums = [int(_require(d, "degree", where)) for d in degs]
    if nums and nums != list(range(nums[0], nums[0] + len(nums))):
        raise FormatError(f"{where}: degrees must be consecutive and increasing")
    return degs, (nums[0] if nums else 0)


def complex_from_json(source, ring: GradedRing | None = None) -> FreeComplex:
    obj = load_json(source)
    if ring is None:
        if "ring" not in obj:
            raise FormatError("complex: no ring given")
        ring = ring_from_json(obj["ring"])
    degs, lo = _degrees(obj, "complex")
    if not degs:
        return FreeComplex.zero(ring)
    terms = [tuple(int(t) for t in d.get("twists", [])) for d in degs]
    diffs = []
    for k in range(len(degs) - 1):
        diffs.append(_matrix(ring, degs[k].get("differential"), terms[k + 1], terms[k],
                             f"differential {lo + k}"))
    try:
        return FreeComplex(ring, lo, terms, diffs)
    except AlgebraError as exc:
        raise FormatError(f"complex: {exc}") from exc


def complex_to_json(X: FreeComplex, include_ring: bool = True) -> dict:
    out = {}
    if include_ring:
        out["ring"] = ring_to_json(X.ring)
    degs = []
    for i in X.degrees:
        entry = {"degree": i, "twists": list(X.term(i))}
        if i < X.hi:
            entry["differential"] = X.differential(i).to_strings()
        degs.append(entry)
    out["degrees"] = degs
    return out


def bicomplex_from_json(source, ring: GradedRing | None = None) -> BicomplexInput:
    obj = load_json(source)
    if ring is None:
        if "ring" not in obj:
            raise FormatError("bicomplex: no ring given")
        ring = ring_from_json(obj["ring"])
    degs, lo = _degrees(obj, "bicomplex")
    mods = []
    for d in degs:
        gens = [int(t) for t in d.get("twists", [])]
        rel = d.get("relations") or {}
        rt = [int(t) for t in rel.get("twists", [])]
        mods.append(GradedModule(_matrix(ring, rel.get("matrix"), gens, rt, f"relations {d['degree']}")))
    maps = []
    for k in range(len(degs) - 1):
        maps.append(_matrix(ring, degs[k].get("differential"), mods[k + 1].generator_twists,
                            mods[k].generator_twists, f"differential {lo + k}"))
    try:
        return BicomplexInput(ring, lo, mods, maps)
    except AlgebraError as exc:
        raise FormatError(f"bicomplex: {exc}") from exc


def bicomplex_to_json(F: BicomplexInput, include_ring: bool = True) -> dict:
    out = {}
    if include_ring:
        out["ring"] = ring_to_json(F.ring)
    degs = []
    for k, M in enumerate(F.modules):
        P = M.presentation
        entry = {"degree": F.lo + k, "twists": list(P.row_twists)}
        if P.shape[1]:
            entry["relations"] = {"twists": list(P.col_twists), "matrix": P.to_strings()}
        if k < len(F.maps):
            entry["differential"] = F.maps[k].to_strings()
        degs.append(entry)
    out["degrees"] = degs
    return out


def dumps(obj) -> str:
    """Stable JSON text: fixed indentation, insertion order, trailing newline."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
