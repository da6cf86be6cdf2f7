"""
Text formats for complexes, polyhedral spheres and verification reports.

Two formats:

* ``json``: ``{"kind", "n", "variant", "vertices", "apexes", "cells"}`` where
  each cell is ``{"type": "simplex", "vertices": [...]}`` or
  ``{"type": "bipyramid", "apexes": [...], "equator": [...], "site": [a, u]}``.
  Reports serialize as ``{"kind": "reports", "reports": [...]}``.
* ``facets``: one cell per line, ``S v1 v2 v3 v4`` or ``B a1 a2 | e1 e2 e3``.
  Lines starting with ``#`` are comments; ``# key: value`` comments carry
  metadata (``kind``, ``n``, ``variant``, ``apexes``).

Output is deterministic: cells are sorted, keys are emitted in a fixed order.
"""

import json

from .complex_core import SimplicialComplex
from .errors import MixedDimensions, ParseError
from .sphere import BipyramidCell, PolyhedralSphere
from .verify import LemmaId, LemmaReport, Verdict, Witness

FORMATS = ("json", "facets")


def _site_from_apexes(apexes):
    lo, hi = sorted(apexes)
    if (lo + hi - 1) % 2 or (hi - lo - 1) % 2:
        return None
    return ((lo + hi - 1) // 2, (hi - lo - 1) // 2)


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------


def _cells_json(obj):
    if isinstance(obj, SimplicialComplex):
        return [{"type": "simplex", "vertices": list(f)} for f in obj.sorted_facets()]
    cells = [{"type": "simplex", "vertices": list(f)} for f in sorted(obj.simplex_cells)]
    for b in obj.sorted_bipyramids():
        cells.append({
            "type": "bipyramid",
            "apexes": list(b.apexes),
            "equator": list(b.equator),
            "site": list(b.site) if b.site is not None else None,
        })
    return cells


def _report_json(r: LemmaReport) -> dict:
    return {
        "lemma_id": r.lemma_id.value,
        "parameters": r.parameters,
        "verdict": r.verdict.value,
        "witnesses": [{"reason": w.reason, "faces": [list(f) for f in w.faces]}
                      for w in r.witnesses],
        "computed_truth": None if r.computed_truth is None
        else [list(f) for f in r.computed_truth],
        "details": {k: [list(f) for f in v] for k, v in r.details.items()},
        "metrics": r.metrics,
    }


def to_json_obj(obj):
    if isinstance(obj, LemmaReport):
        obj = [obj]
    if isinstance(obj, (list, tuple)):
        return {"kind": "reports", "reports": [_report_json(r) for r in obj]}
    if isinstance(obj, PolyhedralSphere):
        return {
            "kind": "sphere",
            "n": obj.n,
            "variant": obj.variant,
            "vertices": list(obj.vertices),
            "apexes": {str(a): q for a, q in obj.apexes},
            "cells": _cells_json(obj),
        }
    if isinstance(obj, SimplicialComplex):
        return {
            "kind": "complex",
            "n": None,
            "variant": None,
            "vertices": list(obj.vertices),
            "apexes": {},
            "cells": _cells_json(obj),
        }
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _tuples(faces):
    return tuple(tuple(f) for f in faces)


def _report_from_json(d) -> LemmaReport:
    return LemmaReport(
        lemma_id=LemmaId(d["lemma_id"]),
        parameters=dict(d["parameters"]),
        verdict=Verdict(d["verdict"]),
        witnesses=tuple(Witness(w["reason"], _tuples(w["faces"])) for w in d["witnesses"]),
        computed_truth=None if d.get("computed_truth") is None else _tuples(d["computed_truth"]),
        details={k: _tuples(v) for k, v in d.get("details", {}).items()},
        metrics=dict(d.get("metrics", {})),
    )


def from_json_obj(d):
    kind = d.get("kind")
    if kind == "reports":
        return [_report_from_json(r) for r in d["reports"]]
    simplices, bips = [], []
    for c in d.get("cells", []):
        if c["type"] == "simplex":
            simplices.append(tuple(c["vertices"]))
        elif c["type"] == "bipyramid":
            site = tuple(c["site"]) if c.get("site") else _site_from_apexes(c["apexes"])
            bips.append(BipyramidCell(tuple(c["apexes"]), tuple(c["equator"]), site))
        else:
            raise ParseError(f"unknown cell type {c['type']!r}")
    if kind == "complex" or (kind is None and not bips and not d.get("apexes")):
        return SimplicialComplex(simplices)
    return PolyhedralSphere(
        simplex_cells=frozenset(tuple(sorted(s)) for s in simplices),
        bipyramid_cells=frozenset(bips),
        n=d.get("n"),
        variant=d.get("variant"),
        apexes=tuple(sorted((int(a), q) for a, q in d.get("apexes", {}).items())),
    )


# ---------------------------------------------------------------------------
# facets text
# ---------------------------------------------------------------------------


def _facets_text(obj) -> str:
    lines = []
    if isinstance(obj, PolyhedralSphere):
        lines.append("# kind: sphere")
        if obj.n is not None:
            lines.append(f"# n: {obj.n}")
        if obj.variant is not None:
            lines.append(f"# variant: {obj.variant}")
        if obj.apexes:
            lines.append("# apexes: " + " ".join(f"{a}={q}" for a, q in obj.apexes))
        lines.extend("S " + " ".join(map(str, f)) for f in sorted(obj.simplex_cells))
        for b in obj.sorted_bipyramids():
            lines.append("B {} {} | {} {} {}".format(*b.apexes, *b.equator))
    elif isinstance(obj, SimplicialComplex):
        lines.append("# kind: complex")
        lines.extend("S " + " ".join(map(str, f)) for f in obj.sorted_facets())
    else:
        raise TypeError(f"facets format cannot hold {type(obj).__name__}")
    return "\n".join(lines) + "\n"


def _int_tokens(tokens, line_no, text):
    out = []
    for tok, col in tokens:
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"expected a vertex label, got {tok!r}", line_no, col) from None
        if v < 1:
            raise ParseError(f"vertex labels must be positive, got {v}", line_no, col)
        if v in out:
            raise ParseError(f"duplicate vertex {v}", line_no, col)
        out.append(v)
    return out


def _tokenize(line):
    """Whitespace-split tokens with 1-based column positions."""
    out, i = [], 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((line[i:j], i + 1))
        i = j
    return out


def _parse_facets(text: str):
    meta = {}
    simplices, bips = [], []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if ":" in body:
                key, _, value = body.partition(":")
                meta[key.strip()] = value.strip()
            continue
        tokens = _tokenize(raw)
        tag, col = tokens[0]
        if tag == "S":
            vs = _int_tokens(tokens[1:], line_no, raw)
            if not vs:
                raise ParseError("empty simplex", line_no, col)
            simplices.append(tuple(sorted(vs)))
        elif tag == "B":
            bars = [k for k, (t, _) in enumerate(tokens) if t == "|"]
            if len(bars) != 1:
                raise ParseError("bipyramid line needs exactly one '|'", line_no, col)
            k = bars[0]
            apexes = _int_tokens(tokens[1:k], line_no, raw)
            equator = _int_tokens(tokens[k + 1:], line_no, raw)
            if len(apexes) != 2 or len(equator) != 3:
                raise ParseError("bipyramid needs 2 apexes and 3 equator vertices", line_no, col)
            if set(apexes) & set(equator):
                raise ParseError("apex repeated on the equator", line_no, col)
            bips.append(BipyramidCell(tuple(apexes), tuple(equator), _site_from_apexes(apexes)))
        else:
            raise ParseError(f"unknown cell tag {tag!r}", line_no, col)
    kind = meta.get("kind") or ("sphere" if bips else "complex")
    if kind == "complex":
        if bips:
            raise ParseError("bipyramid cells in a simplicial complex")
        try:
            return SimplicialComplex(simplices)
        except MixedDimensions as exc:
            raise ParseError(str(exc)) from None
    apexes = []
    for item in meta.get("apexes", "").split():
        a, _, q = item.partition("=")
        apexes.append((int(a), int(q)))
    return PolyhedralSphere(
        simplex_cells=frozenset(simplices),
        bipyramid_cells=frozenset(bips),
        n=int(meta["n"]) if "n" in meta else None,
        variant=meta.get("variant"),
        apexes=tuple(sorted(apexes)),
    )


# ---------------------------------------------------------------------------
# public
# ---------------------------------------------------------------------------


def serialize(obj, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(to_json_obj(obj), indent=1) + "\n"
    if fmt == "facets":
        return _facets_text(obj)
    raise ValueError(f"unknown format {fmt!r}")


def detect_format(text: str) -> str:
    return "json" if text.lstrip().startswith("{") else "facets"


def deserialize(text: str, fmt: str = None):
    fmt = fmt or detect_format(text)
    if fmt == "json":
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
        return from_json_obj(d)
    if fmt == "facets":
        return _parse_facets(text)
    raise ValueError(f"unknown format {fmt!r}")
