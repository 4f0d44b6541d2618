"""JSON wire format. Rationals travel as strings ``"p/q"`` (``"p"`` when q = 1).

Integers are accepted wherever a rational is expected; floats never are.
Every ``*_to_json`` has a matching ``*_from_json`` so reports round-trip.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Optional

from .bogomolov import (
    CxEstimate,
    KosekiKind,
    Method,
    ResolutionProfile,
    SingularPointData,
    Witness,
    koseki_base_constant,
)
from .bounds import Condition, ReiderTable, VanishingReport
from .lattice import SurfaceLattice, validate_lattice
from .stability import ChernCharacter, StabilityPoint
from .walls import Candidate, LemmaReport, SearchWindow


class InputError(ValueError):
    """Malformed or inconsistent input data."""


_RATIONAL = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?")


def parse_rational(x: Any) -> Fraction:
    if isinstance(x, bool):
        raise InputError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        match = _RATIONAL.fullmatch(x)
        if match:
            den = int(match.group(2) or 1)
            if den == 0:
                raise InputError(f"zero denominator: {x!r}")
            return Fraction(int(match.group(1)), den)
    raise InputError(f"not a rational: {x!r}")


def parse_int(x: Any, name: str = "value", minimum: Optional[int] = None) -> int:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise InputError(f"{name} must be an integer, got {x!r}")
    try:
        n = int(x)
    except ValueError:
        raise InputError(f"{name} must be an integer, got {x!r}") from None
    if minimum is not None and n < minimum:
        raise InputError(f"{name} must be >= {minimum}, got {n}")
    return n


def fmt(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _vec(xs) -> list[str]:
    return [fmt(x) for x in xs]


def _parse_vec(xs, name: str) -> list[Fraction]:
    if not isinstance(xs, list):
        raise InputError(f"{name} must be a list")
    return [parse_rational(x) for x in xs]


def _parse_matrix(rows, name: str) -> list[list[Fraction]]:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError(f"{name} must be a list of lists")
    return [[parse_rational(x) for x in r] for r in rows]


# -- inputs -----------------------------------------------------------------

def lattice_from_json(d: dict) -> SurfaceLattice:
    if not isinstance(d, dict) or "gram" not in d:
        raise InputError("lattice needs a gram matrix")
    gram = _parse_matrix(d["gram"], "gram")
    blocks = d.get("exceptional_blocks", [])
    if not isinstance(blocks, list) or not all(isinstance(b, list) for b in blocks):
        raise InputError("exceptional_blocks must be a list of index lists")
    blocks = [[parse_int(i, "block index", 0) for i in b] for b in blocks]
    ample = d.get("ample")
    canon = d.get("canonical_pairing")
    if canon is not None:
        canon = [None if k is None else parse_rational(k) for k in canon]
    names = d.get("basis")
    return SurfaceLattice(
        gram,
        blocks,
        None if ample is None else _parse_vec(ample, "ample"),
        canon,
        None if names is None else tuple(str(n) for n in names),
    )


def lattice_to_json(lat: SurfaceLattice) -> dict:
    out = {
        "gram": [_vec(row) for row in lat.gram],
        "exceptional_blocks": [list(b) for b in lat.exceptional_blocks],
        "ample": None if lat.ample is None else _vec(lat.ample),
    }
    if lat.canonical_pairing is not None:
        out["canonical_pairing"] = [None if k is None else fmt(k) for k in lat.canonical_pairing]
    if lat.basis_names is not None:
        out["basis"] = list(lat.basis_names)
    return out


def profile_from_json(d: dict, base_constant: Optional[Fraction] = None) -> ResolutionProfile:
    if not isinstance(d, dict):
        raise InputError("resolution_profile must be an object")
    points = []
    for k, p in enumerate(d.get("points", [])):
        try:
            gram = _parse_matrix(p["gram"], "gram")
            chi = [parse_int(x, "chi") for x in p["chi"]]
            canon = p.get("canonical")
            points.append(
                SingularPointData(gram, chi, None if canon is None else _parse_vec(canon, "canonical"))
            )
        except (KeyError, TypeError) as e:
            raise InputError(f"singular point {k}: missing or malformed field {e}") from None
        except InputError:
            raise
        except ValueError as e:
            raise InputError(f"singular point {k}: {e}") from None
    h0 = parse_int(d.get("h0_r1", 0), "h0_r1", 0)
    explicit = d.get("base_constant")
    if explicit is not None:
        explicit = parse_rational(explicit)
        if base_constant is not None and explicit != base_constant:
            raise InputError(
                f"base_constant {fmt(explicit)} disagrees with Koseki value {fmt(base_constant)}"
            )
    base = base_constant if base_constant is not None else (explicit or Fraction(0))
    if base < 0:
        raise InputError("base_constant must be nonnegative")
    return ResolutionProfile(tuple(points), h0, base)


def profile_to_json(p: ResolutionProfile) -> dict:
    return {
        "points": [
            {"gram": [_vec(r) for r in q.gram], "chi": list(q.chi), "canonical": _vec(q.canonical)}
            for q in p.points
        ],
        "h0_r1": p.h0_r1,
        "base_constant": fmt(p.base_constant),
    }


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % k for k in range(2, int(n**0.5) + 1))


@dataclass
class SurfaceDescription:
    name: str
    characteristic: int
    lattice: Optional[SurfaceLattice]
    profile: Optional[ResolutionProfile]


def description_from_json(d: dict) -> SurfaceDescription:
    if not isinstance(d, dict):
        raise InputError("surface description must be a JSON object")
    name = str(d.get("name", ""))
    char = parse_int(d.get("characteristic", 0), "characteristic", 0)
    if char != 0 and not _is_prime(char):
        raise InputError(f"characteristic must be 0 or a prime, got {char}")
    koseki = d.get("koseki")
    base = None
    if koseki is not None:
        if char == 0:
            raise InputError("koseki data requires positive characteristic")
        try:
            kind = KosekiKind(koseki["kind"])
        except (KeyError, ValueError, TypeError):
            raise InputError(f"unknown koseki kind in {koseki!r}") from None
        base = koseki_base_constant(
            kind,
            parse_int(koseki.get("k_squared", 0), "k_squared"),
            parse_int(koseki.get("chi_O", 0), "chi_O"),
        )
    lattice = None
    if "lattice" in d:
        lattice = lattice_from_json(d["lattice"])
        report = validate_lattice(lattice)
        if not report:
            raise InputError("invalid lattice: " + "; ".join(report.errors))
    profile = None
    if "resolution_profile" in d:
        profile = profile_from_json(d["resolution_profile"], base)
    return SurfaceDescription(name, char, lattice, profile)


def bundled_surfaces() -> list[str]:
    root = resources.files("reider") / "surfaces"
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".json"))


def load_description(path: str) -> SurfaceDescription:
    """Load a surface file; a bare bundled name such as ``cone-d3.json`` also works."""
    p = Path(path)
    if p.exists():
        text = p.read_text()
    elif p.name in bundled_surfaces() and str(p) == p.name:
        text = (resources.files("reider") / "surfaces" / p.name).read_text()
    else:
        raise InputError(f"no such file: {path}")
    try:
        data = json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON ({e})") from None
    return description_from_json(data)


def _reject_float(s: str):
    raise InputError(f"floating-point literal {s} not allowed; use a \"p/q\" string")


# -- reports ----------------------------------------------------------------

def cx_to_json(est: CxEstimate) -> dict:
    out = {
        "value": fmt(est.value),
        "method": est.method.value,
        "witness": None if est.witness is None else {
            "r": est.witness.r, "v": [list(v) for v in est.witness.v]},
        "r_cap": est.r_cap,
    }
    if est.method is Method.INTEGER_HEURISTIC:
        out["warning"] = "integer search not certified; raise --r-cap"
    return out


def cx_from_json(d: dict) -> CxEstimate:
    w = d.get("witness")
    witness = None if w is None else Witness(w["r"], tuple(tuple(v) for v in w["v"]))
    return CxEstimate(parse_rational(d["value"]), Method(d["method"]), witness, d.get("r_cap"))


def ch_to_json(ch: ChernCharacter) -> dict:
    return {"ch0": ch.ch0, "ch1": _vec(ch.ch1), "ch2": fmt(ch.ch2)}


def ch_from_json(d: dict) -> ChernCharacter:
    return ChernCharacter(parse_int(d["ch0"], "ch0"), _parse_vec(d["ch1"], "ch1"), parse_rational(d["ch2"]))


def point_to_json(pt: StabilityPoint) -> dict:
    return {"s": fmt(pt.s), "t_sq": fmt(pt.t_sq), "c_x": fmt(pt.c_x)}


def point_from_json(d: dict, lattice: SurfaceLattice) -> StabilityPoint:
    return StabilityPoint(
        parse_rational(d["s"]), parse_rational(d["t_sq"]), lattice, parse_rational(d["c_x"])
    )


def _cond_to_json(c: Condition) -> dict:
    return {"name": c.name, "lhs": fmt(c.lhs), "relation": c.relation, "rhs": fmt(c.rhs)}


def _cond_from_json(d: dict) -> Condition:
    return Condition(d["name"], parse_rational(d["lhs"]), d["relation"], parse_rational(d["rhs"]))


def vanishing_to_json(rep: VanishingReport) -> dict:
    return {
        "satisfied": rep.satisfied,
        "partition": list(rep.partition),
        "failed_conditions": [_cond_to_json(c) for c in rep.failed_conditions],
    }


def vanishing_from_json(d: dict) -> VanishingReport:
    return VanishingReport(
        d["satisfied"], tuple(d["partition"]), [_cond_from_json(c) for c in d["failed_conditions"]]
    )


def reider_to_json(t: ReiderTable) -> dict:
    return {
        "c_x": fmt(t.c_x),
        "l_prime": t.l_prime,
        "h_sq": fmt(t.h_sq),
        "denom": t.denom,
        "hypothesis_ok": t.hypothesis_ok,
        "pairs": [{"d_dot_h": fmt(x), "d_sq": fmt(y)} for x, y in t.pairs],
        **({} if t.hypothesis_ok else {"warning": "H^2 > (C_X + l' + 1)^2 fails"}),
    }


def reider_from_json(d: dict) -> ReiderTable:
    return ReiderTable(
        parse_rational(d["c_x"]),
        d["l_prime"],
        parse_rational(d["h_sq"]),
        d["denom"],
        [(parse_rational(p["d_dot_h"]), parse_rational(p["d_sq"])) for p in d["pairs"]],
        d["hypothesis_ok"],
    )


def _cand_to_json(c: Candidate) -> dict:
    return {"r": c.r, "a": list(c.a), "a_dot_h": fmt(c.a_dot_h), "a_sq": fmt(c.a_sq)}


def _cand_from_json(d: dict) -> Candidate:
    return Candidate(d["r"], tuple(d["a"]), parse_rational(d["a_dot_h"]), parse_rational(d["a_sq"]))


def walls_to_json(rep: LemmaReport) -> dict:
    return {
        "passed": rep.passed,
        "candidates": [_cand_to_json(c) for c in rep.candidates],
        "violations": [_cand_to_json(c) for c in rep.violations],
        "modeling_errors": list(rep.modeling_errors),
        "window": {"r_max": rep.window.r_max, "coord_bounds": [list(b) for b in rep.window.coord_bounds]},
        "hypotheses": {
            "c_x": fmt(rep.c_x),
            "l": rep.l,
            "h_sq": fmt(rep.h_sq),
            "required": f"H^2 > (c_x + 2l + 1)^2 = {fmt((rep.c_x + 2 * rep.l + 1) ** 2)}",
        },
    }


def walls_from_json(d: dict) -> LemmaReport:
    w = d["window"]
    h = d["hypotheses"]
    return LemmaReport(
        SearchWindow(w["r_max"], tuple(tuple(b) for b in w["coord_bounds"])),
        parse_rational(h["c_x"]),
        h["l"],
        parse_rational(h["h_sq"]),
        [_cand_from_json(c) for c in d["candidates"]],
        [_cand_from_json(c) for c in d["violations"]],
        list(d["modeling_errors"]),
    )


def dumps(obj) -> str:
    return json.dumps(obj, indent=2)
