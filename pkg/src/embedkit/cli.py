"""Command line front end.

Exit codes: 0 success, 2 invalid input, 3 honest ignorance (an inconclusive
or unconverged verdict, or a blown search cap), 64 unknown subcommand.
Output is byte-identical across runs for identical input; JSON mode sorts
keys and never emits floating point.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .errors import (
    EmbedkitError,
    InvalidInputError,
    NotAHeightAlgebraError,
    OrbitTooLargeError,
    RepresentationTooLargeError,
    UnsupportedRankError,
)
from .lattice_cone import (
    DEFAULT_MEMBERSHIP_BUDGET,
    PolyCone,
    cone_from_generators,
)
from .monoid import DEFAULT_MAX_NEW, normal_monoid_check, perfect_closure
from .parabolic import (
    LEVI_WEYL_CAP,
    ParabolicData,
    ce_finite_g_orbits,
    ce_orbit_subdiagrams,
    ce_smooth,
    sigma_cone,
)
from .rep_theory import tensor_decompose
from .root_system import GroupType, group_info
from .sl2 import Height, height_algebra_basis, orbit_structure
from .svariety import SVarietyData, analyze_svariety, hv_report
from .toric import analyze_toric

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INCONCLUSIVE = 3
EXIT_USAGE = 64

_SUBCOMMANDS = (
    "group",
    "tensor",
    "toric",
    "svariety",
    "hv",
    "monoid-perfect",
    "monoid-normal",
    "ce",
    "sl2",
)

_USAGE = (
    "usage: embedkit SUBCOMMAND [options]\n"
    "subcommands: group, tensor, toric, svariety, hv, monoid perfect,\n"
    "             monoid normal, ce, sl2\n"
    "run 'embedkit SUBCOMMAND --help' for the options of one subcommand\n"
)


# ---------------------------------------------------------------------------
# argument parsing helpers


def _parse_vector(text: str, flag: str) -> tuple[int, ...]:
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    parts = s.replace(",", " ").split()
    if not parts:
        raise InvalidInputError(f"{flag}: empty vector in {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise InvalidInputError(f"{flag}: cannot parse vector {text!r}") from None


def _parse_vectors(text: str, flag: str) -> list[tuple[int, ...]]:
    chunks = [c for c in text.split(";") if c.strip()]
    if not chunks:
        raise InvalidInputError(f"{flag}: no vectors in {text!r}")
    return [_parse_vector(c, flag) for c in chunks]


def _parse_group(text: str) -> GroupType:
    try:
        return GroupType.parse(text)
    except InvalidInputError as exc:
        raise InvalidInputError(f"--group: {exc}") from None


def _parse_levi(text: str) -> frozenset[int]:
    parts = text.replace(",", " ").split()
    try:
        return frozenset(int(p) for p in parts)
    except ValueError:
        raise InvalidInputError(f"--levi: cannot parse node list {text!r}") from None


# ---------------------------------------------------------------------------
# rendering helpers


def _color_on() -> bool:
    return os.environ.get("EMBEDKIT_COLOR", "").strip().lower() in (
        "1",
        "true",
        "yes",
        "on",
    )


_PALETTE = {
    "yes": "\x1b[32m",
    "true": "\x1b[32m",
    "no": "\x1b[31m",
    "false": "\x1b[31m",
    "inconclusive": "\x1b[33m",
    "unknown": "\x1b[33m",
    "not_applicable": "\x1b[2m",
}


def _paint(value: str) -> str:
    code = _PALETTE.get(value)
    if code is None or not _color_on():
        return value
    return f"{code}{value}\x1b[0m"


def _fmt(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return _paint("true" if value else "false")
    if isinstance(value, str):
        return _paint(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(str(x) for x in value) + "]"
    return str(value)


def _vectors_text(vectors) -> str:
    return "; ".join(_fmt(list(v)) for v in vectors)


def _cone_json(cone: PolyCone) -> dict:
    return {
        "rays": [list(r) for r in cone.ray_generators],
        "facets": [[str(Fraction(c)) for c in n] for n in cone.facet_normals],
    }


def _monomial_text(m) -> str:
    a = "A" if m.i == 1 else f"A^{m.i}"
    if m.j == 0:
        return a
    b = "B" if m.j == 1 else f"B^{m.j}"
    return f"{a} {b}"


def _face_json(face) -> dict:
    return {"dim": face.dim, "generators": list(face.generator_indices)}


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (payload, text lines, context, exit code)


def _cmd_group(args):
    g = _parse_group(args.group)
    info = group_info(g)
    payload = {
        "group": g.describe(),
        "dim": info.dim,
        "rank": info.rank,
        "num_positive_roots": info.num_positive_roots,
        "complexity": info.complexity,
        "weyl_order": info.weyl_order,
        "orbit_param_bound": info.orbit_param_bound,
    }
    lines = [f"{k}: {_fmt(v)}" for k, v in payload.items()]
    return payload, lines, {"group": g}, EXIT_OK


def _cmd_tensor(args):
    g = _parse_group(args.group)
    lhs = _parse_vector(args.lhs, "--lhs")
    rhs = _parse_vector(args.rhs, "--rhs")
    decomp = tensor_decompose(g, lhs, rhs)
    payload = {
        "group": g.describe(),
        "lhs": list(lhs),
        "rhs": list(rhs),
        "terms": [{"weight": list(w), "mult": m} for w, m in decomp.terms],
    }
    pieces = [
        (f"{m} " if m > 1 else "") + "V" + _fmt(list(w)) for w, m in decomp.terms
    ]
    lines = [
        f"group: {g.describe()}",
        f"lhs: {_fmt(list(lhs))}",
        f"rhs: {_fmt(list(rhs))}",
        "terms: " + " + ".join(pieces),
    ]
    return payload, lines, {"group": g}, EXIT_OK


def _cmd_toric(args):
    gens = _parse_vectors(args.gens, "--gens")
    rep = analyze_toric(args.rank, gens, budget=args.budget)
    payload = {
        "rank": rep.rank,
        "generators": [list(g) for g in rep.generators],
        "effective": rep.effective,
        "solid": rep.solid,
        "note": rep.note,
        "normal": rep.normal,
        "witness": None if rep.normal_witness is None else list(rep.normal_witness),
        "cone": _cone_json(rep.cone),
        "orbit_count": rep.orbit_count,
        "orbit_faces": None
        if rep.orbit_faces is None
        else [_face_json(f) for f in rep.orbit_faces],
        "ideal_faces": None
        if rep.ideal_faces is None
        else [dict(_face_json(f), ideal=label) for f, label in rep.ideal_faces],
    }
    lines = [
        f"rank: {rep.rank}",
        f"generators: {_vectors_text(rep.generators)}",
        f"effective: {_fmt(rep.effective)}",
        f"solid: {_fmt(rep.solid)}" + (f" ({rep.note})" if rep.note else ""),
        f"normal: {_fmt(rep.normal)}"
        + (f" (witness {_fmt(list(rep.normal_witness))})" if rep.normal_witness else ""),
    ]
    if rep.orbit_faces is not None:
        lines.append(f"orbit_count: {rep.orbit_count}")
        for f in rep.orbit_faces:
            lines.append(f"  face dim {f.dim}: generators {_fmt(list(f.generator_indices))}")
    code = EXIT_INCONCLUSIVE if rep.normal == "inconclusive" else EXIT_OK
    return payload, lines, {"cone": rep.cone}, code


def _cmd_svariety(args):
    g = _parse_group(args.group)
    gens = _parse_vectors(args.gens, "--gens")
    rep = analyze_svariety(SVarietyData(g, tuple(gens)), budget=args.budget)
    payload = {
        "group": g.describe(),
        "generators": [list(w) for w in rep.data.generators],
        "cone_K": _cone_json(rep.cone_K),
        "orbit_count": rep.orbit_count,
        "normal": rep.normal,
        "witness": None if rep.normal_witness is None else list(rep.normal_witness),
        "small_boundary": rep.small_boundary,
        "factorial": rep.factorial,
        "type_hv": rep.type_hv,
    }
    lines = [
        f"group: {g.describe()}",
        f"generators: {_vectors_text(rep.data.generators)}",
        f"orbit_count: {rep.orbit_count}",
        f"normal: {_fmt(rep.normal)}"
        + (f" (witness {_fmt(list(rep.normal_witness))})" if rep.normal_witness else ""),
        f"small_boundary: {_fmt(rep.small_boundary)}",
        f"factorial: {_fmt(rep.factorial)}",
        f"type_hv: {_fmt(rep.type_hv)}",
    ]
    shaky = (
        rep.normal == "inconclusive"
        or rep.small_boundary is None
        or rep.factorial == "unknown"
    )
    code = EXIT_INCONCLUSIVE if shaky else EXIT_OK
    return payload, lines, {"group": g, "cone": rep.cone_K}, code


def _cmd_hv(args):
    g = _parse_group(args.group)
    w = _parse_vector(args.weight, "--weight")
    rep = hv_report(g, w)
    payload = {
        "group": g.describe(),
        "weight": list(rep.weight),
        "orbits": list(rep.orbits),
        "factorial": rep.factorial,
    }
    lines = [
        f"group: {g.describe()}",
        f"weight: {_fmt(list(rep.weight))}",
        "orbits: " + ", ".join(rep.orbits),
        f"factorial: {_fmt(rep.factorial)}",
    ]
    return payload, lines, {"group": g}, EXIT_OK


def _cmd_monoid_perfect(args):
    g = _parse_group(args.group)
    gens = _parse_vectors(args.gens, "--gens")
    res = perfect_closure(g, gens, max_new=args.max_new, budget=args.budget)
    payload = {
        "group": g.describe(),
        "input": [list(w) for w in gens],
        "closure_generators": [list(w) for w in res.closure_generators],
        "is_perfect": res.is_perfect,
        "converged": res.converged,
        "generates_character_group": res.generates_character_group,
        "defines_monoid": res.defines_monoid,
        "is_trivial_monoid": res.is_trivial_monoid,
        "iterations_used": res.iterations_used,
    }
    lines = [
        f"group: {g.describe()}",
        f"input: {_vectors_text(gens)}",
        f"closure_generators: {_vectors_text(res.closure_generators)}",
        f"is_perfect: {_fmt(res.is_perfect)}",
        f"converged: {_fmt(res.converged)}",
        f"generates_character_group: {_fmt(res.generates_character_group)}",
        f"defines_monoid: {_fmt(res.defines_monoid)}",
        f"is_trivial_monoid: {_fmt(res.is_trivial_monoid)}",
        f"iterations_used: {res.iterations_used}",
    ]
    shaky = not res.converged or res.is_trivial_monoid == "unknown"
    code = EXIT_INCONCLUSIVE if shaky else EXIT_OK
    return payload, lines, {"group": g}, code


def _cmd_monoid_normal(args):
    g = _parse_group(args.group)
    gens = _parse_vectors(args.cone, "--cone")
    cone = cone_from_generators(gens, g.total_rank)
    v = normal_monoid_check(g, cone)
    payload = {
        "group": g.describe(),
        "cone": _cone_json(cone),
        "contains_neg_simple_roots": v.contains_neg_simple_roots,
        "dominant_part_generates": v.dominant_part_generates,
        "is_normal_monoid": v.is_normal_monoid,
        "central_part_pointed": v.central_part_pointed,
        "semisimple_dominant_trivial": v.semisimple_dominant_trivial,
        "has_zero": v.has_zero,
    }
    lines = [
        f"group: {g.describe()}",
        f"cone rays: {_vectors_text(cone.ray_generators)}",
        f"contains_neg_simple_roots: {_fmt(v.contains_neg_simple_roots)}",
        f"dominant_part_generates: {_fmt(v.dominant_part_generates)}",
        f"is_normal_monoid: {_fmt(v.is_normal_monoid)}",
        f"central_part_pointed: {_fmt(v.central_part_pointed)}",
        f"semisimple_dominant_trivial: {_fmt(v.semisimple_dominant_trivial)}",
        f"has_zero: {_fmt(v.has_zero)}",
    ]
    return payload, lines, {"group": g, "cone": cone}, EXIT_OK


def _cmd_ce(args):
    g = _parse_group(args.group)
    data = ParabolicData(g, _parse_levi(args.levi))
    picked = [args.orbits, args.sigma, args.smooth, args.finite]
    want_all = not any(picked)
    payload: dict = {"group": g.describe(), "levi": sorted(data.levi_nodes)}
    lines = [f"group: {g.describe()}", f"levi: {_fmt(sorted(data.levi_nodes))}"]
    context = {"group": g, "levi": data.levi_nodes}
    if want_all or args.orbits:
        subs = ce_orbit_subdiagrams(data)
        payload["orbit_subdiagrams"] = [list(s) for s in subs]
        payload["orbit_count"] = len(subs)
        lines.append("orbit_subdiagrams: " + "; ".join(_fmt(list(s)) for s in subs))
        lines.append(f"orbit_count: {len(subs)}")
    if want_all or args.sigma:
        cone = sigma_cone(data, cap=args.orbit_cap)
        payload["sigma"] = _cone_json(cone)
        lines.append(f"sigma rays: {_vectors_text(cone.ray_generators)}")
        context["cone"] = cone
    if want_all or args.smooth:
        smooth = ce_smooth(data)
        payload["smooth"] = smooth
        lines.append(f"smooth: {_fmt(smooth)}")
    if want_all or args.finite:
        finite = ce_finite_g_orbits(data)
        payload["finite_g_orbits"] = finite
        lines.append(f"finite_g_orbits: {_fmt(finite)}")
    return payload, lines, context, EXIT_OK


def _cmd_sl2(args):
    h = Height.parse(args.height)
    structure = orbit_structure(h)
    basis = height_algebra_basis(h)
    only_orbits = args.orbits and not args.basis
    only_basis = args.basis and not args.orbits
    payload: dict = {"height": str(h)}
    if not only_basis:
        payload["orbits"] = list(structure.orbits)
        payload["smooth"] = structure.smooth
    if not only_orbits:
        payload["basis"] = [[m.i, m.j] for m in basis]
    if only_orbits:
        lines = [", ".join(structure.orbits)]
    elif only_basis:
        lines = [", ".join(_monomial_text(m) for m in basis)]
    else:
        lines = [
            f"height: {h}",
            "orbits: " + ", ".join(structure.orbits),
            f"smooth: {_fmt(structure.smooth)}",
            "basis: " + ", ".join(_monomial_text(m) for m in basis),
        ]
    return payload, lines, {"height": h, "basis": basis}, EXIT_OK


_HANDLERS = {
    "group": _cmd_group,
    "tensor": _cmd_tensor,
    "toric": _cmd_toric,
    "svariety": _cmd_svariety,
    "hv": _cmd_hv,
    "monoid-perfect": _cmd_monoid_perfect,
    "monoid-normal": _cmd_monoid_normal,
    "ce": _cmd_ce,
    "sl2": _cmd_sl2,
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument(
        "--report", metavar="DIR", help="also write report.csv and figures into DIR"
    )
    common.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_MEMBERSHIP_BUDGET,
        help="search budget for semigroup membership",
    )
    common.add_argument(
        "--orbit-cap",
        type=int,
        default=LEVI_WEYL_CAP,
        help="cap on Weyl orbit enumeration",
    )

    parser = argparse.ArgumentParser(
        prog="embedkit",
        description="exact analysis of affine embeddings: toric, S-variety, SL(2), monoid, parabolic",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("group", parents=[common], help="numeric invariants of a group")
    p.add_argument("--group", required=True, help='e.g. "A2", "A1xB2+T1"')

    p = sub.add_parser("tensor", parents=[common], help="tensor product decomposition")
    p.add_argument("--group", required=True)
    p.add_argument("--lhs", required=True, help='dominant weight, e.g. "[1,0]"')
    p.add_argument("--rhs", required=True)

    p = sub.add_parser("toric", parents=[common], help="affine toric variety report")
    p.add_argument("--rank", type=int, required=True, help="torus rank")
    p.add_argument("--gens", required=True, help='characters, e.g. "[2];[3]"')

    p = sub.add_parser("svariety", parents=[common], help="S-variety report")
    p.add_argument("--group", required=True)
    p.add_argument("--gens", required=True, help='dominant weights, e.g. "[1,0];[0,1]"')

    p = sub.add_parser("hv", parents=[common], help="highest-weight-vector closure report")
    p.add_argument("--group", required=True)
    p.add_argument("--weight", required=True)

    p = sub.add_parser(
        "monoid-perfect", parents=[common], help="perfect closure of dominant weights"
    )
    p.add_argument("--group", required=True)
    p.add_argument("--gens", required=True)
    p.add_argument(
        "--max-new",
        type=int,
        default=DEFAULT_MAX_NEW,
        help="additions allowed before giving up",
    )

    p = sub.add_parser(
        "monoid-normal", parents=[common], help="cone conditions for a normal monoid"
    )
    p.add_argument("--group", required=True)
    p.add_argument("--cone", required=True, help='cone generators, e.g. "[-2,0];[0,1];[2,1]"')

    p = sub.add_parser("ce", parents=[common], help="canonical embedding combinatorics")
    p.add_argument("--group", required=True)
    p.add_argument("--levi", default="", help='Levi nodes, e.g. "1,3" (default none)')
    p.add_argument("--orbits", action="store_true", help="only the orbit subdiagrams")
    p.add_argument("--sigma", action="store_true", help="only the cone Sigma")
    p.add_argument("--smooth", action="store_true", help="only the smoothness verdict")
    p.add_argument("--finite", action="store_true", help="only the finite-orbit verdict")

    p = sub.add_parser("sl2", parents=[common], help="SL(2)-embedding of a given height")
    p.add_argument("--height", required=True, help='"p/q" or "1"')
    p.add_argument("--orbits", action="store_true", help="only the orbit list")
    p.add_argument("--basis", action="store_true", help="only the monomial basis")

    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "monoid":
        if len(argv) >= 2 and argv[1] in ("perfect", "normal"):
            argv[0:2] = [f"monoid-{argv[1]}"]
        else:
            sys.stderr.write(_USAGE)
            return EXIT_USAGE
    head = next((a for a in argv if not a.startswith("-")), None)
    if not argv or (head is not None and head != argv[0]):
        sys.stderr.write(_USAGE)
        return EXIT_USAGE
    if head is not None and head not in _SUBCOMMANDS:
        sys.stderr.write(_USAGE)
        return EXIT_USAGE

    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed usage or help; keep its exit code
        return int(exc.code or 0)
    try:
        payload, lines, context, code = _HANDLERS[args.cmd](args)
    except (InvalidInputError, UnsupportedRankError, NotAHeightAlgebraError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID
    except (OrbitTooLargeError, RepresentationTooLargeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INCONCLUSIVE
    except EmbedkitError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID

    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")

    if args.report:
        from . import report

        written = report.render(args.report, args.cmd, payload, context)
        for path in written:
            sys.stderr.write(f"wrote {path}\n")
    return code
