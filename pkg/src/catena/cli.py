"""Command-line interface: ``catena lattice | ring | group | tower | verify``.

Every subcommand reads an optional JSON input, runs the requested checks and
writes a report as JSON (default), DOT or plain text. Exit status is 0 on
success, 1 when a check fails and 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable

from catena import lattice as lat
from catena.analysis import MinimalType, analyze_catenarity, enumerate_interval, is_pointwise_minimal
from catena.analysis.catenarity import CHECKS as RING_CHECKS
from catena.errors import CatenaError, NotAnEmbedding, NotARing, ParseError
from catena.galois import FiniteGroup, check_d_lattice, check_group_lattice, d_lattice, field_tower, named, poly_to_json, subgroup_lattice
from catena.galois.field import TOWER_CHECKS
from catena.galois.group import DEFAULT_GROUP_CAP, GROUP_CHECKS
from catena.rings.ring import DEFAULT_CAP
from catena.rings.spec import build_extension

SCHEMA_VERSION = 1
FORMATS = ("json", "dot", "text")
LATTICE_CHECKS = ("graded", "distributive", "length", "loewy_series", "p_extension", "left_modular", "supersolvable", "two_catenarian")
EDGE_COLORS = {MinimalType.INERT: "blue", MinimalType.DECOMPOSED: "darkgreen", MinimalType.RAMIFIED: "red"}

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    """Bad command-line usage or unreadable input; maps to exit status 2."""


@dataclass
class RunConfig:
    command: str
    input: Path | None
    checks: tuple[str, ...]
    cap: int | None
    format: str
    out: Path | None


@dataclass
class Outcome:
    report: dict[str, Any]
    ok: bool = True
    dot: Callable[[], str] | None = None


# -- helpers ------------------------------------------------------------------------


def _env_cap() -> int | None:
    raw = os.environ.get("CATENA_CAP")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"CATENA_CAP must be an integer, got {raw!r}") from None
    if value <= 0:
        raise InputError("CATENA_CAP must be positive")
    return value


def _cap(cfg: RunConfig, default: int) -> int:
    if cfg.cap is not None:
        return cfg.cap
    env = _env_cap()
    return default if env is None else env


def _read_json(cfg: RunConfig) -> Any:
    if cfg.input is None:
        raise InputError(f"{cfg.command} needs --input")
    try:
        text = cfg.input.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {cfg.input}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{cfg.input} is not valid JSON: {exc}") from None


def _selected(cfg: RunConfig, available: tuple[str, ...]) -> tuple[str, ...]:
    return cfg.checks or available


def _check_map(checks: dict[str, bool], selected: tuple[str, ...]) -> dict[str, str]:
    return {k: "pass" if v else "fail" for k, v in checks.items() if k in selected}


def _report(command: str, **body: Any) -> dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "command": command, **body}


# -- subcommands ----------------------------------------------------------------------


def _load_lattice(cfg: RunConfig) -> lat.FiniteLattice:
    if cfg.input is None:
        raise InputError("lattice needs --input")
    try:
        text = cfg.input.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {cfg.input}: {exc.strerror}") from None
    if text.lstrip().startswith("digraph"):
        return lat.parse_dot(text)
    data = _read_json(cfg)
    if not isinstance(data, dict) or "elements" not in data or "covers" not in data:
        raise ParseError("lattice JSON needs 'elements' and 'covers'")
    try:
        return lat.from_json(data)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad lattice JSON: {exc}") from exc


def cmd_lattice(cfg: RunConfig) -> Outcome:
    L = _load_lattice(cfg)
    cap = _cap(cfg, lat.SUPERSOLVABLE_CAP)
    results: dict[str, Any] = {}
    for name in _selected(cfg, LATTICE_CHECKS):
        if name == "graded":
            g = lat.is_graded(L)
            results["graded"] = g.graded
            if g.graded:
                results["rank"] = {str(k): v for k, v in g.rank.items()}
        elif name == "distributive":
            results["distributive"] = lat.is_distributive(L)
        elif name == "length":
            ln = lat.length(L)
            results["length"] = {"min": ln.min_maximal, "max": ln.max_maximal}
        elif name == "loewy_series":
            results["loewy_series"] = [str(x) for x in lat.loewy_series(L)]
        elif name == "p_extension":
            results["p_extension"] = lat.is_p_extension(L)
        elif name == "left_modular":
            results["left_modular"] = {
                "elements": [str(x) for x in lat.left_modular_elements(L)],
                "lattice": lat.is_left_modular_lattice(L),
            }
        elif name == "supersolvable":
            results["supersolvable"] = lat.is_supersolvable(L, cap) if len(L) <= cap else None
        elif name == "two_catenarian":
            results["two_catenarian"] = lat.is_2_catenarian(L)
    report = _report(
        "lattice",
        size=len(L),
        bottom=str(L.bottom),
        top=str(L.top),
        covers=[[str(a), str(b)] for a, b in L.covers],
        results=results,
    )
    return Outcome(report, dot=lambda: lat.to_dot(L))


def cmd_ring(cfg: RunConfig) -> Outcome:
    cap = _cap(cfg, DEFAULT_CAP)
    ext = build_extension(_read_json(cfg), cap)
    EL = enumerate_interval(ext, cap)
    rep = analyze_catenarity(EL)
    pw = is_pointwise_minimal(EL)
    selected = _selected(cfg, RING_CHECKS)
    body = rep.to_json()
    body["checks"] = _check_map(rep.checks, selected)
    report = _report(
        "ring",
        extension={"S": ext.S.name, "order_S": ext.S.order, "order_R": ext.base.order},
        subrings={EL.name(T): {"order": T.order, "elements": list(T.elements)} for T in EL.subrings},
        edge_types={f"{a}<{b}": str(c.type) for (a, b), c in EL.edges.items()},
        crucial_ideals={f"{a}<{b}": list(c.crucial.elements) for (a, b), c in EL.edges.items()},
        pointwise_minimal={
            "holds": pw.pointwise_minimal,
            "case": pw.case,
            "conditions_hold": pw.conditions_hold,
            "non_catenarian_expected": pw.non_catenarian_expected,
        },
        **body,
    )

    def dot() -> str:
        attrs = {e: {"color": EDGE_COLORS[c.type], "label": str(c.type)} for e, c in EL.edges.items()}
        return lat.to_dot(EL.lattice, "extension", attrs)

    ok = all(v for k, v in rep.checks.items() if k in selected)
    return Outcome(report, ok, dot)


def _load_group(cfg: RunConfig, cap: int) -> FiniteGroup:
    data = _read_json(cfg)
    if not isinstance(data, dict):
        raise ParseError("group JSON must be an object")
    if "generators" not in data and "name" in data:
        try:
            G = named(str(data["name"]))
        except KeyError:
            raise ParseError(f"no bundled group named {data['name']!r}") from None
        if G.order > cap:
            raise InputError(f"group order {G.order} exceeds the cap of {cap}")
        return G
    return FiniteGroup.from_json(data, cap)


def cmd_group(cfg: RunConfig) -> Outcome:
    cap = _cap(cfg, DEFAULT_GROUP_CAP)
    G = _load_group(cfg, cap)
    rep = check_group_lattice(G)
    SL = subgroup_lattice(G, cap)
    selected = _selected(cfg, GROUP_CHECKS)
    report = _report(
        "group",
        name=rep.name,
        order=rep.order,
        subgroups={SL.name(m): bin(m).count("1") for m in SL.masks},
        covers=[[a, b] for a, b in SL.lattice.covers],
        supersolvable_group=rep.supersolvable_group,
        graded=rep.graded,
        length=rep.length,
        supersolvable_lattice=rep.supersolvable_lattice,
        left_modular=rep.left_modular,
        checks=_check_map(rep.checks, selected),
    )
    ok = all(v for k, v in rep.checks.items() if k in selected)
    return Outcome(report, ok, lambda: lat.to_dot(SL.lattice, "subgroups"))


def cmd_tower(cfg: RunConfig) -> Outcome:
    data = _read_json(cfg)
    try:
        p, n = int(data["p"]), int(data["n"])
    except (KeyError, TypeError, ValueError):
        raise ParseError('tower JSON must look like {"p": 2, "n": 12}') from None
    cap = _cap(cfg, 2**16)
    if p**n > cap:
        raise InputError(f"F_{p}^{n} has more than {cap} elements")
    tower = field_tower(p, n)
    rep = check_d_lattice(tower)
    D = d_lattice(tower)
    selected = _selected(cfg, TOWER_CHECKS)
    report = _report(
        "tower",
        p=p,
        n=n,
        modulus=tower.modulus,
        minimal_polynomials={f"f_{d}": poly_to_json(tower, tower.minimal_polys[d]) for d in tower.subfield_degrees},
        covers=[[a, b] for a, b in D.covers],
        size=rep.size,
        length=rep.length,
        expected_length=rep.expected_length,
        checks=_check_map(rep.checks, selected),
    )
    ok = all(v for k, v in rep.checks.items() if k in selected)
    return Outcome(report, ok, lambda: lat.to_dot(D, "minimal_polynomials"))


def _extra_extensions(cfg: RunConfig, cap: int) -> list[tuple[str, Callable]]:
    """Extra extensions for verify. A spec that parses but whose tables are not a
    ring (or not an embedding) is kept, so the suite reports it as a failed check."""
    if cfg.input is None:
        return []
    data = _read_json(cfg)
    specs = data if isinstance(data, list) else [data]
    out = []
    for i, spec in enumerate(specs):
        if not isinstance(spec, dict):
            raise ParseError("each extra extension must be a JSON object")
        name = str(spec.get("name", f"input[{i}]"))
        try:
            ext = build_extension(spec, cap)
        except (NotARing, NotAnEmbedding) as exc:
            out.append((name, _raiser(exc)))
            continue
        out.append((name, lambda ext=ext: ext))
    return out


def _raiser(exc: Exception) -> Callable:
    def build():
        raise exc

    return build


def cmd_verify(cfg: RunConfig) -> Outcome:
    from catena.verify import TOPICS, VerifyConfig, run

    ring_order = _cap(cfg, 16)
    vc = VerifyConfig(
        ring_order=ring_order,
        topics=_selected(cfg, TOPICS),
        named=ring_order >= 16,
        extra=_extra_extensions(cfg, DEFAULT_CAP),
    )
    rep = run(vc)
    return Outcome(_report("verify", **rep.to_json()), rep.ok)


COMMANDS: dict[str, tuple[Callable[[RunConfig], Outcome], tuple[str, ...], str]] = {
    "lattice": (cmd_lattice, LATTICE_CHECKS, "properties of a lattice given by its covers"),
    "ring": (cmd_ring, RING_CHECKS, "intermediate subrings of a finite ring extension"),
    "group": (cmd_group, GROUP_CHECKS, "subgroup lattice of a permutation group"),
    "tower": (cmd_tower, TOWER_CHECKS, "minimal polynomials in a finite field tower"),
    "verify": (cmd_verify, ("lattice", "ring", "group", "tower"), "run every check over the bundled corpora"),
}


# -- rendering ------------------------------------------------------------------------


def render_json(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=2) + "\n"


def render_text(report: dict[str, Any]) -> str:
    lines: list[str] = []

    def walk(value: Any, indent: int, key: str) -> None:
        pad = "  " * indent
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            for k, v in value.items():
                walk(v, indent + 1, str(k))
        elif isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
            lines.append(f"{pad}{key}:")
            for i, v in enumerate(value):
                walk(v, indent + 1, f"- {i}")
        else:
            shown = json.dumps(value) if not isinstance(value, str) else value
            lines.append(f"{pad}{key}: {shown}")

    for k, v in report.items():
        walk(v, 0, k)
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="catena", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, checks, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--input", type=Path, help="input file (JSON; DOT is also accepted for lattices)")
        p.add_argument("--checks", help="comma-separated subset of: " + ", ".join(checks))
        p.add_argument("--cap", type=int, help="size cap (default from CATENA_CAP, else built in)")
        p.add_argument("--format", choices=FORMATS, default="json")
        p.add_argument("--out", type=Path, help="write the report here instead of stdout")
    return parser


def parse_config(argv: list[str] | None) -> RunConfig:
    args = build_parser().parse_args(argv)
    available = COMMANDS[args.command][1]
    checks: tuple[str, ...] = ()
    if args.checks:
        checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
        unknown = [c for c in checks if c not in available]
        if unknown:
            raise InputError(f"unknown check(s) for {args.command}: {', '.join(unknown)}")
    if args.cap is not None and args.cap <= 0:
        raise InputError("--cap must be positive")
    if args.command == "verify" and args.format == "dot":
        raise InputError("verify has no DOT output")
    return RunConfig(args.command, args.input, checks, args.cap, args.format, args.out)


def main(argv: list[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:  # argparse usage errors
        return EXIT_INPUT_ERROR if exc.code else EXIT_OK
    except InputError as exc:
        print(f"catena: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    try:
        outcome = COMMANDS[cfg.command][0](cfg)
    except (InputError, CatenaError) as exc:
        print(f"catena: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if cfg.format == "dot":
        text = outcome.dot()
    elif cfg.format == "text":
        text = render_text(outcome.report)
    else:
        text = render_json(outcome.report)
    if cfg.out is not None:
        try:
            cfg.out.write_text(text)
        except OSError as exc:
            print(f"catena: cannot write {cfg.out}: {exc.strerror}", file=sys.stderr)
            return EXIT_INPUT_ERROR
    else:
        sys.stdout.write(text)
    return EXIT_OK if outcome.ok else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
