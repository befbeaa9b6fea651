"""Command-line front end.

    rainbow-tournaments gen NAME [--k K --i I --m M --x X --n N] [--out FILE]
    rainbow-tournaments analyze FILE
    rainbow-tournaments check FILE
    rainbow-tournaments search --base FILE|SPEC (--seed S | --seeds A..B) [...]
    rainbow-tournaments selftest

Every JSON document carries ``"schema": "rt-report-1"`` and a ``manifest``
naming the command, its arguments, seeds, library version and the SHA-256
of every file read or written. Rationals are written as ``{"num", "den"}``.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error
(with an error document on stderr).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import __version__, constructions
from .bounds import verify
from .core import ColoredTournament, color_distinct, read_instance, serialize, write_instance
from .errors import InstanceSyntaxError, TournamentError
from .metrics import degree_profile, is_strongly_connected, mono_degrees
from .search import (
    DEFAULT_BUDGET,
    DEFAULT_EVALUATION_CAP,
    MAX_MONO,
    OBJECTIVES,
    SearchConfig,
    anneal_restarts,
    exhaustive_search,
)
from .triangles import census

SCHEMA = "rt-report-1"

# name -> (builder, parameter flags); uncolored bases get all-distinct colors
GENERATORS = {
    "remark1": (constructions.remark1, ("k", "i")),
    "example1": (constructions.example1, ("m", "k")),
    "example2": (constructions.example2, ("n", "x")),
    "example3": (constructions.example3, ("k", "i")),
    "example4": (constructions.example4, ()),
    "example5": (constructions.example5, ("k",)),
    "rotational": (constructions.rotational_tournament, ("n",)),
    "almost-regular": (constructions.almost_regular_tournament, ("n",)),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def to_json(obj):
    if isinstance(obj, Fraction):
        return {"num": obj.numerator, "den": obj.denominator}
    if isinstance(obj, dict):
        return {str(k): to_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_json(v) for v in obj]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


def dumps(doc) -> str:
    return json.dumps(to_json(doc), indent=2, sort_keys=False)


def sha256(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            h.update(chunk)
    return h.hexdigest()


class Manifest:
    def __init__(self, command, argv):
        self.command = command
        self.argv = list(argv)
        self.seeds = []
        self.inputs = {}
        self.outputs = {}

    def read(self, path):
        self.inputs[str(path)] = sha256(path)

    def wrote(self, path):
        self.outputs[str(path)] = sha256(path)

    def as_dict(self):
        return {
            "command": self.command,
            "arguments": self.argv,
            "seeds": self.seeds,
            "version": __version__,
            "inputs": self.inputs,
            "outputs": self.outputs,
        }


def _doc(manifest, **body):
    return {"schema": SCHEMA, "manifest": manifest.as_dict(), **body}


# generation -----------------------------------------------------------------

def generate(name: str, params: dict):
    """Build a named instance; returns ``(instance, ConstructionResult or None)``."""
    if name not in GENERATORS:
        raise UsageError(f"unknown generator {name!r}; choose from {', '.join(GENERATORS)}")
    builder, wanted = GENERATORS[name]
    extra = sorted(k for k, v in params.items() if v is not None and k not in wanted)
    missing = [k for k in wanted if params.get(k) is None]
    if extra:
        raise UsageError(f"{name} does not take --{', --'.join(extra)}")
    if missing:
        raise UsageError(f"{name} needs --{', --'.join(missing)}")
    made = builder(*(params[k] for k in wanted))
    if isinstance(made, constructions.ConstructionResult):
        return made.instance, made
    return color_distinct(made), None


def parse_gen_spec(spec: str):
    """``name`` or ``name:key=value,key=value``."""
    name, _, rest = spec.partition(":")
    params = {}
    for item in filter(None, rest.split(",")):
        key, eq, value = item.partition("=")
        if not eq or not value.lstrip("-").isdigit():
            raise UsageError(f"bad generator parameter {item!r} in {spec!r}")
        params[key.strip()] = int(value)
    return name.strip(), params


def _sidecar_path(out: Path) -> Path:
    side = out.with_suffix(".json")
    return side if side != out else out.with_name(out.name + ".meta.json")


def cmd_gen(args, manifest) -> int:
    params = {k: getattr(args, k) for k in ("k", "i", "m", "x", "n")}
    ct, res = generate(args.name, params)
    if args.out is None:
        sys.stdout.write(serialize(ct))
        return 0
    out = Path(args.out)
    write_instance(ct, out)
    manifest.wrote(out)
    side = {
        "generator": args.name,
        "params": {k: v for k, v in params.items() if v is not None},
        "instance": str(out),
        "designated_vertex": res.designated_vertex if res else None,
        "claimed": res.claimed if res else {},
        "measured": constructions.measure(ct, res.designated_vertex if res else None),
        "stated": res.stated if res else {},
        "notes": list(res.notes) if res else [],
    }
    side_path = _sidecar_path(out)
    text = dumps(_doc(manifest, **side))
    side_path.write_text(text + "\n", encoding="utf-8")
    manifest.wrote(side_path)
    # the printed copy also records the sidecar's own digest
    print(dumps(_doc(manifest, **side, sidecar=str(side_path))))
    return 0


# analysis -------------------------------------------------------------------

def _load(path, manifest) -> ColoredTournament:
    ct = read_instance(path)
    manifest.read(path)
    return ct


def analysis(ct: ColoredTournament) -> dict:
    prof = degree_profile(ct)
    return {
        "n": ct.n,
        "degree_profile": {
            "out_degree": list(prof.out_degree),
            "in_degree": list(prof.in_degree),
            "irregularity": prof.irregularity,
            "regularity": prof.regularity,
        },
        "strongly_connected": is_strongly_connected(ct),
        "mono_degrees": mono_degrees(ct).as_dict(),
        "census": census(ct).as_dict(),
    }


def cmd_analyze(args, manifest) -> int:
    ct = _load(args.file, manifest)
    print(dumps(_doc(manifest, **analysis(ct))))
    return 0


def cmd_check(args, manifest) -> int:
    ct = _load(args.file, manifest)
    report = verify(ct)
    print(dumps(_doc(manifest, **report.as_dict())))
    return 0 if report.ok else 1


# search ---------------------------------------------------------------------

def parse_seeds(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    if not sep or not lo.isdigit() or not hi.isdigit() or int(lo) > int(hi):
        raise UsageError(f"--seeds expects A..B with 0 <= A <= B, got {text!r}")
    return list(range(int(lo), int(hi) + 1))


def load_base(spec: str, manifest) -> tuple[ColoredTournament, str]:
    if os.path.exists(spec):
        return _load(spec, manifest), spec
    name, params = parse_gen_spec(spec)
    ct, _ = generate(name, params)
    return ct, spec


def cmd_search(args, manifest) -> int:
    seeds = [args.seed] if args.seed is not None else parse_seeds(args.seeds)
    manifest.seeds = seeds
    base, base_name = load_base(args.base, manifest)
    if args.exhaustive:
        outcome = exhaustive_search(
            base.tournament, args.max_colors, args.objective, args.mono_cap, args.evaluation_cap
        )
    else:
        config = SearchConfig(
            base.tournament, args.objective, args.budget, seeds[0],
            max_colors=args.max_colors, mono_cap=args.mono_cap,
            initial=None if args.cold else base,
        )
        outcome = anneal_restarts(config, seeds, workers=args.workers)
    witness = None
    if args.out:
        write_instance(outcome.coloring, args.out)
        manifest.wrote(args.out)
        witness = str(args.out)
    body = {
        "base": base_name,
        "n": base.n,
        "mode": "exhaustive" if args.exhaustive else "anneal",
        "budget": None if args.exhaustive else args.budget,
        "warm_start": not args.exhaustive and not args.cold,
        "witness": witness,
        **outcome.as_dict(),
    }
    print(dumps(_doc(manifest, **body)))
    return 0


# selftest -------------------------------------------------------------------

def cmd_selftest(args, manifest) -> int:
    from .acceptance import run_all

    results = run_all(echo=lambda line: print(line, file=sys.stderr))
    rows = [
        {"criterion": r.number, "title": r.title, "passed": r.passed, "detail": r.detail,
         "seconds": round(r.seconds, 3), "limit": r.limit}
        for r in results
    ]
    ok = all(r.passed for r in results)
    print(dumps(_doc(manifest, ok=ok, criteria=rows)))
    return 0 if ok else 1


# entry point ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rainbow-tournaments", description="Rainbow triangles in arc-colored tournaments.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate a named construction")
    g.add_argument("name", choices=sorted(GENERATORS))
    for flag in ("k", "i", "m", "x", "n"):
        g.add_argument(f"--{flag}", type=int)
    g.add_argument("--out", help="instance file; a .json sidecar is written next to it")
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("analyze", help="degree profile, monochromatic degrees and triangle census")
    a.add_argument("file")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("check", help="evaluate every bound; exit 1 if one fails")
    c.add_argument("file")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("search", help="search colorings of a fixed tournament")
    s.add_argument("--base", required=True, help="instance file or generator spec like example5:k=3")
    s.add_argument("--objective", choices=OBJECTIVES, default=MAX_MONO)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    seeds = s.add_mutually_exclusive_group(required=True)
    seeds.add_argument("--seed", type=int)
    seeds.add_argument("--seeds", help="inclusive range A..B, one restart per seed")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--max-colors", type=int)
    s.add_argument("--mono-cap", type=int)
    s.add_argument("--cold", action="store_true", help="ignore the base's coloring as a start")
    s.add_argument("--exhaustive", action="store_true")
    s.add_argument("--evaluation-cap", type=int, default=DEFAULT_EVALUATION_CAP)
    s.add_argument("--out", help="write the best coloring here")
    s.set_defaults(func=cmd_search)

    t = sub.add_parser("selftest", help="run the acceptance criteria")
    t.set_defaults(func=cmd_selftest)
    return p


def _fail(kind, message, code, line=None) -> int:
    doc = {"schema": SCHEMA, "error": kind, "message": message, "line": line, "exit_code": code}
    print(json.dumps(doc), file=sys.stderr)
    return code


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return _fail("UsageError", str(exc), 2)
    manifest = Manifest(args.command, argv)
    try:
        return args.func(args, manifest)
    except UsageError as exc:
        return _fail("UsageError", str(exc), 2)
    except InstanceSyntaxError as exc:
        return _fail("SyntaxError", str(exc), 2, exc.lineno or None)
    except TournamentError as exc:
        return _fail(type(exc).__name__, str(exc), 2)
    except OSError as exc:
        return _fail("IOError", str(exc), 2)


if __name__ == "__main__":
    sys.exit(main())
