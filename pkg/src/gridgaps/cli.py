"""Command-line surface: count | classify | verify | gen.

Exit codes: 0 success, 2 input error (bad file, bad flags), 3 internal
disagreement between the gap-counting methods (always an engine bug), 4
resource cap exceeded. ``--json`` switches count/classify/verify to a
machine-readable report with frozen keys; all numbers are exact integers.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import dvo
from .gaps import (
    HubTag,
    classification_histogram,
    count_gaps_block_formula,
    count_gaps_formula,
    is_gap,
)
from .identities import ALL_IDENTITIES, IdentityResult
from .objects import DigitalObject, census
from .shapes import ShapeSpec, describe, generate

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DISAGREEMENT = 3
EXIT_CAP = 4

#: full-census commands refuse larger inputs; coface fan-out is 2^n per cell
MAX_VOXELS = 10**6
MAX_CENSUS_DIM = 8


class ResourceCapError(RuntimeError):
    pass


def _check_caps(obj: DigitalObject) -> DigitalObject:
    if obj.n > MAX_CENSUS_DIM:
        raise ResourceCapError(
            f"n={obj.n} exceeds the full-census cap n <= {MAX_CENSUS_DIM}"
        )
    if len(obj) > MAX_VOXELS:
        raise ResourceCapError(
            f"{len(obj)} voxels exceed the cap of {MAX_VOXELS}"
        )
    return obj


def _emit(payload: dict[str, Any], as_json: bool, text: str) -> None:
    if as_json:
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text)


def build_count_report(obj: DigitalObject, include_hubs: bool = False) -> dict[str, Any]:
    """The count report as plain data; keys are part of the format."""
    cen = census(obj)
    report: dict[str, Any] = {
        "n": obj.n,
        "voxels": len(obj),
        "census": {
            "c": list(cen.c),
            "c_star": list(cen.c_star),
            "c_prime": list(cen.c_prime),
            "beta": list(cen.beta),
        },
    }
    if obj.n >= 2:
        hubs = sorted(
            e for e in cen.cells_by_dim[obj.n - 2] if is_gap(obj, e, obj.n - 2)
        )
        counts = {
            "oracle": len(hubs),
            "formula": count_gaps_formula(obj, cen),
            "block_formula": count_gaps_block_formula(obj, cen),
        }
        report["gaps"] = counts
        report["agreement"] = len(set(counts.values())) == 1
        if include_hubs:
            report["hubs"] = [list(e) for e in hubs]
    else:
        report["gaps"] = None
        report["agreement"] = True
        if include_hubs:
            report["hubs"] = []
    return report


def _count_text(report: dict[str, Any]) -> str:
    lines = [f"n:      {report['n']}", f"voxels: {report['voxels']}"]
    lines.append("dim        c       c*       c'     beta")
    cen = report["census"]
    for i in range(report["n"] + 1):
        lines.append(
            f"{i:3d} {cen['c'][i]:8d} {cen['c_star'][i]:8d}"
            f" {cen['c_prime'][i]:8d} {cen['beta'][i]:8d}"
        )
    gaps = report["gaps"]
    if gaps is None:
        lines.append("gaps: not defined for n=1")
    else:
        agree = "yes" if report["agreement"] else "NO (engine bug)"
        lines.append(
            f"gaps at dim {report['n'] - 2}: oracle={gaps['oracle']}"
            f" formula={gaps['formula']} block_formula={gaps['block_formula']}"
            f" agreement={agree}"
        )
    if "hubs" in report:
        shown = " ".join("(" + ",".join(map(str, h)) + ")" for h in report["hubs"])
        lines.append(f"hubs: {shown}" if shown else "hubs: none")
    return "\n".join(lines) + "\n"


def cmd_count(args: argparse.Namespace) -> int:
    obj = _check_caps(dvo.load(args.file))
    report = build_count_report(obj, include_hubs=args.hubs)
    _emit(report, args.json, _count_text(report))
    return EXIT_OK if report["agreement"] else EXIT_DISAGREEMENT


def cmd_classify(args: argparse.Namespace) -> int:
    obj = _check_caps(dvo.load(args.file))
    hist = classification_histogram(obj)
    payload = {
        "n": obj.n,
        "cell_dim": obj.n - 2,
        "total": sum(hist.values()),
        "histogram": {tag.value: hist[tag] for tag in HubTag},
    }
    lines = [
        f"classification of {payload['cell_dim']}-cells"
        f" (total {payload['total']}):"
    ]
    for tag in HubTag:
        lines.append(f"  {tag.value:<18} {hist[tag]}")
    _emit(payload, args.json, "\n".join(lines) + "\n")
    return EXIT_OK


def _verify_objects(args: argparse.Namespace) -> list[tuple[str, DigitalObject]]:
    if args.random is not None:
        raw_n, raw_extent, raw_density, raw_seed, raw_trials = args.random
        try:
            n, extent = int(raw_n), int(raw_extent)
            density = float(raw_density)
            seed, trials = int(raw_seed), int(raw_trials)
        except ValueError:
            raise ValueError(
                "--random expects integers n, extent, seed, trials and a float density"
            ) from None
        if trials < 1:
            raise ValueError("--random needs at least one trial")
        if n > MAX_CENSUS_DIM:
            raise ResourceCapError(f"n={n} exceeds the cap n <= {MAX_CENSUS_DIM}")
        if extent**n > MAX_VOXELS:
            raise ResourceCapError(
                f"{extent}^{n} sites exceed the cap of {MAX_VOXELS}"
            )
        out = []
        for t in range(trials):
            spec = ShapeSpec(
                kind="random",
                n=n,
                extents=(extent,) * n,
                density=density,
                seed=seed + t,
            )
            out.append((f"random trial {t} (seed {seed + t})", generate(spec)))
        return out
    if args.file is None:
        raise ValueError("verify needs a FILE or --random")
    return [(args.file, _check_caps(dvo.load(args.file)))]


def _reject_both_sources(args: argparse.Namespace) -> None:
    if args.random is not None and args.file is not None:
        raise ValueError("give verify a FILE or --random, not both")


def cmd_verify(args: argparse.Namespace) -> int:
    _reject_both_sources(args)
    labeled = _verify_objects(args)
    summary: dict[str, dict[str, Any]] = {}
    for label, obj in labeled:
        cen = census(obj)
        for identity in ALL_IDENTITIES:
            result: IdentityResult = identity(obj, cen)
            agg = summary.setdefault(
                result.name, {"passed": True, "checked": 0, "witness": ""}
            )
            agg["checked"] += result.checked
            if not result.passed and agg["passed"]:
                agg["passed"] = False
                agg["witness"] = f"{label}: {result.witness}"
    all_passed = all(agg["passed"] for agg in summary.values())
    payload = {
        "objects": len(labeled),
        "identities": summary,
        "passed": all_passed,
    }
    lines = []
    for name, agg in summary.items():
        if agg["passed"]:
            lines.append(f"PASS {name} (checked {agg['checked']})")
        else:
            lines.append(f"FAIL {name}: {agg['witness']}")
    lines.append(
        f"{'all identities hold' if all_passed else 'IDENTITY FAILURE'}"
        f" on {len(labeled)} object(s)"
    )
    _emit(payload, args.json, "\n".join(lines) + "\n")
    return EXIT_OK if all_passed else EXIT_DISAGREEMENT


def cmd_gen(args: argparse.Namespace) -> int:
    extents = None
    if args.extents is not None:
        try:
            extents = tuple(int(t) for t in args.extents.split(","))
        except ValueError:
            raise ValueError(f"bad extents {args.extents!r}") from None
    spec = ShapeSpec(
        kind=args.shape,
        n=args.n,
        extents=extents,
        density=args.density,
        seed=args.seed,
    )
    if extents is not None:
        sites = 1
        for e in extents:
            sites *= e
        if sites > MAX_VOXELS:
            raise ResourceCapError(f"{sites} sites exceed the cap of {MAX_VOXELS}")
    obj = generate(spec)
    text = dvo.dumps(obj, comments=[describe(spec)])
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridgaps",
        description="Cell census, free-cell classification and gap counting "
        "for digital n-objects.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="census and (n-2)-gap counts")
    p_count.add_argument("file", help=".dvo object file")
    p_count.add_argument("--json", action="store_true", help="machine-readable output")
    p_count.add_argument("--hubs", action="store_true", help="list hub cells")
    p_count.set_defaults(func=cmd_count)

    p_classify = sub.add_parser(
        "classify", help="five-way classification of all (n-2)-cells"
    )
    p_classify.add_argument("file", help=".dvo object file")
    p_classify.add_argument("--json", action="store_true")
    p_classify.set_defaults(func=cmd_classify)

    p_verify = sub.add_parser("verify", help="run the identity suite")
    p_verify.add_argument("file", nargs="?", help=".dvo object file")
    p_verify.add_argument(
        "--random",
        nargs=5,
        metavar=("N", "EXTENT", "DENSITY", "SEED", "TRIALS"),
        help="check TRIALS random objects (seeds SEED, SEED+1, ...)",
    )
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_gen = sub.add_parser("gen", help="generate a deterministic object file")
    p_gen.add_argument("--shape", required=True, help="shape kind")
    p_gen.add_argument("--n", required=True, type=int, help="ambient dimension")
    p_gen.add_argument("--extents", help="comma-separated, e.g. 3,3,3")
    p_gen.add_argument("--density", type=float, help="fill probability in [0,1]")
    p_gen.add_argument("--seed", type=int, help="64-bit unsigned seed")
    p_gen.add_argument("--out", help="output path (default: stdout)")
    p_gen.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except dvo.DvoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run() -> None:
    sys.exit(main())
