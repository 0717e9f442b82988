"""Command line front end.

Exit status is 0 on success, 1 on a domain error (bad geometry, hiker
outside the curve, ...) and 2 on IO or parse errors. Every failure prints
exactly one diagnostic line on stderr.
"""

from __future__ import annotations

import argparse
import sys

from . import bench, classify, escape, magnetization
from .errors import MagnetError, ParseError
from .render import render_svg
from .scene import load_scene


class _ArgumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgumentError(message)


def _bool(text: str) -> bool:
    low = text.lower()
    if low in ("true", "1", "yes"):
        return True
    if low in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def _ints(text: str) -> list:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def num(x: float) -> str:
    """Locale-free text for coordinates and lengths."""
    s = format(float(x), ".15g")
    return "0" if s == "-0" else s


def ratio(x: float) -> str:
    return repr(float(x))


def escape_row(plan: escape.EscapePlan) -> str:
    return ",".join([*map(num, plan.hiker), *map(num, plan.exit_point), num(plan.length),
                     ratio(plan.ortho_residual), str(plan.tie_count)])


def magnetize_row(m: magnetization.Magnetization) -> str:
    return ",".join([*map(num, m.source), str(m.chosen_id), *map(num, m.magnet), num(m.measure),
                     ratio(m.ortho_residual), ";".join(map(str, m.ties))])


ESCAPE_HEADER = "hiker_x,hiker_y,exit_x,exit_y,length,ortho_residual,tie_count"
MAGNETIZE_HEADER = "hiker_x,hiker_y,magnet_id,magnet_x,magnet_y,measure,ortho_residual,ties"


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="magforest", description="Nearest-magnet maps and escape paths on closed curves.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def scene_cmd(name, help_text):
        s = sub.add_parser(name, help=help_text)
        s.add_argument("scene")
        s.add_argument("--strict-origin", type=_bool, default=True, metavar="{true,false}")
        return s

    for name, help_text in (("magnetize", "nearest magnet of the hiker"),
                            ("escape", "escape path of the hiker")):
        s = scene_cmd(name, help_text)
        s.add_argument("--header", action="store_true", help="print the column names first")

    s = sub.add_parser("classify", help="partition scenes into isomorphism classes")
    s.add_argument("scenes", nargs="+")
    s.add_argument("--ang-tol", type=float, default=None)

    s = scene_cmd("mc", "Monte Carlo escape lengths over uniform hikers")
    s.add_argument("--trials", type=int, default=10_000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)

    s = sub.add_parser("bench", help="index versus linear-scan latency")
    s.add_argument("--magnets", type=int, default=100_000)
    s.add_argument("--queries", type=int, default=10_000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--repetitions", type=int, default=5)

    s = scene_cmd("render", "draw the scene as SVG")
    s.add_argument("--out", default=None, help="output file (default: stdout)")

    s = scene_cmd("convergence", "escape length error against the exact boundary")
    s.add_argument("--resolutions", type=_ints, default=[90, 360, 3600])
    return p


def _run(args, out) -> None:
    cmd = args.command
    if cmd == "classify":
        scenes = [load_scene(path) for path in args.scenes]
        tol = args.ang_tol
        if tol is None:
            given = [s.ang_tol for s in scenes if s.ang_tol is not None]
            tol = min(given) if given else None
        part = classify.partition_corpus([s.magnetized for s in scenes], tol)
        print("class,members", file=out)
        for k, members in enumerate(part.classes):
            print(f"{k},{';'.join(map(str, members))}", file=out)
        return
    if cmd == "bench":
        rep = bench.run_bench(args.magnets, args.queries, args.seed, args.repetitions)
        print("magnet_count,query_count,index_median_ns,scan_median_ns,speedup,ids_match", file=out)
        print(f"{rep.magnet_count},{rep.query_count},{rep.index_median_ns},{rep.scan_median_ns},"
              f"{rep.speedup:.3f},{str(rep.ids_match).lower()}", file=out)
        return

    scene = load_scene(args.scene)
    strict = args.strict_origin
    if cmd == "escape":
        plan = escape.escape_path(scene.magnetized, scene.require_hiker(), strict, scene.tie_eps)
        if args.header:
            print(ESCAPE_HEADER, file=out)
        print(escape_row(plan), file=out)
    elif cmd == "magnetize":
        m = magnetization.magnetize(scene.magnetized, scene.require_hiker(), strict, scene.tie_eps)
        if args.header:
            print(MAGNETIZE_HEADER, file=out)
        print(magnetize_row(m), file=out)
    elif cmd == "mc":
        st = escape.monte_carlo_escape(scene.magnetized, args.trials, args.seed, args.workers, strict)
        print("trials,mean_length,stddev,max_length,seed", file=out)
        print(f"{st.trials},{num(st.mean_length)},{num(st.stddev)},{num(st.max_length)},{st.seed}", file=out)
    elif cmd == "render":
        plan = None
        if scene.hiker is not None:
            plan = escape.escape_path(scene.magnetized, scene.hiker, strict, scene.tie_eps)
        svg = render_svg(scene, plan)
        if args.out is None:
            out.write(svg)
        else:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(svg)
    elif cmd == "convergence":
        rep = escape.convergence_study(scene.curve, scene.require_hiker(), args.resolutions, strict, 0.0)
        print("resolution,measure,analytic,error", file=out)
        for n, m, e in zip(rep.resolutions, rep.measures, rep.errors):
            print(f"{n},{num(m)},{num(rep.analytic)},{num(e)}", file=out)


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        _run(args, out)
    except _ArgumentError as exc:
        print(f"magforest: error: {exc}", file=err)
        return 2
    except FileNotFoundError as exc:
        print(f"magforest: error: scene not found: {exc.filename}", file=err)
        return 2
    except (ParseError, OSError) as exc:
        print(f"magforest: error: {exc}", file=err)
        return 2
    except (MagnetError, ValueError) as exc:
        print(f"magforest: error: {exc}", file=err)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
