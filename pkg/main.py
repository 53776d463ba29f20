# main.py
import argparse
import logging
import sys
from typing import List, Optional, Sequence, Tuple

from src.bijection import eta, eta_inv
from src.counting import METHODS, count, search_space_estimate
from src.diagram import Diagram
from src.dlupath import DluPath
from src.errors import PreconditionError, StackEnumerationError
from src.gfsolver import render_system
from src.records import CurvePoint, OutputRecord, render_curves, render_table, table_rows
from src.scheduler import run_rows
from src.settings import Settings
from src.task import Task, TaskStatus
from src.verify import SUITES, VerifyLimits, run_suite

logger = logging.getLogger("main")


# --- argument types ---

def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {text}")
    return value


def natural_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {text}")
    return value


def int_list(text: str) -> List[int]:
    try:
        values = [positive_int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got '{text}'") from None
    if not values:
        raise argparse.ArgumentTypeError("expected a nonempty list")
    return values


def arc_list(text: str) -> Tuple[Tuple[int, int], ...]:
    """'1-3,1-8' -> ((1, 3), (1, 8))."""
    arcs = []
    for part in text.split(","):
        if not part.strip():
            continue
        try:
            i, j = part.split("-")
            arcs.append((int(i), int(j)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"arcs are written i-j, got '{part}'") from None
    return tuple(arcs)


# --- helpers ---

def settings_from(args: argparse.Namespace) -> Settings:
    return Settings(max_concurrent_tasks=args.jobs, workers=args.workers, log_level=args.log_level)


def warn_if_large(settings: Settings, method: str, m: int, d: int, n: int):
    estimate = search_space_estimate(method, m, d, n)
    if estimate > settings.brute_force_warn_threshold:
        logger.warning(f"{method} search for m={m} d={d} n={n} visits about {estimate} nodes; this may take a while.")


def run_row_tasks(settings: Settings, tasks: List[Task]) -> Optional[List[Task]]:
    executor = settings.make_executor()
    try:
        done = run_rows(tasks, settings.max_concurrent_tasks, executor)
    finally:
        if executor is not None:
            executor.shutdown()
    failed = [task for task in done if task.status == TaskStatus.FAILED]
    for task in failed:
        print(f"error: {task.name}: {task.error}", file=sys.stderr)
    return None if failed else done


# --- commands ---

def cmd_count(args: argparse.Namespace, settings: Settings) -> int:
    if args.method != "gf":
        warn_if_large(settings, args.method, args.m, args.d, args.n)
    print(count(args.method, args.m, args.d, args.n))
    return 0


def cmd_table(args: argparse.Namespace, settings: Settings) -> int:
    if args.method != "gf":
        warn_if_large(settings, args.method, 1, args.d, args.n_max)
    tasks = [Task.row(args.method, m, args.d, args.n_max) for m in range(1, args.m_max + 1)]
    done = run_row_tasks(settings, tasks)
    if done is None:
        return 1
    rows = table_rows([task.result for task in done], args.n_max)
    sys.stdout.write(render_table(rows, args.n_max, args.format))
    return 0


def cmd_series(args: argparse.Namespace, settings: Settings) -> int:
    if args.method != "gf":
        warn_if_large(settings, args.method, args.m, args.d, args.order)
    tasks = [Task.row(args.method, args.m, args.d, args.order)]
    done = run_row_tasks(settings, tasks)
    if done is None:
        return 1
    record = OutputRecord.from_counts(args.m, args.d, args.method, done[0].result)
    if args.format == "json":
        print(record.to_json())
    else:
        sys.stdout.write(record.to_csv())
    return 0


def cmd_curves(args: argparse.Namespace, settings: Settings) -> int:
    tasks = [Task.row("gf", m, d, args.n_max) for m in args.m_list for d in args.d_list]
    done = run_row_tasks(settings, tasks)
    if done is None:
        return 1
    points = [
        CurvePoint(m=task.payload["m"], d=task.payload["d"], n=n, count=task.result[n])
        for task in done
        for n in range(1, args.n_max + 1)
    ]
    sys.stdout.write(render_curves(points))
    return 0


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    limits = VerifyLimits(d=args.d, n_max=args.n_max, order=args.order,
                          **({"m_max": args.m_max} if args.m_max is not None else {}))
    results = run_suite(args.suite, limits)
    for result in results:
        print(result.line())
    failed = sum(1 for result in results if not result.passed)
    print(f"{len(results)} checks, {failed} failed")
    return 1 if failed else 0


def cmd_system(args: argparse.Namespace, settings: Settings) -> int:
    for line in render_system(args.d):
        print(line)
    return 0


def cmd_encode(args: argparse.Namespace, settings: Settings) -> int:
    print(eta(Diagram(args.n, args.arcs), args.d))
    return 0


def cmd_decode(args: argparse.Namespace, settings: Settings) -> int:
    try:
        print(eta_inv(DluPath.from_text(args.path, args.d)))
    except StackEnumerationError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


COMMANDS = {
    "count": cmd_count,
    "table": cmd_table,
    "series": cmd_series,
    "curves": cmd_curves,
    "verify": cmd_verify,
    "system": cmd_system,
    "encode": cmd_encode,
    "decode": cmd_decode,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help="Logging threshold; logs go to stderr.")
    common.add_argument("--jobs", type=positive_int, default=4, help="Rows computed concurrently.")
    common.add_argument("--workers", type=positive_int, default=1, help="Worker processes for row computation.")

    parser = argparse.ArgumentParser(description="Exact enumeration of m-regular d-contact stacks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="Print s_{m,d}(n).")
    p.add_argument("--m", type=positive_int, required=True)
    p.add_argument("--d", type=positive_int, required=True)
    p.add_argument("--n", type=natural_int, required=True)
    p.add_argument("--method", choices=METHODS, default="gf")

    p = sub.add_parser("table", parents=[common], help="Rows m = 1..m_max, columns n = 1..n_max.")
    p.add_argument("--d", type=positive_int, required=True)
    p.add_argument("--m-max", type=positive_int, default=6)
    p.add_argument("--n-max", type=positive_int, default=10)
    p.add_argument("--format", choices=["csv", "markdown"], default="csv")
    p.add_argument("--method", choices=METHODS, default="gf")

    p = sub.add_parser("series", parents=[common], help="Coefficients of S_{m,d} through a given order.")
    p.add_argument("--m", type=positive_int, required=True)
    p.add_argument("--d", type=positive_int, required=True)
    p.add_argument("--order", type=natural_int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--method", choices=METHODS, default="gf")

    p = sub.add_parser("curves", parents=[common], help="Long-format growth data m,d,n,count.")
    p.add_argument("--m-list", type=int_list, default=[2, 5])
    p.add_argument("--d-list", type=int_list, default=[1, 2, 3])
    p.add_argument("--n-max", type=positive_int, default=10)

    p = sub.add_parser("verify", parents=[common], help="Run verification suites.")
    p.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    p.add_argument("--d", type=positive_int, default=None)
    p.add_argument("--m-max", type=positive_int, default=None)
    p.add_argument("--n-max", type=natural_int, default=None)
    p.add_argument("--order", type=natural_int, default=None)

    p = sub.add_parser("system", parents=[common], help="Print the generating-function system for d.")
    p.add_argument("--d", type=positive_int, required=True)

    p = sub.add_parser("encode", parents=[common], help="Map a stack to its DLU path.")
    p.add_argument("--n", type=natural_int, required=True)
    p.add_argument("--arcs", type=arc_list, default=())
    p.add_argument("--d", type=positive_int, required=True)

    p = sub.add_parser("decode", parents=[common], help="Map a Lambda-free DLU path back to its stack.")
    p.add_argument("--d", type=positive_int, required=True)
    p.add_argument("--path", required=True)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
        force=True,
    )
    settings = settings_from(args)
    try:
        return COMMANDS[args.command](args, settings)
    except PreconditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except StackEnumerationError as e:
        logger.error(f"Command '{args.command}' failed: {e}", exc_info=True)
        return 1


if __name__ == "__main__":
    sys.exit(main())
