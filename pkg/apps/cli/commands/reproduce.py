from pathlib import Path

from apps.cli.io import dumps, emit
from apps.cli.services.paper_battery import CHECKS, battery_markdown, run_battery
from shared.errors import ImplicationViolation


def run(args) -> int:
    report = run_battery(
        fields=args.battery,
        budget=args.budget,
        seed=args.seed,
        jobs=args.jobs,
        only=args.only,
        skip_slow=args.quick,
        oracle_n_max=args.oracle_n_max,
        oracle_random=args.oracle_random,
        timings=args.timings,
    )
    payload = report.dict()
    markdown = battery_markdown(report)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.json").write_text(dumps(payload) + "\n")
        (out / "report.md").write_text(markdown + "\n")
    emit(args, payload, markdown)
    audits = next((r for r in report.results if r.slug == "implication-audits"), None)
    if audits is not None and audits.passed is False:
        raise ImplicationViolation([{"name": k} for k in audits.details.get("violations", {})], "reproduce-paper")
    return 0 if report.passed else 1


def register(subparsers, common) -> None:
    p = subparsers.add_parser("reproduce-paper", parents=[common], help="run the acceptance battery")
    p.add_argument("--out", help="directory receiving report.json and report.md")
    p.add_argument("--only", nargs="+", choices=[c.slug for c in CHECKS], help="run just these checks")
    p.add_argument("--quick", action="store_true", help="skip the oracle and audit sweeps")
    p.add_argument("--oracle-n-max", type=int, default=5)
    p.add_argument("--oracle-random", type=int, default=200)
    p.add_argument("--timings", action="store_true", help="include wall-clock seconds (breaks byte-identical output)")
    p.set_defaults(handler=run)
