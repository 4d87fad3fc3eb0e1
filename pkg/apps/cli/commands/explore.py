from apps.cli.io import emit, md_table
from shared.criteria.explore import explore_random, summarize
from shared.errors import ImplicationViolation


def _run_queued(args) -> dict:
    from workers.explore.tasks import run_explore_batch

    batches = []
    per = max(1, args.count // args.batches)
    for b in range(args.batches):
        seed = args.seed + b
        batches.append(
            run_explore_batch.delay(seed, per, args.n_max, n_min=args.n_min, fields=[f.tag for f in args.battery], budget=args.budget)
        )
    results = [r.get() for r in batches]
    return {
        "audited": sum(r["audited"] for r in results),
        "violations": sum(r["violations"] for r in results),
        "cm_square": sum(r["cm_square"] for r in results),
        "batches": [{k: v for k, v in r.items() if k != "reports"} for r in results],
    }


def run(args) -> int:
    if args.queue:
        summary = _run_queued(args)
    else:
        reports = explore_random(
            args.seed,
            args.count,
            args.n_max,
            n_min=args.n_min,
            fields=[f.tag for f in args.battery],
            budget=args.budget,
            out_dir=args.out,
        )
        summary = summarize(reports)
        summary["subjects"] = [
            {"subject": r.subject, "n": r.n, "violations": r.violations} for r in reports
        ]
    summary["seed"] = args.seed
    emit(args, summary, md_table(["audited", "violations", "CM square"], [(summary["audited"], summary["violations"], summary["cm_square"])]))
    if summary["violations"]:
        raise ImplicationViolation([{"name": "random-exploration", "count": summary["violations"]}], "explore")
    return 0


def register(subparsers, common) -> None:
    p = subparsers.add_parser("explore", parents=[common], help="randomised audits")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--out", help="directory for counterexample candidates")
    p.add_argument("--queue", action="store_true", help="dispatch batches to the Celery worker")
    p.add_argument("--batches", type=int, default=4)
    p.set_defaults(handler=run)
