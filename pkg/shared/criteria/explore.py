"""Seeded random and exhaustive complexes, audited in bulk."""

from itertools import combinations
from math import comb
from pathlib import Path
from typing import Iterator, List, Optional, Sequence

import numpy as np

from shared.complexes.simplicial import SimplicialComplex, from_masks, full_mask, mask_of, restrict
from shared.config import get_settings
from shared.criteria.audit import paper_audit
from shared.errors import BudgetExceededError, ComplexError
from shared.log import get_logger
from shared.schemas.reports import AuditReport

logger = get_logger(__name__)


def random_pure_complex(rng: np.random.Generator, n: int, d: int) -> SimplicialComplex:
    """Random pure d-dimensional complex on at most n vertices, re-indexed onto the vertices it uses."""
    if not 0 <= d < n:
        raise ComplexError(f"need 0 <= d < n, got d={d}, n={n}")
    candidates = list(combinations(range(1, n + 1), d + 1))
    m = int(rng.integers(1, len(candidates) + 1))
    picked = rng.choice(len(candidates), size=m, replace=False)
    delta = from_masks(n, [mask_of(candidates[int(k)]) for k in sorted(picked)])
    return restrict(delta, delta.used_vertices).complex


def exhaustive_pure_complexes(n: int, dims: Optional[Sequence[int]] = None) -> Iterator[SimplicialComplex]:
    """Every pure facet family on [n] that uses all n vertices."""
    full = full_mask(n)
    for d in dims if dims is not None else range(n):
        subsets = [mask_of(c) for c in combinations(range(1, n + 1), d + 1)]
        for bits in range(1, 1 << len(subsets)):
            chosen = [s for k, s in enumerate(subsets) if bits >> k & 1]
            used = 0
            for s in chosen:
                used |= s
            if used == full:
                yield from_masks(n, chosen)


def exhaustive_count_bound(n: int) -> int:
    return sum(2 ** comb(n, d + 1) for d in range(n))


def candidate_path(out_dir: Path, seed: int, index: int) -> Path:
    return out_dir / f"candidate-{seed}-{index}.json"


def explore_random(
    seed: int,
    count: int,
    n_max: int,
    n_min: int = 3,
    fields: Optional[Sequence[str]] = None,
    budget: Optional[int] = None,
    out_dir: Optional[str] = None,
) -> List[AuditReport]:
    """Audit ``count`` random pure complexes; violations are written out as candidates, never raised."""
    if n_min < 2 or n_max < n_min:
        raise ComplexError(f"need 2 <= n_min <= n_max, got {n_min}..{n_max}")
    rng = np.random.default_rng(seed)
    target = Path(out_dir or get_settings().counterexample_dir)
    reports: List[AuditReport] = []
    for index in range(count):
        n = int(rng.integers(n_min, n_max + 1))
        d = int(rng.integers(1, n))
        delta = random_pure_complex(rng, n, d)
        if delta.dim < 1:
            continue
        try:
            report = paper_audit(delta, fields=fields, budget=budget, subject=f"random-{seed}-{index}")
        except BudgetExceededError as e:
            logger.warning("random-%d-%d skipped: %s", seed, index, e)
            continue
        if report.violations:
            target.mkdir(parents=True, exist_ok=True)
            path = candidate_path(target, seed, index)
            path.write_text(report.json(sort_keys=True, indent=2))
            logger.error("counterexample candidate written to %s", path)
        reports.append(report)
    return reports


def summarize(reports: Sequence[AuditReport]) -> dict:
    return {
        "audited": len(reports),
        "violations": sum(1 for r in reports if r.violations),
        "cm_square": sum(1 for r in reports if all(a.cm_square.is_cm for a in r.per_field.values())),
    }
