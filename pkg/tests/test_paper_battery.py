import pytest

from apps.cli.services.paper_battery import (
    CHECKS,
    BatteryContext,
    battery_markdown,
    check_conjecture_graph,
    check_four_path,
    check_pentagon,
    check_triangle_ideal,
    run_battery,
)
from shared.homology import parse_fields

SLUGS = [
    "triangle-ideal",
    "pentagon",
    "rp2",
    "phantom-pentagon",
    "four-path",
    "cross-polytope-stellar",
    "disjoint-pentagons",
    "oracle-equivalences",
    "implication-audits",
    "conjecture-graph",
]


@pytest.fixture
def ctx():
    return BatteryContext(fields=parse_fields("Q,F2"), budget=1_000_000, seed=0)


def test_every_acceptance_slug_is_registered():
    registered = [c.slug for c in CHECKS]
    assert all(s in registered for s in SLUGS)
    assert len(set(registered)) == len(registered)


def test_triangle_ideal(ctx):
    passed, details = check_triangle_ideal(ctx)
    assert passed
    assert details["symbolic_square"][0] == [1, 1, 1]


def test_pentagon(ctx):
    passed, details = check_pentagon(ctx)
    assert passed, details
    assert details["cm_square"] == {"Q": True, "F2": True}


def test_four_path(ctx):
    passed, details = check_four_path(ctx)
    assert passed, details
    assert details["dim"] == [2]


def test_conjecture_graph_first_member_is_the_pentagon(ctx):
    passed, details = check_conjecture_graph(ctx)
    assert passed, details
    assert details["is_pentagon"]


def test_record_only_entries_do_not_fail_the_battery():
    report = run_battery(only=["conjecture-graph-n2"], fields=["Q"])
    assert [r.passed for r in report.results] == [None]
    assert report.passed
    assert "recorded" in battery_markdown(report)


@pytest.mark.slow
@pytest.mark.parametrize("slug", ["rp2", "phantom-pentagon", "cross-polytope-stellar", "disjoint-pentagons"])
def test_worked_examples(slug):
    report = run_battery(only=[slug], fields=["Q", "F2"])
    (result,) = report.results
    assert result.passed, result.details


@pytest.mark.slow
def test_disjoint_pentagons_fall_back_to_factors():
    report = run_battery(only=["disjoint-pentagons"], fields=["F2"])
    fallback = report.results[0].details["factor_fallback"]["F2"]
    assert fallback == {"is_cm": True, "via": "join-factors", "factors": 2}


@pytest.mark.slow
def test_implication_audits():
    report = run_battery(only=["implication-audits"])
    assert report.results[0].passed, report.results[0].details


@pytest.mark.slow
def test_oracle_equivalences():
    report = run_battery(only=["oracle-equivalences"], seed=0)
    result = report.results[0]
    assert result.passed, result.details["discrepancies"]
    assert result.details["checked"] > 200


@pytest.mark.slow
def test_full_battery_is_byte_identical():
    a = run_battery(skip_slow=True).json(sort_keys=True)
    b = run_battery(skip_slow=True).json(sort_keys=True)
    assert a == b
