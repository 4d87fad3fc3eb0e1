import json

import numpy as np
import pytest
from pydantic import ValidationError

from shared.complexes import named_complex, new_complex
from shared.config import CONDITION3_MAX_N, Settings
from shared.criteria import (
    condition3_check,
    depth2_criterion,
    exhaustive_pure_complexes,
    explore_random,
    link_diameter_condition,
    oracle_equivalences,
    paper_audit,
    random_pure_complex,
    s2_criterion,
)
from shared.criteria import explore as explore_mod
from shared.criteria.explore import exhaustive_count_bound, summarize
from shared.errors import BruteForceBoundError, ComplexError


def test_depth2_criterion(pentagon, four_path):
    v = depth2_criterion(pentagon)
    assert v.holds and v.details["diameter"] == 2
    v = depth2_criterion(four_path)
    assert not v.holds and v.details["diameter"] == 3
    with pytest.raises(ComplexError):
        depth2_criterion(new_complex(2, [[1], [2]]))


def test_disconnected_diameter_is_reported_as_inf():
    v = depth2_criterion(new_complex(4, [[1, 2], [3, 4]]))
    assert not v.holds and v.details["diameter"] == "inf"


def test_s2_needs_purity():
    with pytest.raises(ComplexError):
        s2_criterion(new_complex(3, [[1, 2], [3]]))
    assert not link_diameter_condition(new_complex(3, [[1, 2], [3]])).holds


def test_rp2_links_have_small_diameter(rp2):
    assert s2_criterion(rp2).holds
    assert link_diameter_condition(rp2).holds


def test_link_certificate_names_the_face():
    # a bowtie: the link of vertex 3 is two disjoint edges
    bowtie = new_complex(5, [[1, 2, 3], [3, 4, 5]])
    v = link_diameter_condition(bowtie)
    assert not v.holds
    assert v.certificate["diameter"] == "inf"


def test_condition3(pentagon, rp2):
    assert condition3_check(pentagon).holds
    v = condition3_check(rp2)
    assert not v.holds
    assert len(v.certificate["triple"]) == 3
    with pytest.raises(BruteForceBoundError):
        condition3_check(named_complex("disjoint_pentagons"))
    assert condition3_check(named_complex("simplex", n=3)).holds


def test_audit_of_pentagon(pentagon):
    report = paper_audit(pentagon, fields=["Q", "F2"], subject="pentagon")
    assert report.ok
    assert report.codim == 3
    items = {i.name: i for i in report.implications}
    assert items["cm-square-implies-gorenstein"].status == "ok"
    assert items["codim3-gorenstein-implies-cm-square[F2]"].status == "ok"
    assert items["triangles-iff-direct-equality"].status == "ok"
    assert report.per_field["Q"].cm_square.is_cm


def test_gorenstein_implication_needs_characteristic_two(four_path):
    report = paper_audit(four_path, fields=["Q"])
    items = {i.name: i for i in report.implications}
    assert items["cm-square-implies-gorenstein"].status == "unchecked"
    assert items["cm-square-implies-conditions-2-3"].status == "vacuous"
    assert report.ok


def test_audit_of_rp2_is_consistent(rp2):
    report = paper_audit(rp2, fields=["Q", "F2"], subject="rp2")
    assert report.ok
    assert report.per_field["Q"].cohen_macaulay.holds
    assert not report.per_field["F2"].cohen_macaulay.holds
    assert not report.sym2_direct
    assert report.condition2_link_diameter.holds


def test_audit_report_is_deterministic(pentagon):
    a = paper_audit(pentagon, fields=["Q"]).json(sort_keys=True)
    b = paper_audit(pentagon, fields=["Q"]).json(sort_keys=True)
    assert a == b


def test_oracle_equivalences_on_small_complexes():
    seen = 0
    for delta in exhaustive_pure_complexes(4):
        items = oracle_equivalences(delta, fields=["Q"])
        assert [i.name for i in items if i.status == "violated"] == []
        seen += 1
    assert 0 < seen <= exhaustive_count_bound(4)


def test_exhaustive_enumeration_uses_every_vertex():
    complexes = list(exhaustive_pure_complexes(3, dims=[1]))
    # edge sets of K3 that cover all three vertices
    assert len(complexes) == 4
    assert all(d.used_vertices == 0b111 for d in complexes)


def test_random_complexes_are_seeded():
    a = random_pure_complex(np.random.default_rng(3), 6, 2)
    b = random_pure_complex(np.random.default_rng(3), 6, 2)
    assert a == b
    assert a.used_vertices == (1 << a.n) - 1
    assert a.is_pure and a.dim == 2
    with pytest.raises(ComplexError):
        random_pure_complex(np.random.default_rng(0), 3, 3)


def test_explore_random_is_reproducible(tmp_path):
    first = explore_random(5, 4, 5, fields=["Q"], out_dir=str(tmp_path))
    second = explore_random(5, 4, 5, fields=["Q"], out_dir=str(tmp_path))
    assert [r.json(sort_keys=True) for r in first] == [r.json(sort_keys=True) for r in second]
    assert summarize(first)["violations"] == 0
    assert not list(tmp_path.glob("candidate-*.json"))


def test_explore_writes_candidates(monkeypatch, tmp_path, pentagon):
    real = paper_audit(pentagon, fields=["Q"])
    monkeypatch.setattr(explore_mod, "paper_audit", lambda *a, **k: real.copy(update={"violations": ["forced"]}))
    reports = explore_random(1, 2, 4, fields=["Q"], out_dir=str(tmp_path))
    written = sorted(p.name for p in tmp_path.glob("candidate-*.json"))
    assert len(written) == len(reports) > 0
    assert json.loads((tmp_path / written[0]).read_text())["violations"] == ["forced"]


def test_condition3_bound_is_capped():
    with pytest.raises(ValidationError):
        Settings(condition3_max_n=CONDITION3_MAX_N + 1)
    with pytest.raises(BruteForceBoundError) as info:
        condition3_check(named_complex("cycle", n=CONDITION3_MAX_N + 1), bound=64)
    assert info.value.bound == CONDITION3_MAX_N
