import pytest

from dcoset.report import KIND_BY_CRITERION, KIND_BY_REPRESENTATION, KIND_VERIFIED
from dcoset.scenarios import (
    get_scenario,
    run_scenario,
    scenario_catalog,
    scenario_names,
)

CANONICAL = ("background", "example1", "example2", "example3")


def test_registry_contents():
    names = scenario_names()
    for name in CANONICAL:
        assert name in names
        assert f"{name}-mutated" in names


def test_unknown_scenario():
    with pytest.raises(ValueError):
        get_scenario("nope")


@pytest.mark.parametrize("name", CANONICAL)
def test_canonical_scenarios_pass(name):
    report = run_scenario(name)
    assert report.verdict == "pass", report.to_text()


@pytest.mark.parametrize("name", CANONICAL)
def test_mutants_fail_exactly_their_target(name):
    spec = get_scenario(f"{name}-mutated")
    assert spec.negative_control
    report = run_scenario(f"{name}-mutated")
    assert report.verdict == "fail"
    assert [c.id for c in report.failing()] == [spec.targeted_check]


def test_reports_are_deterministic():
    for name in ("background", "example3"):
        a = run_scenario(name)
        b = run_scenario(name)
        assert a.to_json() == b.to_json()
        assert a.to_text() == b.to_text()


def test_catalog_shape():
    entries = {e[0]: e for e in scenario_catalog()}
    assert set(entries) == set(scenario_names())
    name, summary, checks, negative, targeted = entries["example1"]
    assert len(checks) >= 6
    assert not negative
    assert targeted is None
    _, _, _, mneg, mtarget = entries["example1-mutated"]
    assert mneg and mtarget == "invariants-constant-on-orbits"


def test_every_check_has_claim_and_valid_kind():
    kinds = {KIND_VERIFIED, KIND_BY_CRITERION, KIND_BY_REPRESENTATION}
    for name, _, checks, _, _ in scenario_catalog():
        ids = [cid for cid, _, _ in checks]
        assert len(ids) == len(set(ids)), f"duplicate check ids in {name}"
        for cid, kind, claim in checks:
            assert kind in kinds
            assert claim.strip()


def test_conclusion_lines_are_by_criterion():
    spec = get_scenario("background")
    by_kind = {c.id: c.kind for c in spec.checks}
    assert by_kind["constructible-quotient-conclusion"] == KIND_BY_CRITERION
    spec3 = get_scenario("example3")
    by_kind3 = {c.id: c.kind for c in spec3.checks}
    assert by_kind3["blowup-collapse-conclusion"] == KIND_BY_CRITERION
    assert by_kind3["quotient-target-described"] == KIND_BY_REPRESENTATION


def test_example1_extends_background():
    bg = {c.id for c in get_scenario("background").checks}
    e1 = {c.id for c in get_scenario("example1").checks}
    assert bg < e1
    assert {"stabilizer-is-shear-group", "coset-transport-matches-shear"} <= e1


def test_shadows_declared():
    assert get_scenario("background").shadows
    assert len(get_scenario("example1").shadows) == 2
    assert get_scenario("example2").shadows
    assert len(get_scenario("example3").shadows) == 2


def test_scenario_reports_cover_all_checks():
    for name in CANONICAL:
        spec = get_scenario(name)
        report = run_scenario(name)
        assert [c.id for c in report.checks] == [c.id for c in spec.checks]
