import pytest

from canonical_cones.cartan import cartan
from canonical_cones.verify import SUITES, cycle_checks, run_suite


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_a2_suites_pass(suite):
    checks, _ = run_suite(suite, cartan("A2"))
    assert checks
    assert all(ch.passed for ch in checks), [ch.to_json() for ch in checks if not ch.passed]


@pytest.mark.parametrize("suite", ["braid", "ghkk-mutation", "theorem-a", "unicones"])
def test_a3_suites_pass(suite):
    checks, _ = run_suite(suite, cartan("A3"))
    assert all(ch.passed for ch in checks)


def test_every_a3_cycle_is_trivial():
    # the A3 move graph has only 4-cycles and 14-cycles; check them all
    checks = cycle_checks(cartan("A3"), max_len=14)
    assert all(ch.passed for ch in checks)
    assert all(ch.detail.startswith("24 cycles") for ch in checks)


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope", cartan("A2"))
