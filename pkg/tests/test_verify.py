"""The verification aggregator behind the `verify` CLI subcommand."""

import pytest

from confhom import run_verifications
from confhom.verify import verify_p2_routes, verify_regime_dichotomy, verify_serre_agreement


@pytest.mark.parametrize("p", [2, 3, 5])
def test_all_targets_pass_at_reduced_bounds(p):
    reports = run_verifications("all", p, max_n=10, max_q=2)
    assert reports and all(r.passed for r in reports)
    names = [r.name for r in reports]
    assert any(n.startswith("delta2") for n in names)
    assert any(n.startswith("regime-dichotomy") for n in names)


def test_single_target_selects_reports():
    reports = run_verifications("bijection", 3, max_n=6, max_q=1)
    assert [r.name for r in reports] == ["bijection p=3 q=0", "bijection p=3 q=1"]


def test_unknown_target_rejected():
    with pytest.raises(ValueError):
        run_verifications("everything", 3)


def test_individual_checks():
    assert verify_regime_dichotomy(3, 12).passed
    assert verify_serre_agreement(5, 8).passed
    assert verify_p2_routes(8, (1, 2)).passed


def test_report_payload_shape():
    report = run_verifications("classify", 3, max_n=6)[0]
    payload = report.to_payload()
    assert set(payload) == {"name", "passed", "details"}
    assert payload["details"]["monomials_checked"] > 0
