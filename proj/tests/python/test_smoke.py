import pytest

import subzeta


def test_analyze_zero_matrix():
    doc = subzeta.analyze([[0, 0], [0, 0]])
    assert doc["global_text"] == "zeta(s) * zeta(s-1)"
    assert (doc["alpha"], doc["beta"]) == (2, 1)
    assert doc["simple_pole_at_zero"]


def test_analyze_gaussian():
    doc = subzeta.analyze([[0, -1], [1, 0]])
    assert doc["global_latex"] == r"\zeta_{\mathbf{Q}[X]/(X^2 + 1)}(s)"
    assert not doc["simple_pole_at_zero"]
    assert "\\zeta" in subzeta.render([[0, -1], [1, 0]], "latex")


def test_edv_round_trip():
    doc = subzeta.analyze([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    again = subzeta.analyze_edv([([0, 1], [2, 1])])
    assert again["global"] == doc["global"]


def test_oracle_against_formula():
    assert subzeta.count_invariant_sublattices([[0, 1], [0, 0]], 3, 3) == [1, 1, 4, 4]
    factor = subzeta.local_euler_factor([([1, 0, 1], [1])], 5)
    assert factor == [(0, 1, -2)]
    assert subzeta.dirichlet_coefficients(factor, 5, 4) == [1, 2, 3, 4, 5]


def test_large_entries_survive():
    big = 10**30
    doc = subzeta.analyze([[0, big], [0, 0]])
    assert doc["matrix"]["entries"][0][1] == str(big)


def test_verify_exceptional():
    report = subzeta.verify([[0, 2], [0, 0]], [2], 4)
    row = report["comparisons"][0]
    assert not row["match"] and row["heuristically_bad"] and row["exceptional_match"]
    assert report["ok"]


def test_special_forms():
    assert subzeta.zpxn_zeta(3) == [(0, 1, -1), (1, 2, -1), (2, 3, -1)]
    a = subzeta.powerseries_ring_coeffs(16)
    assert a[1] == 1 and a[3] == 3
    assert subzeta.functional_equation([2, 2, 1]) == (5, 10, 7, True)
    assert subzeta.w_lambda([2, 1]) == [(0, 1, -1), (1, 1, -1), (2, 2, -1)]
    assert subzeta.exceptional_coefficients(1, 2, 5) == [1, 3, 3, 7, 7, 15]


def test_errors():
    with pytest.raises(subzeta.BudgetExceeded):
        subzeta.count_invariant_sublattices([[0, 0], [0, 0]], 7, 6, budget=10)
    with pytest.raises(subzeta.DegreeCapExceeded):
        subzeta.analyze([[0, -1], [1, 0]], degree_cap=1)
    with pytest.raises(ValueError):
        subzeta.analyze([])


def test_small_campaign():
    assert subzeta.campaign(count=5, max_exp=2)["mismatches"] == 0
