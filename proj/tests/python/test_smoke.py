"""Smoke tests for the python bindings. Run after `pip install .`."""

import pytest

import rainbowdom as rd


def test_petersen_build():
    g = rd.build_generalized_petersen(6, 1)
    assert g.n_vertices == 12
    assert g.edge_count == 18
    assert rd.is_cubic(g)
    assert g.label(0) == "u0"
    parts = rd.bipartition(g)
    assert parts is not None and len(parts[0]) == 6


def test_petersen_rejects_bad_params():
    with pytest.raises(ValueError):
        rd.build_generalized_petersen(6, 3)


def test_pattern_verifies_at_the_bound():
    g = rd.build_generalized_petersen(6, 1)
    a = rd.extremal_pattern(6, 1, 4)
    assert rd.weight(a) == 8
    report = rd.verify_trdf(g, a)
    assert report.passed and not report.violations


def test_solver_and_certificate():
    result = rd.solve_auto(rd.PetersenParams(6, 1), 4)
    assert result.optimum == 8
    assert result.method == "dp"
    cert = rd.certify(rd.PetersenParams(6, 1), 4, result.witness)
    assert cert.kind == "exact"

    bb = rd.solve_branch_bound(rd.build_generalized_petersen(5, 1), 2)
    dp = rd.solve_profile_dp(rd.PetersenParams(5, 1), 2)
    assert bb.optimum == dp.optimum


def test_bounds_catalog():
    r = rd.bounds_pckk(6, 2, 3)
    assert (r.lower, r.upper) == (13, 15)
    assert r.exact is None
    assert rd.bounds_pckk(6, 1, 5).exact == 10
    assert rd.is_characterized_extremal(6, 1, 3)
    assert rd.known_exact_pn1(10, 3) == 12
    both = rd.bounds_pckk(5, 2, 2, mode="as_printed")
    assert both.exact == 10 and both.note


def test_graph_round_trip():
    g = rd.build_example_graph()
    back = rd.parse_graph(rd.serialize_graph(g))
    assert back == g
    assert rd.weight(rd.example_4rdf()) == 24
    assert rd.verify_trdf(g, rd.example_4rdf()).passed


def test_lift_and_audits():
    g = rd.build_generalized_petersen(6, 1)
    base = rd.extremal_pattern(6, 1, 4)
    lifted = rd.lift(g, base)
    assert lifted.t == 5
    assert rd.weight(lifted) == 10
    assert rd.audit_extremal_4(g, base).overall
    report, finding = rd.audit_outer_pattern(rd.PetersenParams(6, 1), rd.extremal_pattern(6, 1, 3))
    assert report.overall
    assert finding is not None and finding.a == [1]


def test_refusal_error():
    with pytest.raises(rd.StateSpaceTooLargeError):
        rd.solve_profile_dp(rd.PetersenParams(30, 5), 5, max_states=1000)
