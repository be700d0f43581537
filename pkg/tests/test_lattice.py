"""Meets, joins, lattice detection, and the interval lattice scans."""

import pytest

from absorder import (
    ResourceGuardError,
    build_interval,
    full_poset,
    identity,
    is_lattice,
    join,
    maximal_common_lower_bounds,
    meet,
    parse_cycles,
    predict_lattice,
    prediction_scan,
)


def test_meet_and_join_on_a_lattice_interval():
    top = parse_cycles("[1,2]", 2)
    p = build_interval(identity(2), top, "B")
    a = parse_cycles("((1,2))", 2)
    b = parse_cycles("((1,-2))", 2)
    assert meet(p, a, b) == identity(2)
    assert join(p, a, b) == top
    assert meet(p, a, top) == a
    assert join(p, identity(2), b) == b


def test_meet_and_join_accept_indices_and_reject_strangers():
    p = build_interval(identity(2), parse_cycles("[1,2]", 2), "B")
    ai = p.index[parse_cycles("((1,2))", 2)]
    bi = p.index[parse_cycles("((1,-2))", 2)]
    assert meet(p, ai, bi) == identity(2)
    with pytest.raises(ValueError):
        meet(p, parse_cycles("[1,-2]", 2), parse_cycles("((1,2))", 2))


def test_is_lattice_true_on_hook_interval():
    p = build_interval(identity(3), parse_cycles("[1,2,3]", 3), "B")
    verdict = is_lattice(p)
    assert verdict.is_lattice
    assert verdict.witness is None


def test_is_lattice_false_with_witness():
    # two disjoint balanced 2-cycles: a known non-lattice interval
    top = parse_cycles("[1,2][3,4]", 4)
    p = build_interval(identity(4), top, "B")
    verdict = is_lattice(p)
    assert not verdict.is_lattice
    wit = verdict.witness
    assert len(wit["maximal_lower_bounds"]) > 1
    x = parse_cycles(wit["x"], 4)
    y = parse_cycles(wit["y"], 4)
    assert meet(p, x, y) is None
    assert "maximal_lower_bounds" in verdict.to_json()["witness"]


def test_join_missing_returns_none():
    p = full_poset("B", 2)
    assert join(p, parse_cycles("[1]", 2), parse_cycles("[2]", 2)) is None


def test_predict_lattice_hook_rule_signed():
    cases = (
        ("[1,2,3]", 3, True),      # hook (3,)
        ("[1,2][3]", 3, True),     # hook (2,1)
        ("[1][2][3]", 3, True),    # hook (1,1,1)
        ("((1,2,3))", 3, True),    # no balanced part at all
        ("[1,2][3,4]", 4, False),  # (2,2) is not a hook
    )
    for text, n, expected in cases:
        assert predict_lattice(parse_cycles(text, n), "B") is expected


def test_predict_lattice_even_rule():
    cases = (
        ("((1,2,3))", 3, True),       # empty profile
        ("[1,2][3]", 3, True),        # (2,1)
        ("[1][2]", 2, True),          # (1,1)
        ("[1,2,3][4]", 4, True),      # (3,1)
        ("[1][2][3][4]", 4, True),    # (1,1,1,1)
        ("[1,2][3,4]", 4, False),     # (2,2)
    )
    for text, n, expected in cases:
        assert predict_lattice(parse_cycles(text, n), "D") is expected
    with pytest.raises(ValueError):
        predict_lattice(parse_cycles("[1]", 2), "D")


def test_prediction_matches_reality_for_even_shapes():
    q = build_interval(identity(4), parse_cycles("[1][2][3][4]", 4), "D")
    assert len(q) == 44
    assert is_lattice(q).is_lattice
    p = build_interval(identity(4), parse_cycles("[1,2,3][4]", 4), "D")
    assert len(p) == 50
    assert is_lattice(p).is_lattice
    r = build_interval(identity(4), parse_cycles("[1,2][3,4]", 4), "D")
    verdict = is_lattice(r)
    assert not verdict.is_lattice
    assert verdict.witness["maximal_lower_bounds"] == ["((1,3))", "((2,4))"]


def test_prediction_scan_signed_small():
    for n in (2, 3):
        report = prediction_scan("B", n)
        assert report.ok()
        assert report.mismatches == []
    assert prediction_scan("B", 2).checked == 8


def test_prediction_scan_even_small():
    report = prediction_scan("D", 3)
    assert report.ok()
    assert report.checked == 24


def test_prediction_scan_guard():
    with pytest.raises(ResourceGuardError):
        prediction_scan("B", 5)
    with pytest.raises(ResourceGuardError):
        prediction_scan("B", 3, guard=2)


def test_two_maximal_lower_bounds_witness_pair():
    x = parse_cycles("((1,-4,3,-2))", 4)
    y = parse_cycles("((1,2,3,4))", 4)
    bounds = maximal_common_lower_bounds(x, y, "B")
    assert sorted(map(str, bounds)) == ["((1,3))", "((2,4))"]


def test_three_maximal_lower_bounds_spot_check():
    u = parse_cycles("[1][2][3][4]", 5)
    v = parse_cycles("[1][2][3][5]", 5)
    bounds = maximal_common_lower_bounds(u, v, "D")
    assert sorted(map(str, bounds)) == ["[1][2]", "[1][3]", "[2][3]"]
