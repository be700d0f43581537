import pytest

from absorder.order import (
    Poset,
    ResourceGuardError,
    abs_leq,
    build_ideal,
    build_interval,
    covered_by,
    covers,
    covers_by_pattern,
    cover_lifting_ok,
    coxeter_ideal,
    elements_below,
    fiber_ideal_M,
    fiber_ideal_identity_ok,
    fiber_map,
    full_poset,
    project_pi,
    sn_leq_noncrossing,
    translate_interval,
)
from absorder.signed import format_cycles, identity, parse_cycles


def test_leq_by_length_additivity():
    e = identity(2)
    t = parse_cycles("((1,2))", 2)
    top = parse_cycles("[1,2]", 2)
    assert abs_leq(e, t) and abs_leq(t, top) and abs_leq(e, top)
    assert not abs_leq(top, t)
    flip = parse_cycles("[1]", 2)
    assert abs_leq(flip, top)


def test_flip_below_flip_product():
    # the missing factor is itself a reflection in both cases
    assert abs_leq(parse_cycles("[1]", 2), parse_cycles("[1][2]", 2))
    assert abs_leq(parse_cycles("((1,2))", 2), parse_cycles("[1][2]", 2))


def test_covers_match_pattern_surgery():
    for n in (2, 3):
        for w in full_poset("B", n).elements:
            assert covers(w, "B") == covers_by_pattern(w), format_cycles(w)


def test_covered_by_inverts_covers():
    p = full_poset("B", 2)
    for w in p.elements:
        for v in covers(w, "B"):
            assert w in covered_by(v, "B")


def test_noncrossing_agreement_small():
    p = full_poset("S", 4)
    for u in p.elements:
        for v in p.elements:
            assert abs_leq(u, v, "S") == sn_leq_noncrossing(u, v)


def test_poset_shape():
    p = full_poset("B", 2)
    assert len(p) == 8
    assert p.rank_sizes() == (1, 4, 3)
    assert p.height() == 2
    assert p.bottom() is not None and p.top() is None
    assert not p.is_bounded()
    assert p.is_graded_by_rank()
    assert len(p.maximal_indices()) == 3


def test_bottom_requires_domination():
    # two incomparable elements: unique shortest is not below the other
    sub = Poset([parse_cycles("[1]", 2), parse_cycles("[1,2]", 2),
                 parse_cycles("[2]", 2)], "B", "test")
    assert sub.bottom() is None


def test_interval_is_bounded_and_graded():
    iv = build_interval(identity(3), parse_cycles("[1,2,3]", 3), "B")
    assert iv.is_bounded()
    assert iv.rank_sizes() == (1, 9, 9, 1)
    assert iv.maximal_chain_count() == 27


def test_interval_rejects_incomparable_ends():
    with pytest.raises(ValueError):
        build_interval(parse_cycles("[1]", 2), parse_cycles("((1,2))", 2), "B")


def test_chain_counts_triangle():
    iv = build_interval(identity(2), parse_cycles("[1,2]", 2), "B")
    counts = iv.chain_counts()
    # 6 elements; chains with 2 elements = comparable pairs
    assert counts[0] == 1 and counts[1] == 6
    assert counts[2] == 4 + 4 + 1  # e<t, t<top, e<top
    assert counts[3] == 4


def test_elements_below_is_principal_ideal():
    w = parse_cycles("[1][2]", 2)
    below = elements_below(w, "B")
    assert {format_cycles(z) for z in below} == {
        "e", "[1]", "[2]", "((1,2))", "((1,-2))", "[1][2]"}


def test_build_ideal_union():
    p = build_ideal([parse_cycles("[1]", 2), parse_cycles("((1,2))", 2)], "B")
    assert len(p) == 3
    assert p.height() == 1


def test_coxeter_ideal_sizes():
    assert len(coxeter_ideal(2, "B")) == 7
    assert len(coxeter_ideal(3, "B")) == 38
    assert len(full_poset("S", 3)) == 6


def test_translate_interval_is_isomorphism():
    u = parse_cycles("((1,2))", 3)
    v = parse_cycles("[1,2,3]", 3)
    mapping, ok = translate_interval(u, v, "B")
    assert ok
    assert len(mapping) == len(build_interval(u, v, "B"))


def test_projection_deletes_letter():
    w = parse_cycles("[1,2,3]", 3)
    assert format_cycles(project_pi(w, 3)) == "[1,2]"
    assert format_cycles(project_pi(w, 2)) == "[1,3]"
    fixed = parse_cycles("((1,2))", 3)
    assert project_pi(fixed, 3) == fixed


def test_fiber_map_splits_moved_flag():
    w = parse_cycles("[1,2,3]", 3)
    fp = fiber_map(w, 3)
    assert fp.moved == 1 and format_cycles(fp.base) == "[1,2]"
    fixed = parse_cycles("((1,2))", 3)
    assert fiber_map(fixed, 3).moved == 0


def test_fiber_ideal_smallest_case():
    ambient = coxeter_ideal(2, "B")
    ideal = fiber_ideal_M(identity(1), ambient)
    assert len(ideal) == 4
    assert ideal.height() == 1
    assert {format_cycles(w) for w in ideal.elements} == {
        "e", "[2]", "((1,2))", "((1,-2))"}


def test_cover_lifting_small_scopes():
    assert cover_lifting_ok(full_poset("S", 3))
    assert cover_lifting_ok(coxeter_ideal(3, "B"))


def test_fiber_ideal_identity_small_scopes():
    assert fiber_ideal_identity_ok(full_poset("S", 3))
    assert fiber_ideal_identity_ok(coxeter_ideal(3, "B"))


def test_subposet_reranks_from_zero():
    p = full_poset("B", 2)
    top = p.index[parse_cycles("[1,2]", 2)]
    members = [i for i in range(len(p)) if p.leq(i, top) and p.rank[i] >= 1]
    sub = p.subposet(members)
    assert min(sub.rank) == 0


def test_to_dot_mentions_every_element():
    p = full_poset("B", 2)
    dot = p.to_dot()
    for w in p.elements:
        assert format_cycles(w) in dot
