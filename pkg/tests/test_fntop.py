from __future__ import annotations

import pytest

from topolab.errors import (
    BudgetExceeded,
    MismatchedBase,
    MismatchedGround,
    NotATopology,
)
from topolab.finspace import SubsetFamily, discrete, separation_profile
from topolab.fntop import (
    NAMED,
    FnTopology,
    compare_topologies,
    evaluation_witness,
    kset_topology,
    lift_open_family,
    named_function_topology,
)
from topolab.hypertop import HyperSpace, compact_subbasis_topology, scott
from topolab.hypertop import _validate_topology_family
from topolab.mapspace import enumerate_continuous

from conftest import all_spaces_up_to


def small_pairs():
    zs = all_spaces_up_to(2)
    return [(y, z) for y in all_spaces_up_to(3) for z in zs]


def fn_indiscrete(maps):
    return FnTopology.of(maps, [], "custom")


def fn_discrete(maps):
    return FnTopology.of(maps, [1 << i for i in range(len(maps))], "custom")


def test_compact_open_sierpinski_pinned(s):
    t = named_function_topology("co", s, s)
    assert t.maps.tables == ((0, 0), (0, 1), (1, 1))
    # chain of four: nothing, {const1}, {const1, id}, everything
    assert t.opens.members == (0, 0b100, 0b110, 0b111)
    assert t.provenance == "co"


def test_one_point_domain_mirrors_codomain(pt):
    for z in all_spaces_up_to(2):
        t = named_function_topology("co", pt, z)
        assert len(t.maps) == z.size  # constants only, in value order
        assert t.opens.members == z.opens.members


def test_plain_and_z_relative_ranges_agree(s):
    for y, z in small_pairs():
        maps = enumerate_continuous(y, z)
        a = kset_topology(maps, "plain")
        b = kset_topology(maps, "z_relative")
        assert (a.provenance, b.provenance) == ("co", "coZ")
        assert compare_topologies(a, b).verdict == "equal"
    with pytest.raises(ValueError):
        kset_topology(enumerate_continuous(s, s), "uniform")


def test_lift_of_scott_equals_compact_open(s):
    maps = enumerate_continuous(s, s)
    t = lift_open_family(scott(s), maps)
    assert t.opens.members == (0, 0b100, 0b110, 0b111)
    assert compare_topologies(t, named_function_topology("co", s, s)).verdict == "equal"


def test_lift_collapse_to_indiscrete(chain2, indisc2):
    from topolab.hypertop import z_scott

    maps = enumerate_continuous(chain2, indisc2)
    assert len(maps) == 4
    t = lift_open_family(z_scott(chain2, indisc2), maps)
    assert t.opens.members == (0, 0b1111)
    assert named_function_topology("t1sz", chain2, indisc2).opens.members == (0, 0b1111)


def test_lift_of_indiscrete_hyperspace(s):
    h = HyperSpace(
        base=s,
        ground=s.opens.members,
        opens=SubsetFamily.of(len(s.opens), [0, 0b111]),
        kind="custom",
    )
    t = lift_open_family(h, enumerate_continuous(s, s))
    assert t.opens.members == (0, 0b111)


def test_named_guards(s, chain2):
    with pytest.raises(ValueError):
        named_function_topology("pointwise", s, s)
    with pytest.raises(MismatchedBase):
        lift_open_family(scott(chain2), enumerate_continuous(s, s))
    with pytest.raises(MismatchedGround):
        compare_topologies(
            named_function_topology("co", s, s),
            named_function_topology("co", chain2, s),
        )
    with pytest.raises(NotATopology):
        FnTopology.of(enumerate_continuous(s, s), [1 << 5])


def test_compare_against_extremes(s):
    co = named_function_topology("co", s, s)
    low = compare_topologies(fn_indiscrete(co.maps), co)
    assert low.verdict == "a_coarser"
    assert 0b100 in low.b_only  # {const1} separates
    high = compare_topologies(fn_discrete(co.maps), co)
    assert high.verdict == "a_finer"
    assert 0b001 in high.a_only  # {const0} is not compact-open
    assert compare_topologies(co, co).verdict == "equal"


def test_comparison_grid():
    ordered = [
        ("co", "coZ"),
        ("co", "isbell"),
        ("isbell", "sisbell"),
        ("coZ", "t1z"),
        ("isbell", "t1z"),
        ("sisbell", "t1sz"),
    ]
    for y, z in small_pairs():
        ts = {n: named_function_topology(n, y, z) for n in NAMED}
        for lo, hi in ordered:
            assert compare_topologies(ts[lo], ts[hi]).verdict in ("equal", "a_coarser")
        # the two preimage-family variants are compared but not ordered here
        assert compare_topologies(ts["t1z"], ts["t1sz"]).verdict in (
            "equal",
            "a_coarser",
            "a_finer",
            "incomparable",
        )


def test_sierpinski_codomain_collapses_names(s):
    for y in all_spaces_up_to(3):
        co = named_function_topology("co", y, s)
        assert compare_topologies(named_function_topology("coZ", y, s), co).verdict == "equal"
        assert (
            compare_topologies(
                named_function_topology("t1z", y, s),
                named_function_topology("isbell", y, s),
            ).verdict
            == "equal"
        )
        assert (
            compare_topologies(
                named_function_topology("t1sz", y, s),
                named_function_topology("sisbell", y, s),
            ).verdict
            == "equal"
        )


def test_characteristic_bijection_onto_compact_subbasis_topology(s):
    # sending each map to the preimage of {1} identifies C(Y,S) with the
    # opens of Y and carries the compact-open-style topology across
    for y in all_spaces_up_to(3):
        t = named_function_topology("coZ", y, s)
        hyper = compact_subbasis_topology(y)
        images = [f.preimage(0b10) for f in t.maps]
        assert sorted(images) == list(y.opens.members)
        translate = {
            i: hyper.ground_index[v] for i, v in enumerate(images)
        }
        carried = set()
        for mask in t.opens:
            out = 0
            for i in translate:
                if (mask >> i) & 1:
                    out |= 1 << translate[i]
            carried.add(out)
        assert carried == set(hyper.opens.members)


def test_separation_grades_survive_lifting():
    for y, z in small_pairs():
        want = separation_profile(z)
        for name in ("coZ", "t1z", "t1sz"):
            got = separation_profile(named_function_topology(name, y, z).as_space())
            if want.t0:
                assert got.t0
            if want.t1:
                assert got.t1
            if want.t2:
                assert got.t2


def test_fn_topologies_pass_axioms(s, chain2, indisc2):
    pairs = [(s, s), (chain2, indisc2), (discrete(3), discrete(2))]
    for y, z in pairs:
        for name in NAMED:
            t = named_function_topology(name, y, z)
            _validate_topology_family(len(t.maps), t.opens, name)


def test_is_open_mask_matches_materialized(s):
    t = named_function_topology("co", s, s)
    for mask in range(1 << len(t.maps)):
        assert t.is_open_mask(mask) == (mask in t.opens)
    assert not t.is_open_mask(-1) and not t.is_open_mask(1 << len(t.maps))


def test_materialize_budget():
    maps = enumerate_continuous(discrete(4), discrete(2))
    assert len(maps) == 16
    with pytest.raises(BudgetExceeded):
        fn_discrete(maps).materialize()
    small = enumerate_continuous(discrete(3), discrete(2))
    assert len(fn_discrete(small).materialize(budget=300)) == 256


def test_evaluation_witness(s):
    co = named_function_topology("co", s, s)
    assert evaluation_witness(co) is None
    assert evaluation_witness(fn_discrete(co.maps)) is None
    # the indiscrete topology cannot track evaluation into the open point
    assert evaluation_witness(fn_indiscrete(co.maps)) == 0b10
