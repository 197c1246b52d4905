from __future__ import annotations

import pytest

from oracles import is_continuous_table
from topolab.errors import BudgetExceeded, NotOpen, NotZRepresentable
from topolab.finspace import discrete, indiscrete, sierpinski
from topolab.mapspace import (
    enumerate_continuous,
    o_z_family,
    relative_profile,
    sierpinski_correspondence,
    way_below_z,
    z_topology,
)

from conftest import all_spaces_up_to


def test_self_maps_of_sierpinski(s):
    ms = enumerate_continuous(s, s)
    assert ms.tables == ((0, 0), (0, 1), (1, 1))  # swap (1,0) is discontinuous


def test_lexicographic_order_and_oracle_agreement():
    for y in all_spaces_up_to(3):
        for z in all_spaces_up_to(2):
            ms = enumerate_continuous(y, z)
            assert list(ms.tables) == sorted(ms.tables)
            from itertools import product as iproduct

            expected = [
                t
                for t in iproduct(range(z.size), repeat=y.size)
                if is_continuous_table(y, z, t)
            ]
            assert list(ms.tables) == expected


def test_constants_always_present():
    for y in all_spaces_up_to(3):
        for z in all_spaces_up_to(2):
            ms = enumerate_continuous(y, z)
            for v in range(z.size):
                assert (v,) * y.size in ms.index


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_continuous(discrete(5), discrete(2))
    enumerate_continuous(discrete(5), discrete(2), size_cap=5)


def test_o_z_family_pinned(s, chain2, disc2, indisc2):
    assert o_z_family(chain2, indisc2).members == (0, 0b11)
    assert o_z_family(s, disc2).members == (0, 0b11)  # constants only
    for y in all_spaces_up_to(3):
        assert o_z_family(y, sierpinski()).members == y.opens.members


def test_z_topology_generated(chain2, indisc2):
    zt = z_topology(chain2, indisc2)
    assert zt.opens.members == (0, 0b11)
    for y in all_spaces_up_to(3):
        assert z_topology(y, sierpinski()).opens.members == y.opens.members


def test_relative_profile_pinned(chain2, indisc2):
    rp = relative_profile(chain2, indisc2)
    assert not rp.locally_z_bounded
    assert not rp.z_corecompact
    assert rp.locally_z_compact  # finite ground: shrinking always succeeds


def test_relative_profile_sierpinski_codomain():
    for y in all_spaces_up_to(3):
        rp = relative_profile(y, sierpinski())
        assert rp.locally_z_bounded and rp.z_corecompact


def test_way_below_matches_containment():
    s = sierpinski()
    for y in all_spaces_up_to(3):
        for z in all_spaces_up_to(2) + [s]:
            oz = o_z_family(y, z)
            for a in oz:
                for u in y.opens:
                    assert way_below_z(y, z, a, u) == (a & ~u == 0)


def test_way_below_guards(s, indisc2):
    with pytest.raises(NotZRepresentable):
        way_below_z(s, indisc2, 0b10, 0b11)  # {1} is not a preimage here
    with pytest.raises(NotOpen):
        way_below_z(s, indisc2, 0, 0b01)


def test_sierpinski_correspondence_bijection():
    s = sierpinski()
    for y in all_spaces_up_to(3):
        pairs = sierpinski_correspondence(y)
        ms = enumerate_continuous(y, s)
        assert len(pairs) == len(y.opens) == len(ms)
        tables = {m.table for m in ms}
        seen = set()
        for v, cm in pairs:
            assert cm.is_continuous()
            assert cm.preimage(0b10) == v  # the open point pulls back to v
            assert cm.table in tables
            seen.add(cm.table)
        assert seen == tables


def test_preimage_rows_cache(s):
    ms = enumerate_continuous(s, s)
    rows = ms.preimage_rows
    assert rows[0b10] == (0, 0b10, 0b11)
