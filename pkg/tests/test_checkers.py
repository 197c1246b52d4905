from __future__ import annotations

import pytest

from topolab.checkers import (
    composition_check,
    is_admissible,
    refute_splitting,
    theorem_suite,
)
from topolab.errors import BudgetExceeded, GroundTooLarge
from topolab.finspace import discrete, make_space, product
from topolab.fntop import FnTopology, named_function_topology
from topolab.hypertop import strong_z_scott, z_scott
from topolab.mapspace import ContMap, enumerate_continuous
from topolab.reports import suite_to_json


def fn_indiscrete(maps):
    return FnTopology.of(maps, ())


def fn_discrete(maps):
    return FnTopology.of(maps, [1 << i for i in range(len(maps))])


@pytest.fixture(scope="module")
def suite22():
    return theorem_suite(2, 2, refinement_samples=10, seed=1)


def test_admissible_compact_open_pinned(s):
    rep = is_admissible(named_function_topology("co", s, s))
    assert rep.status == "holds"
    assert rep.claim == "admissible:co y=0,2,3 z=0,2,3"
    assert rep.witnesses == ()


def test_admissible_indiscrete_witness_replays(s):
    maps = enumerate_continuous(s, s)
    t = fn_indiscrete(maps)
    rep = is_admissible(t)
    assert rep.status == "fails"
    ((tag, w, tag2, pre),) = rep.witnesses
    assert (tag, w, tag2) == ("open", 0b10, "product_preimage")
    assert pre == 0b111000  # rows of const0, id, const1 in slots 0-1, 2-3, 4-5
    # the mask is the literal evaluation preimage and it is not product-open
    lit = 0
    for i, f in enumerate(maps):
        for q in range(s.size):
            if (w >> f(q)) & 1:
                lit |= 1 << (i * s.size + q)
    assert lit == pre
    assert not product(t.as_space(), s).is_open(pre)


def test_admissible_into_indiscrete_always(chain2, indisc2):
    # indiscrete codomain: evaluation preimages are empty or everything
    maps = enumerate_continuous(chain2, indisc2)
    assert len(maps) == 4
    assert is_admissible(fn_discrete(maps)).status == "holds"


def test_admissible_ground_guard():
    maps = enumerate_continuous(discrete(3), discrete(3))
    with pytest.raises(GroundTooLarge):
        is_admissible(fn_indiscrete(maps))


def test_refute_splitting_discrete_pinned(s):
    maps = enumerate_continuous(s, s)
    rep = refute_splitting(fn_discrete(maps), max_x=2, symmetry_reduction=False)
    assert rep.status == "fails"
    assert ((0, 2, 3), (0, 0, 0, 1)) in rep.witnesses
    # replay: logical-and is continuous on S x S, its transpose into the
    # discrete topology sends 0 to const0, and {const0} pulls back to the
    # closed point
    x = make_space(2, [0, 2, 3])
    f = ContMap(product(x, s), s, (0, 0, 0, 1))
    assert f.is_continuous()
    transpose = ContMap(
        x, fn_discrete(maps).as_space(), (maps.index[(0, 0)], maps.index[(0, 1)])
    )
    assert not transpose.is_continuous()


def test_refute_splitting_compact_open_inconclusive(s):
    rep = refute_splitting(named_function_topology("co", s, s), max_x=3)
    assert rep.status == "inconclusive"
    assert rep.witnesses == ()
    assert 0 < rep.hypothesis_true_count < rep.instance_count
    assert dict(rep.budget)["max_x"] == 3


def test_refute_splitting_indiscrete_inconclusive(s):
    # coarsest topology: every transpose is continuous
    maps = enumerate_continuous(s, s)
    rep = refute_splitting(fn_indiscrete(maps), max_x=3)
    assert rep.status == "inconclusive"


def test_refute_splitting_budget_guard(s):
    with pytest.raises(BudgetExceeded):
        refute_splitting(named_function_topology("co", s, s), max_x=5)


def test_refute_splitting_symmetry_flag(s):
    maps = enumerate_continuous(s, s)
    reduced = refute_splitting(fn_discrete(maps), max_x=2)
    full = refute_splitting(fn_discrete(maps), max_x=2, symmetry_reduction=False)
    assert reduced.status == full.status == "fails"
    assert reduced.instance_count < full.instance_count


def test_composition_relative_compact_open_triple(s):
    rep = composition_check(s, s, s, ("coZ", "coZ", "coZ"))
    assert rep.status == "holds"
    assert rep.hypothesis_true_count == 1
    assert dict(rep.budget)["locally_z_compact"] is True
    assert rep.claim == "compose:coZ,coZ,coZ x=0,2,3 y=0,2,3 z=0,2,3"


def test_composition_one_point_x(pt, chain2, s):
    rep = composition_check(pt, chain2, s, ("co", "co", "co"))
    assert rep.status == "holds"


def test_composition_strong_upper_triple_recorded(s):
    # recorded datum, not a theorem: at this scale the triple collapses to
    # the compact-open one
    rep = composition_check(s, s, s, ("t1sz", "t1sz", "t1sz"))
    assert rep.status == "holds"
    assert dict(rep.budget)["hypothesis"] == "locally_z_bounded"


def test_composition_kind_guards(s):
    with pytest.raises(ValueError):
        composition_check(s, s, s, ("co", "co"))
    with pytest.raises(ValueError):
        composition_check(s, s, s, ("co", "co", "pointwise"))


def test_suite_rows_at_2_2(suite22):
    by_claim = {r.claim: r for r in suite22}
    assert len(by_claim) == len(suite22)
    unexpected = [r.claim for r in suite22 if r.status == "fails" and r.expected]
    assert unexpected == []
    assert by_claim["admissible:co when=regular+locally_compact"].hypothesis_true_count == 15
    assert by_claim["grid:co<=coZ"].status == "holds"
    assert by_claim["grid:t1z-vs-t1sz"].status == "inconclusive"
    assert dict(by_claim["grid:t1z-vs-t1sz"].budget)["equal"] == 25
    row = by_claim["grid:splitting-candidates-below-admissible"]
    assert row.status == "holds" and row.instance_count == 900
    assert by_claim["sierpinski:characteristic-homeomorphism"].status == "holds"
    assert by_claim["dual:named-equivalence-t-tau"].hypothesis_true_count == 150


def test_suite_preservation_rows_nonvacuous(suite22):
    rows = [r for r in suite22 if r.claim.startswith("preserve:")]
    assert len(rows) == 18
    assert all(r.status == "holds" and r.hypothesis_true_count > 0 for r in rows)


def test_suite_refinement_row(suite22):
    row = next(r for r in suite22 if r.claim == "admissible:refinement-monotone")
    assert row.status == "holds"
    # two base pairs, six admissible topologies each, ten samples apiece
    assert row.hypothesis_true_count == 120
    assert dict(row.budget)["bases"] == 12


def test_suite_divergence_rows_replay(suite22, chain2, indisc2):
    rows = [r for r in suite22 if r.claim.startswith("divergence:")]
    assert len(rows) == 3
    assert all(r.status == "fails" and not r.expected for r in rows)
    plain = z_scott(chain2, indisc2)
    strong = strong_z_scott(chain2, indisc2)
    assert 0b101 not in plain.opens
    assert 0b010 in plain.opens
    assert 0b010 not in strong.opens
    gap = next(r for r in rows if r.claim.startswith("divergence:dual-admissible"))
    ((tag, w, tag2, opens),) = gap.witnesses
    assert (tag, w) == ("eval_open", 0b10)
    assert opens == (0, 1, 2, 3)


def test_suite_budget_guard():
    with pytest.raises(BudgetExceeded):
        theorem_suite(4, 2)


def test_suite_json_deterministic():
    first = suite_to_json(theorem_suite(2, 2, refinement_samples=5, seed=3))
    second = suite_to_json(theorem_suite(2, 2, refinement_samples=5, seed=3))
    assert first == second
