"""Topologies on sets of continuous maps.

The ground is a MapSet in its canonical order, opens are bit-vectors over map
indices, and a topology is carried by its subbasis. Minimal neighborhoods are
computable straight from the subbasis, so openness, comparison and the
evaluation check all work without materializing the full open family; the
family itself is built on demand under a budget.

Two subbasis styles appear: restriction sets {f : f(K) included in U} with K a
compact subset of the domain, and lifted sets {f : the preimage of U lies in a
chosen family of domain opens}. On finite grounds every subset is compact, so
the plain and domain-relative compact ranges coincide; the provenance tag
records which route produced a topology so reports can say so.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property, lru_cache

from .errors import BudgetExceeded, MismatchedBase, MismatchedGround, NotATopology
from .finspace import FinSpace, SubsetFamily, bits, full_mask, is_compact_subset
from .hypertop import HyperSpace, scott, strong_scott, strong_z_scott, z_scott
from .mapspace import MapSet, enumerate_continuous, z_topology

DEFAULT_OPENS_BUDGET = 1024

NAMED = ("co", "coZ", "isbell", "sisbell", "t1z", "t1sz")


@dataclass(frozen=True)
class FnTopology:
    """A topology on a MapSet, generated by the stored subbasis."""

    maps: MapSet
    subbasis: tuple[int, ...]
    provenance: str = "custom"

    @classmethod
    def of(cls, maps: MapSet, subbasis, provenance: str = "custom") -> "FnTopology":
        full = full_mask(len(maps))
        ordered = tuple(sorted(set(subbasis)))
        stray = tuple(m for m in ordered if m < 0 or m & ~full)
        if stray:
            raise NotATopology("subbasis member escapes the map ground", stray)
        return cls(maps, ordered, provenance)

    @property
    def full(self) -> int:
        return full_mask(len(self.maps))

    @cached_property
    def basis(self) -> tuple[int, ...]:
        """All finite intersections of subbasis members, full ground included.
        Retained so comparison witnesses can be named."""
        acc = {self.full}
        work = list(self.subbasis)
        while work:
            m = work.pop()
            if m in acc:
                continue
            fresh = [m & a for a in acc if (m & a) not in acc and m & a != m]
            acc.add(m)
            work.extend(fresh)
        return tuple(sorted(acc))

    @cached_property
    def min_opens(self) -> tuple[int, ...]:
        """Smallest open around each map: the intersection of the subbasis
        members containing it. Exact, since that intersection is basic."""
        out = []
        for i in range(len(self.maps)):
            m = self.full
            for s in self.subbasis:
                if (s >> i) & 1:
                    m &= s
            out.append(m)
        return tuple(out)

    def is_open_mask(self, mask: int) -> bool:
        if mask < 0 or mask & ~self.full:
            return False
        return all(self.min_opens[i] & ~mask == 0 for i in bits(mask))

    def materialize(self, budget: int = DEFAULT_OPENS_BUDGET) -> SubsetFamily:
        acc = {0}
        work = list(self.basis)
        while work:
            m = work.pop()
            if m in acc:
                continue
            fresh = [m | a for a in acc if (m | a) not in acc and m | a != m]
            acc.add(m)
            if len(acc) > budget:
                raise BudgetExceeded(
                    f"open family exceeds {budget} members; raise the budget "
                    "to materialize"
                )
            work.extend(fresh)
        return SubsetFamily.of(len(self.maps), acc, cap=None)

    @cached_property
    def opens(self) -> SubsetFamily:
        return self.materialize()

    def as_space(self) -> FinSpace:
        labels = tuple(",".join(str(v) for v in t) for t in self.maps.tables)
        return FinSpace(len(self.maps), self.opens, labels)


def lift_open_family(
    h: HyperSpace, maps: MapSet, provenance: str = "custom"
) -> FnTopology:
    """Subbasis sets {f : the preimage of U under f lies in the family}, one
    for each open family of the hyperspace and each codomain open."""
    if h.base != maps.domain:
        raise MismatchedBase("hyperspace base differs from the map domain")
    z = maps.codomain
    subbasis = set()
    for u in z.opens:
        rows = maps.preimage_rows[u]
        for fam in h.opens:
            members = set(h.members_of(fam))
            mask = 0
            for i, pre in enumerate(rows):
                if pre in members:
                    mask |= 1 << i
            subbasis.add(mask)
    return FnTopology.of(maps, subbasis, provenance)


def kset_topology(maps: MapSet, compactness: str = "plain") -> FnTopology:
    """Subbasis sets {f : f(K) included in U}. K ranges over the subsets that
    pass an honest compactness check in the domain (plain) or in the topology
    the codomain induces on it (z_relative); at finite scale both checks are
    total, so the ranges agree and the provenance records the route."""
    y = maps.domain
    z = maps.codomain
    if compactness == "plain":
        space, provenance = y, "co"
    elif compactness == "z_relative":
        space, provenance = z_topology(y, z), "coZ"
    else:
        raise ValueError(f"unknown compactness {compactness!r}")
    ks = [k for k in range(y.full + 1) if is_compact_subset(space, k, method="auto")]
    subbasis = set()
    for u in z.opens:
        rows = maps.preimage_rows[u]
        for k in ks:
            mask = 0
            for i, pre in enumerate(rows):
                if k & ~pre == 0:
                    mask |= 1 << i
            subbasis.add(mask)
    return FnTopology.of(maps, subbasis, provenance)


@lru_cache(maxsize=None)
def named_function_topology(name: str, y: FinSpace, z: FinSpace) -> FnTopology:
    maps = enumerate_continuous(y, z)
    if name == "co":
        return kset_topology(maps, "plain")
    if name == "coZ":
        return kset_topology(maps, "z_relative")
    if name == "isbell":
        return replace(lift_open_family(scott(y), maps), provenance="isbell")
    if name == "sisbell":
        return replace(lift_open_family(strong_scott(y), maps), provenance="sisbell")
    if name == "t1z":
        return replace(lift_open_family(z_scott(y, z), maps), provenance="t1z")
    if name == "t1sz":
        return replace(
            lift_open_family(strong_z_scott(y, z), maps), provenance="t1sz"
        )
    raise ValueError(f"unknown topology name {name!r}; expected one of {NAMED}")


@dataclass(frozen=True)
class Comparison:
    verdict: str  # equal | a_coarser | a_finer | incomparable
    a_only: tuple[int, ...]  # opens of a that b lacks
    b_only: tuple[int, ...]


def compare_topologies(a: FnTopology, b: FnTopology) -> Comparison:
    """Containment both ways, decided on subbasics: a is contained in b iff
    every a-subbasic is b-open, since opens are unions of finite meets."""
    if a.maps != b.maps:
        raise MismatchedGround("topologies live on different map sets")
    a_only = tuple(sorted(s for s in set(a.subbasis) if not b.is_open_mask(s)))
    b_only = tuple(sorted(s for s in set(b.subbasis) if not a.is_open_mask(s)))
    if not a_only and not b_only:
        return Comparison("equal", (), ())
    if not a_only:
        return Comparison("a_coarser", (), b_only)
    if not b_only:
        return Comparison("a_finer", a_only, ())
    return Comparison("incomparable", a_only, b_only)


def evaluation_witness(t: FnTopology) -> int | None:
    """A codomain open whose evaluation preimage fails to be open in the
    product of the domain with t, or None when evaluation is continuous.

    The preimage is a union of rows {p in domain : f(p) in W} indexed by maps;
    it is product-open iff every row is contained in the rows of every map in
    the minimal t-neighborhood, rows themselves being domain-open already.
    """
    z = t.maps.codomain
    mins = t.min_opens
    for w in z.opens:
        rows = t.maps.preimage_rows[w]
        ok = True
        for i, row in enumerate(rows):
            if not ok:
                break
            for j in bits(mins[i]):
                if row & ~rows[j]:
                    ok = False
                    break
        if not ok:
            return w
    return None
