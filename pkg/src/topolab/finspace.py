"""Finite topological spaces over bit-vector grounds.

Points are 0..size-1, subsets are characteristic bit-vectors stored as plain
ints, and a topology is the full list of its open sets. Everything is small
enough to enumerate, which is the point: the checks stay literal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import permutations
from typing import Iterable, Iterator

from .errors import CoverEnumerationBudgetExceeded, GroundTooLarge, NotATopology

Subset = int

MAX_GROUND = 32
MAX_ENUM_POINTS = 5
DEFAULT_COVER_BUDGET = 4096  # max subfamilies the literal cover checkers will walk


def full_mask(size: int) -> Subset:
    return (1 << size) - 1


def mask_of(points: Iterable[int]) -> Subset:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def bits(mask: Subset) -> Iterator[int]:
    """Yield set bit positions, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: Subset) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class SubsetFamily:
    """A set of subsets of a fixed ground, kept sorted by numeric value."""

    ground_size: int
    members: tuple[Subset, ...]

    @classmethod
    def of(
        cls, ground_size: int, masks: Iterable[Subset], cap: int | None = MAX_GROUND
    ) -> "SubsetFamily":
        # map-index grounds legitimately exceed the point cap; they pass None
        if cap is not None and ground_size > cap:
            raise GroundTooLarge(f"ground of {ground_size} points exceeds {cap}")
        full = full_mask(ground_size)
        ordered = sorted(set(masks))
        if ordered and (ordered[0] < 0 or ordered[-1] & ~full):
            raise NotATopology(
                f"member escapes the {ground_size}-point ground",
                tuple(m for m in ordered if m < 0 or m & ~full),
            )
        return cls(ground_size, tuple(ordered))

    @cached_property
    def _member_set(self) -> frozenset[Subset]:
        return frozenset(self.members)

    def __contains__(self, mask: Subset) -> bool:
        return mask in self._member_set

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class FinSpace:
    """A finite topological space: ground size plus its open-set family."""

    size: int
    opens: SubsetFamily
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    @property
    def full(self) -> Subset:
        return full_mask(self.size)

    def is_open(self, mask: Subset) -> bool:
        return mask in self.opens

    def is_closed(self, mask: Subset) -> bool:
        return (self.full & ~mask) in self.opens

    @cached_property
    def min_opens(self) -> tuple[Subset, ...]:
        """Minimal open neighborhood of each point (finite spaces have them)."""
        out = []
        for p in range(self.size):
            m = self.full
            for o in self.opens:
                if (o >> p) & 1:
                    m &= o
            out.append(m)
        return tuple(out)

    @cached_property
    def closed_sets(self) -> tuple[Subset, ...]:
        return tuple(sorted(self.full & ~o for o in self.opens))

    def label_of(self, p: int) -> str:
        if self.labels is not None:
            return self.labels[p]
        return str(p)

    def encoding(self) -> tuple[Subset, ...]:
        return self.opens.members


def make_space(
    size: int, opens: Iterable[Subset], labels: tuple[str, ...] | None = None
) -> FinSpace:
    """Validate the axioms and build a space; the only unchecked path is internal."""
    if size > MAX_GROUND:
        raise GroundTooLarge(f"{size} points exceed the {MAX_GROUND}-point limit")
    fam = SubsetFamily.of(size, opens)
    full = full_mask(size)
    if 0 not in fam:
        raise NotATopology("empty set missing", (0,))
    if full not in fam:
        raise NotATopology("full ground missing", (full,))
    members = fam.members
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            if (a | b) not in fam:
                raise NotATopology("union escapes the family", (a, b))
            if (a & b) not in fam:
                raise NotATopology("intersection escapes the family", (a, b))
    if labels is not None and len(labels) != size:
        raise NotATopology("label count does not match ground size")
    return FinSpace(size, fam, labels)


def generate_from_subbasis(
    size: int, family: Iterable[Subset], labels: tuple[str, ...] | None = None
) -> FinSpace:
    """Smallest topology containing the family.

    Empty intersections contribute the full ground, empty unions the empty set,
    so an empty subbasis yields the indiscrete space.
    """
    if size > MAX_GROUND:
        raise GroundTooLarge(f"{size} points exceed the {MAX_GROUND}-point limit")
    seeds = SubsetFamily.of(size, family).members
    basis = close_under_intersection(size, seeds)
    opens = close_under_union(basis)
    return FinSpace(size, SubsetFamily.of(size, opens), labels)


def close_under_intersection(size: int, seeds: tuple[Subset, ...]) -> frozenset[Subset]:
    acc = {full_mask(size)}
    work = list(seeds)
    while work:
        m = work.pop()
        if m in acc:
            continue
        fresh = [m & a for a in acc if (m & a) not in acc and m & a != m]
        acc.add(m)
        work.extend(fresh)
    return frozenset(acc)


def close_under_union(seeds: Iterable[Subset]) -> frozenset[Subset]:
    acc = {0}
    work = list(seeds)
    while work:
        m = work.pop()
        if m in acc:
            continue
        fresh = [m | a for a in acc if (m | a) not in acc and m | a != m]
        acc.add(m)
        work.extend(fresh)
    return frozenset(acc)


def product(a: FinSpace, b: FinSpace) -> FinSpace:
    """Product space on pairs (i, j) indexed row-major as i * b.size + j."""
    size = a.size * b.size
    if size > MAX_GROUND:
        raise GroundTooLarge(f"product ground of {size} points exceeds {MAX_GROUND}")
    rects = [rectangle_mask(u, v, b.size) for u in a.opens for v in b.opens]
    labels = tuple(
        f"({a.label_of(i)},{b.label_of(j)})" for i in range(a.size) for j in range(b.size)
    )
    return generate_from_subbasis(size, rects, labels)


def rectangle_mask(u: Subset, v: Subset, b_size: int) -> Subset:
    m = 0
    for i in bits(u):
        m |= v << (i * b_size)
    return m


def subspace(x: FinSpace, carrier: Subset) -> FinSpace:
    """Trace topology on the carrier, points re-indexed ascending."""
    kept = list(bits(carrier))
    pos = {p: k for k, p in enumerate(kept)}
    traces = {mask_of(pos[p] for p in bits(o & carrier)) for o in x.opens}
    labels = tuple(x.label_of(p) for p in kept) if kept else None
    return FinSpace(len(kept), SubsetFamily.of(len(kept), traces), labels)


def closure_of(x: FinSpace, a: Subset) -> Subset:
    m = x.full
    for c in x.closed_sets:
        if a & ~c == 0:
            m &= c
    return m


def interior_of(x: FinSpace, a: Subset) -> Subset:
    # dual to closure: largest open inside a
    return x.full & ~closure_of(x, x.full & ~a)


@dataclass(frozen=True)
class LocalProfile:
    t0: bool
    t1: bool
    t2: bool
    regular: bool
    locally_compact: bool
    locally_bounded: bool
    corecompact: bool


def separation_profile(x: FinSpace) -> LocalProfile:
    return _profile(x)


def local_profile(x: FinSpace) -> LocalProfile:
    return _profile(x)


@lru_cache(maxsize=None)
def _profile(x: FinSpace) -> LocalProfile:
    mins = x.min_opens
    t0 = all(mins[p] != mins[q] for p in range(x.size) for q in range(p + 1, x.size))
    t1 = all(x.is_closed(1 << p) for p in range(x.size))
    t2 = all(
        any(
            (u >> p) & 1 and (v >> q) & 1 and u & v == 0
            for u in x.opens
            for v in x.opens
        )
        for p in range(x.size)
        for q in range(p + 1, x.size)
    )
    regular = _regular(x)
    return LocalProfile(
        t0=t0,
        t1=t1,
        t2=t2,
        regular=regular,
        locally_compact=_locally_compact(x),
        locally_bounded=_locally_bounded(x),
        corecompact=_corecompact(x),
    )


def _regular(x: FinSpace) -> bool:
    for c in x.closed_sets:
        for p in range(x.size):
            if (c >> p) & 1:
                continue
            if not any(
                (u >> p) & 1 and c & ~v == 0 and u & v == 0
                for u in x.opens
                for v in x.opens
            ):
                return False
    return True


def _locally_compact(x: FinSpace) -> bool:
    # every open U around p shrinks to an open V around p with compact closure
    for p in range(x.size):
        for u in x.opens:
            if not (u >> p) & 1:
                continue
            if not any(
                (v >> p) & 1
                and v & ~u == 0
                and compactness_verdict(x, closure_of(x, v), method="auto")[0]
                for v in x.opens
            ):
                return False
    return True


def _locally_bounded(x: FinSpace) -> bool:
    for p in range(x.size):
        for u in x.opens:
            if not (u >> p) & 1:
                continue
            if not any(
                (v >> p) & 1 and v & ~u == 0 and boundedness_verdict(x, v, method="auto")[0]
                for v in x.opens
            ):
                return False
    return True


def _corecompact(x: FinSpace) -> bool:
    # boundedness of V is evaluated in the subspace on U, not in x itself
    for p in range(x.size):
        for u in x.opens:
            if not (u >> p) & 1:
                continue
            sub = subspace(x, u)
            pos = {q: k for k, q in enumerate(bits(u))}
            hit = False
            for v in x.opens:
                if not (v >> p) & 1 or v & ~u:
                    continue
                v_in_sub = mask_of(pos[q] for q in bits(v))
                if boundedness_verdict(sub, v_in_sub, method="auto")[0]:
                    hit = True
                    break
            if not hit:
                return False
    return True


def compactness_verdict(
    x: FinSpace,
    k: Subset,
    cover_budget: int = DEFAULT_COVER_BUDGET,
    method: str = "literal",
) -> tuple[bool, str]:
    """Decide compactness of k and report which route decided it.

    "literal" walks every irredundant open cover of k and exhibits a finite
    subcover; past the budget it raises. "auto" falls back to the
    finite-shortcut: on a finite ground every cover is finite, hence its own
    finite subcover, so the answer is always True. The shortcut is a theorem
    here, not an assumption; the literal route and the tests witness it.
    """
    n = len(x.opens)
    if method == "shortcut":
        return True, "finite-shortcut"
    if (1 << n) > cover_budget:
        if method == "auto":
            return True, "finite-shortcut"
        raise CoverEnumerationBudgetExceeded(
            f"2^{n} subfamilies exceed the budget of {cover_budget}"
        )
    members = x.opens.members
    for sel in range(1, 1 << n):
        union = 0
        for i in bits(sel):
            union |= members[i]
        if k & ~union:
            continue
        if _redundant(members, sel, k):
            continue
        if not _finite_subcover_exists(members, sel, k):
            return False, "literal-covers"
    return True, "literal-covers"


def _finite_subcover_exists(members: tuple[Subset, ...], sel: Subset, target: Subset) -> bool:
    """Search subfamilies of the cover for one still covering the target.

    On a finite ground the whole cover qualifies, so this search cannot fail;
    it is kept as a search so the literal route decides, not a shortcut.
    """
    idx = list(bits(sel))
    for sub in range(1, 1 << len(idx)):
        union = 0
        for t in bits(sub):
            union |= members[idx[t]]
        if target & ~union == 0:
            return True
    return False


def _redundant(members: tuple[Subset, ...], sel: Subset, target: Subset) -> bool:
    for i in bits(sel):
        rest = 0
        for j in bits(sel):
            if j != i:
                rest |= members[j]
        if target & ~rest == 0:
            return True
    return False


def boundedness_verdict(
    x: FinSpace,
    b: Subset,
    cover_budget: int = DEFAULT_COVER_BUDGET,
    method: str = "literal",
) -> tuple[bool, str]:
    """Decide boundedness of b in x (covers of the whole space admit a finite
    subcover of b) and report the deciding route."""
    n = len(x.opens)
    if method == "shortcut":
        return True, "finite-shortcut"
    if (1 << n) > cover_budget:
        if method == "auto":
            return True, "finite-shortcut"
        raise CoverEnumerationBudgetExceeded(
            f"2^{n} subfamilies exceed the budget of {cover_budget}"
        )
    members = x.opens.members
    for sel in range(1, 1 << n):
        union = 0
        for i in bits(sel):
            union |= members[i]
        if union != x.full:
            continue
        if _redundant(members, sel, x.full):
            continue
        if not _finite_subcover_exists(members, sel, b):
            return False, "literal-covers"
    return True, "literal-covers"


def is_compact_subset(x: FinSpace, k: Subset, method: str = "literal") -> bool:
    return compactness_verdict(x, k, method=method)[0]


def is_bounded_in(x: FinSpace, b: Subset, method: str = "literal") -> bool:
    return boundedness_verdict(x, b, method=method)[0]


@lru_cache(maxsize=None)
def enumerate_topologies(n: int, up_to_iso: bool = False) -> tuple[FinSpace, ...]:
    """All topologies on n labeled points, canonically ordered.

    Enumeration goes through specialization preorders (reflexive transitive row
    masks); opens are then exactly the up-sets. The brute-force family filter
    lives in the test oracles and must agree at n <= 3.
    """
    if n > MAX_ENUM_POINTS:
        raise GroundTooLarge(f"enumeration capped at {MAX_ENUM_POINTS} points")
    if n == 0:
        return (FinSpace(0, SubsetFamily.of(0, [0])),)
    rows = [0] * n
    found: list[tuple[Subset, ...]] = []

    def place(i: int) -> None:
        if i == n:
            found.append(tuple(rows))
            return
        for m in range(1 << n):
            if not (m >> i) & 1:
                continue
            ok = True
            for q in range(i):
                if (m >> q) & 1 and rows[q] & ~m:
                    ok = False
                    break
                if (rows[q] >> i) & 1 and m & ~rows[q]:
                    ok = False
                    break
            if ok:
                rows[i] = m
                place(i + 1)
        rows[i] = 0

    place(0)
    encodings = {_upset_encoding(n, r) for r in found}
    if up_to_iso:
        encodings = {_canonical_encoding(n, e) for e in encodings}
    return tuple(
        FinSpace(n, SubsetFamily(n, e)) for e in sorted(encodings)
    )


def _upset_encoding(n: int, rows: tuple[Subset, ...]) -> tuple[Subset, ...]:
    out = []
    for o in range(1 << n):
        if all(rows[p] & ~o == 0 for p in bits(o)):
            out.append(o)
    return tuple(out)


def _canonical_encoding(n: int, encoding: tuple[Subset, ...]) -> tuple[Subset, ...]:
    best = None
    for perm in permutations(range(n)):
        relabeled = tuple(sorted(mask_of(perm[p] for p in bits(o)) for o in encoding))
        if best is None or relabeled < best:
            best = relabeled
    assert best is not None
    return best


def canonical_form(x: FinSpace) -> tuple[Subset, ...]:
    """Minimum open-family encoding over all relabelings of the points."""
    return _canonical_encoding(x.size, x.encoding())


def sierpinski() -> FinSpace:
    return make_space(2, [0, 0b10, 0b11])


def discrete(n: int) -> FinSpace:
    return make_space(n, range(1 << n))


def indiscrete(n: int) -> FinSpace:
    return make_space(n, [0, full_mask(n)])


def chain(n: int) -> FinSpace:
    """Nested opens emptyset < {0} < {0,1} < ... < full."""
    return make_space(n, [full_mask(k) for k in range(n + 1)])
