"""Cycle matroids: rank, closure, flats, chains of flats, and axiom verifiers.

Flats of the cycle matroid of a complete graph are cluster graphs (disjoint
unions of cliques), so flat enumeration walks set partitions of the label set
and restricts to the graph at hand.  The axiom verifiers exhaustively check a
presented set system against one of the five axiom families (independence,
bases, two rank systems, closure, circuits) and report the first
counterexample in canonical order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .graphs import EdgeSet, Graph, components, graph_rank, is_acyclic


# ---------------------------------------------------------------------------
# Flats and chains


@dataclass(frozen=True)
class Flat:
    """A closed edge set together with the vertex sets of its components."""

    edges: EdgeSet
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edge_set(cls, s: EdgeSet) -> "Flat":
        return cls(s, tuple(components(s.graph, s)))

    @property
    def graph(self) -> Graph:
        return self.edges.graph

    @property
    def rank(self) -> int:
        return sum(len(b) - 1 for b in self.blocks)

    @property
    def mask(self) -> int:
        return self.edges.mask

    def sort_key(self) -> tuple:
        return (self.rank, self.edges.edges)

    def __le__(self, other: "Flat") -> bool:
        return self.edges <= other.edges

    def __lt__(self, other: "Flat") -> bool:
        return self.edges < other.edges


@dataclass(frozen=True)
class ChainOfFlats:
    """A strictly increasing chain of proper nonempty flats of one matroid."""

    flats: tuple[Flat, ...]

    def __post_init__(self):
        for f in self.flats:
            if f.mask == 0 or f.mask == f.graph.full_edge_set().mask:
                raise ValueError("chain flats must be proper and nonempty")
        for a, b in zip(self.flats, self.flats[1:]):
            if a.graph != b.graph:
                raise ValueError("chain flats must share a parent graph")
            if not a < b:
                raise ValueError("chain must strictly increase")
            if not a.rank < b.rank:
                raise ValueError("chain ranks must strictly increase")

    def __len__(self) -> int:
        return len(self.flats)

    def __iter__(self) -> Iterator[Flat]:
        return iter(self.flats)

    def __getitem__(self, i):
        return self.flats[i]

    @property
    def graph(self) -> Graph:
        return self.flats[0].graph


def is_independent(g: Graph, s: EdgeSet) -> bool:
    """Independent sets of the cycle matroid are the forests."""
    if s.graph != g:
        raise ValueError("edge set does not belong to this graph")
    return is_acyclic(g, s)


def rank(g: Graph, s: EdgeSet) -> int:
    """Matroid rank of an edge subset; equals the graph rank."""
    return graph_rank(g, s)


def closure(g: Graph, s: EdgeSet) -> Flat:
    """Complete each connected component, then restrict to the graph's edges."""
    if s.graph != g:
        raise ValueError("edge set does not belong to this graph")
    blocks = components(g, s)
    mask = 0
    idx = g.edge_index
    for b in blocks:
        for e in combinations(b, 2):
            i = idx.get(e)
            if i is not None:
                mask |= 1 << i
    return Flat.from_edge_set(EdgeSet(g, mask))


def set_partitions(items: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All partitions of ``items`` into nonempty blocks (Bell-number many)."""
    items = list(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield ((first,),) + part
        for i, block in enumerate(part):
            yield part[:i] + (tuple(sorted((first,) + block)),) + part[i + 1 :]


_MAX_FLAT_VERTICES = 10


def enumerate_flats(g: Graph) -> list[Flat]:
    """All flats of the cycle matroid, sorted by (rank, edge order).

    Each vertex partition induces a cluster graph on the ambient complete
    graph; its restriction to ``g`` is a flat, and all flats arise this way.
    """
    if g.num_vertices > _MAX_FLAT_VERTICES:
        raise ValueError(f"flat enumeration capped at {_MAX_FLAT_VERTICES} vertices")
    idx = g.edge_index
    seen: dict[int, Flat] = {}
    for part in set_partitions(g.labels):
        mask = 0
        for block in part:
            for e in combinations(block, 2):
                i = idx.get(e)
                if i is not None:
                    mask |= 1 << i
        if mask not in seen:
            seen[mask] = Flat.from_edge_set(EdgeSet(g, mask))
    return sorted(seen.values(), key=Flat.sort_key)


def proper_flats(g: Graph) -> list[Flat]:
    """Nonempty flats other than the full edge set, in canonical order."""
    full = g.full_edge_set().mask
    return [f for f in enumerate_flats(g) if f.mask not in (0, full)]


def flats_lattice(g: Graph) -> list[tuple[Flat, Flat]]:
    """Covering pairs (child, parent) of the lattice of flats.

    Ranks strictly increase along containment, so a containment with rank
    difference one is automatically a cover.
    """
    flats = enumerate_flats(g)
    covers = []
    for child in flats:
        for parent in flats:
            if parent.rank == child.rank + 1 and child.mask & ~parent.mask == 0:
                covers.append((child, parent))
    return covers


def _containment_successors(flats: Sequence[Flat]) -> list[list[int]]:
    succ: list[list[int]] = [[] for _ in flats]
    for i, a in enumerate(flats):
        for j, b in enumerate(flats):
            if a.rank < b.rank and a.mask & ~b.mask == 0:
                succ[i].append(j)
    return succ


def all_chains(g: Graph) -> Iterator[ChainOfFlats]:
    """Every strictly increasing chain of proper nonempty flats, the empty
    chain included, in canonical (lexicographic on flat order) order."""
    flats = proper_flats(g)
    succ = _containment_successors(flats)

    def extend(prefix: list[int], start_choices: Iterable[int]) -> Iterator[list[int]]:
        for j in start_choices:
            chain = prefix + [j]
            yield chain
            yield from extend(chain, succ[j])

    yield ChainOfFlats(())
    for idxs in extend([], range(len(flats))):
        yield ChainOfFlats(tuple(flats[i] for i in idxs))


def enumerate_chains(g: Graph, r: int) -> list[ChainOfFlats]:
    """All chains of proper nonempty flats of length exactly ``r`` >= 1."""
    if r < 1:
        raise ValueError("chain length must be positive")
    return [c for c in all_chains(g) if len(c) == r]


# ---------------------------------------------------------------------------
# Cycle-matroid presentations, for feeding the axiom verifiers


def independent_sets(g: Graph) -> list[frozenset]:
    return [
        frozenset(EdgeSet(g, m).edges)
        for m in range(1 << len(g.edges))
        if is_acyclic(g, EdgeSet(g, m))
    ]


def bases(g: Graph) -> list[frozenset]:
    r = graph_rank(g, g.full_edge_set())
    return [s for s in independent_sets(g) if len(s) == r]


def circuits(g: Graph) -> list[frozenset]:
    """Minimal dependent sets, by brute force over the powerset."""
    dependent = [
        m for m in range(1 << len(g.edges)) if not is_acyclic(g, EdgeSet(g, m))
    ]
    minimal = [
        m for m in dependent if not any(d != m and d & ~m == 0 for d in dependent)
    ]
    return [frozenset(EdgeSet(g, m).edges) for m in minimal]


def rank_table(g: Graph) -> dict[frozenset, int]:
    return {
        frozenset(EdgeSet(g, m).edges): graph_rank(g, EdgeSet(g, m))
        for m in range(1 << len(g.edges))
    }


def closure_table(g: Graph) -> dict[frozenset, frozenset]:
    return {
        frozenset(EdgeSet(g, m).edges): frozenset(closure(g, EdgeSet(g, m)).edges.edges)
        for m in range(1 << len(g.edges))
    }


# ---------------------------------------------------------------------------
# Axiom verifiers


@dataclass(frozen=True)
class SetSystem:
    """A presented set system on an explicit ground set.

    ``members`` is read as independent sets, bases, or circuits depending on
    the verifier invoked; ``rank`` and ``closure`` are total tables on the
    powerset for the rank and closure verifiers.
    """

    ground: tuple
    members: Optional[tuple[frozenset, ...]] = None
    rank: Optional[Mapping[frozenset, int]] = None
    closure: Optional[Mapping[frozenset, frozenset]] = None

    @cached_property
    def element_index(self) -> dict:
        return {x: i for i, x in enumerate(self.ground)}

    def to_mask(self, subset: Iterable) -> int:
        mask = 0
        for x in subset:
            mask |= 1 << self.element_index[x]
        return mask

    def from_mask(self, mask: int) -> tuple:
        return tuple(x for i, x in enumerate(self.ground) if mask >> i & 1)


@dataclass(frozen=True)
class AxiomReport:
    family: str
    holds: bool
    counterexample: Optional[tuple] = None


MAX_AXIOM_GROUND = 8

_FAMILIES = ("I", "B", "R", "R'", "S", "C")


def verify_matroid_axioms(
    sys: SetSystem, which: str, max_ground: int = MAX_AXIOM_GROUND
) -> AxiomReport:
    """Exhaustively check one axiom family against a presented set system.

    ``which`` selects the family: "I" (independence I1-I3), "B" (base exchange
    B1), "R" (local rank axioms R1-R3), "R'" (global rank axioms R1'-R3'),
    "S" (closure axioms S1-S4), "C" (circuit axioms C1-C2).  Counterexamples
    name the violated axiom and quote the offending subsets, first in the
    canonical (bitmask) order.
    """
    if which not in _FAMILIES:
        raise ValueError(f"unknown axiom family {which!r}; expected one of {_FAMILIES}")
    n = len(sys.ground)
    if n > max_ground:
        raise ValueError(f"ground set of size {n} exceeds cap {max_ground}")
    if which == "I":
        return _check_independence(sys)
    if which == "B":
        return _check_bases(sys)
    if which == "R":
        return _check_rank_local(sys)
    if which == "R'":
        return _check_rank_global(sys)
    if which == "S":
        return _check_closure(sys)
    return _check_circuits(sys)


def _need_members(sys: SetSystem) -> set[int]:
    if sys.members is None:
        raise ValueError("this verifier needs an explicit member list")
    return {sys.to_mask(m) for m in sys.members}


def _rank_list(sys: SetSystem) -> list[int]:
    if sys.rank is None:
        raise ValueError("rank verifier needs a rank table")
    n = len(sys.ground)
    table = [-1] * (1 << n)
    for subset, r in sys.rank.items():
        table[sys.to_mask(subset)] = r
    if any(r == -1 for r in table):
        raise ValueError("rank table is not total on the powerset")
    return table


def _closure_list(sys: SetSystem) -> list[int]:
    if sys.closure is None:
        raise ValueError("closure verifier needs a closure table")
    n = len(sys.ground)
    table = [-1] * (1 << n)
    for subset, cl in sys.closure.items():
        table[sys.to_mask(subset)] = sys.to_mask(cl)
    if any(c == -1 for c in table):
        raise ValueError("closure table is not total on the powerset")
    return table


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _check_independence(sys: SetSystem) -> AxiomReport:
    members = _need_members(sys)
    if 0 not in members:
        return AxiomReport("I", False, ("I1",))
    for x in sorted(members):
        for y in sorted(_submasks(x)):
            if y not in members:
                return AxiomReport("I", False, ("I2", sys.from_mask(x), sys.from_mask(y)))
    by_size: dict[int, list[int]] = {}
    for m in sorted(members):
        by_size.setdefault(bin(m).count("1"), []).append(m)
    for size, smaller in sorted(by_size.items()):
        for u in by_size.get(size + 1, ()):
            for v in smaller:
                if not any(v | b in members for b in _bits(u & ~v)):
                    return AxiomReport(
                        "I", False, ("I3", sys.from_mask(u), sys.from_mask(v))
                    )
    return AxiomReport("I", True)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b
        mask ^= b


def _check_bases(sys: SetSystem) -> AxiomReport:
    members = sorted(_need_members(sys))
    if not members:
        return AxiomReport("B", False, ("B-nonempty",))
    for b1 in members:
        for b2 in members:
            for x in _bits(b1 & ~b2):
                candidate = False
                for y in _bits(b2 & ~b1):
                    if (b1 | y) & ~x in members:
                        candidate = True
                        break
                if not candidate:
                    return AxiomReport(
                        "B",
                        False,
                        ("B1", sys.from_mask(b1), sys.from_mask(b2), sys.from_mask(x)),
                    )
    return AxiomReport("B", True)


def _check_rank_local(sys: SetSystem) -> AxiomReport:
    rk = _rank_list(sys)
    n = len(sys.ground)
    if rk[0] != 0:
        return AxiomReport("R", False, ("R1", ()))
    singles = [1 << i for i in range(n)]
    for x in range(1 << n):
        rx = rk[x]
        for y in singles:
            rxy = rk[x | y]
            if not rx <= rxy <= rx + 1:
                return AxiomReport(
                    "R", False, ("R2", sys.from_mask(x), sys.from_mask(y))
                )
    for x in range(1 << n):
        rx = rk[x]
        flat_adds = [y for y in singles if rk[x | y] == rx]
        for i, y in enumerate(flat_adds):
            for z in flat_adds[i + 1 :]:
                if rk[x | y | z] != rx:
                    return AxiomReport(
                        "R",
                        False,
                        ("R3", sys.from_mask(x), sys.from_mask(y), sys.from_mask(z)),
                    )
    return AxiomReport("R", True)


def _check_rank_global(sys: SetSystem) -> AxiomReport:
    rk = _rank_list(sys)
    n = len(sys.ground)
    for x in range(1 << n):
        if not 0 <= rk[x] <= bin(x).count("1"):
            return AxiomReport("R'", False, ("R1'", sys.from_mask(x)))
    for x in range(1 << n):
        rx = rk[x]
        for y in _submasks(x):
            if rk[y] > rx:
                return AxiomReport(
                    "R'", False, ("R2'", sys.from_mask(y), sys.from_mask(x))
                )
    for x in range(1 << n):
        rx = rk[x]
        for y in range(1 << n):
            if rk[x | y] + rk[x & y] > rx + rk[y]:
                return AxiomReport(
                    "R'", False, ("R3'", sys.from_mask(x), sys.from_mask(y))
                )
    return AxiomReport("R'", True)


def _check_closure(sys: SetSystem) -> AxiomReport:
    cl = _closure_list(sys)
    n = len(sys.ground)
    for x in range(1 << n):
        if x & ~cl[x]:
            return AxiomReport("S", False, ("S1", sys.from_mask(x)))
    for x in range(1 << n):
        cx = cl[x]
        for y in _submasks(x):
            if cl[y] & ~cx:
                return AxiomReport(
                    "S", False, ("S2", sys.from_mask(y), sys.from_mask(x))
                )
    for x in range(1 << n):
        if cl[cl[x]] != cl[x]:
            return AxiomReport("S", False, ("S3", sys.from_mask(x)))
    singles = [1 << i for i in range(n)]
    for x in range(1 << n):
        cx = cl[x]
        for xe in singles:
            cxx = cl[x | xe]
            for y in singles:
                if not cx & y and cxx & y and not cl[x | y] & xe:
                    return AxiomReport(
                        "S",
                        False,
                        ("S4", sys.from_mask(x), sys.from_mask(xe), sys.from_mask(y)),
                    )
    return AxiomReport("S", True)


def _check_circuits(sys: SetSystem) -> AxiomReport:
    members = sorted(_need_members(sys))
    for c1 in members:
        for c2 in members:
            if c1 != c2 and c1 & ~c2 == 0:
                return AxiomReport(
                    "C", False, ("C1", sys.from_mask(c1), sys.from_mask(c2))
                )
    for c1 in members:
        for c2 in members:
            if c1 == c2:
                continue
            for z in _bits(c1 & c2):
                union = (c1 | c2) & ~z
                if not any(c3 & ~union == 0 for c3 in members):
                    return AxiomReport(
                        "C",
                        False,
                        ("C2", sys.from_mask(c1), sys.from_mask(c2), sys.from_mask(z)),
                    )
    return AxiomReport("C", True)
