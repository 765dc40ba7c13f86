"""Combinatorial types of rational marked tropical curves, radial alignments,
graphic stability, and the translation to chains of flats.

A combinatorial type is a tree with n labeled ends and every internal vertex
at least trivalent; it is determined by its set of splits (the end bipartition
each bounded edge induces, recorded as the side avoiding end 1), so types are
stored canonically as laminar split families.  The root is the vertex carrying
end 1.  A radial alignment orders the non-root vertices into levels by their
distance from the root; radially aligned types correspond to chains of flats
of the complete graph on labels 2..n, and both directions of that bijection
are implemented here, as is the coordinate translation between the
distance-class space of curves and the edge space of the complete graph.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from itertools import combinations, product
from typing import Iterable, Iterator, Optional, Sequence, Union

from . import intlinalg as ila
from .bergman import Fan, QuotientVector, make_cone, ray_of_flat, _num
from .graphs import (
    EdgeSet,
    Graph,
    graph_rank,
    is_complete_multipartite,
    spanning_forest,
)
from .matroid import ChainOfFlats, Flat, proper_flats


# ---------------------------------------------------------------------------
# Combinatorial types


def _split_sort_key(s: frozenset) -> tuple:
    return (-len(s), tuple(sorted(s)))


@dataclass(frozen=True)
class TropicalType:
    """A leaf-labeled tree, canonically encoded by its split family.

    Vertex 0 is the root (it carries end 1); vertex i >= 1 corresponds to
    ``splits[i-1]``, the set of ends strictly beyond the i-th bounded edge.
    Splits are sorted largest-first, so every parent index is smaller than its
    child's.
    """

    n: int
    splits: tuple[frozenset, ...]
    edges: tuple[tuple[int, int], ...] = field(compare=False, repr=False)
    ends_at: tuple[int, ...] = field(compare=False, repr=False)

    @property
    def num_vertices(self) -> int:
        return len(self.splits) + 1

    @property
    def num_bounded_edges(self) -> int:
        return len(self.splits)

    def vertex_split(self, v: int) -> frozenset:
        if v == 0:
            raise ValueError("the root has no split")
        return self.splits[v - 1]

    def ends_at_vertex(self, v: int) -> tuple[int, ...]:
        return tuple(e for e, host in enumerate(self.ends_at, start=1) if host == v)

    def bounded_degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def parent(self, v: int) -> int:
        return next(u for u, w in self.edges if w == v)

    def incident_edges(self, v: int) -> tuple[tuple[int, int], ...]:
        return tuple(e for e in self.edges if v in e)

    def contract_edge(self, edge: tuple[int, int]) -> "TropicalType":
        if edge not in self.edges:
            raise ValueError(f"{edge} is not a bounded edge of this type")
        child_split = self.splits[edge[1] - 1]
        return tropical_type(self.n, (s for s in self.splits if s != child_split))


def tropical_type(n: int, splits: Iterable[frozenset]) -> TropicalType:
    """Build the canonical type with the given split family."""
    splits = tuple(sorted({frozenset(s) for s in splits}, key=_split_sort_key))
    ends = set(range(2, n + 1))
    for s in splits:
        if not 2 <= len(s) <= n - 2:
            raise ValueError(f"split {sorted(s)} has invalid size for n={n}")
        if not s <= ends:
            raise ValueError(f"split {sorted(s)} mentions ends outside 2..{n}")
    for a, b in combinations(splits, 2):
        if not (a <= b or b <= a or not a & b):
            raise ValueError(f"splits {sorted(a)} and {sorted(b)} are incompatible")

    def parent_index(i: int) -> int:
        best = 0
        for j in range(i):  # larger splits come first
            if splits[i] < splits[j] and (best == 0 or splits[j] < splits[best - 1]):
                best = j + 1
        return best

    edges = tuple(sorted((parent_index(i), i + 1) for i in range(len(splits))))
    ends_at = [0] * n
    for e in range(2, n + 1):
        containing = [i + 1 for i, s in enumerate(splits) if e in s]
        if containing:
            ends_at[e - 1] = min(containing, key=lambda i: len(splits[i - 1]))
    typ = TropicalType(n, splits, edges, tuple(ends_at))
    for v in range(typ.num_vertices):
        valence = typ.bounded_degree(v) + len(typ.ends_at_vertex(v))
        if valence < 3:
            raise ValueError(f"vertex {v} would be {valence}-valent")
    return typ


def star_type(n: int) -> TropicalType:
    return tropical_type(n, ())


def splits(c: TropicalType) -> list[frozenset]:
    """One split per bounded edge: the side of the ends not containing end 1."""
    return list(c.splits)


def _valid_splits(n: int) -> list[frozenset]:
    pool = []
    for size in range(2, n - 1):
        for s in combinations(range(2, n + 1), size):
            pool.append(frozenset(s))
    return sorted(pool, key=_split_sort_key)


def enumerate_types(n: int) -> dict[int, tuple[TropicalType, ...]]:
    """All combinatorial types with n ends, keyed by bounded-edge count.

    Types are laminar families of splits, enumerated by index-ordered
    backtracking over the compatible-pair relation.
    """
    if not 4 <= n <= 8:
        raise ValueError("type enumeration supports 4 <= n <= 8")
    pool = _valid_splits(n)
    npool = len(pool)
    compatible = [0] * npool
    for i, a in enumerate(pool):
        for j in range(i + 1, npool):
            b = pool[j]
            if a <= b or b <= a or not a & b:
                compatible[i] |= 1 << j
    out: dict[int, list[TropicalType]] = {d: [] for d in range(n - 2)}

    def extend(chosen: list[int], allowed: int, start: int):
        out[len(chosen)].append(tropical_type(n, (pool[i] for i in chosen)))
        if len(chosen) == n - 3:
            return
        mask = allowed >> start << start
        while mask:
            low = mask & -mask
            i = low.bit_length() - 1
            mask ^= low
            extend(chosen + [i], allowed & compatible[i], i + 1)

    extend([], (1 << npool) - 1, 0)
    return {d: tuple(ts) for d, ts in out.items() if d <= n - 3}


# ---------------------------------------------------------------------------
# Radial alignments


@dataclass(frozen=True)
class RadialType:
    """A combinatorial type with an ordered partition of its non-root vertices
    into levels by distance from the root."""

    type: TropicalType
    levels: tuple[frozenset, ...]

    def __post_init__(self):
        seen: set[int] = set()
        for block in self.levels:
            if not block:
                raise ValueError("levels must be nonempty")
            if block & seen:
                raise ValueError("levels must be disjoint")
            seen |= set(block)
        if seen != set(range(1, self.type.num_vertices)):
            raise ValueError("levels must partition the non-root vertices")
        level_of = self.level_of
        for u, v in self.type.edges:
            if u != 0 and level_of[u] >= level_of[v]:
                raise ValueError("levels must strictly increase away from the root")

    @property
    def level_of(self) -> dict[int, int]:
        out = {0: 0}
        for i, block in enumerate(self.levels, start=1):
            for v in block:
                out[v] = i
        return out

    @property
    def num_levels(self) -> int:
        return len(self.levels)


def _level_maps(
    vertices: Sequence[int], edges: Sequence[tuple[int, int]], allow_zero: bool
) -> Iterator[dict[int, int]]:
    """Vertex-to-level maps hitting every level 1..k, monotone away from the
    root (strictly when levels 0 are disallowed; weakly otherwise, level 0
    meaning merged into the root)."""
    nv = len(vertices)
    lo = 0 if allow_zero else 1
    for k in range(nv + 1):
        needed = set(range(1, k + 1))
        for values in product(range(lo, k + 1), repeat=nv):
            if needed - set(values):
                continue
            w = dict(zip(vertices, values))
            w[0] = 0
            if allow_zero:
                ok = all(w[u] <= w[v] for u, v in edges)
            else:
                ok = all(w[u] < w[v] for u, v in edges)
            if ok:
                yield w


def radial_alignments(c: TropicalType) -> list[RadialType]:
    """All ordered partitions of the non-root vertices consistent with levels
    strictly increasing along bounded edges."""
    vertices = list(range(1, c.num_vertices))
    out = []
    for w in _level_maps(vertices, c.edges, allow_zero=False):
        k = max(w.values(), default=0)
        levels = tuple(
            frozenset(v for v in vertices if w[v] == lvl) for lvl in range(1, k + 1)
        )
        out.append(RadialType(c, levels))
    return out


def radial_faces(c: TropicalType) -> list[RadialType]:
    """Faces of the radially subdivided cone of a type.

    Each face is a radial type of a contraction of ``c``: a bounded edge whose
    endpoints share a level collapses, and vertices at level zero merge into
    the root.  The face's dimension is its number of levels; the origin (the
    fully contracted star with no levels) is included.
    """
    vertices = list(range(1, c.num_vertices))
    out = []
    for w in _level_maps(vertices, c.edges, allow_zero=True):
        surviving = [(v, c.splits[v - 1]) for u, v in c.edges if w[u] < w[v]]
        contracted = tropical_type(c.n, (s for _, s in surviving))
        level_by_split = {s: w[v] for v, s in surviving}
        k = max(w.values(), default=0)
        levels = tuple(
            frozenset(
                i + 1
                for i, s in enumerate(contracted.splits)
                if level_by_split[s] == lvl
            )
            for lvl in range(1, k + 1)
        )
        out.append(RadialType(contracted, levels))
    return out


def radial_face_census(c: TropicalType) -> dict[int, int]:
    """Face counts of the radially subdivided cone, keyed by dimension."""
    return dict(sorted(Counter(rt.num_levels for rt in radial_faces(c)).items()))


# ---------------------------------------------------------------------------
# Graphic stability and reduction


def _check_stability_graph(n: int, gamma: Graph):
    if gamma.labels != tuple(range(2, n + 1)):
        raise ValueError("stability graph must be labeled by 2..n")
    if not gamma.is_connected():
        raise ValueError("stability graph must be connected")


def is_gamma_stable(
    c: TropicalType, gamma: Graph, strict_root: bool = False
) -> tuple[bool, Optional[int]]:
    """Vertex-local stability against a stability graph.

    A non-root vertex with one bounded edge needs two of its ends joined by a
    graph edge; with two bounded edges it needs at least one end; more bounded
    edges always pass.  The root needs two bounded edges or an attached end,
    where end 1 counts unless ``strict_root`` excludes it.  Returns the
    first unstable vertex, if any.
    """
    _check_stability_graph(c.n, gamma)
    for v in range(c.num_vertices):
        ends = c.ends_at_vertex(v)
        d = c.bounded_degree(v)
        if v == 0:
            if not strict_root:
                ok = d >= 2 or len(ends) >= 1
            else:
                ok = d >= 2 or len(ends) - 1 >= 1  # end 1 is always present
        elif d > 2:
            ok = True
        elif d == 2:
            ok = len(ends) != 0
        else:
            ok = any(gamma.has_edge(i, j) for i, j in combinations(ends, 2))
        if not ok:
            return False, v
    return True, None


def reduce(c: TropicalType, gamma: Graph, strict_root: bool = False) -> TropicalType:
    """Contract bounded edges at unstable vertices until the type is stable.

    The contracted edge is the canonically first one incident to the first
    unstable vertex; the result does not depend on these choices (tested as a
    confluence property, not assumed).
    """
    while True:
        stable, v = is_gamma_stable(c, gamma, strict_root)
        if stable:
            return c
        c = c.contract_edge(c.incident_edges(v)[0])


# ---------------------------------------------------------------------------
# Distance classes


def pair_list(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, n + 1), 2))


@dataclass(frozen=True)
class QnVector:
    """A pairwise-distance vector modulo vertex-sum perturbations.

    Coordinates are indexed by unordered pairs from 1..n in lexicographic
    order; the canonical representative vanishes on the pivot pairs (1,2),
    ..., (1,n) and (2,3), which pins down a unique member of each class.
    """

    n: int
    coords: tuple

    @classmethod
    def from_raw(cls, n: int, coords: Sequence) -> "QnVector":
        pairs = pair_list(n)
        if len(coords) != len(pairs):
            raise ValueError("coordinate length does not match the pair count")
        idx = {p: i for i, p in enumerate(pairs)}
        y12, y13, y23 = coords[idx[(1, 2)]], coords[idx[(1, 3)]], coords[idx[(2, 3)]]
        x = [Fraction(0)] * (n + 1)  # 1-indexed
        x[1] = Fraction(y12 + y13 - y23, 2)
        for j in range(2, n + 1):
            x[j] = coords[idx[(1, j)]] - x[1]
        canon = tuple(
            _num(c - x[i] - x[j]) for (i, j), c in zip(pairs, coords)
        )
        return cls(n, canon)

    @classmethod
    def zero(cls, n: int) -> "QnVector":
        return cls(n, (0,) * (n * (n - 1) // 2))

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "QnVector") -> "QnVector":
        self._check(other)
        return QnVector(self.n, tuple(_num(a + b) for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "QnVector") -> "QnVector":
        self._check(other)
        return QnVector(self.n, tuple(_num(a - b) for a, b in zip(self.coords, other.coords)))

    def scale(self, factor) -> "QnVector":
        return QnVector(self.n, tuple(_num(factor * c) for c in self.coords))

    def _check(self, other: "QnVector"):
        if self.n != other.n:
            raise ValueError("vectors for different numbers of ends")


def rho_split(n: int, members: Iterable[int]) -> QnVector:
    """Distance class of the one-edge curve with the given split, unit length."""
    s = frozenset(members)
    if 1 in s:
        raise ValueError("splits are recorded on the side avoiding end 1")
    if not 2 <= len(s) <= n - 2:
        raise ValueError("split size out of range")
    raw = [int((i in s) != (j in s)) for i, j in pair_list(n)]
    return QnVector.from_raw(n, raw)


@dataclass(frozen=True)
class MetricType:
    """A combinatorial type with positive rational bounded-edge lengths,
    aligned with ``type.edges``."""

    type: TropicalType
    lengths: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.lengths) != len(self.type.edges):
            raise ValueError("one length per bounded edge required")
        if any(length <= 0 for length in self.lengths):
            raise ValueError("lengths must be positive")


def dist_vector(m: MetricType) -> QnVector:
    """Canonical class of the vector of pairwise distances between ends."""
    c = m.type
    length = dict(zip(c.edges, m.lengths))
    depth: dict[int, Fraction] = {0: Fraction(0)}
    parent = {v: u for u, v in c.edges}
    for u, v in c.edges:  # parents precede children in the sorted edge list
        depth[v] = depth[u] + length[(u, v)]

    def dist(a: int, b: int) -> Fraction:
        da, db = depth[a], depth[b]
        while a != b:
            if depth[a] >= depth[b]:
                a = parent[a]
            else:
                b = parent[b]
        return da + db - 2 * depth[a]

    raw = [dist(c.ends_at[i - 1], c.ends_at[j - 1]) for i, j in pair_list(c.n)]
    return QnVector.from_raw(c.n, raw)


@dataclass(frozen=True)
class QnRelationsReport:
    pair_sum_zero: bool
    split_expansions_ok: bool
    failing_split: Optional[tuple] = None

    @property
    def holds(self) -> bool:
        return self.pair_sum_zero and self.split_expansions_ok


def qn_relations_check(n: int) -> QnRelationsReport:
    """Check, in canonical coordinates, that the rays of two-element splits sum
    to zero and that every split's ray expands as the sum over its pairs."""
    if not 4 <= n <= 8:
        raise ValueError("relation check supports 4 <= n <= 8")
    total = QnVector.zero(n)
    for s in combinations(range(2, n + 1), 2):
        total = total + rho_split(n, s)
    pair_sum_zero = total.is_zero
    for size in range(2, n - 1):
        for s in combinations(range(2, n + 1), size):
            expansion = QnVector.zero(n)
            for pair in combinations(s, 2):
                expansion = expansion + rho_split(n, pair)
            if expansion != rho_split(n, s):
                return QnRelationsReport(pair_sum_zero, False, s)
    return QnRelationsReport(pair_sum_zero, True)


# ---------------------------------------------------------------------------
# The linear translation into edge space


@cache
def _psi_setup(n: int):
    edges = tuple(combinations(range(2, n + 1), 2))
    pairs = pair_list(n)
    pivots = {(1, j) for j in range(2, n + 1)} | {(2, 3)}
    free_idx = tuple(i for i, p in enumerate(pairs) if p not in pivots)
    basis = [frozenset(e) for e in edges[:-1]]  # drop one split: the rest is a basis
    columns = [rho_split(n, s) for s in basis]
    matrix = [[col.coords[i] for col in columns] for i in free_idx]
    inverse = ila.invert_rational(matrix)
    return edges, free_idx, basis, inverse


def psi_linear(v: QnVector) -> QuotientVector:
    """The linear isomorphism onto edge space modulo the all-ones line.

    Determined on the basis of two-element splits: the ray of split {i,j} goes
    to minus the unit vector of edge (i,j).  Well-definedness amounts to the
    pair-sum relation landing on the class of the all-ones vector, which is
    checked by the test suite rather than assumed.
    """
    edges, free_idx, basis, inverse = _psi_setup(v.n)
    rhs = [v.coords[i] for i in free_idx]
    coeffs = [sum(row[j] * rhs[j] for j in range(len(rhs))) for row in inverse]
    raw = {frozenset(e): Fraction(0) for e in edges}
    for s, c in zip(basis, coeffs):
        raw[s] = -c
    return QuotientVector.from_raw(edges, [raw[frozenset(e)] for e in edges])


# ---------------------------------------------------------------------------
# The bijection with chains of flats


def _complete_on(n: int) -> Graph:
    return Graph.complete(range(2, n + 1))


def _require_complete_chain(f: ChainOfFlats) -> tuple[Graph, int]:
    g = f.graph
    n = g.labels[-1]
    if g != _complete_on(n):
        raise ValueError("chain must consist of flats of a complete graph on 2..n")
    return g, n


def psi_cof_to_radial(f: ChainOfFlats, n: Optional[int] = None) -> RadialType:
    """Radially aligned type of a chain of flats.

    Blocks of the i-th flat become vertices at distance (length - i + 1) from
    the root; a block that already occurs one step down is a pass-through and
    is suppressed.  Ends land at the smallest block containing them.
    """
    if len(f) == 0:
        if n is None:
            raise ValueError("the empty chain needs an explicit number of ends")
        return RadialType(star_type(n), ())
    _, n = _require_complete_chain(f)
    r = len(f)
    level_of_split: dict[frozenset, int] = {}
    for idx in range(r):
        prev = set(f[idx - 1].blocks) if idx else set()
        for block in f[idx].blocks:
            if block not in prev:
                level_of_split[frozenset(block)] = r - idx
    typ = tropical_type(n, level_of_split)
    levels = tuple(
        frozenset(
            i + 1 for i, s in enumerate(typ.splits) if level_of_split[s] == lvl
        )
        for lvl in range(1, r + 1)
    )
    return RadialType(typ, levels)


def psi_radial_to_cof(c: RadialType) -> ChainOfFlats:
    """Chain of flats of a radially aligned type.

    Cutting the tree just inside level i leaves a forest; completing the end
    set of each remaining component gives the (length - i + 1)-th flat, so
    deeper cuts give smaller flats.
    """
    n = c.type.n
    ambient = _complete_on(n)
    level_of = c.level_of
    parent = {v: u for u, v in c.type.edges}
    r = c.num_levels
    flats: list[Flat] = []
    for i in range(r, 0, -1):
        alive = {v for v in range(1, c.type.num_vertices) if level_of[v] >= i}

        def top(v: int) -> int:
            while parent[v] in alive:
                v = parent[v]
            return v

        groups: dict[int, list[int]] = {}
        for v in sorted(alive):
            groups.setdefault(top(v), []).append(v)
        mask = 0
        for group in groups.values():
            ends = sorted(e for v in group for e in c.type.ends_at_vertex(v))
            assert len(ends) >= 2
            for a, b in combinations(ends, 2):
                mask |= 1 << ambient.edge_index[(a, b)]
        flats.append(Flat.from_edge_set(EdgeSet(ambient, mask)))
    return ChainOfFlats(tuple(flats))


def flat_gamma_stable(f: Flat, gamma: Graph) -> bool:
    """Stability of the one-flat chain's combinatorial type."""
    radial = psi_cof_to_radial(ChainOfFlats((f,)))
    return is_gamma_stable(radial.type, gamma)[0]


def chain_gamma_stable(f: ChainOfFlats, gamma: Graph) -> bool:
    return all(flat_gamma_stable(flat, gamma) for flat in f)


# ---------------------------------------------------------------------------
# Moduli fans, caterpillars, and the injectivity trichotomy


def moduli_fan_rad(n: int, gamma: Union[Graph, str] = "complete") -> Fan:
    """The fan of radially aligned stable types in complete-graph edge space.

    Enumerates the stable combinatorial types, refines each by its radial
    alignments, and embeds every radial type as the cone of its chain of
    flats.  Projecting the result onto the stability graph's edges gives the
    image fan.
    """
    if not 4 <= n <= 7:
        raise ValueError("moduli fans support 4 <= n <= 7")
    if gamma == "complete":
        gamma = _complete_on(n)
    if not isinstance(gamma, Graph):
        raise ValueError("gamma must be a Graph or the string 'complete'")
    _check_stability_graph(n, gamma)
    ambient = _complete_on(n).edges
    cones = []
    for d, types in sorted(enumerate_types(n).items()):
        for typ in types:
            if not is_gamma_stable(typ, gamma)[0]:
                continue
            for radial in radial_alignments(typ):
                chain = psi_radial_to_cof(radial)
                rays = [ray_of_flat(flat, ambient) for flat in chain]
                cones.append(make_cone(rays, weight=1, provenance=(chain,)))
    return Fan(ambient, cones, close_faces=False, validate=True)


def caterpillar_cof(gamma: Graph) -> ChainOfFlats:
    """A maximal chain of cliques grown along a spanning tree of gamma.

    The k-th flat is the clique on a connected (k+1)-vertex subtree, so its
    restriction to gamma still has rank k and the chain's cone survives
    projection at full dimension.  The associated radial type is a
    caterpillar.
    """
    if not gamma.is_connected():
        raise ValueError("caterpillar construction needs a connected graph")
    tree = spanning_forest(gamma, gamma.full_edge_set())
    tree_edges = tree.edges
    if not tree_edges:
        return ChainOfFlats(())
    ambient = Graph.complete(gamma.labels)
    grown = set(tree_edges[0])
    flats = []
    while len(grown) < len(gamma.labels) - 1:
        flats.append(_clique_flat(ambient, grown))
        candidates = sorted(
            (b if a in grown else a)
            for a, b in tree_edges
            if (a in grown) != (b in grown)
        )
        grown.add(candidates[0])
    if len(gamma.labels) > 2:
        flats.append(_clique_flat(ambient, grown))
    chain = ChainOfFlats(tuple(flats))
    for k, flat in enumerate(chain, start=1):
        restricted = EdgeSet.from_edges(
            gamma, (e for e in flat.edges.edges if e in gamma.edge_index)
        )
        assert graph_rank(gamma, restricted) == k
    return chain


def _clique_flat(ambient: Graph, vertices: set[int]) -> Flat:
    return Flat.from_edge_set(
        EdgeSet.from_edges(ambient, combinations(sorted(vertices), 2))
    )


@dataclass(frozen=True)
class InjectivityReport:
    injective: bool
    rank_criterion: bool
    multipartite: bool
    witness_flat: Optional[Flat] = None
    witness_triple: Optional[tuple] = None

    @property
    def agree(self) -> bool:
        return self.injective == self.rank_criterion == self.multipartite


def verify_injectivity(gamma: Graph) -> InjectivityReport:
    """Three independent computations of one trichotomy.

    (a) edge-restriction is injective on stable flats of the complete graph,
    (b) edge-restriction preserves the rank of every stable flat, and
    (c) gamma is complete multipartite; the three are checked independently
    and asserted equivalent.
    """
    n = gamma.labels[-1]
    if gamma.labels != tuple(range(2, n + 1)) or len(gamma.labels) > 6:
        raise ValueError("stability graph must be labeled 2..n with at most 6 vertices")
    if not gamma.is_connected():
        raise ValueError("stability graph must be connected")
    ambient = _complete_on(n)
    stable = [f for f in proper_flats(ambient) if flat_gamma_stable(f, gamma)]
    images = {}
    injective = True
    for f in stable:
        restricted = frozenset(e for e in f.edges.edges if e in gamma.edge_index)
        if restricted in images:
            injective = False
        images.setdefault(restricted, f)
    rank_ok = True
    witness = None
    for f in stable:
        restricted = EdgeSet.from_edges(
            gamma, (e for e in f.edges.edges if e in gamma.edge_index)
        )
        if graph_rank(gamma, restricted) != f.rank:
            rank_ok = False
            if witness is None:
                witness = f
    multipartite, triple = is_complete_multipartite(gamma)
    report = InjectivityReport(injective, rank_ok, multipartite, witness, triple)
    assert report.agree, "injectivity, rank preservation, and multipartiteness split"
    return report


def count_stable_types(n: int, gamma: Graph) -> dict[int, int]:
    """Stable combinatorial types by bounded-edge count."""
    return {
        d: sum(1 for t in types if is_gamma_stable(t, gamma)[0])
        for d, types in sorted(enumerate_types(n).items())
    }


# ---------------------------------------------------------------------------
# Wire formats


def type_to_json(c: TropicalType) -> dict:
    return {
        "ends": c.n,
        "edges": [list(e) for e in c.edges],
        "ends_at": {str(e): v for e, v in enumerate(c.ends_at, start=1)},
    }


def radial_to_json(c: RadialType) -> dict:
    doc = type_to_json(c.type)
    doc["levels"] = [sorted(block) for block in c.levels]
    return doc


def chain_to_json(f: ChainOfFlats) -> list:
    """Chains as arrays of flat edge lists, edges as "i-j" strings."""
    return [[f"{a}-{b}" for a, b in flat.edges.edges] for flat in f]


def _type_from_json(doc: dict) -> tuple[TropicalType, dict[int, int]]:
    """Rebuild a type from its wire form, tolerating any vertex numbering.

    Returns the canonical type and the map from the document's vertex ids to
    canonical ones (via the split each non-root vertex subtends)."""
    n = doc["ends"]
    ends_at = {int(k): v for k, v in doc["ends_at"].items()}
    root = ends_at[1]
    adjacency: dict[int, list[int]] = {}
    for u, v in (tuple(e) for e in doc["edges"]):
        adjacency.setdefault(u, []).append(v)
        adjacency.setdefault(v, []).append(u)
    parent: dict[int, Optional[int]] = {root: None}
    order = [root]
    for v in order:
        for w in adjacency.get(v, []):
            if w not in parent:
                parent[w] = v
                order.append(w)
    ends_below: dict[int, set[int]] = {}
    for v in reversed(order):
        ends_below[v] = {e for e, host in ends_at.items() if host == v and e != 1}
        for w in adjacency.get(v, []):
            if parent.get(w) == v:
                ends_below[v] |= ends_below[w]
    split_of = {v: frozenset(ends_below[v]) for v in order if v != root}
    typ = tropical_type(n, split_of.values())
    vertex_map = {v: typ.splits.index(s) + 1 for v, s in split_of.items()}
    return typ, vertex_map


def type_from_json(doc: dict) -> TropicalType:
    return _type_from_json(doc)[0]


def radial_from_json(doc: dict) -> RadialType:
    typ, vertex_map = _type_from_json(doc)
    levels = tuple(frozenset(vertex_map[v] for v in block) for block in doc["levels"])
    return RadialType(typ, levels)
