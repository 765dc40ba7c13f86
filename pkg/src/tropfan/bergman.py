"""Bergman fans in the chains-of-flats subdivision, as weighted integral fans.

Vectors live in the quotient of edge space by the all-ones line; the canonical
representative of a class is the one whose last coordinate vanishes, which
makes equality a plain tuple comparison and identifies the quotient lattice
with the integer vectors supported on the remaining coordinates.  Balancing is
checked with exact integer lattice arithmetic: primitive normal vectors are
produced from saturations via Hermite reduction, never floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache, cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence

from . import intlinalg as ila
from .graphs import Edge, Graph
from .matroid import ChainOfFlats, Flat, all_chains, graph_rank


def _num(x):
    """Collapse integral Fractions to ints; leaves other values untouched."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


@dataclass(frozen=True)
class QuotientVector:
    """A vector of edge space modulo the all-ones line, canonical form.

    ``coords`` is indexed by ``ambient`` (a canonical edge list); the stored
    representative always has last coordinate zero.
    """

    ambient: tuple[Edge, ...]
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != len(self.ambient):
            raise ValueError("coordinate length does not match ambient edges")
        if self.coords and self.coords[-1] != 0:
            raise ValueError("canonical representative must end in 0")

    @classmethod
    def from_raw(cls, ambient: Sequence[Edge], coords: Sequence) -> "QuotientVector":
        coords = list(coords)
        if not coords:
            return cls(tuple(ambient), ())
        last = coords[-1]
        return cls(tuple(ambient), tuple(_num(c - last) for c in coords))

    @classmethod
    def zero(cls, ambient: Sequence[Edge]) -> "QuotientVector":
        return cls(tuple(ambient), (0,) * len(ambient))

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    @property
    def is_integral(self) -> bool:
        return all(isinstance(_num(c), int) for c in self.coords)

    def __add__(self, other: "QuotientVector") -> "QuotientVector":
        self._check(other)
        return QuotientVector(
            self.ambient, tuple(_num(a + b) for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other: "QuotientVector") -> "QuotientVector":
        self._check(other)
        return QuotientVector(
            self.ambient, tuple(_num(a - b) for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self) -> "QuotientVector":
        return QuotientVector(self.ambient, tuple(_num(-c) for c in self.coords))

    def scale(self, factor) -> "QuotientVector":
        return QuotientVector(self.ambient, tuple(_num(factor * c) for c in self.coords))

    def primitive(self) -> tuple:
        """Primitive integer direction vector of this class."""
        denom = math.lcm(
            *(c.denominator for c in self.coords if isinstance(c, Fraction)), 1
        )
        ints = [int(c * denom) for c in self.coords]
        return tuple(ila.primitive_vector(ints))

    def _check(self, other: "QuotientVector"):
        if self.ambient != other.ambient:
            raise ValueError("vectors over different ambient edge lists")


def ray_of_flat(f: Flat, ambient: Sequence[Edge]) -> QuotientVector:
    """Canonical class of minus the indicator vector of the flat's edges."""
    ambient = tuple(ambient)
    positions = {e: i for i, e in enumerate(ambient)}
    raw = [0] * len(ambient)
    for e in f.edges.edges:
        if e not in positions:
            raise ValueError(f"flat edge {e} outside the ambient edge list")
        raw[positions[e]] = -1
    return QuotientVector.from_raw(ambient, raw)


@dataclass(frozen=True)
class Cone:
    """A simplicial cone spanned by independent rays, with weight and origin."""

    rays: tuple[QuotientVector, ...]
    weight: int = 1
    provenance: tuple[ChainOfFlats, ...] = field(default=(), compare=False)

    @property
    def dim(self) -> int:
        return len(self.rays)

    @cached_property
    def rayset(self) -> frozenset:
        return frozenset(self.rays)


def make_cone(
    rays: Iterable[QuotientVector],
    weight: int = 1,
    provenance: tuple[ChainOfFlats, ...] = (),
) -> Cone:
    rays = tuple(sorted(set(rays), key=lambda r: r.coords))
    if weight < 1:
        raise ValueError("cone weights are positive integers")
    return Cone(rays, weight, provenance)


class Fan:
    """A weighted polyhedral fan given by its (simplicial) cones.

    Cones are deduplicated by ray set; faces spanned by ray subsets are filled
    in with weight one when ``close_faces`` is set.  Orderings are canonical
    everywhere so that repeated construction is byte-stable.
    """

    def __init__(
        self,
        ambient: Sequence[Edge],
        cones: Iterable[Cone],
        close_faces: bool = False,
        validate: bool = True,
    ):
        self.ambient = tuple(ambient)
        by_rayset: dict[frozenset, Cone] = {}
        for cone in cones:
            existing = by_rayset.get(cone.rayset)
            if existing is not None:
                if existing.weight != cone.weight:
                    raise ValueError("conflicting weights for one cone")
                merged = existing.provenance + tuple(
                    p for p in cone.provenance if p not in existing.provenance
                )
                by_rayset[cone.rayset] = Cone(existing.rays, existing.weight, merged)
                continue
            if validate and cone.dim > 0:
                coords = [r.coords for r in cone.rays]
                if ila.rational_rank(coords) != cone.dim:
                    raise ValueError("cone rays are linearly dependent")
            by_rayset[cone.rayset] = cone
        if close_faces:
            for cone in list(by_rayset.values()):
                for k in range(cone.dim):
                    for sub in combinations(cone.rays, k):
                        face = make_cone(sub)
                        by_rayset.setdefault(face.rayset, face)
        if frozenset() not in by_rayset:
            by_rayset[frozenset()] = make_cone(())
        self._by_rayset = by_rayset
        self.cones: tuple[Cone, ...] = tuple(
            sorted(by_rayset.values(), key=lambda c: (c.dim, [r.coords for r in c.rays]))
        )
        self.max_dim = max(c.dim for c in self.cones)

    @cached_property
    def rays(self) -> tuple[QuotientVector, ...]:
        return tuple(c.rays[0] for c in self.cones_of_dim(1))

    def cones_of_dim(self, d: int) -> tuple[Cone, ...]:
        return tuple(c for c in self.cones if c.dim == d)

    @cached_property
    def maximal_cones(self) -> tuple[Cone, ...]:
        # fans here are closed under taking ray subsets, so non-maximal cones
        # are exactly the facets of some other cone
        facets = set()
        for c in self.cones:
            for r in c.rays:
                facets.add(c.rayset - {r})
        return tuple(c for c in self.cones if c.rayset not in facets)

    @property
    def is_pure(self) -> bool:
        return all(c.dim == self.max_dim for c in self.maximal_cones)

    def cone_with_rayset(self, rayset: frozenset) -> Optional[Cone]:
        return self._by_rayset.get(rayset)

    def with_weights(self, overrides: dict[frozenset, int]) -> "Fan":
        cones = [
            Cone(c.rays, overrides.get(c.rayset, c.weight), c.provenance)
            for c in self.cones
        ]
        return Fan(self.ambient, cones, close_faces=False, validate=False)

    def census(self) -> tuple[int, ...]:
        """Cone counts by dimension 0..max_dim."""
        return tuple(len(self.cones_of_dim(d)) for d in range(self.max_dim + 1))


def bergman_fan(g: Graph) -> Fan:
    """The fan whose cones are spanned by rays of chains of proper nonempty
    flats, all weights one; its dimension is rank(g) - 1."""
    ambient = g.edges
    cones = []
    for chain in all_chains(g):
        rays = [ray_of_flat(f, ambient) for f in chain]
        cones.append(make_cone(rays, weight=1, provenance=(chain,)))
    fan = Fan(ambient, cones, close_faces=False, validate=True)
    expected = graph_rank(g, g.full_edge_set()) - 1
    assert fan.max_dim == max(expected, 0)
    return fan


# ---------------------------------------------------------------------------
# Primitive normal vectors and balancing


def primitive_normal(sigma: Cone, tau: Cone) -> QuotientVector:
    """The primitive lattice normal of the codimension-one face tau in sigma.

    Returns an integer vector in sigma whose class generates the rank-one
    quotient of sigma's saturated span lattice by tau's, oriented into sigma,
    reduced to the canonical representative modulo tau's lattice.
    """
    if not tau.rayset <= sigma.rayset:
        raise ValueError("tau is not a face of sigma")
    if sigma.dim != tau.dim + 1:
        raise ValueError("tau must have codimension one in sigma")
    ambient = sigma.rays[0].ambient
    coords = _primitive_normal_coords(
        tuple(r.coords for r in sigma.rays), tuple(r.coords for r in tau.rays)
    )
    return QuotientVector(ambient, coords + (0,))


@cache
def _primitive_normal_coords(sigma_coords: tuple, tau_coords: tuple) -> tuple:
    for row in sigma_coords:
        if not all(isinstance(_num(c), int) for c in row):
            raise ValueError("primitive normals need integral rays")
    m = len(sigma_coords[0]) - 1  # canonical reps end in 0; drop that coordinate
    rows_sigma = [[int(c) for c in r[:-1]] for r in sigma_coords]
    rows_tau = [[int(c) for c in r[:-1]] for r in tau_coords]
    basis_sigma = ila.saturation(rows_sigma, m)
    basis_tau = ila.saturation(rows_tau, m) if rows_tau else []
    k = len(basis_sigma)
    # coordinates of tau's lattice basis inside sigma's
    t_rows = []
    for b in basis_tau:
        coeffs = ila.solve_in_span(basis_sigma, b)
        assert coeffs is not None and all(c.denominator == 1 for c in coeffs)
        t_rows.append([int(c) for c in coeffs])
    # the quotient functional: c -> det([T; c]); its coefficient vector has
    # gcd one exactly because tau's lattice is saturated in sigma's
    unit = lambda i: [int(j == i) for j in range(k)]
    functional = [ila.det_int(t_rows + [unit(i)]) for i in range(k)]
    coeffs = ila.solve_coeffs_one(functional)
    assert coeffs is not None, "quotient lattice is not cyclic of index one"
    # orient into sigma using the ray of sigma that tau misses
    tau_set = set(map(tuple, rows_tau))
    extra = next(r for r in rows_sigma if tuple(r) not in tau_set)
    extra_coeffs = ila.solve_in_span(basis_sigma, extra)
    orientation = sum(f * c for f, c in zip(functional, extra_coeffs))
    if orientation < 0:
        coeffs = [-c for c in coeffs]
    u = [sum(c * b[j] for c, b in zip(coeffs, basis_sigma)) for j in range(m)]
    if basis_tau:
        u = ila.hnf_reduce(ila.hnf(basis_tau), u)
    return tuple(u)


@dataclass(frozen=True)
class BalanceReport:
    balanced: bool
    failing_face: Optional[Cone] = None


def is_balanced(fan: Fan) -> BalanceReport:
    """Check the weighted balancing condition around every codimension-one face.

    For each face tau of dimension max_dim - 1, the weighted sum of primitive
    normals of the maximal cones containing tau must lie in tau's rational
    span.  Exact arithmetic throughout.
    """
    if not fan.is_pure:
        raise ValueError("balancing is only defined for pure fans")
    if fan.max_dim == 0:
        return BalanceReport(True)
    maximal = fan.cones_of_dim(fan.max_dim)
    for tau in fan.cones_of_dim(fan.max_dim - 1):
        total = QuotientVector.zero(fan.ambient)
        for sigma in maximal:
            if tau.rayset <= sigma.rayset:
                u = primitive_normal(sigma, tau)
                total = total + u.scale(sigma.weight)
        if total.is_zero:
            continue
        span_rows = [r.coords for r in tau.rays]
        if not ila.in_rational_span(span_rows, total.coords):
            return BalanceReport(False, tau)
    return BalanceReport(True)


# ---------------------------------------------------------------------------
# Projection and structural equality


def project_vector(v: QuotientVector, gamma: Graph) -> QuotientVector:
    """Forget the coordinates of edges not in gamma and re-canonicalize."""
    keep = [i for i, e in enumerate(v.ambient) if e in gamma.edge_index]
    return QuotientVector.from_raw(gamma.edges, [v.coords[i] for i in keep])


def project_fan(fan: Fan, gamma: Graph) -> Fan:
    """Image of a fan in the complete-graph edge space under edge deletion.

    Rays that project to zero are dropped and coinciding images are merged;
    each image cone keeps every source cone's provenance as its fiber and
    carries weight one.
    """
    complete_edges = tuple(combinations(gamma.labels, 2))
    if fan.ambient != complete_edges:
        raise ValueError(
            "fan ambient must be the complete graph on the target graph's labels"
        )
    merged: dict[frozenset, tuple[list[QuotientVector], list]] = {}
    for cone in fan.cones:
        image = []
        for ray in cone.rays:
            p = project_vector(ray, gamma)
            if not p.is_zero and p not in image:
                image.append(p)
        if image and ila.rational_rank([r.coords for r in image]) != len(image):
            raise ValueError("projected cone is not simplicial")
        key = frozenset(image)
        slot = merged.setdefault(key, (image, []))
        slot[1].extend(cone.provenance)
    cones = [
        make_cone(rays, weight=1, provenance=tuple(fibers))
        for rays, fibers in merged.values()
    ]
    return Fan(gamma.edges, cones, close_faces=False, validate=False)


def fans_equal(a: Fan, b: Fan) -> bool:
    """Structural equality: same ambient, same cone ray sets (as primitive
    vectors), and matching weights on maximal cones."""
    if a.ambient != b.ambient:
        return False

    def shape(fan: Fan) -> dict:
        out = {}
        maximal = set(fan.maximal_cones)
        for c in fan.cones:
            key = frozenset(r.primitive() for r in c.rays)
            out[key] = c.weight if c in maximal else None
        return out

    return shape(a) == shape(b)


# ---------------------------------------------------------------------------
# Serialization


def edge_str(e: Edge) -> str:
    return f"{e[0]}-{e[1]}"


def _chain_json(chain: ChainOfFlats) -> list:
    return [[edge_str(e) for e in f.edges.edges] for f in chain]


def fan_to_json(fan: Fan) -> dict:
    """Stable JSON form: ambient edges, primitive rays, cones by ray indices
    with weights and provenance chains (one list of chains per cone fiber)."""
    rays = sorted({r for c in fan.cones for r in c.rays}, key=lambda r: r.coords)
    index = {r: i for i, r in enumerate(rays)}
    cones = []
    for c in fan.cones:
        cones.append(
            {
                "rays": sorted(index[r] for r in c.rays),
                "weight": c.weight,
                "provenance": [_chain_json(ch) for ch in c.provenance],
            }
        )
    return {
        "schema": 1,
        "ambient": [edge_str(e) for e in fan.ambient],
        "rays": [list(r.coords) for r in rays],
        "cones": cones,
    }
