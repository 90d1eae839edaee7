"""The projective line over Z_d: free cyclic submodules of Z_d^2 and their unions.

A *point* is a cyclic submodule Z_d * (b, c) generated by an admissible
vector; distinct points can intersect away from zero when d is not
squarefree, which is what the union/perp machinery below quantifies.
Each point is stored by a canonical generator assembled per prime-power
component: (1, y) when the first coordinate is invertible there, otherwise
(x, 1) with x a multiple of p.  That shape gives O(1) membership tests and
a catalog enumeration that never materializes non-admissible candidates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetExceededError, ZeroVectorError
from .ring import Modulus, crt_combine
from .symplectic import Vec2, degree, is_admissible

POINT_ENUMERATION_CAP = 10**7


@dataclass(frozen=True)
class Point:
    """A free cyclic submodule of Z_d^2, identified by its canonical generator."""

    generator: Vec2

    @property
    def modulus(self) -> Modulus:
        return self.generator.modulus

    def component_generators(self) -> tuple[tuple[int, int], ...]:
        """The (1, y) or (x, 1) shape of the generator in each component."""
        return tuple(
            (self.generator.b % q, self.generator.c % q)
            for q in self.modulus.prime_powers
        )

    def contains(self, v: Vec2) -> bool:
        """Membership test, one congruence per prime-power component."""
        if v.modulus != self.modulus:
            return False
        for q, (gb, gc) in zip(self.modulus.prime_powers, self.component_generators()):
            if gb == 1:
                if (v.c - v.b * gc) % q != 0:
                    return False
            else:
                if (v.b - v.c * gb) % q != 0:
                    return False
        return True

    def vectors(self) -> frozenset[Vec2]:
        """The d member vectors u * generator, materialized."""
        m = self.modulus
        d = m.d
        return frozenset(
            Vec2((u * self.generator.b) % d, (u * self.generator.c) % d, m)
            for u in range(d)
        )

    def __str__(self) -> str:
        return f"Z_{self.modulus.d}*{self.generator}"


@dataclass(frozen=True)
class LineCatalog:
    """All points of the projective line over one modulus, generator-sorted."""

    modulus: Modulus
    points: tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def generators(self) -> list[tuple[int, int]]:
        return [pt.generator.pair for pt in self.points]


def line_cardinality(m: Modulus) -> int:
    """Number of points: prod (p_k^eps_k + p_k^(eps_k - 1))."""
    n = 1
    for p, e in m.factors:
        n *= p**e + p ** (e - 1)
    return n


@lru_cache(maxsize=None)
def enumerate_points(m: Modulus, budget: int = POINT_ENUMERATION_CAP) -> LineCatalog:
    """Build the point catalog from canonical per-component generators.

    In each component the admissible directions split into p^eps generators
    (1, y) and p^(eps-1) generators (x, 1) with p | x; the catalog is their
    Chinese-remainder product, sorted by generator pair.
    """
    total = line_cardinality(m)
    if total > budget:
        raise BudgetExceededError("point enumeration", total, budget)
    per_component = []
    for p, e in m.factors:
        q = p**e
        gens = [(1, y) for y in range(q)]
        gens.extend((x, 1) for x in range(0, q, p))
        per_component.append(gens)
    points = []
    for combo in itertools.product(*per_component):
        b = crt_combine(tuple(g[0] for g in combo), m)
        c = crt_combine(tuple(g[1] for g in combo), m)
        points.append(Point(Vec2(b, c, m)))
    points.sort(key=lambda pt: pt.generator.pair)
    return LineCatalog(m, tuple(points))


def point_through(v: Vec2) -> Point:
    """The unique point containing an admissible vector v.

    Rewrites v component-wise into canonical shape: (1, b^-1 c) when b is a
    unit in the component, else (c^-1 b, 1).
    """
    if not is_admissible(v):
        raise ValueError(f"{v} is not admissible over Z_{v.modulus.d}")
    m = v.modulus
    bs = []
    cs = []
    for p, e in m.factors:
        q = p**e
        bk = v.b % q
        ck = v.c % q
        if bk % p != 0:
            bs.append(1)
            cs.append(ck * pow(bk, -1, q) % q)
        else:
            bs.append(bk * pow(ck, -1, q) % q)
            cs.append(1)
    g = Vec2(crt_combine(tuple(bs), m), crt_combine(tuple(cs), m), m)
    return Point(g)


def cyclic_submodule(v: Vec2) -> frozenset[Vec2]:
    """The orbit Z_d * v (free of rank one exactly when v is admissible)."""
    m = v.modulus
    d = m.d
    return frozenset(
        Vec2((u * v.b) % d, (u * v.c) % d, m) for u in range(d)
    )


def count_points_through(v: Vec2) -> int:
    """Number of points containing v, from the degree alone.

    Per component: p^delta when delta < eps, and p^eps + p^(eps-1) (every
    point of that component line) when delta = eps.
    """
    n = 1
    for (p, e), delta in zip(v.modulus.factors, degree(v)):
        n *= p**e + p ** (e - 1) if delta == e else p**delta
    return n


def points_through(v: Vec2, catalog: LineCatalog | None = None) -> list[Point]:
    """The points containing v, by membership scan of the catalog."""
    if catalog is None:
        catalog = enumerate_points(v.modulus)
    return [pt for pt in catalog if pt.contains(v)]


def union_of_points(v: Vec2, catalog: LineCatalog | None = None) -> set[Vec2]:
    """Union of all points through v, materialized."""
    out: set[Vec2] = set()
    for pt in points_through(v, catalog):
        out |= pt.vectors()
    return out


def union_size(v: Vec2) -> int:
    """Cardinality of the union of all points through v, in closed form.

    Per component with 0 < delta < eps the vectors of the union sort by
    their own valuation sigma < delta (u * p^sigma with u a unit, paired
    with p^(delta - sigma) surviving direction counts) plus the p^(eps -
    delta) multiples of p^delta; components with delta = 0 or delta = eps
    contribute their full point union (d_k or d_k^2 respectively).  The
    zero vector is rejected: every point contains it, and the closed form
    below does not apply.
    """
    if v.is_zero:
        raise ZeroVectorError(
            f"union size of the zero vector over Z_{v.modulus.d} is not defined "
            "by the layer formula; it is the whole plane"
        )
    n = 1
    for (p, e), delta in zip(v.modulus.factors, degree(v)):
        q = p**e
        if delta == e:
            n *= q * q
        elif delta == 0:
            n *= q
        else:
            acc = p ** (e - delta)
            for sigma in range(delta):
                units = p ** (e - sigma) - p ** (e - sigma - 1)
                acc += units * p ** (delta - sigma)
            n *= acc
    return n


def union_equals_perp(v: Vec2) -> bool:
    """Whether the union of points through v is the whole perp of v.

    True exactly when every component degree is extreme (delta_k == 0 or
    delta_k == eps_k); mixed interior valuations leave orthogonal vectors
    that no point through v reaches.
    """
    return all(
        delta == 0 or delta == e
        for (_, e), delta in zip(v.modulus.factors, degree(v))
    )
