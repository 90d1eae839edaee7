"""The generalized Pauli group of one d-level system, in exponent coordinates.

Every group element has normal form omega^a X^b Z^c with omega the primitive
d-th root of unity, so triples (a, b, c) over Z_d represent the group
exactly.  Phases are central: commutation only depends on the vector part
(b, c), which is why most questions route through symplectic/line.  This
module holds the group law itself plus the two aggregate views -- the layer
decomposition of Z_d^2 by degree and the maximal sets of pairwise commuting
vectors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from . import kernels
from .errors import BudgetExceededError, ModulusMismatchError
from .ring import Modulus
from .symplectic import Degree, Vec2, degree, form, is_admissible, perp_cardinality

MAXIMAL_SETS_CAP = 64


@dataclass(frozen=True)
class PauliOp:
    """omega^a X^b Z^c, exponents normalized to {0, ..., d-1}."""

    a: int
    b: int
    c: int
    modulus: Modulus

    def __post_init__(self):
        d = self.modulus.d
        for e in (self.a, self.b, self.c):
            if not 0 <= e < d:
                raise ValueError(f"exponent {e} out of range for modulus {d}")

    @classmethod
    def identity(cls, m: Modulus) -> "PauliOp":
        return cls(0, 0, 0, m)

    @property
    def vector(self) -> Vec2:
        """The commutation-relevant part (b, c)."""
        return Vec2(self.b, self.c, self.modulus)

    @property
    def is_central(self) -> bool:
        return self.b == 0 and self.c == 0

    def __str__(self) -> str:
        return f"w^{self.a} X^{self.b} Z^{self.c}"


def _require_same(g: PauliOp, h: PauliOp) -> Modulus:
    if g.modulus != h.modulus:
        raise ModulusMismatchError(
            f"operands live over Z_{g.modulus.d} and Z_{h.modulus.d}"
        )
    return g.modulus


def multiply(g: PauliOp, h: PauliOp) -> PauliOp:
    """Group law: moving X^b' of h past Z^c of g costs the phase omega^(c*b')."""
    m = _require_same(g, h)
    d = m.d
    return PauliOp(
        (g.a + h.a + g.c * h.b) % d,
        (g.b + h.b) % d,
        (g.c + h.c) % d,
        m,
    )


def inverse(g: PauliOp) -> PauliOp:
    d = g.modulus.d
    return PauliOp((g.b * g.c - g.a) % d, (-g.b) % d, (-g.c) % d, g.modulus)


def commutator(g: PauliOp, h: PauliOp) -> PauliOp:
    """g h g^-1 h^-1; always central, with phase exponent form(g.vector, h.vector)."""
    m = _require_same(g, h)
    return PauliOp(form(g.vector, h.vector), 0, 0, m)


def commutes(g: PauliOp, h: PauliOp) -> bool:
    return form(g.vector, h.vector) == 0


def group_order(m: Modulus) -> int:
    return m.d**3


def center_size(m: Modulus) -> int:
    return m.d


def commuting_count(g: PauliOp) -> int:
    """|centralizer of g| = d * |perp of its vector| = d^2 * prod p_k^delta_k."""
    return g.modulus.d * perp_cardinality(g.vector)


# --- degree layers -----------------------------------------------------------


@dataclass(frozen=True)
class LayerRow:
    degree: Degree
    vector_count: int
    operator_count: int
    pg_label: tuple[int, ...] | None


@dataclass(frozen=True)
class LayerTable:
    """Partition of Z_d^2 (and of the group, fiber-wise) by degree.

    Rows are sorted lexicographically by degree tuple; ``permuted`` re-keys
    them under a different component ordering for presentation.
    """

    modulus: Modulus
    rows: tuple[LayerRow, ...]

    def __iter__(self):
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def row(self, deltas: tuple[int, ...]) -> LayerRow:
        for r in self.rows:
            if r.degree.deltas == deltas:
                return r
        raise KeyError(f"no layer with degree {deltas}")

    @property
    def total_vectors(self) -> int:
        return sum(r.vector_count for r in self.rows)

    @property
    def total_operators(self) -> int:
        return sum(r.operator_count for r in self.rows)

    def permuted(self, order: tuple[int, ...]) -> list[tuple[tuple[int, ...], LayerRow]]:
        """Rows keyed by reordered degree components, sorted by (sum, tuple)."""
        if sorted(order) != list(range(self.modulus.num_components)):
            raise ValueError(f"{order!r} is not a permutation of the components")
        keyed = [
            (tuple(r.degree.deltas[i] for i in order), r) for r in self.rows
        ]
        keyed.sort(key=lambda kr: (sum(kr[0]), kr[0]))
        return keyed


def component_layer_count(p: int, e: int, delta: int) -> int:
    """Vectors of valuation exactly delta in (Z_{p^e})^2: p^(2(e-d)) - p^(2(e-d-1))."""
    if not 0 <= delta <= e:
        raise ValueError(f"delta must lie in [0, {e}], got {delta}")
    if delta == e:
        return 1
    return p ** (2 * (e - delta)) - p ** (2 * (e - delta - 1))


def pg_label(deg: Degree, m: Modulus) -> tuple[int, ...] | None:
    """Binary projective coordinates attached to a non-admissible layer.

    For squarefree d with r >= 2 prime factors every degree tuple is binary,
    and the nonzero ones biject with the points of the binary projective
    space of dimension r - 1; the tuple itself serves as the label.  Returns
    None when the labeling does not apply (admissible layer, r == 1, or d
    not squarefree).
    """
    if not m.is_squarefree or m.num_components < 2 or deg.is_zero:
        return None
    return deg.deltas


def layer_table(m: Modulus) -> LayerTable:
    rows = []
    ranges = [range(e + 1) for _, e in m.factors]
    for deltas in itertools.product(*ranges):
        n = 1
        for (p, e), delta in zip(m.factors, deltas):
            n *= component_layer_count(p, e, delta)
        deg = Degree(tuple(deltas))
        rows.append(LayerRow(deg, n, n * m.d, pg_label(deg, m)))
    rows.sort(key=lambda r: r.degree.deltas)
    return LayerTable(m, tuple(rows))


# --- maximal commuting sets --------------------------------------------------


@dataclass(frozen=True)
class CommutingSet:
    """A maximal set of pairwise commuting vectors (always a submodule)."""

    vectors: tuple[Vec2, ...]
    is_free_cyclic: bool

    def __len__(self) -> int:
        return len(self.vectors)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(v.pair for v in self.vectors)


def maximal_commuting_sets(m: Modulus, cap: int = MAXIMAL_SETS_CAP) -> list[CommutingSet]:
    """All maximal pairwise-commuting subsets of Z_d^2, as clique enumeration.

    Commutation is reflexive here (form(v, v) == 0) and closed under sums,
    so maximal cliques of the commutation graph are exactly the maximal
    self-orthogonal submodules; the free cyclic ones among them are points
    of the projective line.  Sets are returned deduplicated and ordered
    lexicographically by their sorted member lists.
    """
    d = m.d
    if d > cap:
        raise BudgetExceededError("maximal commuting-set search", d, cap)
    masks = kernels.perp_masks(d)
    graph = nx.Graph()
    graph.add_nodes_from(range(d * d))
    for i in range(d * d):
        bits = kernels.mask_bits(masks[i]) >> (i + 1)
        j = i + 1
        while bits:
            shift = (bits & -bits).bit_length() - 1
            j += shift
            graph.add_edge(i, j)
            bits >>= shift + 1
            j += 1
    out = []
    for clique in nx.find_cliques(graph):
        vecs = tuple(
            sorted((Vec2(i // d, i % d, m) for i in clique), key=lambda v: v.pair)
        )
        free = any(
            is_admissible(v) and len(vecs) == d and _orbit_covers(v, vecs)
            for v in vecs
        )
        out.append(CommutingSet(vecs, free))
    out.sort(key=lambda s: s.pairs())
    return out


def _orbit_covers(v: Vec2, vecs: tuple[Vec2, ...]) -> bool:
    d = v.modulus.d
    got = {((u * v.b) % d, (u * v.c) % d) for u in range(d)}
    return got == {w.pair for w in vecs}
