"""Vectors over Z_d x Z_d, the alternating form, and canonical reduction.

A Pauli operator's commutation behavior is fully carried by its exponent
vector (b, c) in Z_d^2, compared through the alternating form

    form((b, c), (b', c')) = c * b' - c' * b   (mod d).

The per-component valuations of a vector -- its *degree* -- classify orbits
under the unimodular group, and ``canonical_form`` produces an explicit
determinant-one matrix moving a vector onto its normal form (q, 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .errors import BudgetExceededError, ModulusMismatchError, NonUnitError
from .ring import Modulus, crt_combine, power_rep

PERP_ENUMERATION_CAP = 2**16


@dataclass(frozen=True)
class Vec2:
    """A row vector (b, c) over Z_d, components normalized to {0, ..., d-1}."""

    b: int
    c: int
    modulus: Modulus

    def __post_init__(self):
        d = self.modulus.d
        if not (0 <= self.b < d and 0 <= self.c < d):
            raise ValueError(f"components ({self.b}, {self.c}) out of range for modulus {d}")

    @property
    def pair(self) -> tuple[int, int]:
        return (self.b, self.c)

    @property
    def is_zero(self) -> bool:
        return self.b == 0 and self.c == 0

    def __str__(self) -> str:
        return f"({self.b},{self.c})"


@dataclass(frozen=True)
class Degree:
    """Per-component valuations (delta_1, ..., delta_r) of a vector.

    delta_k is the smaller of the two component valuations of b and c modulo
    p_k^eps_k, capped at eps_k; the all-zero degree characterizes admissible
    vectors and the all-eps degree the zero vector.
    """

    deltas: tuple[int, ...]

    def __iter__(self):
        return iter(self.deltas)

    def __len__(self) -> int:
        return len(self.deltas)

    def __getitem__(self, k: int) -> int:
        return self.deltas[k]

    @property
    def total(self) -> int:
        return sum(self.deltas)

    @property
    def is_zero(self) -> bool:
        return self.total == 0

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.deltas) + ")"


@dataclass(frozen=True)
class Mat2:
    """A 2x2 matrix over Z_d with unit determinant, acting on row vectors."""

    a11: int
    a12: int
    a21: int
    a22: int
    modulus: Modulus

    def __post_init__(self):
        d = self.modulus.d
        for entry in (self.a11, self.a12, self.a21, self.a22):
            if not 0 <= entry < d:
                raise ValueError(f"matrix entry {entry} out of range for modulus {d}")
        if math.gcd(self.det, d) != 1:
            raise NonUnitError(self.det, d)

    @property
    def det(self) -> int:
        return (self.a11 * self.a22 - self.a12 * self.a21) % self.modulus.d

    @classmethod
    def identity(cls, m: Modulus) -> "Mat2":
        return cls(1 % m.d, 0, 0, 1 % m.d, m)

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a11, self.a12), (self.a21, self.a22))


def require_same_modulus(v: Vec2, w: Vec2) -> Modulus:
    if v.modulus != w.modulus:
        raise ModulusMismatchError(
            f"operands live over Z_{v.modulus.d} and Z_{w.modulus.d}"
        )
    return v.modulus


def form(v: Vec2, w: Vec2) -> int:
    """The alternating form c*b' - c'*b mod d; zero iff the operators commute."""
    m = require_same_modulus(v, w)
    return (v.c * w.b - w.c * v.b) % m.d


@lru_cache(maxsize=None)
def degree(v: Vec2) -> Degree:
    deltas = []
    for p, e in v.modulus.factors:
        q = p**e
        ab = power_rep(v.b % q, p, e).alpha
        ac = power_rep(v.c % q, p, e).alpha
        deltas.append(min(ab, ac))
    return Degree(tuple(deltas))


def is_admissible(v: Vec2) -> bool:
    """Whether (b, c) extends to a basis of Z_d^2, i.e. gcd(b, c, d) == 1."""
    return math.gcd(v.b, v.c, v.modulus.d) == 1


def apply(v: Vec2, a: Mat2) -> Vec2:
    """Row-vector action: (b, c) |-> (b*a11 + c*a21, b*a12 + c*a22)."""
    if v.modulus != a.modulus:
        raise ModulusMismatchError(
            f"operands live over Z_{v.modulus.d} and Z_{a.modulus.d}"
        )
    d = v.modulus.d
    return Vec2(
        (v.b * a.a11 + v.c * a.a21) % d,
        (v.b * a.a12 + v.c * a.a22) % d,
        v.modulus,
    )


def canonical_form(v: Vec2) -> tuple[Mat2, Vec2]:
    """A determinant-one matrix M with v @ M == (q, 0), q = prod p_k^delta_k.

    Built per prime-power component.  Writing b = u * p^beta and
    c = w * p^gamma, the component matrix is

        beta <= gamma:  [[u^-1, -w * p^(gamma-beta)], [0,      u            ]]
        beta >  gamma:  [[0,    -w                 ], [w^-1,   u * p^(beta-gamma)]]

    and the entries are recombined with the Chinese remainder transform.
    """
    m = v.modulus
    entries = ([], [], [], [])
    target = []
    for p, e in m.factors:
        q = p**e
        rb = power_rep(v.b % q, p, e)
        rc = power_rep(v.c % q, p, e)
        if rb.alpha <= rc.alpha:
            delta = rb.alpha
            comp = (
                pow(rb.unit, -1, q),
                (-rc.unit * p ** (rc.alpha - rb.alpha)) % q,
                0,
                rb.unit % q,
            )
        else:
            delta = rc.alpha
            comp = (
                0,
                (-rc.unit) % q,
                pow(rc.unit, -1, q),
                (rb.unit * p ** (rb.alpha - rc.alpha)) % q,
            )
        for slot, value in zip(entries, comp):
            slot.append(value)
        target.append(p**delta % q)
    a11, a12, a21, a22 = (crt_combine(tuple(slot), m) for slot in entries)
    mat = Mat2(a11, a12, a21, a22, m)
    image = Vec2(crt_combine(tuple(target), m), 0, m)
    return mat, image


def perp_cardinality(v: Vec2) -> int:
    """|{w : form(v, w) == 0}| = d * prod p_k^delta_k, without enumeration."""
    n = v.modulus.d
    for (p, _), delta in zip(v.modulus.factors, degree(v)):
        n *= p**delta
    return n


def perp_set(v: Vec2) -> set[Vec2]:
    """All vectors orthogonal to v under the form, by enumeration."""
    m = v.modulus
    if m.d > PERP_ENUMERATION_CAP:
        raise BudgetExceededError("perp-set enumeration", m.d, PERP_ENUMERATION_CAP)
    mask = kernels.perp_mask(m.d, v.b, v.c)
    return {Vec2(x, y, m) for x, y in kernels.iter_mask(mask, m.d)}
