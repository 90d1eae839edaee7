"""Exact arithmetic in Z_d and its prime-power components.

Everything downstream reduces questions about Z_d to its prime-power
components and reassembles the answers, so this module owns the
factorization, the unit tests for residues (in the algebraic sense), the
``u * p^alpha`` normal form, and the Chinese-remainder transforms.

Residues are always normalized to ``{0, ..., d-1}``; functions raise
``ValueError`` on out-of-range input rather than silently reducing, so that
normalization bugs surface at the call site.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import NonUnitError


@dataclass(frozen=True)
class Modulus:
    """A modulus d >= 2 together with its prime-power factorization.

    ``factors`` lists ``(prime, exponent)`` pairs with primes strictly
    ascending; their product is ``d``.  Instances come out of
    :func:`factorize`, which caches them, so equal moduli are usually the
    same object.
    """

    d: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"modulus must be >= 2, got {self.d}")
        prod = 1
        last_p = 0
        for p, e in self.factors:
            if p <= last_p or e < 1:
                raise ValueError(f"malformed factorization {self.factors!r}")
            prod *= p**e
            last_p = p
        if prod != self.d:
            raise ValueError(f"factorization {self.factors!r} does not multiply to {self.d}")

    @property
    def prime_powers(self) -> tuple[int, ...]:
        """The pairwise-coprime component moduli p_k ** eps_k."""
        return tuple(p**e for p, e in self.factors)

    @property
    def num_components(self) -> int:
        return len(self.factors)

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def describe(self) -> str:
        """Human-readable factorization, e.g. ``12 = 2^2 * 3``."""
        parts = [f"{p}^{e}" if e > 1 else f"{p}" for p, e in self.factors]
        return f"{self.d} = {' * '.join(parts)}"

    def __str__(self) -> str:
        return f"Z_{self.d}"


@dataclass(frozen=True)
class PowerRep:
    """Normal form ``a = unit * p^alpha`` of a residue modulo p^eps.

    For ``a = 0`` the convention is ``unit = 1`` and ``alpha = eps``: the
    exponent saturates at eps, and every statement downstream that branches
    on alpha treats ``alpha == eps`` as "a vanishes in this component".
    """

    unit: int
    alpha: int


@lru_cache(maxsize=None)
def factorize(d: int) -> Modulus:
    """Factor d by trial division and return the cached Modulus."""
    if d < 2:
        raise ValueError(f"modulus must be >= 2, got {d}")
    factors = []
    n = d
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return Modulus(d, tuple(factors))


def _check_range(a: int, d: int) -> None:
    if not 0 <= a < d:
        raise ValueError(f"residue {a} out of range for modulus {d}")


def is_unit(a: int, m: Modulus) -> bool:
    """Whether a is invertible modulo m.d."""
    _check_range(a, m.d)
    return math.gcd(a, m.d) == 1


def inverse(a: int, m: Modulus) -> int:
    """Multiplicative inverse of a modulo m.d; raises NonUnitError otherwise."""
    _check_range(a, m.d)
    if math.gcd(a, m.d) != 1:
        raise NonUnitError(a, m.d)
    return pow(a, -1, m.d)


def power_rep(a: int, p: int, eps: int) -> PowerRep:
    """Write ``a = u * p^alpha (mod p^eps)`` with u a unit and alpha minimal."""
    q = p**eps
    _check_range(a, q)
    if a == 0:
        return PowerRep(1, eps)
    alpha = 0
    while a % p == 0:
        a //= p
        alpha += 1
    return PowerRep(a, alpha)


def annihilator(alpha: int, p: int, eps: int) -> frozenset[int]:
    """All x mod p^eps with ``x * p^alpha == 0``: the multiples of p^(eps-alpha)."""
    if not 0 <= alpha <= eps:
        raise ValueError(f"alpha must lie in [0, {eps}], got {alpha}")
    q = p**eps
    step = p ** (eps - alpha)
    return frozenset(range(0, q, step))


def crt_split(x: int, m: Modulus) -> tuple[int, ...]:
    """Residues of x in each prime-power component of m."""
    _check_range(x, m.d)
    return tuple(x % q for q in m.prime_powers)


@lru_cache(maxsize=None)
def _crt_basis(m: Modulus) -> tuple[int, ...]:
    # e_k = 1 mod (p_k^eps_k) and 0 mod every other component
    basis = []
    for q in m.prime_powers:
        rest = m.d // q
        basis.append(rest * pow(rest, -1, q) % m.d)
    return tuple(basis)


def crt_combine(residues: tuple[int, ...], m: Modulus) -> int:
    """Inverse of crt_split: the unique x mod m.d with the given residues."""
    qs = m.prime_powers
    if len(residues) != len(qs):
        raise ValueError(f"expected {len(qs)} residues, got {len(residues)}")
    for r, q in zip(residues, qs):
        if not 0 <= r < q:
            raise ValueError(f"residue {r} out of range for component {q}")
    basis = _crt_basis(m)
    return sum(r * e for r, e in zip(residues, basis)) % m.d
