"""Explicit unitary matrices for the shift/clock pair, as an independent check.

Everything else in the package manipulates exponent triples; this module
realizes the operators as honest d x d complex matrices and re-derives the
algebra numerically, so the exponent arithmetic and the matrix arithmetic
validate each other.  All comparisons are Frobenius-norm distances against a
fixed tolerance -- the entries are roots of unity, so correct identities sit
at rounding error and wrong ones are O(1) away.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BudgetExceededError
from .pauli import PauliOp, inverse, multiply
from .ring import factorize

DEFAULT_TOLERANCE = 1e-10
MATRIX_DIM_CAP = 64
PAIR_SWEEP_CAP = 16


def _check_dim(d: int, cap: int, what: str) -> None:
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    if d > cap:
        raise BudgetExceededError(what, d, cap)


def build_shift(d: int) -> np.ndarray:
    """X with X|s> = |s+1 mod d>."""
    _check_dim(d, MATRIX_DIM_CAP, "shift-matrix construction")
    m = np.zeros((d, d), dtype=np.complex128)
    cols = np.arange(d)
    m[(cols + 1) % d, cols] = 1.0
    return m


def build_clock(d: int) -> np.ndarray:
    """Z = diag(1, omega, ..., omega^(d-1)) with omega = exp(2 pi i / d)."""
    _check_dim(d, MATRIX_DIM_CAP, "clock-matrix construction")
    return np.diag(np.exp(2j * np.pi * np.arange(d) / d))


def op_to_matrix(g: PauliOp) -> np.ndarray:
    """omega^a X^b Z^c built entry-wise: column s holds omega^(a + c*s) at row s+b."""
    d = g.modulus.d
    _check_dim(d, MATRIX_DIM_CAP, "operator-matrix construction")
    cols = np.arange(d)
    m = np.zeros((d, d), dtype=np.complex128)
    m[(cols + g.b) % d, cols] = np.exp(2j * np.pi * ((g.a + g.c * cols) % d) / d)
    return m


@dataclass
class OracleReport:
    """Outcome of the numeric sweep for one dimension."""

    d: int
    tolerance: float
    xz_relation_ok: bool = True
    pairs_checked: int = 0
    commuting_pairs: int = 0
    commutator_failures: int = 0
    equivalence_failures: int = 0
    product_samples: int = 0
    product_failures: int = 0
    inverse_failures: int = 0
    max_deviation: float = 0.0
    first_failure: str | None = field(default=None)

    @property
    def ok(self) -> bool:
        return (
            self.xz_relation_ok
            and self.commutator_failures == 0
            and self.equivalence_failures == 0
            and self.product_failures == 0
            and self.inverse_failures == 0
        )

    def _note(self, message: str) -> None:
        if self.first_failure is None:
            self.first_failure = message


def verify_identities(
    d: int,
    product_samples: int = 200,
    tolerance: float = DEFAULT_TOLERANCE,
    seed: int = 0,
) -> OracleReport:
    """Numerically re-derive the commutation algebra for every vector pair.

    Checks, in matrix arithmetic:
      * omega X Z == Z X;
      * the literal commutator W W' W^-1 W'^-1 equals omega^form(v, v') I
        for all d^4 vector pairs (phases are central, so a == 0
        representatives cover the whole group; inverses are conjugate
        transposes since the matrices are unitary);
      * matrix commutation (W W' == W' W) holds exactly when the form
        vanishes, and the commuting pairs are counted;
      * the product rule and the inverse formula on random exponent triples.
    """
    _check_dim(d, PAIR_SWEEP_CAP, "pairwise matrix sweep")
    m = factorize(d)
    report = OracleReport(d=d, tolerance=tolerance)

    shift = build_shift(d)
    clock = build_clock(d)
    omega = np.exp(2j * np.pi / d)
    dev = np.linalg.norm(omega * shift @ clock - clock @ shift)
    report.max_deviation = float(dev)
    if dev > tolerance:
        report.xz_relation_ok = False
        report._note(f"omega X Z differs from Z X by {dev:.3e}")

    n = d * d
    bs = np.arange(n) // d
    cs = np.arange(n) % d
    stack = np.stack([op_to_matrix(PauliOp(0, int(b), int(c), m)) for b, c in zip(bs, cs)])
    dagger = stack.conj().transpose(0, 2, 1)
    eye = np.eye(d, dtype=np.complex128)
    omega_pow = np.exp(2j * np.pi * np.arange(d) / d)
    # form(v_i, v_j) = c_i * b_j - c_j * b_i mod d, row i against all j
    for i in range(n):
        left = stack[i] @ stack
        right = stack @ stack[i]
        comm = left @ dagger[i] @ dagger
        f = (cs[i] * bs - cs * bs[i]) % d
        target = omega_pow[f][:, None, None] * eye
        dev_comm = np.linalg.norm((comm - target).reshape(n, -1), axis=1)
        dev_swap = np.linalg.norm((left - right).reshape(n, -1), axis=1)
        report.pairs_checked += n
        report.max_deviation = max(report.max_deviation, float(dev_comm.max()))
        bad = np.nonzero(dev_comm > tolerance)[0]
        if bad.size:
            report.commutator_failures += int(bad.size)
            j = int(bad[0])
            report._note(
                f"commutator phase off for v=({bs[i]},{cs[i]}), w=({bs[j]},{cs[j]})"
            )
        matrix_commutes = dev_swap <= tolerance
        report.commuting_pairs += int(matrix_commutes.sum())
        form_zero = f == 0
        disagree = np.nonzero(matrix_commutes != form_zero)[0]
        if disagree.size:
            report.equivalence_failures += int(disagree.size)
            j = int(disagree[0])
            report._note(
                f"commutation/form disagree for v=({bs[i]},{cs[i]}), w=({bs[j]},{cs[j]})"
            )

    rng = np.random.default_rng(seed)
    for _ in range(product_samples):
        g = PauliOp(*(int(x) for x in rng.integers(0, d, size=3)), m)
        h = PauliOp(*(int(x) for x in rng.integers(0, d, size=3)), m)
        lhs = op_to_matrix(multiply(g, h))
        rhs = op_to_matrix(g) @ op_to_matrix(h)
        report.product_samples += 1
        dev = float(np.linalg.norm(lhs - rhs))
        report.max_deviation = max(report.max_deviation, dev)
        if dev > tolerance:
            report.product_failures += 1
            report._note(f"product rule off for {g} * {h}")
        inv_dev = float(np.linalg.norm(op_to_matrix(inverse(g)) - op_to_matrix(g).conj().T))
        report.max_deviation = max(report.max_deviation, inv_dev)
        if inv_dev > tolerance:
            report.inverse_failures += 1
            report._note(f"inverse formula off for {g}")
    return report
