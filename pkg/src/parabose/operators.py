"""Parity-graded matrices and the spaces they act on.

A :class:`GradedOperator` is a dense complex square matrix together with a
parity bit: 0 (even) operators preserve the Z2-grading of the space, 1 (odd)
operators flip it.  Row index = output basis vector, column index = input.

A :class:`Space` is just a basis-parity assignment; Fock modules use
parity(n) = n mod 2 with an even vacuum.
"""

from dataclasses import dataclass

import numpy as np

from .errors import QAlgebraError


@dataclass(frozen=True)
class Space:
    """A finite graded vector space: the parity bit of each basis vector."""

    parity: tuple

    @property
    def dim(self) -> int:
        return len(self.parity)

    def parity_vector(self) -> np.ndarray:
        return np.array(self.parity, dtype=np.int64)

    @staticmethod
    def fock(dim: int) -> "Space":
        """The graded space of a Fock basis |0..dim-1>, parity n mod 2."""
        return Space(tuple(n & 1 for n in range(dim)))


@dataclass(frozen=True, eq=False)
class GradedOperator:
    """A square complex matrix carrying a parity bit."""

    matrix: np.ndarray
    parity: int

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise QAlgebraError("not-square", f"operator matrix must be square, got shape {m.shape}")
        if self.parity not in (0, 1):
            raise QAlgebraError("bad-parity", f"parity must be 0 or 1, got {self.parity!r}")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __matmul__(self, other):
        if isinstance(other, GradedOperator):
            return GradedOperator(self.matrix @ other.matrix, (self.parity + other.parity) % 2)
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, GradedOperator):
            if self.parity != other.parity:
                raise QAlgebraError("parity-mismatch", "cannot add operators of different parity")
            return GradedOperator(self.matrix + other.matrix, self.parity)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, GradedOperator):
            if self.parity != other.parity:
                raise QAlgebraError("parity-mismatch", "cannot subtract operators of different parity")
            return GradedOperator(self.matrix - other.matrix, self.parity)
        return NotImplemented

    def __mul__(self, scalar):
        return GradedOperator(self.matrix * complex(scalar), self.parity)

    __rmul__ = __mul__

    def __neg__(self):
        return GradedOperator(-self.matrix, self.parity)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise QAlgebraError("bad-power", f"operator power must be a nonnegative integer, got {n!r}")
        return GradedOperator(np.linalg.matrix_power(self.matrix, n), (self.parity * n) % 2)

    @staticmethod
    def identity(dim: int) -> "GradedOperator":
        return GradedOperator(np.eye(dim, dtype=complex), 0)


def frobenius(matrix) -> float:
    return float(np.linalg.norm(np.asarray(matrix)))


def rel_residual(lhs, rhs) -> float:
    """||lhs - rhs||_F / (1 + ||rhs||_F), for identities written lhs = rhs."""
    lhs = lhs.matrix if isinstance(lhs, GradedOperator) else np.asarray(lhs)
    rhs = rhs.matrix if isinstance(rhs, GradedOperator) else np.asarray(rhs)
    return frobenius(lhs - rhs) / (1.0 + frobenius(rhs))


def scaled_residual(lhs, rhs) -> float:
    """||lhs - rhs||_F / max(1, ||lhs||_F), for compound products."""
    lhs = lhs.matrix if isinstance(lhs, GradedOperator) else np.asarray(lhs)
    rhs = rhs.matrix if isinstance(rhs, GradedOperator) else np.asarray(rhs)
    return frobenius(lhs - rhs) / max(1.0, frobenius(lhs))
