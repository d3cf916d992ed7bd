"""Braid-group generators on N-fold tensor powers of a single Fock module.

sigma_i = 1 (x) ... (x) R-check (x) ... (x) 1 with R-check on legs (i, i+1).
The generators satisfy the braid relations; the N = 2 generator commutes
with the coproduct of every algebra generator.
"""

from dataclasses import dataclass

import numpy as np

from .errors import QAlgebraError, SizeCapError
from .fock import FockModule
from .operators import GradedOperator
from .rmatrix import r_check
from .tensor import GENERATORS, TensorSpace, coproduct_rep, embed_at_leg

DEFAULT_SIZE_CAP = 4096


@dataclass(frozen=True, eq=False)
class BraidRep:
    """N-1 braid generators acting on the N-fold power of one module."""

    module: FockModule
    N: int
    generators: tuple

    @property
    def dim(self) -> int:
        return self.generators[0].dim if self.generators else self.module.dim**self.N


def braid_generators(mod: FockModule, N: int, size_cap: int = DEFAULT_SIZE_CAP) -> BraidRep:
    """Build sigma_1..sigma_{N-1} by embedding R-check at each adjacent pair."""
    if N < 2:
        raise QAlgebraError("bad-power", f"braid group needs N >= 2 strands, got N = {N}")
    dim = mod.dim**N
    if dim > size_cap:
        raise SizeCapError("size-cap", f"(L+1)^N = {dim} exceeds the size cap {size_cap}")
    rc = r_check(mod)
    space = TensorSpace(tuple(mod.space for _ in range(N)))
    gens = tuple(embed_at_leg(rc, space, i) for i in range(N - 1))
    return BraidRep(module=mod, N=N, generators=gens)


def braid_relation_residual(rep: BraidRep):
    """(far_commutation, yang_baxter) residuals over all relation instances.

    far_commutation: sigma_i sigma_j = sigma_j sigma_i for |i - j| > 1;
    yang_baxter: sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i sigma_{i+1}.
    Both vacuous at N = 2 and reported as 0.
    """
    gens = [g.matrix for g in rep.generators]
    far = 0.0
    for i in range(len(gens)):
        for j in range(i + 2, len(gens)):
            lhs = gens[i] @ gens[j]
            rhs = gens[j] @ gens[i]
            far = max(far, float(np.linalg.norm(lhs - rhs) / max(1.0, np.linalg.norm(lhs))))
    yb = 0.0
    for i in range(len(gens) - 1):
        lhs = gens[i] @ gens[i + 1] @ gens[i]
        rhs = gens[i + 1] @ gens[i] @ gens[i + 1]
        yb = max(yb, float(np.linalg.norm(lhs - rhs) / max(1.0, np.linalg.norm(lhs))))
    return far, yb


def intertwiner_commutant_residual(rep: BraidRep) -> float:
    """Max over generators g of the [R-check, Delta(g)] = 0 residual (N = 2)."""
    if rep.N != 2:
        raise QAlgebraError("n-not-two", "the commutant statement is for N = 2 (iterated coproducts are out of scope)")
    rc = rep.generators[0].matrix
    mod = rep.module
    worst = 0.0
    for gen in GENERATORS:
        D = coproduct_rep(gen, mod, mod).matrix
        lhs = rc @ D
        rhs = D @ rc
        worst = max(worst, float(np.linalg.norm(lhs - rhs) / max(1.0, np.linalg.norm(lhs))))
    return worst
