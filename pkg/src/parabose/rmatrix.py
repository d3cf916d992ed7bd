"""R-matrices on tensor products of Fock modules, by two independent routes.

Route 1 (explicit): the closed-form basis action.  The column at |l1> (x) |l2>
is

    q^((2l1+p1)(2l2+p2)/2) * sum_{n=0}^{min(L1-l1, l2)}
        (-1)^(n(n+2l1+1)/2) * (q - q^-1)^n / (n)_a! *
        prod_{i=0}^{n-1} {l2-i;0}_q {l2-1-i;p2}_q   at row |l1+n> (x) |l2-n>

with a = -q^-2.  Route 2 (universal): the truncated operator series

    sum_n (-1)^(n(n+1)/2) (q - q^-1)^n / (n)_a! [(a+)^n (x) (a-)^n] q^(H (x) H / 2)

evaluated through the graded Kronecker product.  The two must agree
entrywise; that equivalence is the package's central self-check.

Leg operators R12/R13/R23 on triple products are likewise built two ways:
directly from the printed basis actions, and from the 2-site R-matrix via
superpermutations.
"""

import enum
from dataclasses import dataclass

import numpy as np

from .errors import QAlgebraError
from .fock import FockModule, ModuleSpec
from .operators import GradedOperator
from .roots import brace, qpoch_fact
from .tensor import (
    GENERATORS,
    TensorSpace,
    coproduct_rep,
    graded_kron,
    leg_swap,
    opposite_coproduct_rep,
    tensor_space,
)


class Construction(enum.Enum):
    EXPLICIT = "explicit"
    UNIVERSAL = "universal"


@dataclass(frozen=True, eq=False)
class RMatrix:
    """A dense R-matrix on the lexicographic basis of mod1 (x) mod2."""

    mod1: ModuleSpec
    mod2: ModuleSpec
    matrix: np.ndarray
    construction: Construction

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def as_operator(self) -> GradedOperator:
        return GradedOperator(self.matrix, 0)


def _require_same_root(*mods):
    roots = []
    for m in mods:
        if m.root is None:
            raise QAlgebraError("not-admissible", "R-matrices require admissible-root modules")
        roots.append(m.root)
    first = roots[0]
    for r in roots[1:]:
        if r != first:
            raise QAlgebraError(
                "root-mismatch", f"modules live over different roots: (k,m)={(first.k, first.m)} vs {(r.k, r.m)}"
            )
    return first


def _poch_table(root, nmax):
    """(n)_a! for n = 0..nmax at a = -q^-2; all needed values are nonzero."""
    a = -root.power(-2)
    return [qpoch_fact(n, a) for n in range(nmax + 1)]


def _lowering_chain(root, p2, l2, nmax):
    """chain[n] = prod_{i=0}^{n-1} {l2-i;0}_q {l2-1-i;p2}_q (the (a-)^n coefficients)."""
    chain = [1.0 + 0j]
    for n in range(1, nmax + 1):
        i = n - 1
        chain.append(chain[-1] * brace(l2 - i, 0, root) * brace(l2 - 1 - i, p2, root))
    return chain


def _half_sign(e2: int) -> float:
    """(-1)^(e2/2) for an even integer e2."""
    return -1.0 if (e2 // 2) % 2 else 1.0


def r_explicit(mod1: FockModule, mod2: FockModule) -> RMatrix:
    """The R-matrix from the closed-form basis action."""
    root = _require_same_root(mod1, mod2)
    L1, L2 = mod1.L, mod2.L
    p1, p2 = mod1.p, mod2.p
    d1, d2 = mod1.dim, mod2.dim
    qdiff = root.power(1) - root.power(-1)
    poch = _poch_table(root, min(L1, L2))

    R = np.zeros((d1 * d2, d1 * d2), dtype=complex)
    for l2 in range(d2):
        chains = _lowering_chain(root, p2, l2, l2)
        for l1 in range(d1):
            col = l1 * d2 + l2
            phase = root.power((2 * l1 + p1) * (2 * l2 + p2) / 2)
            for n in range(min(L1 - l1, l2) + 1):
                sign = _half_sign(n * (n + 2 * l1 + 1))
                row = (l1 + n) * d2 + (l2 - n)
                R[row, col] = phase * sign * (qdiff**n / poch[n]) * chains[n]
    return RMatrix(mod1.spec, mod2.spec, R, Construction.EXPLICIT)


def r_universal(mod1: FockModule, mod2: FockModule) -> RMatrix:
    """The R-matrix from the truncated universal series.

    The series stops at n = min(L1, L2); the next term vanishes identically
    by nilpotency of a+- on these modules, which is asserted rather than
    assumed (its scalar coefficient is singular at that order, so the
    operator part must die first).
    """
    root = _require_same_root(mod1, mod2)
    L1, L2 = mod1.L, mod2.L
    p1, p2 = mod1.p, mod2.p
    d1, d2 = mod1.dim, mod2.dim
    s1, s2 = mod1.space, mod2.space
    qdiff = root.power(1) - root.power(-1)
    nmax = min(L1, L2)
    poch = _poch_table(root, nmax)

    total = np.zeros((d1 * d2, d1 * d2), dtype=complex)
    for n in range(nmax + 1):
        term = graded_kron(mod1.a_plus**n, mod2.a_minus**n, s1, s2).matrix
        total += _half_sign(n * (n + 1)) * (qdiff**n / poch[n]) * term
    tail = graded_kron(mod1.a_plus ** (nmax + 1), mod2.a_minus ** (nmax + 1), s1, s2).matrix
    if np.count_nonzero(tail):
        raise QAlgebraError("truncation-unsafe", f"series term n = {nmax + 1} did not vanish by nilpotency")

    weights = np.empty((d1 * d2,), dtype=complex)
    for l1 in range(d1):
        for l2 in range(d2):
            weights[l1 * d2 + l2] = root.power((2 * l1 + p1) * (2 * l2 + p2) / 2)
    R = total * weights[None, :]
    return RMatrix(mod1.spec, mod2.spec, R, Construction.UNIVERSAL)


def r_check(mod: FockModule) -> GradedOperator:
    """The braid-type intertwiner: superpermutation composed with R on W (x) W."""
    P, _ = leg_swap(tensor_space(mod, mod), 0, 1)
    return GradedOperator(P @ r_explicit(mod, mod).matrix, 0)


_PAIRS = ("12", "13", "23")


def r_legs(mod1: FockModule, mod2: FockModule, mod3: FockModule, pair: str) -> GradedOperator:
    """Leg operator on mod1 (x) mod2 (x) mod3 from its printed basis action.

    The active pair carries the 2-site formula; the spectator leg index is
    untouched.  For pair "13" the sign acquires the middle leg's parity:
    (-1)^(n(n + 2 l1 + 2 l2 + 1)/2).
    """
    root = _require_same_root(mod1, mod2, mod3)
    if pair not in _PAIRS:
        raise QAlgebraError("bad-pair", f"pair must be one of {_PAIRS}, got {pair!r}")
    d1, d2, d3 = mod1.dim, mod2.dim, mod3.dim
    dims = (d1, d2, d3)
    dim = d1 * d2 * d3
    qdiff = root.power(1) - root.power(-1)

    if pair == "12":
        acting, lowered = mod1, mod2
    elif pair == "13":
        acting, lowered = mod1, mod3
    else:
        acting, lowered = mod2, mod3
    poch = _poch_table(root, min(acting.L, lowered.L))
    chain_table = [_lowering_chain(root, lowered.p, l, l) for l in range(lowered.dim)]

    R = np.zeros((dim, dim), dtype=complex)
    for l1 in range(d1):
        for l2 in range(d2):
            for l3 in range(d3):
                col = (l1 * d2 + l2) * d3 + l3
                if pair == "12":
                    raised_l, lowered_l = l1, l2
                    phase = root.power((2 * l1 + mod1.p) * (2 * l2 + mod2.p) / 2)
                elif pair == "13":
                    raised_l, lowered_l = l1, l3
                    phase = root.power((2 * l1 + mod1.p) * (2 * l3 + mod3.p) / 2)
                else:
                    raised_l, lowered_l = l2, l3
                    phase = root.power((2 * l2 + mod2.p) * (2 * l3 + mod3.p) / 2)
                chains = chain_table[lowered_l]
                for n in range(min(acting.L - raised_l, lowered_l) + 1):
                    if pair == "12":
                        e = n * (n + 2 * l1 + 1)
                        out = ((l1 + n) * d2 + (l2 - n)) * d3 + l3
                    elif pair == "13":
                        e = n * (n + 2 * l1 + 2 * l2 + 1)
                        out = ((l1 + n) * d2 + l2) * d3 + (l3 - n)
                    else:
                        e = n * (n + 2 * l2 + 1)
                        out = (l1 * d2 + (l2 + n)) * d3 + (l3 - n)
                    R[out, col] = phase * _half_sign(e) * (qdiff**n / poch[n]) * chains[n]
    return GradedOperator(R, 0)


def r_legs_via_perm(mod1: FockModule, mod2: FockModule, mod3: FockModule, pair: str) -> GradedOperator:
    """Leg operator assembled from the 2-site R-matrix and superpermutations.

    R12 = R (x) 1,  R23 = 1 (x) R,  R13 = P23 (R^13 (x) 1) P23, where the
    inner product lives on mod1 (x) mod3 (x) mod2 and P23 is the (possibly
    between-spaces) superpermutation of the last two legs.
    """
    _require_same_root(mod1, mod2, mod3)
    if pair not in _PAIRS:
        raise QAlgebraError("bad-pair", f"pair must be one of {_PAIRS}, got {pair!r}")
    s1, s2, s3 = mod1.space, mod2.space, mod3.space
    if pair == "12":
        R = r_explicit(mod1, mod2).as_operator()
        pair_space = TensorSpace((s1, s2)).flat()
        return graded_kron(R, GradedOperator.identity(s3.dim), pair_space, s3)
    if pair == "23":
        R = r_explicit(mod2, mod3).as_operator()
        pair_space = TensorSpace((s2, s3)).flat()
        return graded_kron(GradedOperator.identity(s1.dim), R, s1, pair_space)
    # pair "13": flip legs 2,3, act on the now-adjacent (1,3), flip back.
    there, swapped = leg_swap(tensor_space(mod1, mod2, mod3), 1, 2)
    back, _ = leg_swap(swapped, 1, 2)
    R = r_explicit(mod1, mod3).as_operator()
    pair_space = TensorSpace((s1, s3)).flat()
    inner = graded_kron(R, GradedOperator.identity(s2.dim), pair_space, s2)
    return GradedOperator(back @ inner.matrix @ there, 0)


def qybe_residual(mod1: FockModule, mod2: FockModule, mod3: FockModule) -> float:
    """Normalized residual of R12 R13 R23 = R23 R13 R12 on the triple product."""
    R12 = r_legs_via_perm(mod1, mod2, mod3, "12").matrix
    R13 = r_legs_via_perm(mod1, mod2, mod3, "13").matrix
    R23 = r_legs_via_perm(mod1, mod2, mod3, "23").matrix
    lhs = R12 @ R13 @ R23
    rhs = R23 @ R13 @ R12
    return float(np.linalg.norm(lhs - rhs) / max(1.0, np.linalg.norm(lhs)))


def intertwine_residual(mod1: FockModule, mod2: FockModule) -> float:
    """Max over generators of the R Delta(g) = Delta_op(g) R residual."""
    R = r_explicit(mod1, mod2).matrix
    worst = 0.0
    for gen in GENERATORS:
        lhs = R @ coproduct_rep(gen, mod1, mod2).matrix
        rhs = opposite_coproduct_rep(gen, mod1, mod2).matrix @ R
        worst = max(worst, float(np.linalg.norm(lhs - rhs) / max(1.0, np.linalg.norm(lhs))))
    return worst


def weight_conservation_residual(mod1: FockModule, mod2: FockModule) -> float:
    """Residual of [R, Delta(H)] = 0 (R preserves the total weight l1 + l2)."""
    R = r_explicit(mod1, mod2).matrix
    D = coproduct_rep("H", mod1, mod2).matrix
    lhs = R @ D
    return float(np.linalg.norm(lhs - D @ R) / max(1.0, np.linalg.norm(lhs)))


def support_pattern_violation(rmat: RMatrix, mod1: FockModule, mod2: FockModule) -> float:
    """Largest |entry| outside the allowed support |l1+n> (x) |l2-n>."""
    d1, d2 = mod1.dim, mod2.dim
    worst = 0.0
    for l1 in range(d1):
        for l2 in range(d2):
            col = l1 * d2 + l2
            allowed = {((l1 + n) * d2 + (l2 - n)) for n in range(min(mod1.L - l1, l2) + 1)}
            for row in range(d1 * d2):
                if row not in allowed:
                    worst = max(worst, abs(rmat.matrix[row, col]))
    return worst
