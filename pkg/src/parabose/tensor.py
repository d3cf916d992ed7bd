"""Graded tensor calculus: Koszul-signed products, superpermutations,
coproducts, and leg embeddings.

Sign convention (fixed package-wide): (A (x) B)(v (x) w) =
(-1)^(parity(B) * parity(v)) Av (x) Bw.  This is the unique convention under
which the truncated universal R-matrix series reproduces the explicit
basis-action formula, including its sign; the equivalence is exercised by
the test suite, so the convention is self-validating.

Flat indices are lexicographic throughout: index(l1, l2) = l1*dim2 + l2 and
so on for more factors.
"""

from dataclasses import dataclass

import numpy as np

from .errors import QAlgebraError
from .operators import GradedOperator, Space, rel_residual
from .roots import qbinom


@dataclass(frozen=True)
class TensorSpace:
    """An ordered tensor product of graded factor spaces."""

    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def dims(self) -> tuple:
        return tuple(f.dim for f in self.factors)

    @property
    def dim(self) -> int:
        out = 1
        for d in self.dims:
            out *= d
        return out

    def flat(self) -> Space:
        """The flattened graded space with lexicographic basis order."""
        par = np.zeros(1, dtype=np.int64)
        for f in self.factors:
            par = (par[:, None] + f.parity_vector()[None, :]).reshape(-1) % 2
        return Space(tuple(int(b) for b in par))

    def parity_of_index(self, flat_index: int) -> int:
        bit = 0
        rem = flat_index
        for d, f in zip(reversed(self.dims), reversed(self.factors)):
            rem, l = divmod(rem, d)
            bit ^= f.parity[l]
        return bit


def tensor_space(*modules_or_spaces) -> TensorSpace:
    """Build a TensorSpace from modules (anything with .space) or Spaces."""
    factors = tuple(x if isinstance(x, Space) else x.space for x in modules_or_spaces)
    return TensorSpace(factors)


def graded_kron(A: GradedOperator, B: GradedOperator, left: Space, right: Space) -> GradedOperator:
    """Koszul-signed Kronecker product of A on `left` with B on `right`.

    Matrix entries: M[(i',j'),(i,j)] = (-1)^(parity(B)*parity_left(i)) A[i',i] B[j',j].
    For even B this is the ordinary Kronecker product.
    """
    if A.dim != left.dim:
        raise QAlgebraError("dim-mismatch", f"left operator is {A.dim}-dim but its space is {left.dim}-dim")
    if B.dim != right.dim:
        raise QAlgebraError("dim-mismatch", f"right operator is {B.dim}-dim but its space is {right.dim}-dim")
    M = np.kron(A.matrix, B.matrix)
    if B.parity:
        col_sign = np.repeat(1.0 - 2.0 * left.parity_vector(), right.dim)
        M = M * col_sign[None, :]
    return GradedOperator(M, (A.parity + B.parity) % 2)


def leg_swap(space: TensorSpace, i: int, j: int):
    """Superpermutation matrix swapping legs i and j (0-based).

    Returns (matrix, swapped_space).  The sign for moving v_i past v_j and
    everything between is (-1)^(p_i p_j + (p_i + p_j) * sum of in-between
    parities).  Works between spaces of unequal leg dimensions; when
    dims[i] == dims[j] the result is an endomorphism and P^2 = 1.
    """
    n = len(space.factors)
    if not (0 <= i < n and 0 <= j < n) or i == j:
        raise QAlgebraError("bad-leg", f"invalid leg pair ({i}, {j}) for {n} factors")
    if i > j:
        i, j = j, i
    dims = space.dims
    dim = space.dim
    src = np.arange(dim)
    multi = np.array(np.unravel_index(src, dims))
    par = np.array([space.factors[l].parity_vector()[multi[l]] for l in range(n)])

    between = par[i + 1 : j].sum(axis=0) if j > i + 1 else np.zeros(dim, dtype=np.int64)
    expo = par[i] * par[j] + (par[i] + par[j]) * between
    sign = 1.0 - 2.0 * (expo % 2)

    new_factors = list(space.factors)
    new_factors[i], new_factors[j] = new_factors[j], new_factors[i]
    new_space = TensorSpace(tuple(new_factors))
    tgt_multi = multi.copy()
    tgt_multi[[i, j]] = multi[[j, i]]
    tgt = np.ravel_multi_index(tuple(tgt_multi), new_space.dims)

    M = np.zeros((dim, dim), dtype=complex)
    M[tgt, src] = sign
    return M, new_space


def super_perm(space: TensorSpace, i: int, j: int) -> GradedOperator:
    """The superpermutation endomorphism swapping equal-dimension legs i, j."""
    if space.dims[i] != space.dims[j]:
        raise QAlgebraError(
            "dim-mismatch",
            f"legs {i} and {j} have dims {space.dims[i]} != {space.dims[j]}; use leg_swap for the between-spaces flip",
        )
    M, _ = leg_swap(space, i, j)
    return GradedOperator(M, 0)


def embed_at_leg(op: GradedOperator, space: TensorSpace, i: int) -> GradedOperator:
    """Embed an operator covering legs i, i+1, ... into the full space.

    The number of legs covered is inferred from op.dim; identity acts on all
    other legs, with Koszul signs handled by the graded product (odd ops
    pick up signs against the legs to their left).
    """
    dims = space.dims
    n = len(dims)
    if not 0 <= i < n:
        raise QAlgebraError("bad-leg", f"leg {i} out of range for {n} factors")
    covered = 1
    j = i
    while j < n and covered < op.dim:
        covered *= dims[j]
        j += 1
    if covered != op.dim:
        raise QAlgebraError("dim-mismatch", f"operator of dim {op.dim} does not cover whole legs starting at {i}")

    left = TensorSpace(space.factors[:i]).flat()
    mid = TensorSpace(space.factors[i:j]).flat()
    right = TensorSpace(space.factors[j:]).flat()
    out = graded_kron(GradedOperator.identity(left.dim), op, left, mid)
    combined = Space(tuple((a + b) % 2 for a in left.parity for b in mid.parity))
    return graded_kron(out, GradedOperator.identity(right.dim), combined, right)


def coproduct_rep(gen: str, mod1, mod2) -> GradedOperator:
    """(rho1 (x) rho2) of the coproduct of a generator on mod1 (x) mod2.

    Delta(H)  = H (x) 1 + 1 (x) H
    Delta(a+) = a+ (x) 1 + q^-H (x) a+
    Delta(a-) = a- (x) q^H + 1 (x) a-
    """
    s1, s2 = mod1.space, mod2.space
    I1 = GradedOperator.identity(s1.dim)
    I2 = GradedOperator.identity(s2.dim)
    if gen == "H":
        return graded_kron(mod1.H, I2, s1, s2) + graded_kron(I1, mod2.H, s1, s2)
    if gen == "a+":
        return graded_kron(mod1.a_plus, I2, s1, s2) + graded_kron(mod1.K_inv, mod2.a_plus, s1, s2)
    if gen == "a-":
        return graded_kron(mod1.a_minus, mod2.K, s1, s2) + graded_kron(I1, mod2.a_minus, s1, s2)
    raise QAlgebraError("unknown-generator", f"generator must be 'H', 'a+' or 'a-', got {gen!r}")


def opposite_coproduct_rep(gen: str, mod1, mod2) -> GradedOperator:
    """The opposite coproduct, written out explicitly.

    Applying the super-flip sigma(a (x) b) = (-1)^(deg a * deg b) b (x) a to
    the coproduct gives (all signs trivial, each term pairing odd with even):

    Delta_op(H)  = Delta(H)
    Delta_op(a+) = 1 (x) a+ + a+ (x) q^-H
    Delta_op(a-) = q^H (x) a- + a- (x) 1

    Explicit formulas rather than flip conjugation so unequal factor modules
    work.
    """
    s1, s2 = mod1.space, mod2.space
    I1 = GradedOperator.identity(s1.dim)
    I2 = GradedOperator.identity(s2.dim)
    if gen == "H":
        return coproduct_rep("H", mod1, mod2)
    if gen == "a+":
        return graded_kron(I1, mod2.a_plus, s1, s2) + graded_kron(mod1.a_plus, mod2.K_inv, s1, s2)
    if gen == "a-":
        return graded_kron(mod1.K, mod2.a_minus, s1, s2) + graded_kron(mod1.a_minus, I2, s1, s2)
    raise QAlgebraError("unknown-generator", f"generator must be 'H', 'a+' or 'a-', got {gen!r}")


GENERATORS = ("H", "a+", "a-")


def qbinom_expansion_residual(mod1, mod2, N: int) -> float:
    """Residual of the q-binomial expansion of (A + B)^N.

    A = 1 (x) a-, B = a- (x) K anticommute up to q^2 (AB + q^2 BA = 0,
    asserted first); then

        (A+B)^N = sum_n q^(-n(N-n)) {N brace n}_q A^n B^(N-n).

    At N = 2k on class I modules both sides collapse to the coproduct of the
    central element (a-)^2k, which represents as zero.
    """
    root = _common_root(mod1, mod2)
    s1, s2 = mod1.space, mod2.space
    A = graded_kron(GradedOperator.identity(s1.dim), mod2.a_minus, s1, s2)
    B = graded_kron(mod1.a_minus, mod2.K, s1, s2)
    q2 = root.power(2)
    pre = rel_residual(A @ B, -q2 * (B @ A))
    if pre > 1e-10:
        raise QAlgebraError(
            "anticommutation-precondition",
            f"A = 1(x)a-, B = a-(x)K do not satisfy AB + q^2 BA = 0 (residual {pre:.3e})",
            residual=pre,
        )
    lhs = ((A + B) ** N).matrix
    rhs = np.zeros_like(lhs)
    for n in range(N + 1):
        coeff = root.power(-n * (N - n)) * qbinom(N, n, root)
        rhs += coeff * ((A**n) @ (B ** (N - n))).matrix
    return float(np.linalg.norm(lhs - rhs) / (1.0 + np.linalg.norm(lhs)))


def cocommutativity_obstruction(rho1_vals, rho2_vals):
    """Both sides of the scalar consistency condition for an intertwiner.

    Inputs are (x_minus, z) central values for two irreps; returns
    (lhs, rhs) = (x2 + z2*x1, x1 + z1*x2).  Equality is necessary for an
    invertible intertwiner between the coproduct and its opposite to exist;
    unequal cyclic-type values demonstrate the obstruction.  A diagnostic,
    not an assertion.
    """
    x1, z1 = (complex(v) for v in rho1_vals)
    x2, z2 = (complex(v) for v in rho2_vals)
    lhs = x2 + z2 * x1
    rhs = x1 + z1 * x2
    return lhs, rhs


def _common_root(*mods):
    roots = {m.root for m in mods}
    if None in roots:
        raise QAlgebraError("not-admissible", "operation requires admissible-root modules")
    if len(roots) != 1:
        raise QAlgebraError("root-mismatch", f"modules live over different roots: {sorted((r.k, r.m) for r in roots)}")
    return next(iter(roots))
