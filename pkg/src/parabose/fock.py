"""Finite-dimensional Fock modules W^L(p) at admissible roots of unity.

A module is classified by (root, order parameter p, group) into one of the
six groups Ia..IIc; the highest basis index L follows from the group.  The
generator matrices act on the basis |0>, ..., |L> as

    H |n> = (2n + p) |n>
    a- |n> = {n;0}_q {n-1;p}_q |n-1>
    a+ |n> = |n+1>   (n < L),   a+ |L> = 0

with K = q^H on the diagonal.  H and K are even, a+- are odd (basis parity
is n mod 2, vacuum even).

``build_truncated_generic`` provides the same matrices for a generic (non
root-of-unity) q on a truncated basis; those modules exist solely for the
q -> 1 para-Bose limit and deformed-boson checks and are flagged as such.
"""

import cmath
import enum
import math
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .errors import ClassificationError, QAlgebraError
from .operators import GradedOperator, Space, rel_residual
from .roots import AdmissibleRoot, RootClass, brace, qpow

# Tolerance for "p is an (even) integer" decisions in the classification
# arithmetic; p is user input, so exact-float equality would be too brittle.
INT_TOL = 1e-9


class Group(enum.Enum):
    """Representation groups: three per root class."""

    Ia = "Ia"
    Ib = "Ib"
    Ic = "Ic"
    IIa = "IIa"
    IIb = "IIb"
    IIc = "IIc"

    @property
    def root_class(self) -> RootClass:
        return RootClass.II if self.value.startswith("II") else RootClass.I


def _as_int(p: complex):
    """Return p as an integer if it is one (within INT_TOL), else None."""
    if abs(p.imag) > INT_TOL:
        return None
    r = round(p.real)
    return r if abs(p.real - r) <= INT_TOL else None


@dataclass(frozen=True)
class ModuleSpec:
    """A classified Fock module: root, order parameter, group, highest index."""

    root: AdmissibleRoot
    p: complex
    group: Group
    L: int
    indecomposable: bool = False

    @property
    def dim(self) -> int:
        return self.L + 1


def classify(root: AdmissibleRoot, p, group) -> ModuleSpec:
    """Resolve (root, p, group) to a ModuleSpec, computing the highest index L.

    Rejections (each with its own error code): group incompatible with the
    root class, p a negative even integer, Re(p) <= 0, p violating the
    group's arithmetic condition (integer for Ia, non-integer for Ib, even
    for IIa, non-even for IIb).  The indecomposable cases (Ic with integer p,
    IIc with even p) are flagged, not rejected.
    """
    if isinstance(group, str):
        try:
            group = Group(group)
        except ValueError:
            raise ClassificationError("unknown-group", f"unknown representation group {group!r}") from None
    p = complex(p)
    k = root.k

    n = _as_int(p)
    if n is not None and n < 0 and n % 2 == 0:
        raise ClassificationError("p-negative-even", f"p = {n} is a negative even integer; no Fock module exists")
    if p.real <= 0:
        raise ClassificationError("p-nonpositive", f"Re(p) must be positive, got p = {p}")
    if group.root_class != root.root_class:
        raise ClassificationError(
            "class-group-mismatch",
            f"group {group.value} requires class {group.root_class.value}, but (k={root.k}, m={root.m}) is class {root.root_class.value}",
        )

    indecomposable = False
    if group is Group.Ia:
        if n is not None:
            raise ClassificationError("p-integer", f"group Ia requires non-integer p, got p = {p}")
        L = 2 * k - 1
    elif group is Group.Ib:
        if n is None:
            raise ClassificationError("p-not-integer", f"group Ib requires integer p, got p = {p}")
        L = (n * (k - 1)) % (2 * k)
    elif group is Group.Ic:
        L = 2 * k - 1
        indecomposable = n is not None
    elif group is Group.IIa:
        if n is not None and n % 2 == 0:
            raise ClassificationError("p-even", f"group IIa requires p not an even integer, got p = {p}")
        L = k - 1
    elif group is Group.IIb:
        if n is None or n % 2 != 0:
            raise ClassificationError("p-not-even", f"group IIb requires even integer p, got p = {p}")
        L = (k - n) % k
    else:  # IIc
        L = k - 1
        indecomposable = n is not None and n % 2 == 0

    return ModuleSpec(root=root, p=p, group=group, L=L, indecomposable=indecomposable)


def canonical_p(root: AdmissibleRoot, p) -> complex:
    """The representative of p in the canonical strip 0 < Re(p) <= S.

    S = 4k in general; for the (k odd, m even) subclass the strip narrows to
    2k (m = 2 mod 4) or k (m = 0 mod 4).  Only the real part moves.
    """
    p = complex(p)
    S = 4 * root.k
    if root.k % 2 == 1 and root.m % 2 == 0:
        S = 2 * root.k if root.m % 4 == 2 else root.k
    r = math.fmod(p.real, S)
    if r <= 0:
        r += S
    return complex(r, p.imag)


@dataclass(frozen=True, eq=False)
class FockModule:
    """A built Fock module: generator matrices on the basis |0..L>."""

    spec: ModuleSpec | None
    p: complex
    L: int
    q: complex
    qlog: complex
    H: GradedOperator
    K: GradedOperator
    K_inv: GradedOperator
    a_plus: GradedOperator
    a_minus: GradedOperator
    truncated: bool = False
    parity: tuple = field(default=())

    @property
    def dim(self) -> int:
        return self.L + 1

    @property
    def root(self) -> AdmissibleRoot | None:
        return self.spec.root if self.spec is not None else None

    @property
    def space(self) -> Space:
        return Space(self.parity)

    def qpower(self, z) -> complex:
        """q^z with the module's pinned branch of log q."""
        return cmath.exp(complex(z) * self.qlog)


def _build_matrices(qlike, p, L):
    d = L + 1
    n = np.arange(d)
    h_diag = 2 * n + p
    H = GradedOperator(np.diag(h_diag.astype(complex)), 0)
    K = GradedOperator(np.diag([qpow(qlike, 2 * j + p) for j in range(d)]), 0)
    K_inv = GradedOperator(np.diag([qpow(qlike, -(2 * j + p)) for j in range(d)]), 0)
    ap = np.zeros((d, d), dtype=complex)
    for j in range(L):
        ap[j + 1, j] = 1.0
    am = np.zeros((d, d), dtype=complex)
    for j in range(1, d):
        am[j - 1, j] = brace(j, 0, qlike) * brace(j - 1, p, qlike)
    return H, K, K_inv, GradedOperator(ap, 1), GradedOperator(am, 1)


def build_module(spec: ModuleSpec) -> FockModule:
    """Populate the four generator matrices of W^L(p) for a classified spec."""
    root = spec.root
    H, K, K_inv, ap, am = _build_matrices(root, spec.p, spec.L)
    return FockModule(
        spec=spec,
        p=spec.p,
        L=spec.L,
        q=root.q,
        qlog=root.log,
        H=H,
        K=K,
        K_inv=K_inv,
        a_plus=ap,
        a_minus=am,
        parity=tuple(j & 1 for j in range(spec.L + 1)),
    )


def build_truncated_generic(q, p, size: int) -> FockModule:
    """The same matrices at a generic q, truncated to basis |0..size-1>.

    The boundary row is invalid (a+ truncation); interior checks must stay
    away from it.  q must not be a root of unity of order <= 4*size, which
    in particular excludes every admissible root of the same scale (use
    build_module for those).
    """
    if size < 2:
        raise QAlgebraError("size-too-small", f"truncated module needs size >= 2, got {size}")
    q = complex(q)
    p = complex(p)
    if abs(q) < 1e-12:
        raise QAlgebraError("q-zero", "q must be nonzero")
    w = q
    for j in range(1, 4 * size + 1):
        if abs(w - 1) < 1e-9:
            raise QAlgebraError(
                "q-on-root-set",
                f"q = {q:.6g} is (numerically) a root of unity of order {j} <= 4*size; use build_module on an admissible root instead",
            )
        w *= q
    L = size - 1
    H, K, K_inv, ap, am = _build_matrices(q, p, L)
    return FockModule(
        spec=None,
        p=p,
        L=L,
        q=q,
        qlog=cmath.log(q),
        H=H,
        K=K,
        K_inv=K_inv,
        a_plus=ap,
        a_minus=am,
        truncated=True,
        parity=tuple(j & 1 for j in range(size)),
    )


def cartan_function(mod: FockModule) -> GradedOperator:
    """(q^H - q^-H)/(q - q^-1) evaluated on the diagonal of H."""
    d = mod.dim
    den = mod.qpower(1) - mod.qpower(-1)
    vals = [(mod.qpower(2 * n + mod.p) - mod.qpower(-(2 * n + mod.p))) / den for n in range(d)]
    return GradedOperator(np.diag(vals), 0)


def defining_relation_residual(mod: FockModule) -> float:
    """Max normalized residual of the three defining relations.

    [H, a+] = 2 a+,  [H, a-] = -2 a-,  {a+, a-} = (q^H - q^-H)/(q - q^-1).
    """
    H, ap, am = mod.H, mod.a_plus, mod.a_minus
    r1 = rel_residual(H @ ap - ap @ H, 2 * ap)
    r2 = rel_residual(H @ am - am @ H, -2 * am)
    r3 = rel_residual(ap @ am + am @ ap, cartan_function(mod))
    return max(r1, r2, r3)


def central_values(mod: FockModule):
    """Scalar values of x^+- = (a^+-)^2k and z = K^2k, with a scalarness residual.

    Each power is computed as a matrix and compared against (trace/dim) times
    the identity; the returned residual is the largest entrywise deviation
    over the three matrices.  Non-scalar results are reported, not raised.
    """
    if mod.root is None:
        raise QAlgebraError("not-admissible", "central elements need an admissible-root module (2k is undefined otherwise)")
    two_k = 2 * mod.root.k
    d = mod.dim
    eye = np.eye(d)
    worst = 0.0
    scalars = []
    for op in (mod.a_plus, mod.a_minus, mod.K):
        M = np.linalg.matrix_power(op.matrix, two_k)
        s = np.trace(M) / d
        worst = max(worst, float(np.max(np.abs(M - s * eye))))
        scalars.append(complex(s))
    x_plus, x_minus, z = scalars
    return x_plus, x_minus, z, worst


def boson_relation_residual(mod: FockModule) -> float:
    """Deformed-boson relation residual at p = 1, interior rows only.

    a- a+ - q^{+-2} a+ a- = q^{-+2N} with N = (H - 1)/2.  The a+ truncation
    breaks the relation in row L, so the residual is taken over rows 0..L-1;
    see boson_boundary_defect for the last row.
    """
    return _boson_residual(mod, rows=slice(0, mod.L))


def boson_boundary_defect(mod: FockModule) -> float:
    """The truncation defect of the deformed-boson relations in row L."""
    return _boson_residual(mod, rows=slice(mod.L, mod.L + 1))


def _boson_residual(mod, rows):
    if abs(mod.p - 1) > INT_TOL:
        raise QAlgebraError("p-not-one", f"deformed-boson relations require p = 1, got p = {mod.p}")
    d = mod.dim
    n = np.arange(d)
    ap, am = mod.a_plus.matrix, mod.a_minus.matrix
    worst = 0.0
    for sgn in (+1, -1):
        lhs = am @ ap - mod.qpower(2 * sgn) * (ap @ am)
        rhs = np.diag(np.array([mod.qpower(-2 * sgn * j) for j in n]))
        num = np.linalg.norm(lhs[rows, :] - rhs[rows, :])
        worst = max(worst, float(num / (1.0 + np.linalg.norm(rhs[rows, :]))))
    return worst


def parabose_limit_residual(mod: FockModule) -> float:
    """Residual of the nondeformed para-Bose triple relations near q = 1.

    [{a^xi, a^eta}, a^eps] = (eps - eta) a^xi + (eps - xi) a^eta over all
    sign choices, with H standing in for {a+, a-} where the anticommutator
    is the mixed one.  Restricted to rows/columns 0..size-3 to avoid both
    truncation rows.  Only meaningful on truncated generic modules.
    """
    if not mod.truncated:
        raise QAlgebraError("not-truncated", "para-Bose limit residual applies to truncated generic modules only")
    size = mod.dim
    if size < 3:
        raise QAlgebraError("size-too-small", "need size >= 3 to have an interior")
    cut = slice(0, size - 2)
    a = {+1: mod.a_plus.matrix, -1: mod.a_minus.matrix}
    H = mod.H.matrix
    worst = 0.0
    for xi, eta, eps in product((+1, -1), repeat=3):
        if xi == -eta:
            anti = H
        else:
            anti = a[xi] @ a[eta] + a[eta] @ a[xi]
        lhs = anti @ a[eps] - a[eps] @ anti
        rhs = (eps - eta) * a[xi] + (eps - xi) * a[eta]
        num = np.linalg.norm(lhs[cut, cut] - rhs[cut, cut])
        worst = max(worst, float(num / (1.0 + np.linalg.norm(rhs[cut, cut]))))
    return worst
