"""Scalar kernel: admissible roots of unity and q-number arithmetic.

The deformation parameter is always q = exp(i*pi*m / 2k) for an admissible
integer pair (k, m).  All powers q^z are evaluated from the exact logarithm
i*pi*m/(2k) held as integers, never from a numeric log of the stored complex
value of q, so phases stay branch-stable for complex exponents z.

A plain complex number may be passed wherever a root is accepted; it is
treated as a generic deformation parameter with principal-branch powers.
This escape hatch exists for the q -> 1 limit checks only.
"""

import cmath
import enum
import math
from dataclasses import dataclass
from math import gcd

from .errors import AdmissibilityError, QAlgebraError, SingularFactorError, ZeroDenominatorError

# A complex scalar counts as zero when its modulus is below this, relative to
# the largest operand in the expression (operands here are unit-modulus powers
# of q, so the threshold is effectively absolute).
ZERO_TOL = 1e-14


class RootClass(enum.Enum):
    """The two families of admissible roots: I (k-m odd), II (k, m odd)."""

    I = "I"
    II = "II"


@dataclass(frozen=True)
class AdmissibleRoot:
    """An admissible root of unity q = exp(i*pi*m / 2k).

    Admissibility: k >= 2, 1 <= m <= k-1, gcd(m, k) = 1.  Construction
    validates; invalid pairs raise :class:`AdmissibilityError` with a code
    naming the violated condition.
    """

    k: int
    m: int

    def __post_init__(self):
        k, m = self.k, self.m
        if not isinstance(k, int) or not isinstance(m, int):
            raise AdmissibilityError("not-integer", f"k and m must be integers, got ({k!r}, {m!r})")
        if k < 2:
            raise AdmissibilityError("k-below-minimum", f"k must be >= 2, got k={k}")
        if not 1 <= m <= k - 1:
            raise AdmissibilityError("m-out-of-range", f"m must satisfy 1 <= m <= k-1, got m={m} for k={k}")
        if gcd(m, k) != 1:
            raise AdmissibilityError("not-coprime", f"m and k must be co-prime, got gcd({m}, {k}) = {gcd(m, k)}")

    @property
    def log(self) -> complex:
        """Exact logarithm of q: i*pi*m/(2k)."""
        return 1j * (math.pi * self.m / (2 * self.k))

    @property
    def q(self) -> complex:
        return cmath.exp(self.log)

    @property
    def root_class(self) -> RootClass:
        return RootClass.I if (self.k - self.m) % 2 == 1 else RootClass.II

    @property
    def universal_r_known_absent(self) -> bool:
        """True on the subclass (k odd, m even) with no universal R-matrix."""
        return self.k % 2 == 1 and self.m % 2 == 0

    @property
    def order(self) -> int:
        """Multiplicative order of q: 4k for m odd, 2k or k for m even."""
        return 4 * self.k // gcd(self.m, 4)

    def power(self, z) -> complex:
        """q^z on the principal branch pinned by the exact log of q."""
        return cmath.exp(complex(z) * self.log)

    def __repr__(self):
        return f"AdmissibleRoot(k={self.k}, m={self.m})"


def make_root(k: int, m: int) -> AdmissibleRoot:
    """Validate (k, m) and return the admissible root q = exp(i*pi*m / 2k)."""
    return AdmissibleRoot(k, m)


def qpow(q, z) -> complex:
    """q^z for q an AdmissibleRoot (exact log) or a plain complex scalar."""
    if isinstance(q, AdmissibleRoot):
        return q.power(z)
    return cmath.exp(complex(z) * cmath.log(complex(q)))


def brace(n: int, x, q) -> complex:
    """The mixed-sign q-bracket {n; x}_q.

    {n; x}_q = (q^(n+x) - (-1)^n q^(-n-x)) / (q - (-1)^n q^(-1)).

    n must be a nonnegative integer; x may be any complex scalar.  Raises
    :class:`ZeroDenominatorError` when the denominator vanishes (q in
    {+-1, +-i}, which is never admissible).
    """
    if n < 0:
        raise QAlgebraError("negative-index", f"n must be nonnegative, got {n}")
    sign = -1.0 if n % 2 else 1.0
    den = qpow(q, 1) - sign * qpow(q, -1)
    if abs(den) < ZERO_TOL:
        raise ZeroDenominatorError(
            "zero-denominator",
            f"brace denominator q - (-1)^{n} q^-1 vanished; q={qpow(q, 1):.6g} is inadmissible",
        )
    return (qpow(q, n + x) - sign * qpow(q, -(n + x))) / den


def qint(n: int, q) -> complex:
    """The super q-integer {n}_q = q^n - (-1)^n q^(-n)."""
    sign = -1.0 if n % 2 else 1.0
    return qpow(q, n) - sign * qpow(q, -n)


def qbinom(N: int, n: int, q) -> complex:
    """The super q-binomial {N brace n}_q = {N}_q! / ({n}_q! {N-n}_q!).

    Numerator and denominator factor lists are evaluated and vanishing
    factors with exactly matching indices are cancelled before dividing,
    so the coefficient stays finite at roots of unity wherever the limit
    exists.  A denominator zero with no matching numerator zero raises
    :class:`SingularFactorError` ("singular factorial").
    """
    if not 0 <= n <= N:
        raise QAlgebraError("index-out-of-range", f"need 0 <= n <= N, got (N, n) = ({N}, {n})")
    num = [(j, qint(j, q)) for j in range(1, N + 1)]
    den = [(j, qint(j, q)) for j in range(1, n + 1)]
    den += [(j, qint(j, q)) for j in range(1, N - n + 1)]

    num_zero = [j for j, v in num if abs(v) < ZERO_TOL]
    den_zero = [j for j, v in den if abs(v) < ZERO_TOL]
    for j in den_zero:
        if j in num_zero:
            num_zero.remove(j)
        else:
            raise SingularFactorError(
                "singular-factorial",
                f"{{{N} brace {n}}}_q has denominator factor {{{j}}}_q = 0 with no cancelling numerator factor",
                index=j,
            )
    if num_zero:
        return 0j

    # Cancel one matched zero pair per index, then divide the remainders.
    cancelled = list(den_zero)
    value = 1 + 0j
    for j, v in num:
        if abs(v) < ZERO_TOL and j in cancelled:
            cancelled.remove(j)
            continue
        value *= v
    for j, v in den:
        if abs(v) < ZERO_TOL:
            continue
        value /= v
    return value


def qpoch_fact(n: int, a) -> complex:
    """The Pochhammer-type factorial (n)_a! with (j)_a = (1 - a^j)/(1 - a).

    (0)_a! = 1 by the empty-product convention.  Raises
    :class:`SingularFactorError` carrying the index j of the first factor
    (j)_a that vanishes, so callers can prove their summation range is safe.
    """
    if n < 0:
        raise QAlgebraError("negative-index", f"n must be nonnegative, got {n}")
    a = complex(a)
    one_minus_a = 1 - a
    if abs(one_minus_a) < ZERO_TOL:
        raise ZeroDenominatorError("zero-denominator", f"(n)_a is undefined at a = {a:.6g} (1 - a vanished)")
    value = 1 + 0j
    apow = 1 + 0j
    for j in range(1, n + 1):
        apow *= a
        factor = (1 - apow) / one_minus_a
        if abs(1 - apow) < ZERO_TOL * max(1.0, abs(apow)):
            raise SingularFactorError(
                "vanishing-factor", f"({j})_a = 0 for a = {a:.6g}; (n)_a! is singular from j = {j}", index=j
            )
        value *= factor
    return value
