"""Golden R-matrix fixtures: the four explicitly printed matrices.

Every entry is stored as an exact phase descriptor (a rational multiple of
pi) or as the closed-form coefficient function of the order parameters,
evaluated at comparison time.  Nothing here is produced by the R-matrix
code under test; these builders are independent transcriptions, so they can
serve as an oracle for it.

Case identifiers ("3.15" .. "3.18") are the catalog names used by the
`reproduce` CLI subcommand:

    3.15  k=2, m=1: the constant "fermionic" 4x4 matrix, p = (1, 1)
    3.16  k=3, m=1: the two-parameter 9x9 matrix, 14 coefficient formulas
    3.17  k=3, m=1: the one-parameter 6x6 matrix at p2 = 2
    3.18  k=3, m=1: the constant 4x4 matrix at p1 = p2 = 2
"""

import cmath
import math

import numpy as np

from .fock import Group, build_module, classify
from .rmatrix import r_explicit
from .roots import make_root

SQRT3 = math.sqrt(3.0)


def _phase(num, den) -> complex:
    """exp(i*pi*num/den) with num possibly complex (order parameters)."""
    return cmath.exp(1j * math.pi * num / den)


def fermionic_r44() -> np.ndarray:
    """The constant 4x4 matrix at k=2: diagonal phases in eighths of pi plus
    one off-diagonal entry e^(i pi/8) - e^(5 i pi/8)."""
    M = np.zeros((4, 4), dtype=complex)
    M[0, 0] = _phase(1, 8)
    M[1, 1] = _phase(3, 8)
    M[2, 2] = _phase(3, 8)
    M[3, 3] = -_phase(1, 8)
    M[2, 1] = _phase(1, 8) - _phase(5, 8)
    return M


def two_parameter_r99(p1, p2) -> np.ndarray:
    """The 9x9 matrix at k=3 on a pair of 3-dimensional modules.

    All 14 nonzero coefficients in closed form; rows/columns ordered
    lexicographically, index (l1, l2) -> 3*l1 + l2.
    """
    e = lambda x: _phase(x, 12)
    s = lambda x: cmath.sin(math.pi * x / 6)
    c = lambda x: cmath.cos(math.pi * x / 6)
    idx = lambda l1, l2: 3 * l1 + l2

    M = np.zeros((9, 9), dtype=complex)
    for l1 in range(3):
        for l2 in range(3):
            M[idx(l1, l2), idx(l1, l2)] = e((p1 + 2 * l1) * (p2 + 2 * l2))
    M[idx(1, 0), idx(0, 1)] = -2j * e(p1 * (p2 + 2)) * s(p2)
    M[idx(1, 1), idx(0, 2)] = -2j * e(p1 * (p2 + 4)) * c(p2 + 1)
    M[idx(2, 0), idx(1, 1)] = 2j * e((p1 + 2) * (p2 + 2)) * s(p2)
    M[idx(2, 0), idx(0, 2)] = -1j * e(p1 * (p2 + 4) + 2) * (2 * cmath.sin(math.pi * (2 * p2 + 1) / 6) - 1)
    M[idx(2, 1), idx(1, 2)] = 2j * e((p1 + 2) * (p2 + 4)) * c(p2 + 1)
    return M


def one_parameter_r66(p1) -> np.ndarray:
    """The 6x6 matrix at k=3 on a 3-dim (x) 2-dim pair with p2 = 2."""
    e6 = lambda x: _phase(x, 6)
    e3 = lambda x: _phase(x, 3)
    M = np.zeros((6, 6), dtype=complex)
    M[0, 0] = e6(p1)
    M[1, 1] = e3(p1)
    M[2, 1] = -1j * SQRT3 * e3(p1)
    M[2, 2] = e6(p1 + 2)
    M[3, 3] = e3(p1 + 2)
    M[4, 3] = 1j * SQRT3 * e3(p1 + 2)
    M[4, 4] = e6(p1 + 4)
    M[5, 5] = e3(p1 + 4)
    return M


def constant_r44_k3() -> np.ndarray:
    """The constant 4x4 matrix at k=3, p1 = p2 = 2."""
    e3 = lambda x: _phase(x, 3)
    M = np.zeros((4, 4), dtype=complex)
    M[0, 0] = e3(1)
    M[1, 1] = e3(2)
    M[2, 2] = e3(2)
    M[3, 3] = -e3(1)
    M[2, 1] = -1j * SQRT3 * e3(2)
    return M


# p samples at which the parameter-dependent fixtures are compared.
R99_SAMPLES = ((1.0, 1.0), (2.0, 2.0), (0.5, 3.7))
R66_SAMPLES = (1.0, 2.0, 1.0 + 1.0j)

GOLDEN_CASE_IDS = ("3.15", "3.16", "3.17", "3.18")


def reproduce_case(case_id: str):
    """Build the R-matrix for a golden case and compare entrywise.

    Returns a list of sample dicts {"p": [p1, p2], "max_deviation": float};
    parameter-free cases yield a single sample.
    """
    if case_id == "3.15":
        root = make_root(2, 1)
        mod = build_module(classify(root, 1, Group.Ib))
        got = r_explicit(mod, mod).matrix
        dev = float(np.max(np.abs(got - fermionic_r44())))
        return [{"p": [complex(1), complex(1)], "max_deviation": dev}]

    root = make_root(3, 1)
    if case_id == "3.16":
        out = []
        for p1, p2 in R99_SAMPLES:
            m1 = build_module(classify(root, p1, Group.IIc))
            m2 = build_module(classify(root, p2, Group.IIc))
            got = r_explicit(m1, m2).matrix
            dev = float(np.max(np.abs(got - two_parameter_r99(p1, p2))))
            out.append({"p": [complex(p1), complex(p2)], "max_deviation": dev})
        return out
    if case_id == "3.17":
        out = []
        m2 = build_module(classify(root, 2, Group.IIb))
        for p1 in R66_SAMPLES:
            m1 = build_module(classify(root, p1, Group.IIc))
            got = r_explicit(m1, m2).matrix
            dev = float(np.max(np.abs(got - one_parameter_r66(p1))))
            out.append({"p": [complex(p1), complex(2)], "max_deviation": dev})
        return out
    if case_id == "3.18":
        mod = build_module(classify(root, 2, Group.IIb))
        got = r_explicit(mod, mod).matrix
        dev = float(np.max(np.abs(got - constant_r44_k3())))
        return [{"p": [complex(2), complex(2)], "max_deviation": dev}]
    raise ValueError(f"unknown golden case {case_id!r}; known: {GOLDEN_CASE_IDS}")
