"""Coefficient algebra of the six-parameter equation

    psi'' + (c1 + c2 s) / (s (1 + c3 s)) psi'
          + [-L1 s^2 + L2 s - L3] / (s (1 + c3 s))^2 psi = 0

and the two solution branches it splits into.  With c3 != 0 the polynomial
part of the solution is a Jacobi polynomial in z = 1 + 2 c3 s; with c3 = 0
it is an associated Laguerre polynomial in (2 p1 - c2) s.  In both cases a
power-series termination condition quantizes the energy: the residual of
that condition, as a function of trial energy, vanishes exactly at the
bound levels.

The Jacobi-branch residual is built from first principles, r3 - n(n +
alpha + beta + 1) with r3, alpha, beta evaluated from the coefficient
definitions, rather than from any consolidated single-line formula; the
single-line form is kept only as a cross-check (``compact_jacobi_residual``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import (
    ConsistencyViolation,
    NegativeDiscriminant,
    NoBoundState,
    NotJacobiBranch,
    NotLaguerreBranch,
    WindowDegenerate,
)

JACOBI = "jacobi"
LAGUERRE = "laguerre"

#: absolute tolerance for algebraic identities (root substitution, gamma3 = 0)
IDENTITY_TOL = 1e-12
#: absolute tolerance for the r2 / r1 + r3 identities at solved energies
CONSISTENCY_TOL = 1e-10
#: threshold above which consistency_check raises instead of reporting
CONSISTENCY_RAISE_TOL = 1e-8

DEFAULT_SCAN_POINTS = 2000


@dataclass(frozen=True)
class ParametricCoefficients:
    """The tuple (c1, c2, c3, L1, L2, L3) at one fixed trial energy."""

    c1: float
    c2: float
    c3: float
    lambda1: float
    lambda2: float
    lambda3: float

    @property
    def branch(self) -> str:
        return LAGUERRE if self.c3 == 0.0 else JACOBI


@dataclass(frozen=True)
class RootChoice:
    """Sign selection for the two branch-constant quadratics.

    ``q_sign`` and ``p_sign`` pick the +/- root of the q and p quadratics.
    Normalizability at s -> 0 requires the + q root for every catalog case;
    the p root is configured per potential.
    """

    q_sign: int = +1
    p_sign: int = +1

    def __post_init__(self):
        if self.q_sign not in (-1, +1) or self.p_sign not in (-1, +1):
            raise ValueError("root signs must be +1 or -1")


@dataclass(frozen=True)
class JacobiBranchConstants:
    """Derived constants of the c3 != 0 branch at one trial energy."""

    q0: float
    p0: float
    alpha: float
    beta: float
    D: float
    H: float
    r1: float
    r2: float
    r3: float


@dataclass(frozen=True)
class LaguerreBranchConstants:
    """Derived constants of the c3 = 0 branch at one trial energy."""

    q10: float
    p10: float
    k: float
    gamma1: float
    gamma2: float
    gamma3: float


@dataclass(frozen=True)
class EnergyDependentForm:
    """Coefficients as a function of trial energy, plus the window where
    bound states may live.

    ``coeff_at`` must be deterministic and must keep c1, c2, c3 fixed; only
    the L_i may carry the energy dependence.  ``energy_window`` is an open
    interval; the upper edge may be ``math.inf`` for confining potentials.
    """

    branch: str
    coeff_at: Callable[[float], ParametricCoefficients]
    energy_window: tuple[float, float]


@dataclass(frozen=True)
class ConsistencyReport:
    r2_abs: float
    r1_plus_r3_abs: float


def solve_jacobi_constants(pc: ParametricCoefficients,
                           root_choice: RootChoice = RootChoice()) -> JacobiBranchConstants:
    """Fix the two free exponents (q0, p0) of the c3 != 0 branch.

    q0 solves q^2 - (1 - c1) q - L3 = 0 and p0 solves p^2 - D p - H = 0
    with D = c2/c3 - c1 - 1 and H = L1/c3^2 + L2/c3 + L3.  With both in
    place the polynomial coefficients satisfy r2 = 0 and r1 = -r3
    identically, which this routine also evaluates and returns for
    diagnostics.

    Raises NegativeDiscriminant when either quadratic has no real root
    (no bound state at this trial energy).
    """
    if pc.branch != JACOBI:
        raise NotJacobiBranch("coefficients have c3 = 0")
    c1, c2, c3 = pc.c1, pc.c2, pc.c3
    l1, l2, l3 = pc.lambda1, pc.lambda2, pc.lambda3

    half_q = (1.0 - c1) / 2.0
    disc_q = half_q * half_q + l3
    if disc_q < 0.0:
        raise NegativeDiscriminant(f"q discriminant {disc_q} < 0")
    q0 = half_q + root_choice.q_sign * math.sqrt(disc_q)

    ratio = c2 / c3
    big_d = ratio - c1 - 1.0
    big_h = l1 / c3**2 + l2 / c3 + l3
    disc_p = (big_d / 2.0) ** 2 + big_h
    if disc_p < 0.0:
        raise NegativeDiscriminant(f"p discriminant {disc_p} < 0")
    p0 = big_d / 2.0 + root_choice.p_sign * math.sqrt(disc_p)

    alpha = 2.0 * q0 + c1 - 1.0
    beta = -2.0 * p0 - c1 + ratio - 1.0

    r1 = q0 * (q0 - 1) - 2 * p0 * q0 + p0 * (p0 + 1) + ratio * (q0 - p0) - l1 / c3**2
    r2 = (2 * q0 * (q0 - 1) - 2 * p0 * (p0 + 1) + 2 * c1 * (q0 - p0)
          + 2 * ratio * p0 + 2 * l1 / c3**2 + 2 * l2 / c3)
    r3 = (q0 * (q0 - 1) + 2 * p0 * q0 + p0 * (p0 + 1) + 2 * c1 * (q0 + p0)
          - ratio * (q0 + p0) - l1 / c3**2 - 2 * l2 / c3 - 4 * l3)

    return JacobiBranchConstants(q0=q0, p0=p0, alpha=alpha, beta=beta,
                                 D=big_d, H=big_h, r1=r1, r2=r2, r3=r3)


def solve_laguerre_constants(pc: ParametricCoefficients) -> LaguerreBranchConstants:
    """Fix the exponent q10 and decay constant p10 of the c3 = 0 branch.

    q10 is the + root of q(q - 1) + c1 q - L3 = 0 (required for a solution
    regular at the origin) and p10 the + root of p^2 - c2 p - L1 = 0
    (required for decay at infinity).  The series coefficients gamma1 and
    gamma3 then vanish identically; gamma2 is the quantized quantity.
    """
    if pc.branch != LAGUERRE:
        raise NotLaguerreBranch("coefficients have c3 != 0")
    c1, c2 = pc.c1, pc.c2
    l1, l2, l3 = pc.lambda1, pc.lambda2, pc.lambda3

    half_q = (1.0 - c1) / 2.0
    disc_q = half_q * half_q + l3
    if disc_q < 0.0:
        raise NegativeDiscriminant(f"q discriminant {disc_q} < 0")
    q10 = half_q + math.sqrt(disc_q)

    disc_p = (c2 / 2.0) ** 2 + l1
    if disc_p < 0.0:
        raise NegativeDiscriminant(f"p discriminant {disc_p} < 0")
    p10 = c2 / 2.0 + math.sqrt(disc_p)

    k = c1 + 2.0 * q10 - 1.0
    gamma3 = q10 * (q10 - 1) + c1 * q10 - l3
    denom = c2 - 2.0 * p10
    if denom == 0.0:
        # boundary of the admissible regime; gamma1 vanishes by construction
        # and gamma2 is defined only when its numerator vanishes too
        num2 = 2 * q10 * p10 - c2 * q10 + c1 * p10 - l2
        gamma1 = 0.0
        gamma2 = 0.0 if num2 == 0.0 else math.nan
    else:
        gamma1 = (p10**2 - c2 * p10 - l1) / denom**2
        gamma2 = (2 * q10 * p10 - c2 * q10 + c1 * p10 - l2) / denom

    return LaguerreBranchConstants(q10=q10, p10=p10, k=k,
                                   gamma1=gamma1, gamma2=gamma2, gamma3=gamma3)


def quantization_residual(form: EnergyDependentForm, n: int, energy: float,
                          root_choice: RootChoice = RootChoice()) -> float:
    """Residual of the series-termination condition at a trial energy.

    Jacobi branch: r3 - n (n + alpha + beta + 1).
    Laguerre branch: gamma2 - n.

    Zero exactly at the bound levels; continuous in the energy wherever the
    branch constants are real.
    """
    if n < 0:
        raise ValueError("quantum number n must be nonnegative")
    pc = form.coeff_at(energy)
    if pc.branch == JACOBI:
        jc = solve_jacobi_constants(pc, root_choice)
        return jc.r3 - n * (n + jc.alpha + jc.beta + 1.0)
    lc = solve_laguerre_constants(pc)
    return lc.gamma2 - n


def compact_jacobi_residual(form: EnergyDependentForm, n: int, energy: float,
                            root_choice: RootChoice = RootChoice()) -> float:
    """Single-expression form of the Jacobi-branch termination condition,

        (q0 - p0)^2 + (c2/c3 + 2n - 1)(q0 - p0) + n (n + c2/c3 - 1) - L1/c3^2,

    kept as a cross-check against ``quantization_residual``.  Algebraically
    it equals the negative of the first-principles residual, so the two
    must agree in magnitude at every admissible energy.
    """
    pc = form.coeff_at(energy)
    if pc.branch != JACOBI:
        raise NotJacobiBranch("compact residual only exists on the c3 != 0 branch")
    jc = solve_jacobi_constants(pc, root_choice)
    ratio = pc.c2 / pc.c3
    x = jc.q0 - jc.p0
    return x * x + (ratio + 2 * n - 1) * x + n * (n + ratio - 1) - pc.lambda1 / pc.c3**2


def consistency_check(jc: JacobiBranchConstants) -> ConsistencyReport:
    """Verify the identities r2 = 0 and r1 + r3 = 0 by direct evaluation.

    Raises ConsistencyViolation when either magnitude exceeds 1e-8, which
    signals a wrong root choice or a mis-mapped potential.
    """
    report = ConsistencyReport(r2_abs=abs(jc.r2), r1_plus_r3_abs=abs(jc.r1 + jc.r3))
    if report.r2_abs > CONSISTENCY_RAISE_TOL or report.r1_plus_r3_abs > CONSISTENCY_RAISE_TOL:
        raise ConsistencyViolation(
            f"|r2| = {report.r2_abs:.3e}, |r1 + r3| = {report.r1_plus_r3_abs:.3e}")
    return report


def _residual_or_nan(form, n, energy, root_choice) -> float:
    try:
        value = quantization_residual(form, n, energy, root_choice)
    except NegativeDiscriminant:
        return math.nan
    if math.isinf(value):
        return math.nan
    return value


def _bisect(form, n, root_choice, a, b, fa, fb) -> float:
    # Drive the bracket down to machine-relative width; the residual slope
    # is O(1..100) for every catalog case, so this leaves |residual| far
    # below the 1e-10 contract.
    for _ in range(200):
        mid = 0.5 * (a + b)
        if mid == a or mid == b:
            break
        fm = _residual_or_nan(form, n, mid, root_choice)
        if math.isnan(fm):
            # defensive: both bracket ends are valid, so pull the upper end in
            b = mid
            continue
        if fm == 0.0:
            return mid
        if (fa < 0) != (fm < 0):
            b, fb = mid, fm
        else:
            a, fa = mid, fm
        if abs(b - a) <= 1e-15 * max(abs(a), abs(b)):
            break
    return 0.5 * (a + b)


def _scan_brackets(form, n, root_choice, lo, hi, scan_points):
    """Yield sign-change brackets (a, b, fa, fb) on a uniform interior scan."""
    prev_e = prev_f = None
    for i in range(scan_points):
        e = lo + (hi - lo) * (i + 0.5) / scan_points
        f = _residual_or_nan(form, n, e, root_choice)
        if math.isnan(f):
            prev_e = prev_f = None
            continue
        if f == 0.0:
            yield (e, e, f, f)
        elif prev_f is not None and (prev_f < 0) != (f < 0):
            yield (prev_e, e, prev_f, f)
        prev_e, prev_f = e, f


def solve_energy(form: EnergyDependentForm, n: int,
                 root_choice: RootChoice = RootChoice(),
                 scan_points: int = DEFAULT_SCAN_POINTS,
                 above: float | None = None) -> float:
    """Find the bound-state energy of level n as a root of the residual.

    Scans the energy window on a uniform grid for sign changes, then
    bisects to machine-relative bracket width.  ``above`` restricts the
    search to energies strictly above a previous level, which enforces the
    E_0 < E_1 < ... ordering when multiple residual roots exist.  For
    windows that are unbounded above (confining potentials) the upper scan
    edge is expanded geometrically until the root is bracketed.

    Raises NoBoundState when no sign change exists in the window and
    WindowDegenerate when the window is empty.
    """
    if n < 0:
        raise ValueError("quantum number n must be nonnegative")
    lo, hi = form.energy_window
    if above is not None:
        lo = max(lo, above)
    if math.isinf(hi):
        span = max(1.0, abs(lo))
        for _ in range(64):
            upper = lo + span
            for a, b, fa, fb in _scan_brackets(form, n, root_choice, lo, upper, scan_points):
                if a == b:
                    return a
                return _bisect(form, n, root_choice, a, b, fa, fb)
            span *= 2.0
        raise NoBoundState(f"no residual root found for n = {n} (window unbounded above)")
    if not lo < hi:
        raise WindowDegenerate(f"empty energy window ({lo}, {hi})")
    for a, b, fa, fb in _scan_brackets(form, n, root_choice, lo, hi, scan_points):
        if a == b:
            return a
        return _bisect(form, n, root_choice, a, b, fa, fb)
    raise NoBoundState(f"no residual root found for n = {n} in ({lo}, {hi})")
