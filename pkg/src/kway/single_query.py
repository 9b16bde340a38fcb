"""Single-query protocol: spatial superposition, phase encoding, Helstrom test.

A single particle is prepared in a uniform superposition over N spatial
modes; location i imprints a phase e^{i phi_i x_i} on mode i.  Distinguishing
the all-zero encoding (rho_0, prior 1/(N+1)) from the average of the N
one-hot encodings (rho_1, prior N/(N+1)) with the optimal binary measurement
yields a witness value N - 1 + delta; delta > 0 certifies genuine N-way
signaling.

Two independent routes compute delta for the half/half +-phi phase pattern:

* delta_numeric: build rho_0, rho_1 densely and eigensolve (the oracle);
* delta_closed_form: the analytic spectrum of p1 rho_1 - p0 rho_0, which
  splits into a bulk eigenvalue of multiplicity N-2 and a 2x2 block.

Note: the commonly quoted violation threshold cos(phi) > (N(N-6)+5)/(N^2-2N+3)
for odd N does not match the analytic spectrum; the condition
|(2/N)(1-cos phi)| < |lambda_-| reduces to cos(phi) > (N-5)/(N-3) for odd
N > 3 and holds for every phi in (0, pi] at N = 3.  violation_threshold
returns the sharp values, which delta_numeric confirms.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .behavior import Behavior
from .linalg import check_hermitian, eigvalsh, positive_eigenspace_projector, trace_norm

STATE_TOL = 1e-12
DENSITY_TOL = 1e-10
POVM_TOL = 1e-10


class Regime(enum.Enum):
    NO_VIOLATION = "none"
    VIOLATION = "violation"


@dataclass(frozen=True)
class PhasePattern:
    """Per-location oracle phases, canonicalized to (-pi, pi]."""

    phases: tuple

    def __post_init__(self):
        vals = [float(p) for p in self.phases]
        if not all(math.isfinite(p) for p in vals):
            raise ValueError("phases must be finite")
        canon = []
        for p in vals:
            r = math.fmod(p, 2 * math.pi)
            if r > math.pi:
                r -= 2 * math.pi
            elif r <= -math.pi:
                r += 2 * math.pi
            canon.append(r)
        object.__setattr__(self, "phases", tuple(canon))

    def __len__(self):
        return len(self.phases)

    @classmethod
    def half_half(cls, n: int, phi: float) -> "PhasePattern":
        """ceil(N/2) locations at +phi, the remaining floor(N/2) at -phi."""
        k = n // 2
        plus = n - k
        return cls(tuple([phi] * plus + [-phi] * k))


@dataclass(frozen=True)
class BinaryPOVM:
    """Two-outcome measurement: PSD operators pi0 + pi1 = identity."""

    pi0: np.ndarray
    pi1: np.ndarray

    def __post_init__(self):
        check_hermitian(self.pi0, POVM_TOL)
        check_hermitian(self.pi1, POVM_TOL)
        dim = self.pi0.shape[0]
        if np.max(np.abs(self.pi0 + self.pi1 - np.eye(dim))) > POVM_TOL:
            raise ValueError("POVM elements must sum to the identity")
        for m in (self.pi0, self.pi1):
            if np.min(np.linalg.eigvalsh(m)) < -POVM_TOL:
                raise ValueError("POVM element is not positive semidefinite")


@dataclass(frozen=True)
class ClosedFormSpectrum:
    a_coef: float           # N - 3 + 2 cos(phi)
    lambda_plus: float
    lambda_minus: float
    bulk_eigenvalue: float  # (2/N)(1 - cos phi)/(N+1), multiplicity N-2
    regime: Regime


def assert_state(psi: np.ndarray, tol: float = STATE_TOL):
    norm = float(np.sum(np.abs(psi) ** 2))
    if abs(norm - 1.0) > tol:
        raise ValueError(f"state norm^2 = {norm!r}, not 1")


def assert_density_operator(rho: np.ndarray, tol: float = DENSITY_TOL):
    check_hermitian(rho, tol)
    if abs(np.trace(rho).real - 1.0) > tol:
        raise ValueError("density operator trace differs from 1")
    if np.min(np.linalg.eigvalsh(rho)) < -tol:
        raise ValueError("density operator is not positive semidefinite")


def uniform_state(n: int) -> np.ndarray:
    if n < 1:
        raise ValueError("need at least one mode")
    return np.full(n, 1.0 / math.sqrt(n), dtype=complex)


def apply_phase_oracle(state: np.ndarray, bits, pattern: PhasePattern) -> np.ndarray:
    """Multiply amplitude n by e^{i phi_n x_n}; norm is preserved."""
    n = len(state)
    if len(bits) != n or len(pattern) != n:
        raise ValueError("state, bits and pattern dimensions must match")
    phases = np.array(pattern.phases) * np.array(bits, dtype=float)
    return state * np.exp(1j * phases)


def encoded_state(n: int, bits, pattern: PhasePattern) -> np.ndarray:
    return apply_phase_oracle(uniform_state(n), bits, pattern)


def build_discrimination_pair(n: int, pattern: PhasePattern):
    """(p0, rho_0, p1, rho_1): all-zero encoding vs averaged one-hot encodings."""
    if n < 2:
        raise ValueError("need at least two locations")
    if len(pattern) != n:
        raise ValueError("pattern length must equal N")
    psi0 = uniform_state(n)
    rho0 = np.outer(psi0, psi0.conj())
    rho1 = np.zeros((n, n), dtype=complex)
    for i in range(n):
        bits = [0] * n
        bits[i] = 1
        psi = apply_phase_oracle(psi0, bits, pattern)
        rho1 += np.outer(psi, psi.conj())
    rho1 /= n
    return 1.0 / (n + 1), rho0, n / (n + 1), rho1


def helstrom(p0: float, rho0: np.ndarray, p1: float, rho1: np.ndarray):
    """Optimal binary discrimination: (max win probability, optimal POVM).

    max_pw = (1 + ||p1 rho1 - p0 rho0||_1)/2; pi1 projects onto the positive
    eigenspace of p1 rho1 - p0 rho0 (null space assigned to pi0).
    """
    if abs(p0 + p1 - 1.0) > 1e-12 or p0 < 0 or p1 < 0:
        raise ValueError("priors must be a probability pair")
    if rho0.shape != rho1.shape:
        raise ValueError("density operators must share a dimension")
    gap = p1 * rho1 - p0 * rho0
    max_pw = 0.5 * (1.0 + trace_norm(gap))
    pi1 = positive_eigenspace_projector(gap)
    povm = BinaryPOVM(np.eye(gap.shape[0], dtype=pi1.dtype) - pi1, pi1)
    return max_pw, povm


def delta_numeric(n: int, pattern: PhasePattern) -> float:
    """Witness violation from the dense density operators and the eigensolver."""
    p0, rho0, p1, rho1 = build_discrimination_pair(n, pattern)
    return 0.5 - n / 2 + (n + 1) / 2 * trace_norm(p1 * rho1 - p0 * rho0)


def delta_closed_form(n: int, phi: float):
    """Analytic (delta, spectrum) for the half/half +-phi pattern, N >= 3.

    The shifted operator (N+1)(p1 rho_1 - p0 rho_0) - c*I restricted to the
    span of the uniform state and the phase vector is a 2x2 block with
    diagonal A = N - 3 + 2 cos(phi) and off-diagonal sin(phi) (even N) or
    sin(phi) sqrt(1 - 1/N^2) (odd N), where c = (2/N)(1 - cos phi).
    delta is positive exactly when c < |lambda_-|.
    """
    if n < 3:
        raise ValueError("closed form defined for N >= 3")
    c = math.cos(phi)
    s = math.sin(phi)
    a = n - 3 + 2 * c
    off2 = 4 * s * s
    if n % 2 == 1:
        off2 *= 1.0 - 1.0 / (n * n)
    disc = math.sqrt(a * a + off2)
    lam_plus = 0.5 * (a + disc)
    lam_minus = 0.5 * (a - disc)
    bulk = (2.0 / n) * (1.0 - c)
    is_zero_phi = abs(s) < 1e-300 and c > 0
    if bulk < abs(lam_minus) and not is_zero_phi:
        regime = Regime.VIOLATION
        delta = 1.5 - n / 2 - 2.0 / n + (2.0 / n) * c - c + 0.5 * disc
    else:
        regime = Regime.NO_VIOLATION
        delta = 0.0
    spectrum = ClosedFormSpectrum(a, lam_plus, lam_minus, bulk / (n + 1), regime)
    return delta, spectrum


def violation_threshold(n: int) -> float:
    """Sharp lower bound on cos(phi) for delta > 0 with the half/half pattern.

    Even N: (N(N-6)+4)/(N-2)^2.  Odd N > 3: (N-5)/(N-3).  N = 3: every
    phi in (0, pi] violates (the bound -1 is attained at phi = pi).
    """
    if n < 3:
        raise ValueError("threshold defined for N >= 3")
    if n % 2 == 0:
        return (n * (n - 6) + 4) / (n - 2) ** 2
    if n == 3:
        return -1.0
    return (n - 5) / (n - 3)


def induced_behavior(n: int, pattern: PhasePattern, povm: BinaryPOVM) -> Behavior:
    """Device-independent table P(1|x) = Tr(pi1 rho_x) over all 2^N encodings."""
    if len(pattern) != n:
        raise ValueError("pattern length must equal N")
    if povm.pi1.shape[0] != n:
        raise ValueError("POVM dimension must equal N")
    table = []
    for x in range(2 ** n):
        bits = [(x >> i) & 1 for i in range(n)]
        psi = encoded_state(n, bits, pattern)
        table.append(float(np.real(psi.conj() @ povm.pi1 @ psi)))
    return Behavior.from_table(n, table)


def _golden_max(f, lo: float, hi: float, tol: float):
    """Golden-section maximization; also samples both endpoints."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    candidates = [(f(lo), lo), (f(hi), hi), (fc, c), (fd, d)]
    best, x = max(candidates)
    return x, best


def delta_max(n: int, phi_tol: float = 1e-6):
    """(phi*, delta*) maximizing the violation over phi on (0, pi].

    N = 2 uses the numeric route with both phases equal to phi (the maximum
    sits at phi = pi, delta = 1); N >= 3 maximizes the closed form over the
    violation interval by golden-section search.
    """
    if n < 2:
        raise ValueError("need N >= 2")
    if n == 2:
        f = lambda phi: delta_numeric(2, PhasePattern((phi, phi)))
        return _golden_max(f, 1e-9, math.pi, phi_tol)
    thr = violation_threshold(n)
    hi = math.acos(min(1.0, max(-1.0, thr)))
    f = lambda phi: delta_closed_form(n, phi)[0]
    return _golden_max(f, 1e-9, hi, phi_tol)
