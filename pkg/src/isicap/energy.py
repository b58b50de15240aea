"""Minimum input energy per sign pattern.

E(s) is the optimal value of the convex QP

    min ||x||^2   s.t.   diag(s) M_h x >= delta * 1,

the least energy that forces the quantized block output to equal s.  On
diagonally-dominant channels the inequality is tight at the optimum and

    E(s) = delta^2 * s^T G s,      x* = delta * M_h^{-1} s,

with the nonnegative dual 2*delta*diag(s)*G*diag(s)*1 certifying optimality.
Otherwise a projected-gradient solver with Nesterov momentum runs on the dual

    max_{lam >= 0}  -lam^T A lam / 4 + delta * 1^T lam,
    A = diag(s) M_h M_h^T diag(s),

recovering x = M_h^T diag(s) lam / 2 and certifying the result through the
duality gap of a feasibility-scaled primal candidate.

Exhaustive profiles enumerate all 2^N patterns; the code of a pattern is the
integer whose big-endian bits map 1 -> +1 and 0 -> -1.
"""

import math
from dataclasses import dataclass

import numpy as np

from .channel import ChannelOperators, apply_inverse
from .exceptions import NoConvergence, NotDiagonallyDominant, TooLarge

# Exhaustive enumeration cap: 2^20 patterns is the desk-scale budget.
ENUMERATION_CAP = 20

# Feasibility slack on the returned x*, relative to delta.
FEAS_TOL = 1e-8

# Patterns within this relative distance of e_min count as minimizers.
MIN_TIE_TOL = 1e-9

_CHUNK = 1 << 14


@dataclass(frozen=True)
class EnergySolution:
    """One solved pattern: optimal energy, input, dual vector, duality gap."""

    energy: float
    x_star: np.ndarray
    dual: np.ndarray
    gap: float


@dataclass(frozen=True)
class EnergyProfile:
    """Exhaustive energy landscape over all 2^N sign patterns.

    energies[c] is E(s) for the pattern with code c (big-endian bits,
    1 -> +1).  min_count is the number of patterns tied with e_min within
    MIN_TIE_TOL relative.
    """

    energies: np.ndarray
    e_min: float
    e_max: float
    e_mean: float
    min_count: int

    @property
    def n(self):
        return int(self.energies.size).bit_length() - 1

    def energy_of(self, signs) -> float:
        return float(self.energies[code_from_pattern(signs)])

    def minimizer_codes(self) -> np.ndarray:
        tie = self.e_min * (1 + MIN_TIE_TOL)
        return np.flatnonzero(self.energies <= tie)


def pattern_from_code(code: int, n: int) -> np.ndarray:
    """Decode an integer into a +-1 pattern (bit N-1 is entry 0)."""
    bits = (code >> np.arange(n - 1, -1, -1)) & 1
    return bits * 2.0 - 1.0


def code_from_pattern(signs) -> int:
    signs = np.asarray(signs)
    bits = (signs > 0).astype(int)
    return int(bits @ (1 << np.arange(len(bits) - 1, -1, -1)))


def _as_pattern(ops: ChannelOperators, s) -> np.ndarray:
    s = np.asarray(s, dtype=float)
    if s.shape != (ops.n,):
        raise ValueError(f"pattern must have shape ({ops.n},), got {s.shape}")
    if not np.all(np.abs(s) == 1.0):
        raise ValueError("pattern entries must be exactly +-1")
    return s


def _gram_apply(ops: ChannelOperators, rows: np.ndarray) -> np.ndarray:
    """G acting on each row, via the spectral form of the circulant G."""
    spec_weight = 1.0 / np.abs(ops.fft_col) ** 2
    return np.fft.ifft(np.fft.fft(rows, axis=-1) * spec_weight, axis=-1).real


def _quadratic_form_rows(ops: ChannelOperators, rows: np.ndarray) -> np.ndarray:
    # s^T G s = (1/N) sum_k |DFT(s)_k|^2 / |f_k|^2  (Parseval on the
    # eigenbasis), avoiding any dense matrix.
    spec_weight = 1.0 / np.abs(ops.fft_col) ** 2
    mag2 = np.abs(np.fft.fft(rows, axis=-1)) ** 2
    return (mag2 @ spec_weight) / ops.n


def analytic_energy(ops: ChannelOperators, s) -> EnergySolution:
    """Closed-form E(s) for diagonally-dominant channels (zero duality gap)."""
    if not ops.dd_flag:
        raise NotDiagonallyDominant(
            "analytic energy needs a diagonally-dominant Gram inverse"
        )
    s = _as_pattern(ops, s)
    gs = _gram_apply(ops, s[None, :])[0]
    energy = ops.delta**2 * float(s @ gs)
    x_star = ops.delta * apply_inverse(ops, s)
    dual = 2.0 * ops.delta * s * gs
    return EnergySolution(energy=energy, x_star=x_star, dual=dual, gap=0.0)


def _circulant_dense(ops: ChannelOperators) -> np.ndarray:
    col = np.zeros(ops.n)
    col[: len(ops.spec.taps)] = ops.spec.taps
    idx = (np.arange(ops.n)[:, None] - np.arange(ops.n)[None, :]) % ops.n
    return col[idx]


def _solve_qp_batch(ops, patterns, gap_tol=None, max_iter=None, want_vectors=False):
    """FISTA on the dual for a batch of pattern rows.

    Returns (energy, gap) arrays, plus (x, lam) when want_vectors.  gap_tol of
    None applies the default rule 1e-8 * max(1, primal) per pattern; a number
    is an absolute gap requirement.
    """
    n, delta = ops.n, ops.delta
    m = _circulant_dense(ops)
    b = m @ m.T
    step = 0.5 / np.max(np.abs(ops.fft_col)) ** 2
    if max_iter is None:
        max_iter = 50 * n * n

    s = patterns
    lam = np.maximum(2.0 * delta * s * _gram_apply(ops, s), 0.0)
    y = lam.copy()
    t = 1.0
    rows = s.shape[0]
    best_gap = np.full(rows, np.inf)
    best_energy = np.full(rows, np.inf)
    best_x = np.zeros_like(s) if want_vectors else None
    best_lam = np.zeros_like(s) if want_vectors else None

    for it in range(max_iter):
        grad = -0.5 * (s * ((s * y) @ b)) + delta
        lam_new = np.maximum(y + step * grad, 0.0)
        t_new = 0.5 * (1.0 + math.sqrt(1.0 + 4.0 * t * t))
        y = lam_new + ((t - 1.0) / t_new) * (lam_new - lam)
        lam, t = lam_new, t_new

        if it % 8 == 0 or it == max_iter - 1:
            a_lam = s * ((s * lam) @ b)
            dual_val = -0.25 * np.einsum("ij,ij->i", lam, a_lam) + delta * lam.sum(axis=1)
            x = 0.5 * (s * lam) @ m
            margins = (s * (x @ m.T)).min(axis=1)
            ok = margins > 0
            scale = np.where(ok, delta / np.where(ok, margins, 1.0), np.inf)
            primal = scale**2 * np.einsum("ij,ij->i", x, x)
            gap = primal - dual_val
            improved = gap < best_gap
            best_gap = np.where(improved, gap, best_gap)
            best_energy = np.where(improved, primal, best_energy)
            if want_vectors and np.any(improved):
                best_x[improved] = scale[improved, None] * x[improved]
                best_lam[improved] = lam[improved]
            if gap_tol is None:
                target = 1e-8 * np.maximum(1.0, best_energy)
            else:
                target = gap_tol
            if np.all(best_gap <= target):
                break

    if want_vectors:
        return best_energy, best_gap, best_x, best_lam
    return best_energy, best_gap


def solve_energy_qp(ops: ChannelOperators, s, gap_tol=None, max_iter=None) -> EnergySolution:
    """Solve the dual QP for one pattern and certify via the duality gap."""
    s = _as_pattern(ops, s)
    energy, gap, x, lam = _solve_qp_batch(
        ops, s[None, :], gap_tol=gap_tol, max_iter=max_iter, want_vectors=True
    )
    e, g = float(energy[0]), float(gap[0])
    target = 1e-8 * max(1.0, e) if gap_tol is None else gap_tol
    if not g <= target:
        raise NoConvergence(
            f"duality gap {g:.3e} above tolerance {target:.3e} after iteration budget",
            gap=g,
        )
    return EnergySolution(energy=e, x_star=x[0], dual=lam[0], gap=g)


def energy(ops: ChannelOperators, s) -> EnergySolution:
    """E(s) by the analytic formula when available, otherwise the QP."""
    if ops.dd_flag:
        return analytic_energy(ops, s)
    return solve_energy_qp(ops, s)


def _all_patterns(n: int, start: int, stop: int) -> np.ndarray:
    codes = np.arange(start, stop, dtype=np.int64)
    bits = (codes[:, None] >> np.arange(n - 1, -1, -1)[None, :]) & 1
    return bits * 2.0 - 1.0


def enumerate_profile(ops: ChannelOperators, gap_tol=None) -> EnergyProfile:
    """Compute E(s) for every pattern of length N (N <= ENUMERATION_CAP)."""
    n = ops.n
    if n > ENUMERATION_CAP:
        raise TooLarge(f"exhaustive enumeration capped at N={ENUMERATION_CAP}")
    total = 1 << n
    energies = np.empty(total)
    chunk_sums = []
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        pats = _all_patterns(n, start, stop)
        if ops.dd_flag:
            vals = ops.delta**2 * _quadratic_form_rows(ops, pats)
        else:
            vals, gaps = _solve_qp_batch(ops, pats, gap_tol=gap_tol)
            worst = float(np.max(gaps - (
                1e-8 * np.maximum(1.0, vals) if gap_tol is None else gap_tol
            )))
            if worst > 0:
                raise NoConvergence(
                    f"a pattern in [{start}, {stop}) missed its gap tolerance by {worst:.3e}",
                    gap=float(np.max(gaps)),
                )
        energies[start:stop] = vals
        chunk_sums.append(math.fsum(vals.tolist()))

    e_min = float(energies.min())
    e_max = float(energies.max())
    e_mean = math.fsum(chunk_sums) / total
    min_count = int(np.count_nonzero(energies <= e_min * (1 + MIN_TIE_TOL)))
    energies.flags.writeable = False
    return EnergyProfile(
        energies=energies, e_min=e_min, e_max=e_max, e_mean=e_mean, min_count=min_count
    )


def mean_energy_trace(ops: ChannelOperators) -> float:
    """Mean energy over all patterns: delta^2 * tr((M_h M_h^T)^{-1}) =
    delta^2 * sum_k 1/|f(2*pi*k/N)|^2."""
    return ops.delta**2 * float(np.sum(1.0 / np.abs(ops.fft_col) ** 2))
