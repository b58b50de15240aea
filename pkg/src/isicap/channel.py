"""Channel model: circulant convolution operators and spectral data.

A channel instance is a real tap vector h = (h_0, ..., h_{L-1}) acting by
circular convolution on blocks of length N,

    y_n = sum_k h_k x_{(n-k) mod N},

together with an output threshold delta.  All matrix work routes through the
DFT diagonalization of circulant matrices: the eigenvalue attached to DFT bin
k is f(2*pi*k/N) with f(lam) = sum_k h_k exp(1j*k*lam), so inversion and the
Gram inverse G = (M_h M_h^T)^{-1} are O(N log N) and G is itself circulant
with generator IDFT(1/|f|^2).

Channels whose G is diagonally dominant admit a closed-form minimum-energy
solution downstream; ``build_operators`` computes that classification once.
"""

from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionMismatch, SingularChannel

# Relative floor on |f(2*pi*k/N)|; below it the circulant matrix is treated
# as singular.
SINGULAR_TOL = 1e-9

# Tolerance on the diagonal-dominance comparison so machine-precision ties do
# not flip the classification.
DD_TOL = 1e-12

# Dense materialization of the N x N Gram inverse is allowed only at small N;
# larger blocks use the circulant generator and FFT actions.
DENSE_GRAM_CAP = 16


@dataclass(frozen=True)
class ChannelSpec:
    """Problem instance: taps, threshold and block length.

    taps      -- impulse response (h_0 multiplies the current symbol)
    delta     -- output magnitude threshold, > 0
    block_len -- circular block length N, >= len(taps)
    """

    taps: tuple
    delta: float
    block_len: int

    def __post_init__(self):
        taps = tuple(float(t) for t in self.taps)
        object.__setattr__(self, "taps", taps)
        if len(taps) < 1:
            raise ValueError("need at least one tap")
        if not any(t != 0.0 for t in taps):
            raise ValueError("all taps are zero")
        if not self.delta > 0:
            raise ValueError("delta must be positive")
        if self.block_len < len(taps):
            raise ValueError("block_len must be at least the tap count")


@dataclass(frozen=True)
class ChannelOperators:
    """Precomputed circulant actions for one ChannelSpec.

    dft_gains      -- f(2*pi*k/N) for k = 0..N-1
    gram_generator -- first column of G = (M_h M_h^T)^{-1} (G is circulant)
    inverse_row    -- first column of M_h^{-1}
    dd_flag        -- True iff G is diagonally dominant
    """

    spec: ChannelSpec
    dft_gains: np.ndarray
    gram_generator: np.ndarray
    inverse_row: np.ndarray
    dd_flag: bool

    @property
    def n(self):
        return self.spec.block_len

    @property
    def delta(self):
        return self.spec.delta

    @property
    def fft_col(self):
        """DFT of the first circulant column; conj of dft_gains for real taps."""
        return np.conj(self.dft_gains)

    def gram_inverse(self):
        """Materialize G densely.  Restricted to N <= DENSE_GRAM_CAP."""
        if self.n > DENSE_GRAM_CAP:
            raise DimensionMismatch(
                f"dense Gram inverse capped at N={DENSE_GRAM_CAP}, got N={self.n}"
            )
        idx = (np.arange(self.n)[:, None] - np.arange(self.n)[None, :]) % self.n
        return self.gram_generator[idx]


def frequency_response(spec: ChannelSpec, lam):
    """f(lam) = sum_k h_k exp(1j*k*lam); lam may be scalar or array."""
    lam_arr = np.atleast_1d(np.asarray(lam, dtype=float))
    k = np.arange(len(spec.taps))
    vals = np.asarray(spec.taps) @ np.exp(1j * k[:, None] * lam_arr[None, :])
    return complex(vals[0]) if np.ndim(lam) == 0 else vals


def build_operators(spec: ChannelSpec) -> ChannelOperators:
    """Construct the circulant operators, or raise SingularChannel.

    The first circulant column is the zero-padded tap vector, whose DFT gives
    the eigenvalues conj(f(2*pi*k/N)); the gram generator is IDFT(1/|f|^2).
    """
    n = spec.block_len
    col = np.zeros(n)
    col[: len(spec.taps)] = spec.taps
    fft_col = np.fft.fft(col)
    gains = np.conj(fft_col)

    mags = np.abs(gains)
    if np.min(mags) <= SINGULAR_TOL * np.max(mags):
        raise SingularChannel(
            f"|f| ranges over [{np.min(mags):.3e}, {np.max(mags):.3e}]; "
            "channel matrix is numerically singular"
        )

    gram_gen = np.fft.ifft(1.0 / np.abs(fft_col) ** 2).real
    inv_row = np.fft.ifft(1.0 / fft_col).real

    # Diagonal dominance of the circulant G reads off its generator:
    # g_0 >= sum_{k>=1} |g_k|, with slack so exact ties classify as dominant.
    off_mass = np.sum(np.abs(gram_gen[1:]))
    dd_flag = bool(gram_gen[0] >= off_mass - DD_TOL * max(1.0, abs(gram_gen[0])))

    for arr in (gains, gram_gen, inv_row):
        arr.flags.writeable = False
    return ChannelOperators(
        spec=spec,
        dft_gains=gains,
        gram_generator=gram_gen,
        inverse_row=inv_row,
        dd_flag=dd_flag,
    )


def _check_len(ops: ChannelOperators, v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.shape[-1] != ops.n:
        raise DimensionMismatch(f"expected length {ops.n}, got {v.shape[-1]}")
    return v


def apply_channel(ops: ChannelOperators, x) -> np.ndarray:
    """y = M_h x (circular convolution).  Works on a vector or a batch of rows."""
    x = _check_len(ops, x)
    return np.fft.ifft(np.fft.fft(x, axis=-1) * ops.fft_col, axis=-1).real


def apply_inverse(ops: ChannelOperators, y) -> np.ndarray:
    """x = M_h^{-1} y via spectral division.  Works on a vector or a batch."""
    y = _check_len(ops, y)
    return np.fft.ifft(np.fft.fft(y, axis=-1) / ops.fft_col, axis=-1).real


def quantize(x):
    """1-bit quantizer: +1 for x >= 0, -1 otherwise.  Scalar or array."""
    if np.isscalar(x):
        return 1 if x >= 0 else -1
    return np.where(np.asarray(x) >= 0, 1, -1)
