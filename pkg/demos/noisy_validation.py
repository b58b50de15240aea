"""
How good is the noiseless approximation?
========================================

The threshold model promises that with noise added back, each quantized
output disagrees with the noiseless one with probability at most
Q(delta/sigma).  Simulate the zero-forcing scheme on a real AWGN channel
at several noise levels and compare measured flip rates with the bound.
"""

from isicap import (
    ChannelSpec,
    NoisySimConfig,
    build_operators,
    q_function,
    simulate_zero_forcing,
)

DELTA = 0.3
SYMBOLS = 400_000

ops = build_operators(ChannelSpec((1.0, 0.2), DELTA, 12))

print(f"channel (1, 0.2), delta={DELTA}, {SYMBOLS} symbols per run, alpha=0.7")
print(f"{'d/sigma':>7}  {'measured':>10}  {'bound Q':>10}  {'sigmas off':>10}")
for ratio in (1.5, 2.0, 2.5, 3.0):
    sigma = DELTA / ratio
    cfg = NoisySimConfig(sigma=sigma, num_symbols=SYMBOLS, seed=7, alpha=0.7)
    rep = simulate_zero_forcing(ops, cfg)
    bound = q_function(ratio)
    off = (rep.empirical_flip_rate - bound) / rep.std_error
    print(f"{ratio:7.2f}  {rep.empirical_flip_rate:10.6f}  {bound:10.6f}  {off:10.2f}")

print()
print("Measured rates track Q(delta/sigma) to within sampling error: the")
print("bound is met with near equality because zero-forcing places every")
print("noiseless sample exactly on the threshold.")
