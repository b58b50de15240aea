"""Pinned reference curves for the two standard evaluation channels.

Abscissas are P/delta^2; ordinates bits per channel use, printed to four
decimals.  The two-tap series live on the 16-point grid spanning the
eps = 0.2 feasible band; the three-tap series carry their own abscissas.
"""

# taps (1, 0.2), delta 0.3, N = 12 --------------------------------------

TWO_TAP_X = [
    0.6944, 0.7178, 0.7411, 0.7644, 0.7867, 0.8100, 0.8333, 0.8567,
    0.8800, 0.9033, 0.9256, 0.9489, 0.9722, 0.9956, 1.0189, 1.0422,
]

TWO_TAP_CAPACITY = [
    0.0834, 0.2686, 0.4073, 0.5231, 0.6205, 0.7019, 0.7695, 0.8255,
    0.8715, 0.9090, 0.9389, 0.9621, 0.9793, 0.9910, 0.9978, 0.9999,
]

TWO_TAP_MARKOV = [
    0.0000, 0.2399, 0.3949, 0.5159, 0.6146, 0.6962, 0.7642, 0.8207,
    0.8676, 0.9059, 0.9366, 0.9607, 0.9784, 0.9907, 0.9978, 0.9999,
]

# taps (-0.3, 1, 0.6), delta 0.3, N = 12 --------------------------------

THREE_TAP_CAPACITY = [
    (0.5644, 0.0000), (0.5744, 0.5386), (0.5856, 0.6456), (0.5967, 0.7177),
    (0.6078, 0.7700), (0.6189, 0.8098), (0.6300, 0.8414), (0.6400, 0.8672),
    (0.6511, 0.8887), (0.6622, 0.9069), (0.6733, 0.9223), (0.6844, 0.9354),
    (0.6956, 0.9468), (0.7056, 0.9565), (0.7167, 0.9649), (0.7278, 0.9721),
    (0.7389, 0.9781), (0.7500, 0.9833), (0.7611, 0.9877), (0.7711, 0.9911),
    (0.7822, 0.9940), (0.7933, 0.9963), (0.8044, 0.9979), (0.8156, 0.9991),
    (0.8267, 0.9998), (0.8367, 0.9999),
]

THREE_TAP_MARKOV = [
    (0.5922, 0.0003), (0.6022, 0.2735), (0.6133, 0.4510), (0.6244, 0.5686),
    (0.6356, 0.6531), (0.6467, 0.7177), (0.6578, 0.7690), (0.6678, 0.8105),
    (0.6789, 0.8448), (0.6900, 0.8734), (0.7011, 0.8974), (0.7122, 0.9176),
    (0.7233, 0.9346), (0.7333, 0.9489), (0.7444, 0.9608), (0.7556, 0.9706),
    (0.7667, 0.9789), (0.7778, 0.9854), (0.7889, 0.9906), (0.7989, 0.9944),
    (0.8100, 0.9972), (0.8211, 0.9991), (0.8322, 0.9999),
]
