"""Deterministic pseudo-random generator for reproducible walks.

SplitMix64: state advances by the golden-gamma constant and the output
is a finalised mix of the state.  The algorithm is fixed and documented
here so a walk (spine, seed, steps) replays bit-exactly on any
implementation.
"""

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed):
        self.state = seed & _MASK

    def next(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n):
        """Uniform integer in [0, n) by rejection-free modulo (documented bias
        is irrelevant for move selection among tiny candidate lists)."""
        return self.next() % n
