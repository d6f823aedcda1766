"""heckefam: exact Rouquier families, decomposition-matrix approximations and
symbol combinatorics for finite complex reflection groups."""

__version__ = "0.1.0"
