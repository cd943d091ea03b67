"""Exact computations on finite-dimensional Hom-associative trialgebras."""

__version__ = "0.1.0"
