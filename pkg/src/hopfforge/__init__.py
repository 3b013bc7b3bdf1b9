"""Construction and verification of Hopf and equilibrium triangulations."""

__version__ = "0.1.0"
