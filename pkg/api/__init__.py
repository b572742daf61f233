"""HTTP surface for the dlcoh engine."""

__version__ = "0.1.0"
