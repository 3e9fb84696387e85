"""Time-series causal discovery with exact and precompute-and-lookup causal ordering."""

__version__ = "0.1.0"
