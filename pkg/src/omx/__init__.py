"""Matroid ideals of affine oriented matroids: covectors, bounded complexes,
cellular resolutions and Cohen-Macaulay tests in exact arithmetic."""

__version__ = "0.1.0"
