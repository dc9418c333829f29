"""
The pywpfol package implements exact tools for holomorphic foliations on weighted projective spaces: quasi-homogeneous algebra, Baum-Bott sums and degree bounds for invariant hypersurfaces.
"""

name = "pywpfol"
__version__ = "0.1.0"
