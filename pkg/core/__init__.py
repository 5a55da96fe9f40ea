"""
Numerical core: power series, the strip map, extremal functions, radius problems and coefficient functionals
"""
