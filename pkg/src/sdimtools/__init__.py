"""
sdimtools
==========

A package for exact superdimension computations of simple representations of
the super general linear group Gl(m|n): weights and their labelings, cup
diagrams, translation functor moves, the multiplicity m(λ) and the
superdimension sdim L(λ) = (-1)^p(λ) · m(λ) · dim ρ(λ).
"""

__version__ = "0.1.0"
