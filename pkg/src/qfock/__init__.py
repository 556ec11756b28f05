"""
Truncated q-deformed Fock spaces and their Gaussian operator algebras.
"""
