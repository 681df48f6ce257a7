"""
Centrex - exact centralizers, canonical forms and intertwiners of matrices.
"""

__version__ = "0.1.0"
