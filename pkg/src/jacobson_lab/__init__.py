"""
Jacobson Lab - Jacobson graphs of finite commutative rings.

This package provides tools to:
- Do exact arithmetic in finite local rings and their direct products
- Build Jacobson graphs and evaluate their closed-form invariants
- Decide Hamiltonian, Eulerian, pancyclic and induced-length questions exactly
- Construct validated witness walks and survey whole ring catalogs
"""

__version__ = "0.1.0"

from jacobson_lab.config.settings import get_settings

__all__ = ["__version__", "get_settings"]
