"""Exact computations in the polynomial representation of the Hecke algebra.

Submodules: ``exactalg`` (coefficients in t), ``polyring`` (polynomials and
operators), ``shapes``, ``bases``, ``transition``, ``ctengine``,
``schubert``, ``tableaux``, ``verify`` and ``cli``.
"""

__version__ = "0.1.0"
