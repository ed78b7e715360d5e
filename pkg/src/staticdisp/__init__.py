"""Riemann-surface analysis of static dispersion models.

Sheet continuation as Moebius dynamics, exact invariant varieties in
projective spaces, solutions of the sheet-index functional equations and
numerical checks of the unitarity / crossing boundary conditions.
"""

__version__ = "0.1.0"
