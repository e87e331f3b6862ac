"""Cohomology of finite-dimensional Lie 2-algebras and matrix Lie 2-groups:
crossed-module validators, the triple-lattice cochain complex with exact
rational cohomology, the H^2 <-> extension dictionary, and jet-based
numerical checks for the group-side differentials and van Est operators."""

__version__ = "0.1.0"
