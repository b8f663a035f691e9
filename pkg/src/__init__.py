"""Unitary addition Cayley graph spectra.

Closed-form spectra, energies and bounds of unitary (addition) Cayley
graphs, checked against a BFS and Jacobi eigensolver oracle.
"""

__version__ = "0.1.0"
