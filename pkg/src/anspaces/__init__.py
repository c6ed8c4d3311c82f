"""Faces of associahedra and multiplihedra, odd-primary Steenrod rewriting,
and the A_n-classification of SU(2) gauge groups over S^4."""

__version__ = "0.1.0"
