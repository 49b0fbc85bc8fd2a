"""Ideals of 2x2 minors of box-shaped matrices, exact Gröbner machinery, and
defining ideals of blowups of the projective plane at generic points."""

__version__ = "0.1.0"
