"""Exact Alexander-type polynomials of knots and links and their zero distributions."""

__version__ = "0.1.0"
