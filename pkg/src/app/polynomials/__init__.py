"""Exact integer polynomials, real-root counting and algebraic roots."""
