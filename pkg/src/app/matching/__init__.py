"""Matching polynomials, the brute-force oracle and path trees."""
