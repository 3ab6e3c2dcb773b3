"""Computational services: diagrams, states, polynomials, ribbon graphs, cutting, homology."""
