"""Finite combinatorial models of simplicial sets, multi-simplicial sets and
n-groupoids, with exact checkers for their homotopy-theoretic invariants."""

__version__ = "0.1.0"
