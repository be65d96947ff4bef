"""Partition Algebra - exact computation in the partition algebras A_n(Q) and A_{n-1/2}(Q)."""

__version__ = "0.1.0"
