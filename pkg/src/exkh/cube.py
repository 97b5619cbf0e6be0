"""Backend selection for the 2^n state scan.

The compiled kernel is used when the extension built; otherwise the
pure-Python twin takes over.  Both expose the same function and are
compared against each other in the test suite and the benchmark.
"""

try:
    from ._cubecore import circle_counts_all

    BACKEND = "compiled"
except ImportError:  # extension not built
    from ._cubecore_py import circle_counts_all

    BACKEND = "python"

__all__ = ["circle_counts_all", "BACKEND"]
