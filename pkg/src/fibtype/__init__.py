"""Fibonacci-type polynomial families: exact construction, identity
verification, and certified maximal-root convergence."""

from fibtype._kernel import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = ["KERNEL_BACKEND", "__version__"]
