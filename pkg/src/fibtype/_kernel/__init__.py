"""Kernel selection: compiled extension if built, pure Python otherwise."""

try:
    from fibtype._kernel import _core as _impl
    BACKEND = "cython"
except ImportError:  # extension not built; same API, slower loops
    from fibtype._kernel import _pure as _impl
    BACKEND = "pure"

mul = _impl.mul
eval_scaled = _impl.eval_scaled
chain_variations = _impl.chain_variations
