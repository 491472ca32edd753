"""Radix-2 DFT over separate real and imaginary channels."""

from ._core import (
    Plan,
    bit_reverse_index,
    build_D,
    build_E_interleaved,
    build_perm_S,
    build_W,
    count_flops,
    deinterleave,
    fft,
    ifft,
    interleave,
    naive_dft,
    permute_pairwise_bitrev,
    rotation_block,
    verify_factorization,
)

__all__ = [
    "Plan",
    "bit_reverse_index",
    "build_D",
    "build_E_interleaved",
    "build_perm_S",
    "build_W",
    "count_flops",
    "deinterleave",
    "fft",
    "ifft",
    "interleave",
    "naive_dft",
    "permute_pairwise_bitrev",
    "rotation_block",
    "verify_factorization",
]
