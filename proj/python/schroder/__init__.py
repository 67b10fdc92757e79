"""Inversion sequences avoiding 021, permutations avoiding 2413 and 4213, and the bijections between them.

Words are plain lists of ints: permutations use 1..n, inversion sequences 0..i-1.
"""

from ._schroder import (
    ValidationError,
    asc,
    ava,
    canonical_rep,
    check_names,
    des,
    dist,
    fs_act,
    gamma_expand,
    gamma_invseq,
    gamma_perms,
    ides,
    invert_outline,
    inversion_sequences,
    mfs_act,
    outline,
    permutation_stats,
    permutations,
    phi,
    phi_inverse,
    psi,
    psi_inverse,
    render_svg,
    run_check,
    schroder_number,
    sequence_stats,
    series,
    verify_cubic,
)

__all__ = [name for name in dir() if not name.startswith("_")]
