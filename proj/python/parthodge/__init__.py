"""Coboundary operators on integer partitions and exact q-series identities.

Thin re-export of the compiled extension. Partitions travel as text in the
same grammar the CLI uses ("4,2" for distinct parts, "3^2,1" for block form);
series coefficients come back as exact Python ints.
"""

try:
    from ._parthodge import (
        IDENTITIES,
        SERIES_NAMES,
        __version__,
        apply_delta,
        apply_delta_star,
        enumerate_partitions,
        euler_characteristic_coefficients,
        harmonics,
        hodge_report,
        is_harmonic,
        laplacian_kernel_dims,
        run_stat,
        series_coefficients,
        verify_identity,
    )
except ImportError:  # build-tree layout: extension sits on sys.path by itself
    from _parthodge import (
        IDENTITIES,
        SERIES_NAMES,
        __version__,
        apply_delta,
        apply_delta_star,
        enumerate_partitions,
        euler_characteristic_coefficients,
        harmonics,
        hodge_report,
        is_harmonic,
        laplacian_kernel_dims,
        run_stat,
        series_coefficients,
        verify_identity,
    )

__all__ = [
    "IDENTITIES",
    "SERIES_NAMES",
    "__version__",
    "apply_delta",
    "apply_delta_star",
    "enumerate_partitions",
    "euler_characteristic_coefficients",
    "harmonics",
    "hodge_report",
    "is_harmonic",
    "laplacian_kernel_dims",
    "run_stat",
    "series_coefficients",
    "verify_identity",
]
