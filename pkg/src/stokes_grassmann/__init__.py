"""Exact Stokes matrices and Euler pairings for Grassmannians Gr(r, n)."""

from .dercat import EulerMatrix, dual_tensor_decompose, euler_matrix, hom_dim, truncate
from .mutations import braid_orbit_search, mutate, mutate_inverse
from .partitions import (
    BoxContext,
    Partition,
    SubsetIndex,
    Weight,
    complement,
    contains,
    enumerate_box,
    partition_to_subset,
    subset_to_partition,
)
from .stokes import (
    AdmissibleLine,
    CanonicalPoint,
    StokesMatrix,
    canonical_coords_grassmannian,
    canonical_coords_projective,
    grassmann_stokes,
    is_admissible,
    order_by_line,
    projective_stokes,
)
from .symfunc import det_exact, h_spec, lr_expand, schur_dim, skew_expand, skew_schur_spec
from .verify import VerificationReport, verify, verify_all

__version__ = "0.1.0"
