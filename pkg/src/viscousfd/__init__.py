"""viscousfd: conservative viscous difference schemes and their analysis.

A small numpy library with three layers:

* exact rational stencil algebra and Fourier analysis of the viscous
  schemes (``stencils``, ``spectral``),
* a 2D compressible Navier-Stokes solver using MP5/cLLF convection with a
  selectable viscous scheme (``gas``, ``inviscid``, ``viscous``,
  ``timestepping``, ``solver``),
* configuration parsing, CSV artifacts and a CLI (``config``,
  ``snapshots``, ``cli``).
"""

from .gas import GasModel, PositivityError, Primitives
from .solver import (
    BoundarySet,
    Diagnostics,
    FlowState,
    Grid2D,
    RunResult,
    SchemeSet,
    run,
)
from .spectral import (
    DampingDecomposition,
    SpectralSample,
    closed_form_symbol,
    dm_decomposition,
    fourier_symbol,
    moments,
    nyquist_symbol,
    solve_damping_params,
    spectral_table,
)
from .stencils import (
    FacePair,
    SchemeSpec,
    Stencil1D,
    alpha_damping4,
    alpha_damping6,
    assemble_divergence_stencil,
    scheme_spec,
    shen6,
)

__version__ = "0.1.0"

__all__ = [
    "BoundarySet", "DampingDecomposition", "Diagnostics", "FacePair",
    "FlowState", "GasModel", "Grid2D", "PositivityError", "Primitives",
    "RunResult", "SchemeSet", "SchemeSpec", "SpectralSample", "Stencil1D",
    "alpha_damping4", "alpha_damping6", "assemble_divergence_stencil",
    "closed_form_symbol", "dm_decomposition", "fourier_symbol", "moments",
    "nyquist_symbol", "run", "scheme_spec", "shen6", "solve_damping_params",
    "spectral_table",
]
