"""Adaptive transform from the eigenbasis of a signal-derived Schroedinger
operator, with denoising tools for signal-dependent noise.

The heavy lifting lives in the compiled ``_qst`` extension; this package
re-exports its surface.
"""

from ._qst import (  # noqa: F401
    BoundaryMode,
    EigenBasis,
    EigenMode,
    Field,
    FieldKind,
    HamiltonianMatrix,
    NoiseModel,
    PipelineArtifacts,
    PipelineConfig,
    PipelineError,
    SpectralOrder,
    SpectrumEnd,
    ThresholdProfile,
    build_hamiltonian,
    corrupt,
    denoise_pipeline,
    eig_full,
    eig_partial,
    fourier_denoise,
    gaussian_smooth,
    load_field,
    make_image,
    make_signal,
    project,
    psnr_db,
    reconstruct,
    run_pipeline,
    save_field,
    snr_db,
    ssim,
    tv_denoise,
)

__all__ = [
    "BoundaryMode",
    "EigenBasis",
    "EigenMode",
    "Field",
    "FieldKind",
    "HamiltonianMatrix",
    "NoiseModel",
    "PipelineArtifacts",
    "PipelineConfig",
    "PipelineError",
    "SpectralOrder",
    "SpectrumEnd",
    "ThresholdProfile",
    "build_hamiltonian",
    "corrupt",
    "denoise_pipeline",
    "eig_full",
    "eig_partial",
    "fourier_denoise",
    "gaussian_smooth",
    "load_field",
    "make_image",
    "make_signal",
    "project",
    "psnr_db",
    "reconstruct",
    "run_pipeline",
    "save_field",
    "snr_db",
    "ssim",
    "tv_denoise",
]
