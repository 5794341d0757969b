"""Wavelet-based detection of islanding and fault disturbances in DG-penetrated grids."""
__version__ = "0.1.0"

from ._accel import USE_NUMBA
from .detector import (
    ChannelPolicy,
    DetectionVerdict,
    DetectorConfig,
    calibrate,
    detect,
    locate_event,
    select_band,
)
from .dwt import DecompositionResult, dwt_multi_level, dwt_single_level, idwt
from .errors import (
    DegenerateWind,
    DepthExceeded,
    EmptySignal,
    IslandwtError,
    MalformedDecomposition,
    MissingClass,
    NotSeparable,
    ScenarioInvalid,
    SignalTooShort,
    SolverDiverged,
    UnsupportedWavelet,
    WindowTooLong,
)
from .filters import FilterName, WaveletFilter, filter_bank
from .indices import PerformanceIndices, coefficient_energy, compute_indices, signal_energy
from .spectral import StftConfig, WindowShape, dft_indices, stft_indices
from .synth import EventKind, Scenario, Waveform, catalog, normal_scenarios, synthesize
