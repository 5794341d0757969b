"""Exception hierarchy for islandwt."""


class IslandwtError(Exception):
    """Base class for all library errors."""


class UnsupportedWavelet(IslandwtError, ValueError):
    pass


class EmptySignal(IslandwtError, ValueError):
    pass


class DepthExceeded(IslandwtError, ValueError):
    pass


class MalformedDecomposition(IslandwtError, ValueError):
    pass


class SignalTooShort(IslandwtError, ValueError):
    pass


class WindowTooLong(IslandwtError, ValueError):
    pass


class DegenerateWind(IslandwtError, ValueError):
    pass


class SolverDiverged(IslandwtError, RuntimeError):
    pass


class ScenarioInvalid(IslandwtError, ValueError):
    pass


class MissingClass(IslandwtError, ValueError):
    pass


class NotSeparable(IslandwtError, ValueError):
    """Fault and islanding energies overlap; no class threshold exists."""

    def __init__(self, fault_max, islanding_min):
        self.fault_max = float(fault_max)
        self.islanding_min = float(islanding_min)
        super().__init__(
            f"classes overlap: max fault energy {self.fault_max:.6g} >= "
            f"min islanding energy {self.islanding_min:.6g}"
        )
