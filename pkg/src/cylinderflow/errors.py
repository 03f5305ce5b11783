"""Exception types shared across the package."""


class CylinderFlowError(Exception):
    """Base class for all library errors."""


class NotCoprime(CylinderFlowError):
    """Modular inverse requested for non-coprime arguments."""


class DepthExceedsExpansion(CylinderFlowError):
    """A finite continued-fraction expansion was queried past its last term."""


class EnclosureTooWide(CylinderFlowError):
    """An interval enclosure cannot decide a strict inequality at the
    maximum allowed precision.  Callers may retry with a larger slack."""


class Undecidable(CylinderFlowError):
    """A condition involving an infinite sum cannot be decided at the
    available horizon."""

    def __init__(self, condition: str, horizon: int):
        super().__init__(f"{condition} undecidable at horizon {horizon}")
        self.condition = condition
        self.horizon = horizon


class NoSubsequenceFound(CylinderFlowError):
    """The greedy selector exhausted its search space at this depth.
    Not a proof that no valid subsequence exists."""


class TailNotCertified(CylinderFlowError):
    """The tail of the roof series could not be certified to vanish."""

    def __init__(self, j_max: int):
        super().__init__(f"roof tail not certified at layer cutoff {j_max}")
        self.j_max = j_max


class ParityMismatch(CylinderFlowError):
    """Walk value m has the wrong parity for the level n."""


class NotCompleteResidueSystem(CylinderFlowError):
    """The given integers do not hit every residue class exactly once."""


class IntegerDiscontinuity(CylinderFlowError):
    """A periodic step function has a discontinuity at an integer."""


class HypothesisViolated(CylinderFlowError):
    """A structural hypothesis of the residue-counting setup fails."""

    def __init__(self, which: str):
        super().__init__(which)
        self.which = which


class DegenerateFamily(CylinderFlowError):
    """Plateau pruning collapsed: some parent holds too few children
    (q growth too slow)."""


class ConfigError(CylinderFlowError):
    """Malformed experiment configuration."""
