"""Exception taxonomy for the radiotree package.

Every error raised on bad input derives from :class:`RadioTreeError`, so
callers (and the CLI) can distinguish input problems from genuine bugs.
"""


class RadioTreeError(Exception):
    """Base class for all radiotree input/contract errors."""


# --- tree construction -----------------------------------------------------

class NotATree(RadioTreeError):
    """Edge list does not describe a tree (cycle, disconnected, wrong count)."""


class BadEdge(RadioTreeError):
    """Self-loop or duplicate edge."""


class SparseIds(RadioTreeError):
    """Vertex ids are not the contiguous range 0..max."""


class BadVertex(RadioTreeError):
    """Vertex id out of range for the tree."""


class DiameterTooSmall(RadioTreeError):
    """Operation requires a larger diameter than the tree has."""


# --- orders ----------------------------------------------------------------

class NotAPermutation(RadioTreeError):
    """Order is not a permutation of the vertex set."""


class NotTwoBranch(RadioTreeError):
    """Operation is defined only for two-branch trees."""


class InfeasibleASequence(RadioTreeError):
    """The step-increment recurrence left its value range {0, |W|}."""


class LengthMismatch(RadioTreeError):
    """Sequence length does not match the order/tree size."""


# --- labellings ------------------------------------------------------------

class NegativeLabel(RadioTreeError):
    """Labelling recurrence dipped below zero (non-certifying order)."""


class MissingLabel(RadioTreeError):
    """Some vertex has no label."""


class DuplicateLabel(RadioTreeError):
    """Two vertices share a label where distinct labels are required."""


# --- bounds / certification ------------------------------------------------

class CertificationFailure(RadioTreeError):
    """Optimality certification failed at a named pipeline stage."""

    def __init__(self, stage: str, detail: str):
        self.stage = stage
        self.detail = detail
        super().__init__(f"certification failed at stage '{stage}': {detail}")


class NotOmegaTree(RadioTreeError):
    """Tree/vertex pair outside the comparison-bound frame (need a degree-2
    weight center and the right diameter parity)."""


class DHalfTooSmall(RadioTreeError):
    """Odd-diameter comparison bound needs half-diameter >= 2."""


# --- solver ----------------------------------------------------------------

class OrderTooLarge(RadioTreeError):
    """Tree exceeds the exact solver's vertex-count limit."""


# --- families --------------------------------------------------------------

class BadParams(RadioTreeError):
    """Family parameters outside the generator's domain."""


class InvalidProofOrder(RadioTreeError):
    """A transcribed proof order failed certification."""

    def __init__(self, stage: str, detail: str):
        self.stage = stage
        self.detail = detail
        super().__init__(f"proof order failed certification at '{stage}': {detail}")


class UnsupportedParams(RadioTreeError):
    """Proof-order construction not available for these parameters."""


class ExhaustedAttempts(RadioTreeError):
    """Rejection sampling gave up."""


class OutOfRange(RadioTreeError):
    """Closed-form parameters outside the formula's stated range."""
