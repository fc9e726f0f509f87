"""Exception hierarchy shared across the package.

Every error carries an ``exit_code`` used by the CLI: 2 for data problems,
3 for numeric failures.
"""


class PoseletError(Exception):
    exit_code = 2


# --- imaging ---
class UnsupportedFormat(PoseletError):
    pass


class CorruptData(PoseletError):
    pass


class ImageTooSmall(PoseletError):
    pass


class InvalidRatio(PoseletError):
    pass


class InvalidTransform(PoseletError):
    pass


# --- features ---
class InvalidConfig(PoseletError):
    pass


class ExtractorNotReady(PoseletError):
    pass


# --- convnet ---
class ShapeMismatch(PoseletError):
    pass


class LabelOutOfRange(PoseletError):
    pass


class EmptyDataset(PoseletError):
    pass


class DivergenceDetected(PoseletError):
    """Training loss went non-finite; carries the last finite state."""

    exit_code = 3

    def __init__(self, message, params=None, epoch=None):
        super().__init__(message)
        self.params = params
        self.epoch = epoch


# --- learning ---
class SingleClassData(PoseletError):
    pass


class MixedExtractorTags(PoseletError):
    pass


class NonFiniteFeature(PoseletError):
    exit_code = 3


class DimMismatch(PoseletError):
    pass


class NoConvergence(PoseletError):
    exit_code = 3


# --- poselets ---
class TooFewCorrespondences(PoseletError):
    pass


class DegenerateConfiguration(PoseletError):
    exit_code = 3


class NoMatchingExamples(PoseletError):
    pass


class TooFewSamples(PoseletError):
    pass


class EmptyHarvest(PoseletError):
    pass


# --- detector ---
class MixedFeatureModes(PoseletError):
    pass


class EmptyModel(PoseletError):
    pass


class IdMismatch(PoseletError):
    pass


class WeightLengthMismatch(PoseletError):
    pass


# --- harness ---
class UnsortedInput(PoseletError):
    pass


class NoTruths(PoseletError):
    pass


class InsufficientData(PoseletError):
    pass


class ChecksumMismatch(PoseletError):
    pass


class VersionMismatch(PoseletError):
    pass


class MalformedRecord(PoseletError):
    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line
