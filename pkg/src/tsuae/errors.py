"""Exception hierarchy shared across the toolkit.

The CLI maps the four top-level categories to exit codes:
config -> 1, data -> 2, training -> 3, I/O -> 4.
"""


class ToolkitError(Exception):
    """Base class for all toolkit failures."""


class ConfigError(ToolkitError):
    """Invalid or incomplete experiment configuration."""


class DataError(ToolkitError):
    """Problem with input data (shape, schema, content)."""


class ShapeError(DataError):
    """Array dimensions incompatible with an operation."""


class InsufficientDataError(DataError):
    """Too few samples for the requested operation."""


class DegenerateDataError(DataError):
    """Data without the variation the operation requires (zero-variance column, identical statistics)."""


class SchemaError(DataError):
    """CSV schema does not match the file."""


class CsvParseError(DataError):
    """Non-numeric cell or otherwise unparseable CSV content."""


class CsvFormatError(DataError):
    """Structurally malformed CSV (ragged rows, missing header)."""


class QualityUnavailableError(DataError):
    """Quality-subspace output requested but no quality labels are present."""


class ContractViolation(ToolkitError):
    """A documented precondition was broken by the caller."""


class NumericsError(ToolkitError):
    """Non-finite values where finite values are required."""


class TrainingError(ToolkitError):
    """Model fitting failed."""


class TrainingDiverged(TrainingError):
    """Loss became non-finite during training."""


class SingularDataError(TrainingError):
    """Unregularized solve attempted on rank-deficient data."""


class IOFailure(ToolkitError):
    """File system or serialization failure."""


class PersistenceError(IOFailure):
    """Model file cannot be read or written."""


class UnsupportedVersionError(PersistenceError):
    """Model file written by an incompatible format version."""


class ChecksumError(PersistenceError):
    """Model file content does not match its checksum (corrupt or truncated)."""


class StageError(ToolkitError):
    """A named experiment stage failed; the original error is chained as __cause__."""

    def __init__(self, stage: str, cause: BaseException):
        super().__init__(f"stage '{stage}' failed: {cause}")
        self.stage = stage
