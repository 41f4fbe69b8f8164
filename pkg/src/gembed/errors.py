"""Exception hierarchy.

Every error carries a short machine-readable ``kind`` which the CLI maps to
an exit code and copies into the ``reason`` field of its error documents.
"""


class GembedError(Exception):
    kind = "error"


class ParseError(GembedError, ValueError):
    kind = "parse"


class DimensionError(GembedError, ValueError):
    kind = "dimension"


class DegenerateInputError(GembedError, ValueError):
    kind = "degenerate-input"


class ConfigurationError(GembedError, ValueError):
    kind = "configuration"


class ValidationError(GembedError, ValueError):
    kind = "validation"


class ClassificationError(ValidationError):
    kind = "classification"


class UnsupportedInputError(GembedError, ValueError):
    kind = "unsupported-input"


class PreconditionError(GembedError, ValueError):
    kind = "precondition"


class ResourceLimitError(GembedError, RuntimeError):
    kind = "resource-limit"
