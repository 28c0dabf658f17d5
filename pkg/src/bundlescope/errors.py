"""Exception hierarchy shared by all bundlescope modules."""


class BundlescopeError(Exception):
    """Base class for all library errors."""


class ParseError(BundlescopeError):
    """Input is not valid JavaScript."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column

    def __str__(self):
        base = super().__str__()
        if self.line is not None:
            return f"{base} (line {self.line}, column {self.column})"
        return base


class EmptyInput(BundlescopeError):
    """Source text is empty or whitespace/comments only."""


class UnknownToken(BundlescopeError):
    """Token type id not present in the vocabulary."""


class ParamMismatch(BundlescopeError):
    """Fingerprint sets built with different parameters were combined."""


class ExternalToolError(BundlescopeError):
    """External minifier invocation failed."""


class SelectionError(BundlescopeError):
    """No source files could be selected from an artifact."""

    def __init__(self, message, reason=None):
        super().__init__(message)
        self.reason = reason


class AllFilesUnparseable(BundlescopeError):
    """Every input file of a pseudo-bundle failed to parse."""


class DuplicateRecord(BundlescopeError):
    """A (name, version) pair was added to an index twice."""


class UnknownPackage(BundlescopeError):
    """Package name not present in the index."""


class FormatError(BundlescopeError):
    """A persisted file does not match its documented format."""


class CorruptIndex(BundlescopeError):
    """Index file digest or structure check failed."""


class PatternTooShort(BundlescopeError):
    """Bundler fingerprint pattern below the minimum length."""


class InvalidVersion(BundlescopeError):
    """Text does not parse as a semantic version."""


class InvalidRange(BundlescopeError):
    """Text does not parse as a semantic version range."""


class EmptyDetection(BundlescopeError):
    """A metric was asked to compare against an empty detection set."""
