class SchreierKitError(Exception):
    pass


class InputError(SchreierKitError, ValueError):
    """Malformed or hypothesis-violating input."""


class UnsupportedInput(SchreierKitError, ValueError):
    """Input is well formed but outside what the operation handles."""


class ResourceError(SchreierKitError, RuntimeError):
    """A configured size cap would be exceeded."""

    def __init__(self, message, bounds=None):
        super().__init__(message)
        self.bounds = bounds
