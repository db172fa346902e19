"""Exception types shared across the package."""


class GraphError(ValueError):
    """Malformed graph input: loops, digons, out-of-range vertices, bad sets."""


class ClassRejection(ValueError):
    """A graph is outside the class a routine requires.

    ``witness`` carries the pattern name and the embedding that certifies the
    rejection, when one is available.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ConsistencyError(AssertionError):
    """An internal cross-check failed.

    Raised when a computed object contradicts a structural guarantee that the
    pipeline relies on (goodness equivalence, path structure of the
    dependency digraph, the SNP of the final witness, ...).  These are never
    caught and retried; ``trace`` holds whatever was computed up to the failure.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace
