"""Exception hierarchy."""


class QuiverError(Exception):
    """Base class for every error raised by monoquiver."""


class CompositionError(QuiverError):
    """Two paths were concatenated although t(u) != s(v)."""


class InvalidPathError(QuiverError):
    pass


class InvalidRelationError(QuiverError):
    pass


class NotAdmissibleError(QuiverError):
    """The relations leave infinitely many nonzero paths.

    ``witness`` is a closed path all of whose powers are nonzero.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DisconnectedQuiverError(QuiverError):
    pass


class HypothesisError(QuiverError):
    """An analysis was asked for outside the class of algebras it is valid for."""


class AuditError(QuiverError):
    """An internal consistency audit failed. Always a bug."""


class GenerationBudgetExhausted(QuiverError):
    pass


class ParseError(QuiverError):
    def __init__(self, message, line=None, column=None, source=None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        super().__init__(str(self))

    def __str__(self):
        where = self.source or "<input>"
        if self.line is not None:
            where += f":{self.line}"
            if self.column is not None:
                where += f":{self.column}"
        return f"{where}: {self.message}"
