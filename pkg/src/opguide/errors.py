"""Exception hierarchy shared across the package.

Every error that can surface from normal (non-programmer) misuse derives
from DomainError so the CLI can map it to exit status 1.
"""


class DomainError(Exception):
    """Base for all recoverable domain-level failures."""


class EmptyToken(DomainError):
    pass


class EmptyGraph(DomainError):
    pass


class MalformedGraphFile(DomainError):
    def __init__(self, reason: str, position: str | None = None):
        self.reason = reason
        self.position = position
        where = f" at {position}" if position else ""
        super().__init__(f"malformed graph file{where}: {reason}")


class MalformedRow(DomainError):
    def __init__(self, line_number: int, reason: str):
        self.line_number = line_number
        self.reason = reason
        super().__init__(f"line {line_number}: {reason}")


class MalformedPrediction(DomainError):
    def __init__(self, line_number: int, reason: str):
        self.line_number = line_number
        self.reason = reason
        super().__init__(f"line {line_number}: {reason}")


class UnknownState(DomainError):
    def __init__(self, state: str):
        self.state = state
        super().__init__(f"state {state!r} has no successors in the reference graph")


class SequenceTooShort(DomainError):
    pass


class NonPositiveDuration(DomainError):
    pass


class MissingReferenceTime(DomainError):
    def __init__(self, label: str):
        self.label = label
        super().__init__(f"no reference time for label {label!r}")


class SourceExhausted(DomainError):
    pass


class UnknownSession(DomainError):
    pass


class UnknownLabel(DomainError):
    pass


class UnknownGraph(DomainError):
    pass


class UnknownDictionary(DomainError):
    pass
