"""Exception types shared across the package."""


class BudgetExceededError(RuntimeError):
    """An exhaustive search hit its configured budget before finishing.

    The search never degrades to an approximation: callers either get a
    certified answer or this error, carrying how much budget was consumed.
    """

    def __init__(self, message: str, consumed: int | None = None):
        super().__init__(message)
        self.consumed = consumed


class UndecidedError(BudgetExceededError):
    """An arrowing decision ran out of budget; the instance stays undecided."""


class ForestLocalityError(RuntimeError):
    """An inseparable induced subhypergraph spans more than one forest member."""


class CorrespondenceWarning(UserWarning):
    """Two hyperedges collapsed onto the same derived-graph edge."""


class FormatError(ValueError):
    """An input document could not be parsed.

    ``offset`` is the byte offset of the offending token in the document,
    ``token`` the token itself (when available).
    """

    def __init__(self, message: str, *, offset: int | None = None, token: str | None = None):
        detail = message
        if token is not None:
            detail += f" (token {token!r})"
        if offset is not None:
            detail += f" at byte {offset}"
        super().__init__(detail)
        self.offset = offset
        self.token = token
