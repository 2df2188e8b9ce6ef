"""Exception types raised by cantordiff."""


class CantorDiffError(Exception):
    """Base class for all errors raised by this package."""


class ArityMismatch(CantorDiffError, ValueError):
    pass


class InvalidElement(CantorDiffError, ValueError):
    """Rule list does not describe a bijection of K_n."""


class DepthExceeded(CantorDiffError, RuntimeError):
    """A cell word grew past the configured depth guard."""

    def __init__(self, depth, limit):
        if depth is None:
            super().__init__(f"a cell word grew past the depth guard {limit}")
        else:
            super().__init__(f"cell depth {depth} exceeds the depth guard {limit}")
        self.depth = depth
        self.limit = limit


class ParseError(CantorDiffError, ValueError):
    def __init__(self, message, text="", position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.text = text
        self.position = position
