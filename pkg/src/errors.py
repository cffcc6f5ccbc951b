class SkewPBWError(Exception):
    """Base class for every error raised by the normal-form toolkit"""


class DivisionByZero(SkewPBWError, ZeroDivisionError):
    """Raised when a zero scalar is inverted"""


class DenominatorVanishes(SkewPBWError):
    """Raised when a specialization sends a denominator to zero"""


class InvalidSpecialization(SkewPBWError):
    """Raised when alpha, beta or gamma would be specialized to zero"""


class NotForbidden(SkewPBWError):
    """Raised when a letter pair has no rewriting rule"""


class BudgetExhausted(SkewPBWError):
    """Raised when the rewriting step budget runs out"""

    def __init__(self, steps: int, budget: int):
        super().__init__(f"rewrite budget of {budget} steps exhausted after {steps} steps")
        self.steps = steps
        self.budget = budget


class ParseError(SkewPBWError):
    """Raised on malformed expression, relation or binding text"""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


class UnknownCase(SkewPBWError):
    """Raised for a case tag outside the catalog"""


class UnknownFamily(SkewPBWError):
    """Raised for an identity or table family a case does not define"""


class ClosedFormUnavailable(SkewPBWError):
    """Raised when a closed formula is requested where none exists"""
