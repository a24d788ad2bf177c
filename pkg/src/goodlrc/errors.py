"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`LrcError`
so the CLI can map it to exit code 1.
"""


class LrcError(Exception):
    """Base class for all library errors."""


# -- fields -----------------------------------------------------------------

class NonPrimeCharacteristic(LrcError, ValueError):
    pass


class ReducibleModulus(LrcError, ValueError):
    pass


class DivisionByZero(LrcError, ZeroDivisionError):
    pass


class FieldMismatch(LrcError, TypeError):
    pass


class DlogOfZero(LrcError, ValueError):
    pass


class EvenCharacteristic(LrcError, ValueError):
    pass


class OrderNotDividing(LrcError, ValueError):
    pass


# -- polynomials --------------------------------------------------------------

class ZeroPolynomial(LrcError, ValueError):
    pass


class DuplicateAbscissa(LrcError, ValueError):
    pass


# -- good polynomials ---------------------------------------------------------

class DegreeTooSmall(LrcError, ValueError):
    pass


class FieldTooLarge(LrcError, ValueError):
    pass


class NoGoodSets(LrcError, ValueError):
    pass


class BadSplit(LrcError, ValueError):
    pass


class DependentBasis(LrcError, ValueError):
    pass


class NotSubspace(LrcError, ValueError):
    pass


class BadTowerDegree(LrcError, ValueError):
    pass


class PreconditionFailed(LrcError, ValueError):
    def __init__(self, condition, detail=""):
        self.condition = condition
        msg = condition if not detail else f"{condition}: {detail}"
        super().__init__(msg)


# -- code parameters ----------------------------------------------------------

class IndexOutOfRange(LrcError, IndexError):
    pass


class ShapeMismatch(LrcError, ValueError):
    pass


class InvalidParameters(LrcError, ValueError):
    """A parameter inequality of a construction is violated."""


class RTooSmall(InvalidParameters):
    pass


class DeltaTooSmall(InvalidParameters):
    pass


class DegreeMismatch(InvalidParameters):
    pass


class TooFewRoots(InvalidParameters):
    pass


class VOutOfRange(InvalidParameters):
    pass


class MissingSplit(InvalidParameters):
    pass


class SplitDegreeMismatch(InvalidParameters):
    pass


class LOutOfRange(InvalidParameters):
    pass


class KTooSmall(InvalidParameters):
    pass


class KTooLarge(InvalidParameters):
    pass


class UnknownVariant(InvalidParameters):
    pass


class LengthMismatch(LrcError, ValueError):
    pass


class RankDeficient(LrcError, RuntimeError):
    pass


# -- analysis -----------------------------------------------------------------

class BudgetExceeded(LrcError, RuntimeError):
    def __init__(self, required, budget):
        self.required = required
        self.budget = budget
        super().__init__(f"exhaustive search needs {required} codewords, budget is {budget}")


class NoWitnessFound(LrcError, RuntimeError):
    pass


class TooManyErasures(LrcError, ValueError):
    def __init__(self, group, erased, limit):
        self.group = group
        super().__init__(f"group {group} has {erased} erasures, at most {limit} are repairable")


class InconsistentSurvivors(LrcError, ValueError):
    def __init__(self, group):
        self.group = group
        super().__init__(f"surviving symbols of group {group} fit no local polynomial")
