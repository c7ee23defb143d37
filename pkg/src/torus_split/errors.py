"""Exception hierarchy shared by every module of the package."""


class TorusSplitError(Exception):
    """Base class for all errors raised by torus_split."""


# finite fields

class FieldError(TorusSplitError, ValueError):
    pass


class NonPrimeCharacteristic(FieldError):
    pass


class DegreeZero(FieldError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class FieldMismatch(FieldError):
    pass


class QNotPowerOfCharacteristic(FieldError):
    pass


class OrderDoesNotDivide(FieldError):
    pass


class NoSquareRootOfMinusOne(FieldError):
    pass


class NoSubfieldRelation(FieldError):
    pass


# Weyl group

class RankMismatch(TorusSplitError, ValueError):
    pass


class RankTooLargeForExhaustive(TorusSplitError):
    pass


class InvalidType(TorusSplitError, ValueError):
    pass


# matrices

class DimensionMismatch(TorusSplitError, ValueError):
    pass


class SizeMismatch(DimensionMismatch):
    pass


class Singular(TorusSplitError, ArithmeticError):
    pass


class GeneratorOutsideCentralizer(TorusSplitError):
    pass


# groups and searches

class BudgetExceeded(TorusSplitError):
    pass


class WordNotFound(TorusSplitError):
    pass


class NotInNormalizer(TorusSplitError):
    pass


class GeneratorOutsideNormalizer(TorusSplitError):
    pass


class NotSplitByClassification(TorusSplitError):
    pass


class ConstructionRelationFailed(TorusSplitError):
    """A relation that the explicit construction must satisfy did not hold."""


class ClauseNotApplicable(TorusSplitError):
    pass


class ObstructionFailed(TorusSplitError):
    """An exhaustive obstruction search found a consistent lift system."""
