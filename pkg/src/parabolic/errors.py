"""Exception hierarchy shared by all modules."""


class ParabolicError(Exception):
    """Base class for all library errors."""


# --- Coxeter system construction -------------------------------------------

class AsymmetricMatrix(ParabolicError):
    pass


class BadDiagonal(ParabolicError):
    pass


class BadOffDiagonal(ParabolicError):
    pass


class UnknownPreset(ParabolicError):
    pass


class UnknownGenerator(ParabolicError):
    pass


class DimensionMismatch(ParabolicError):
    pass


# --- sphericity / root-system preconditions --------------------------------

class NotSpherical(ParabolicError):
    pass


class ComponentNotSpherical(ParabolicError):
    pass


class NotPiTransporter(ParabolicError):
    pass


class NotInNormalizer(ParabolicError):
    pass


# --- monoid / group preconditions ------------------------------------------

class SupportOutsideX(ParabolicError):
    pass


class NotAConjugator(ParabolicError):
    pass


class PreconditionFailed(ParabolicError):
    pass


class NotContained(ParabolicError):
    pass


class NotInQZ(ParabolicError):
    pass


# --- oracle / enumeration caps ---------------------------------------------

class CapExceeded(ParabolicError):
    pass


class NotEnumerable(ParabolicError):
    pass
