"""Exception types shared by all modules."""


class InftyError(Exception):
    pass


class CompositionNonzero(InftyError):
    pass


class AmbientMismatch(InftyError):
    pass


class LengthMismatch(InftyError):
    pass


class DegreeMismatch(InftyError):
    pass


class MixedWeight(InftyError):
    pass


class EmptyWord(InftyError):
    pass


class NoUnitDeclared(InftyError):
    pass


class IllegalDirection(InftyError):
    pass


class NotCinfty(InftyError):
    pass


class WrongKind(InftyError):
    pass


class NotUnital(InftyError):
    pass


class NotMinimal(InftyError):
    pass


class IllegalPair(InftyError):
    pass


class NotInGeometryImage(InftyError):
    pass


class NonzeroOrder(InftyError):
    pass


class ParseError(InftyError):
    pass


class ValidationError(InftyError):
    pass
