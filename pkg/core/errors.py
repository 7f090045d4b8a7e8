"""
Domain errors. Every error raised by the library derives from GadgetError so
callers (the CLI in particular) can tell domain failures from usage mistakes.
"""


class GadgetError(Exception):
    """Root of all domain errors."""


class InvalidStructure(GadgetError):
    pass


class SignatureMismatch(GadgetError):
    pass


class NotDirected(GadgetError):
    pass


class NotUndirected(GadgetError):
    pass


class ModeMismatch(GadgetError):
    pass


class NotWellFounded(GadgetError):
    pass


class ObjectMismatch(GadgetError):
    pass


class OverlappingMarks(GadgetError):
    pass


class AlphaEqualsBeta(GadgetError):
    pass


class EdgeAbsent(GadgetError):
    pass


class NotAHom(GadgetError):
    pass


class NotAGadgetHom(GadgetError):
    pass


class NotSimple(GadgetError):
    pass


class NotAGraph(GadgetError):
    pass


class HypothesisFailed(GadgetError):
    pass


class NoIsoFound(GadgetError):
    """Raised when an isomorphism that must exist is not found (a bug)."""


class IsolatedPoint(GadgetError):
    pass


class NotASystem(GadgetError):
    pass


class ArcNotAPath(GadgetError):
    pass


class ArityMismatch(GadgetError):
    pass


class NotAGaifmanPath(GadgetError):
    pass


class TooSmall(GadgetError):
    pass


class FreeVariableRepeat(GadgetError):
    pass
