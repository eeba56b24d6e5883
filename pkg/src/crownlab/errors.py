"""Exception types shared across the package."""


class CrownlabError(Exception):
    pass


class UnsupportedType(CrownlabError):
    """Family/rank pair outside the admissible range."""


class MalformedGraph(CrownlabError):
    pass


class NotExtremal(CrownlabError):
    pass


class NonReducedSystem(CrownlabError):
    pass


class OutsideCone(CrownlabError):
    pass


class UnsupportedPair(CrownlabError):
    pass


class UnsupportedLabel(CrownlabError):
    pass


class MissingExceptionalData(CrownlabError):
    pass


class AmbiguousComponent(CrownlabError):
    """Truncated induction produced no unique component; indicates a bug."""


class TooLarge(CrownlabError):
    pass


class ChartBoundary(CrownlabError):
    """Point left the horospherical coordinate chart."""


class QuadratureFailure(CrownlabError):
    pass


class ConnectionFormulaFailure(CrownlabError):
    pass


class SeriesDivergence(CrownlabError):
    pass


class TruncationFailure(CrownlabError):
    pass


class PoleProximity(CrownlabError):
    pass


class InvalidPeriod(CrownlabError):
    pass


class UnsupportedModel(CrownlabError):
    pass
