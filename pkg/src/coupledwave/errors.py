"""Exception hierarchy.

``InadmissibleError`` subclasses mark coefficient sets for which a
construction does not exist (the CLI maps them to exit code 2);
everything else is a numerical or usage failure.
"""


class CoupledWaveError(ValueError):
    pass


class InadmissibleError(CoupledWaveError):
    """Coefficients admit no real solution of the requested kind."""


class EpsilonZero(InadmissibleError):
    pass


class DegenerateCubic(InadmissibleError):
    pass


class Inadmissible(InadmissibleError):
    pass


class NegativeDiscriminant(InadmissibleError):
    pass


class ComplexZeta(InadmissibleError):
    pass


class ZeroAmplitude(InadmissibleError):
    pass


class PoleAtXi(CoupledWaveError):
    pass


class PoleAtPoint(CoupledWaveError):
    def __init__(self, message, xi_pole=None):
        super().__init__(message)
        self.xi_pole = xi_pole


class ModulusOutOfRange(CoupledWaveError):
    pass


class NonPositiveDiscriminant(CoupledWaveError):
    pass


class CoincidentExtremeRoots(CoupledWaveError):
    pass


class PoleAtZero(CoupledWaveError):
    pass


class FormUnavailable(CoupledWaveError):
    pass


class AllPointsExcluded(CoupledWaveError):
    pass


class GridTooCoarse(CoupledWaveError):
    pass


class UnstableStep(CoupledWaveError):
    pass


class BoundaryContamination(CoupledWaveError):
    pass
