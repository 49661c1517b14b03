"""Exception types raised across the package."""


class Hyp3F2Error(Exception):
    pass


class DenominatorVanishes(Hyp3F2Error, ZeroDivisionError):
    """A rational function was evaluated on the zero set of its denominator."""


class DegenerateShifts(Hyp3F2Error, ValueError):
    """The two shift vectors of a three-term relation coincide."""


class SingularSpecialization(Hyp3F2Error, ValueError):
    """A principal-part matrix is singular or undefined at the chosen point."""


class PoleOfGamma(Hyp3F2Error, ValueError):
    pass


class SlowConvergence(Hyp3F2Error, RuntimeError):
    """The unit-argument series did not reach tolerance within the iteration cap."""


class GenericnessViolation(Hyp3F2Error, ValueError):
    """A parameter, or a difference of two parameters, is too close to an integer."""


class ConvergenceMargin(Hyp3F2Error, ValueError):
    """Re s(a) is below the configured margin for series evaluation."""


class CoefficientPole(Hyp3F2Error, ValueError):
    pass


class TrigPole(Hyp3F2Error, ValueError):
    pass


class ClosureOverflow(Hyp3F2Error, RuntimeError):
    pass
