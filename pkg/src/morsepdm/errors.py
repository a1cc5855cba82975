"""Exception types raised across the package."""


class MorsePDMError(Exception):
    """Base class for all domain errors raised by morsepdm."""


class UnknownMoleculeError(MorsePDMError, KeyError):
    """Requested molecule is not in the registry."""


class UnknownOrderingError(MorsePDMError, KeyError):
    """Requested ordering preset does not exist."""


class ConfigError(MorsePDMError, ValueError):
    """A molecule config file or CLI option could not be parsed."""


class SingularMassError(MorsePDMError, ValueError):
    """The mass profile diverges at a requested radius or inside a grid."""


class NoSpectrumError(MorsePDMError, ValueError):
    """The quadratic spectral coefficient is non-positive; no bound spectrum."""


class NoBoundStatesError(MorsePDMError, ValueError):
    """Not even the n=0 level is bound for these inputs."""


class DegenerateDenominatorError(MorsePDMError, ZeroDivisionError):
    """The level formula denominator vanishes; treated as end of spectrum."""


class UnboundLevelError(MorsePDMError, ValueError):
    """A wave function was requested for a level beyond the bound range."""


class ComplexExponentError(MorsePDMError, ValueError):
    """The inner-edge exponent of the wave function is not real."""


class ConstantMassError(MorsePDMError, ValueError):
    """A varying-mass code path was called with zero mass coupling."""


class InvalidParameterError(MorsePDMError, ValueError):
    """A special-function parameter is outside its allowed set."""


class NoSuchLevelError(MorsePDMError, ValueError):
    """The numerical eigensolver found no level with the requested index."""
