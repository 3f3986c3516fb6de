"""Exception and warning types.

Every physics-domain failure derives from :class:`PhysicsError`, so callers
(and the command-line driver) can separate bad physics input from usage
mistakes.  Most classes also derive from :class:`ValueError` so that plain
``except ValueError`` handlers keep working.
"""


class PhysicsError(Exception):
    """Base class for physics-domain failures."""


class HalfQuantumFlux(PhysicsError, ValueError):
    """SQUID biased at a half-integer flux quantum, where its inductance diverges."""


class NonPositiveFrequency(PhysicsError, ValueError):
    """An angular frequency that must be positive was not."""


class RootNotBracketed(PhysicsError, RuntimeError):
    """A bracketing interval did not contain a sign change of the residual."""


class DegenerateSpec(PhysicsError, ValueError):
    """A circuit specification is structurally unusable."""


class FixedPointNotConverged(PhysicsError, RuntimeError):
    """A self-consistent frequency could not be located."""


class OutOfDomain(PhysicsError, ValueError):
    """A coordinate lies outside the resonator it refers to."""


class NearPole(PhysicsError, ValueError):
    """A normalization form was evaluated at a tangent pole."""


class GeometryOutOfRegime(PhysicsError, ValueError):
    """Loop geometry violates the thin-loop approximation behind a closed form."""


class QuadratureFailure(PhysicsError, RuntimeError):
    """Numerical integration did not reach its error target."""


class NonPositiveTemperature(PhysicsError, ValueError):
    """A thermal state was requested at a non-positive temperature."""


class SubVacuumBound(PhysicsError, ValueError):
    """The amplitude bound is below the vacuum fluctuation level."""


class ParityRejected(PhysicsError, ValueError):
    """A resonator-B mode cannot drive the antisymmetric flux pattern."""


class PlanInvalid(ValueError):
    """A sweep plan is malformed (usage error, not physics)."""


class InfeasibleConstraints(PhysicsError, ValueError):
    """No point of the design space satisfies the constraints."""


class RegimeWarning(UserWarning):
    """A result was computed outside the regime where its approximations hold."""
