"""Exception types shared across the package."""


class SandpileError(Exception):
    """Base class for errors raised by sandpile-lab."""


class CapExceededError(SandpileError):
    """A brute-force enumeration would exceed its configured cap."""


class UnstableConfigError(SandpileError, ValueError):
    """A configuration was required to be stable but is not."""


class NotRecurrentError(SandpileError, ValueError):
    """A configuration was required to be (minimal) recurrent but is not."""


class MalformedWordError(SandpileError, ValueError):
    """A marked {L,R}-word violates the alphabet or marking rule."""


class ImproperMarkingError(SandpileError, ValueError):
    """A marked orientation violates the proper-marking rule."""
