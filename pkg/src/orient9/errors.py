"""Exception hierarchy for orient9.

Every structured failure in the toolkit is one of these.  ``CapExceeded`` is
deliberately distinct from ``InvalidInput``: the former means "the instance is
too large for the configured exhaustive search", the latter means "the input
violates a documented precondition".  ``FalsificationEvent`` marks situations
that an underlying theorem asserts can never happen; raising it is an honest
bug report against either the engine or the claim, never something to catch
and ignore.
"""


class Orient9Error(Exception):
    """Base class for all orient9 errors."""


class InvalidInput(Orient9Error):
    """A precondition on the input was violated (bad graph, bad partition, ...)."""


class CapExceeded(Orient9Error):
    """Instance too large for the configured exhaustive-search caps."""


class FalsificationEvent(Orient9Error):
    """A verified claim failed on a concrete instance.

    The message always names the claim and carries the instance data needed
    to reproduce the failure.
    """
