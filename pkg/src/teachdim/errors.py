"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: format/usage problems exit 2,
resource limits exit 3, exhausted searches and missing witnesses exit 4.
"""


class TeachdimError(Exception):
    pass


class FormatError(TeachdimError):
    """Malformed input text: DFA files, example sets, distributions, programs."""


class NotCanonicalError(TeachdimError):
    """An operation that requires a canonical minimal machine got something else."""


class ResourceLimitError(TeachdimError):
    pass


class EnumerationCapError(ResourceLimitError):
    """Requested batch lies beyond the configured enumeration cap."""


class AttemptLimitError(ResourceLimitError):
    """Rejection sampling gave up before producing an acceptable draw."""


class SamplingError(ResourceLimitError):
    """Inverse-CDF walk failed to land inside the distribution's mass."""


class NoWitnessError(TeachdimError):
    """No example set within the allowed pool singles out the target."""


class ExhaustedSearchError(TeachdimError):
    """A budgeted search ran out of budget before finding anything."""
