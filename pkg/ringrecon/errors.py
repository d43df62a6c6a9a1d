"""Exceptions raised by ringrecon.

There are two failure channels, and callers must never conflate them:

* :py:class:`InputError` and its subclasses report bad input from the user
  (malformed files, unmet preconditions, truncation bounds that are too
  small).

* :py:class:`FalsificationError` and :py:class:`AxiomError` (when raised on
  input that was already verified) report that a mathematical statement
  failed at desk scale. By the theorems being checked, this can only happen
  through an implementation bug.
"""


class RingReconError(Exception):
    """Base class for all ringrecon errors."""


class InputError(RingReconError, ValueError):
    """Error caused by invalid input from the caller."""


class MalformedDataError(InputError):
    """A serialized structure could not be loaded.

    Attributes:
        location (str):
            A JSON path (such as ``$.mul[3][1]``) pointing at the offending
            value, or ``None`` if the whole document was unreadable.
    """

    def __init__(self, message, location=None):
        """Initialize the error.

        Args:
            message (str):
                The error message.

            location (str, optional):
                The JSON path of the offending value.
        """
        if location:
            text = '%s: %s' % (location, message)
        else:
            text = message

        super(MalformedDataError, self).__init__(text)

        self.message = message
        self.location = location

    def __reduce__(self):
        return (self.__class__, (self.message, self.location))


class PreconditionError(InputError):
    """An operation was called with input violating its preconditions."""


class BoundError(PreconditionError):
    """A truncation bound was too small for the requested operation.

    Attributes:
        required (int):
            The smallest bound that would have worked.

        bound (int):
            The bound that was provided.

        offender (object):
            The object that did not fit within the bound.
    """

    def __init__(self, message, required=None, bound=None, offender=None):
        """Initialize the error.

        Args:
            message (str):
                The error message.

            required (int, optional):
                The smallest bound that would have worked.

            bound (int, optional):
                The bound that was provided.

            offender (object, optional):
                The object that did not fit within the bound.
        """
        super(BoundError, self).__init__(message)

        self.required = required
        self.bound = bound
        self.offender = offender

    def __reduce__(self):
        return (self.__class__, (str(self), self.required, self.bound,
                                 self.offender))


class AxiomError(RingReconError):
    """A structure failed one of its defining axioms.

    Attributes:
        axiom (str):
            A short name for the failed axiom.

        witness (tuple):
            The first violating tuple, in canonical iteration order.
    """

    def __init__(self, axiom, witness=None, message=None):
        """Initialize the error.

        Args:
            axiom (str):
                A short name for the failed axiom.

            witness (tuple, optional):
                The first violating tuple.

            message (str, optional):
                An explicit message. One is built from the axiom and
                witness if not provided.
        """
        if message is None:
            message = '%s fails at %r' % (axiom, witness)

        super(AxiomError, self).__init__(message)

        self.axiom = axiom
        self.witness = witness

    def __reduce__(self):
        return (self.__class__, (self.axiom, self.witness, str(self)))


class CategoryAxiomError(AxiomError):
    """A finite category's tables do not form a category."""


class FalsificationError(RingReconError):
    """A verified statement failed on verified input.

    Attributes:
        check (str):
            The name of the statement that failed (for example,
            ``'cogroups-are-square-zero'``).

        witness (object):
            A minimal counterexample that can be replayed.
    """

    def __init__(self, check, message, witness=None):
        """Initialize the error.

        Args:
            check (str):
                The name of the statement that failed.

            message (str):
                A description of the failure.

            witness (object, optional):
                A minimal counterexample.
        """
        super(FalsificationError, self).__init__('%s: %s' % (check, message))

        self.check = check
        self.message = message
        self.witness = witness

    def __reduce__(self):
        return (self.__class__, (self.check, self.message, self.witness))


class ReconstructionError(RingReconError):
    """A reconstruction pipeline could not run on the given category.

    Attributes:
        check (str):
            The name of the first step whose hypothesis failed.
    """

    def __init__(self, check, message):
        """Initialize the error.

        Args:
            check (str):
                The name of the first failed step.

            message (str):
                A description of the failure.
        """
        super(ReconstructionError, self).__init__('%s: %s' % (check, message))

        self.check = check
        self.message = message

    def __reduce__(self):
        return (self.__class__, (self.check, self.message))
