# -*- coding: utf-8 -*-
"""
===============================================================================
                                ERRORS FILE
===============================================================================
                            Most recent update:
                              17 October 2026
===============================================================================
Exceptions raised across PDMoments. Every error belongs to one of two
branches, which the command line maps onto its exit codes:
    InputError          files or literals that cannot be parsed      (exit 1)
    PreconditionError   a mathematical hypothesis does not hold      (exit 2)
VerificationFailure is raised by the command line itself when an identity
check reports a nonzero residual                                      (exit 3)
===============================================================================
"""


class PDMomentsError(Exception):
    exit_code = 2


#%%
# =============================================================================
# INPUT ERRORS
# =============================================================================
class InputError(PDMomentsError):
    exit_code = 1


class ParseError(InputError, ValueError):
    pass


#%%
# =============================================================================
# PRECONDITION ERRORS
# =============================================================================
class PreconditionError(PDMomentsError):
    exit_code = 2


class ZeroPolynomial(PreconditionError, ValueError):
    pass


class RangeError(PreconditionError, ValueError):
    pass


class DegenerateLeading(PreconditionError):
    pass


class SingularNode(PreconditionError):
    def __init__(self, message, node=None):
        super().__init__(message)
        self.node = node


class SingularSystem(PreconditionError):
    pass


class IllConditioned(PreconditionError):
    def __init__(self, message, condition=None):
        super().__init__(message)
        self.condition = condition


class WrongModelOrder(PreconditionError):
    def __init__(self, message, diagnosis=None):
        super().__init__(message)
        self.diagnosis = diagnosis


class InsufficientMoments(PreconditionError):
    pass


class LeadingZero(PreconditionError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class InsufficientSeed(PreconditionError):
    pass


class NonPolynomialPiece(PreconditionError):
    pass


class NotAnnihilated(PreconditionError):
    pass


class SingularExpansionPoint(PreconditionError):
    pass


class AccuracyNotMet(PreconditionError):
    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


#%%
# =============================================================================
# VERIFICATION ERRORS
# =============================================================================
class VerificationFailure(PDMomentsError):
    exit_code = 3

    def __init__(self, message, first_failing=None):
        super().__init__(message)
        self.first_failing = first_failing
