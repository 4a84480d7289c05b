# -*- coding: utf-8 -*-
"""
exceptions.py - Define all exceptions used in the ibkernel module.
"""


class IBKernelException(Exception):
    """
    Base class for all kernel-related exceptions.
    """

    def __str__(self):
        return self.__class__.__name__


class KernelApiException(IBKernelException):
    """
    Base class for all API misuse exceptions.

    These are usage errors: the CLI reports them with exit code 2.
    """
    pass


class UnknownKernel(KernelApiException):
    """
    Raised when a kernel name or tag is not one of the supported kernels.
    """
    def __init__(self, name):
        super(UnknownKernel, self).__init__()
        self.name = name

    def __str__(self):
        return "unknown kernel '%s'" % self.name


class KernelDomainError(KernelApiException):
    """
    Raised when an argument is outside the domain of an operation
    (non-finite point, branch parameter outside [0, 1], bad order...).
    """
    def __init__(self, parameter, value=None):
        super(KernelDomainError, self).__init__()
        self.parameter = parameter
        self.value = value

    def __str__(self):
        return "invalid value for '%s': %r" % (self.parameter, self.value)


class UnsupportedSmoothness(KernelApiException):
    """
    Raised when a derivative order is requested from a kernel which is not
    smooth enough to have it.
    """
    def __init__(self, kernel, order):
        super(UnsupportedSmoothness, self).__init__()
        self.kernel = kernel
        self.order = order

    def __str__(self):
        return "kernel %s has no continuous derivative of order %d" % (
            self.kernel, self.order)


class InternalInconsistency(IBKernelException):
    """
    Raised when the six-point branch quadratic has a negative discriminant.

    This cannot happen for a correct transcription of the kernel formulas.
    """
    def __init__(self, r, discriminant):
        super(InternalInconsistency, self).__init__()
        self.r = r
        self.discriminant = discriminant

    def __str__(self):
        return "negative discriminant %r at r=%r" % (self.discriminant, self.r)


class GridException(IBKernelException):
    """
    Base class for all grid-related exceptions.
    """
    pass


class GridConfigurationError(GridException):
    """
    Raised when a grid cannot host the stencil of a kernel, or has
    invalid dimensions/meshwidth.
    """
    def __init__(self, dims, width=None):
        super(GridConfigurationError, self).__init__()
        self.dims = dims
        self.width = width

    def __str__(self):
        if self.width is None:
            return "invalid grid %r" % (self.dims, )
        return "grid %r too small for a %d-point stencil" % (self.dims,
                                                             self.width)


class GridMismatch(GridException):
    """
    Raised when a field does not live on the grid it is used with.
    """
    pass


class LengthMismatch(GridException):
    """
    Raised when per-marker values do not match the number of markers.
    """
    def __init__(self, expected, got):
        super(LengthMismatch, self).__init__()
        self.expected = expected
        self.got = got

    def __str__(self):
        return "expected %d values, got %d" % (self.expected, self.got)


class AuditEvaluationError(IBKernelException):
    """
    Raised when a kernel evaluation fails during an audit.
    """
    def __init__(self, kernel, r, cause):
        super(AuditEvaluationError, self).__init__()
        self.kernel = kernel
        self.r = r
        self.cause = cause

    def __str__(self):
        return "<kernel %s, r=%r>: %s" % (self.kernel, self.r, self.cause)


class BenchConfigError(KernelApiException):
    """
    Raised when a benchmark configuration parameter is invalid.
    """
    def __init__(self, parameter, value=None):
        super(BenchConfigError, self).__init__()
        self.parameter = parameter
        self.value = value

    def __str__(self):
        return "invalid benchmark parameter '%s': %r" % (self.parameter,
                                                          self.value)


class EmptyResult(IBKernelException):
    """
    Raised when no bin holds enough samples to compute a statistic.
    """
    def __init__(self, min_count):
        super(EmptyResult, self).__init__()
        self.min_count = min_count

    def __str__(self):
        return "no bin holds at least %d samples" % self.min_count


class MarkerFormatException(KernelApiException):
    """
    Raised when a marker or field file does not follow the CSV format.
    """
    def __init__(self, line, reason):
        super(MarkerFormatException, self).__init__()
        self.line = line
        self.reason = reason

    def __str__(self):
        return "line %d: %s" % (self.line, self.reason)
