"""Kernel error types.

KernelError is the common base so the service layer can map everything the
kernel raises onto one exit code; the subclasses match the failure modes the
individual operations document.
"""


class KernelError(Exception):
    pass


class NotZeroDimensional(KernelError):
    pass


class ZeroRing(KernelError):
    pass


class FieldMismatch(KernelError):
    pass


class AlgebraMismatch(KernelError):
    pass


class UnsupportedResidueField(KernelError):
    pass


class NotIdempotent(KernelError):
    pass


class IndexOutOfRange(KernelError):
    pass


class ShapeMismatch(KernelError):
    pass


class NotChainMap(KernelError):
    pass


class RangeInsufficient(KernelError):
    pass


class NotSemidualizing(KernelError):
    pass


class NotRigid(KernelError):
    pass


class NotQuasiIso(KernelError):
    pass


class SupportMismatch(KernelError):
    pass


class SearchExhausted(KernelError):
    pass


class BaseNotSupported(KernelError):
    pass


class InfiniteFlatDimension(KernelError):
    pass


class EmptySupport(KernelError):
    pass
