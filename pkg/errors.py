# -*- coding: utf-8 -*-
"""Exception hierarchy shared by the library and the CLI (exit codes live on the classes)."""

from __future__ import annotations


class FdwError(Exception):
    """Base class; `exit_code` is what app.run returns when this escapes a command."""

    exit_code = 1


class ValidationError(FdwError, ValueError):
    """Bad parameters, unsupported ranges, window too small."""

    exit_code = 2


class SchemeFileError(ValidationError):
    """Malformed JSON coefficient file."""

    def __init__(self, path: str, reason: str):
        super().__init__("scheme file %s: %s" % (path, reason))
        self.path = path
        self.reason = reason


class ResidueConditionError(ValidationError):
    """The simple-zero conditions at z = -1 do not hold; `half` is "first" or "second"."""

    def __init__(self, half: str, message: str):
        super().__init__(message)
        self.half = half


class NumericalDiagnosticError(FdwError, RuntimeError):
    """A numerical self-check failed."""

    exit_code = 3


class BranchInconsistencyError(NumericalDiagnosticError):
    pass


class PoleError(NumericalDiagnosticError):
    """The boundary determinant vanishes at z."""

    def __init__(self, z: complex, message: str = ""):
        super().__init__(message or "boundary determinant vanishes at z = %r" % (z,))
        self.z = z
