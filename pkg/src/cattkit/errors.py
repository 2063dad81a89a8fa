"""Structured errors raised by the checkers, combinatorial builders and translators.

Every failure mode of the kernel is a distinct exception class so that the
command line driver can map it to exactly one diagnostic kind.
"""
from __future__ import annotations


class KernelError(Exception):
    """Base class of every structured error raised by this package."""


# ---------------------------------------------------------------------------
# raw syntax

class IndexOutOfRange(KernelError):
    def __init__(self, idx: int, bound: int):
        super().__init__(f"variable index {idx} out of range (bound {bound})")
        self.idx = idx
        self.bound = bound


# ---------------------------------------------------------------------------
# GSeTT judgements

class IllTypedEntry(KernelError):
    def __init__(self, position: int, cause: KernelError):
        super().__init__(f"context entry {position} is ill-typed: {cause}")
        self.position = position
        self.cause = cause


class SourceTypeMismatch(KernelError):
    def __init__(self, cause: KernelError):
        super().__init__(f"source of arrow type does not check: {cause}")
        self.cause = cause


class TargetTypeMismatch(KernelError):
    def __init__(self, cause: KernelError):
        super().__init__(f"target of arrow type does not check: {cause}")
        self.cause = cause


class VariableTypeMismatch(KernelError):
    def __init__(self, idx: int, actual, expected):
        super().__init__(
            f"variable {idx} has type {actual!r}, expected {expected!r}")
        self.idx = idx
        self.actual = actual
        self.expected = expected


class CohNotAllowedInGSeTT(KernelError):
    def __init__(self):
        super().__init__("coherence terms are not part of GSeTT")


class LengthMismatch(KernelError):
    def __init__(self, got: int, expected: int):
        super().__init__(
            f"substitution has {got} entries, codomain has {expected}")
        self.got = got
        self.expected = expected


class EntryIllTyped(KernelError):
    def __init__(self, position: int, cause: KernelError):
        super().__init__(f"substitution entry {position} is ill-typed: {cause}")
        self.position = position
        self.cause = cause


# ---------------------------------------------------------------------------
# pasting schemes

class NotAPastingContext(KernelError):
    def __init__(self, position: int, reason: str):
        super().__init__(f"not a pasting context (entry {position}): {reason}")
        self.position = position
        self.reason = reason


# ---------------------------------------------------------------------------
# CaTT coherence rule

class NotPasting(KernelError):
    def __init__(self, cause: KernelError):
        super().__init__(f"coherence context is not a pasting context: {cause}")
        self.cause = cause


class TypeNotArrow(KernelError):
    def __init__(self, ty):
        super().__init__(f"coherence type must be an arrow type, got {ty!r}")
        self.ty = ty


class SideConditionFailedSource(KernelError):
    def __init__(self, boundary_vars: frozenset, required_vars: frozenset):
        super().__init__(
            "source side condition failed: boundary variables "
            f"{sorted(boundary_vars)} != required {sorted(required_vars)}")
        self.boundary_vars = boundary_vars
        self.required_vars = required_vars


class SideConditionFailedTarget(KernelError):
    def __init__(self, boundary_vars: frozenset, required_vars: frozenset):
        super().__init__(
            "target side condition failed: boundary variables "
            f"{sorted(boundary_vars)} != required {sorted(required_vars)}")
        self.boundary_vars = boundary_vars
        self.required_vars = required_vars


class SubstitutionIllTyped(KernelError):
    def __init__(self, cause: KernelError):
        super().__init__(f"coherence substitution is ill-typed: {cause}")
        self.cause = cause


class AnnotationMismatch(KernelError):
    def __init__(self, expected, actual):
        super().__init__(
            f"term does not have the annotated type: expected {expected!r}, "
            f"computed {actual!r}")
        self.expected = expected
        self.actual = actual


# ---------------------------------------------------------------------------
# globular sets

class NotCardinal(KernelError):
    def __init__(self, reason: str):
        super().__init__(f"not a globular cardinal: {reason}")
        self.reason = reason


class NotParallel(KernelError):
    def __init__(self, reason: str):
        super().__init__(f"cells are not parallel: {reason}")
        self.reason = reason


# ---------------------------------------------------------------------------
# Batanin trees and zigzags

class NotSmooth(KernelError):
    def __init__(self, seq, reason: str):
        super().__init__(f"not a smooth zigzag sequence {seq!r}: {reason}")
        self.seq = seq
        self.reason = reason


# ---------------------------------------------------------------------------
# computads

class UnknownGenerator(KernelError):
    def __init__(self, dim: int, gen: int):
        super().__init__(f"unknown generator ({dim}, {gen})")
        self.dim = dim
        self.gen = gen


class NotFull(KernelError):
    def __init__(self, path: str):
        super().__init__(f"sphere is not full at {path}")
        self.path = path


class DimensionViolation(KernelError):
    def __init__(self, path: str, reason: str):
        super().__init__(f"dimension violation at {path}: {reason}")
        self.path = path
        self.reason = reason


class InvalidSphere(KernelError):
    def __init__(self, path: str, cause: KernelError | str):
        super().__init__(f"invalid sphere at {path}: {cause}")
        self.path = path
        self.cause = cause


class InvalidCell(KernelError):
    def __init__(self, path: str, cause: KernelError | str):
        super().__init__(f"invalid cell at {path}: {cause}")
        self.path = path
        self.cause = cause


class DomainMismatch(KernelError):
    def __init__(self, reason: str):
        super().__init__(f"domain mismatch: {reason}")
        self.reason = reason
