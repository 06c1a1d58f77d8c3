"""Exception hierarchy shared by every module.

Each error carries a short machine-readable ``code`` so the CLI can surface
it in JSON mode without string matching.
"""

from __future__ import annotations


class SkeinError(ValueError):
    code = "domain-error"


class VarSetMismatch(SkeinError):
    code = "varset-mismatch"


class FormMismatch(SkeinError):
    code = "form-mismatch"


class UnknownGenerator(SkeinError):
    code = "unknown-generator"


class CompatibilityError(SkeinError):
    code = "incompatible-hom"


class NotProportional(SkeinError):
    code = "not-reflection-proportional"


class ZeroElement(SkeinError):
    code = "zero-element"


class MembershipError(SkeinError):
    code = "not-a-member"


class MalformedData(SkeinError):
    code = "malformed-data"


class IllegalTag(SkeinError):
    code = "illegal-tag"


class ExcludedSurface(SkeinError):
    code = "excluded-surface"


class UnmatchedFamily(SkeinError):
    code = "unmatched-family"


class ProjectionError(SkeinError):
    code = "not-in-diamond"
