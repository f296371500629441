"""Attribute terms and access requests.

A request carries a set of attribute facts (category attributes such as
``subject(doctor)`` plus external-state facts such as ``age(p,17)``)
and a separate set of error attributes. Error attributes are the
declarative stand-in for attributes whose evaluation failed: matching
against one yields an indeterminate outcome instead of a plain hit or
miss, which makes indeterminacy reproducible from the request text.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .errors import InvalidInputError, SourceSpan

CATEGORIES = ("subject", "action", "resource", "environment")

Constant = Union[str, int]


@dataclass(frozen=True, repr=False)
class AttributeTerm:
    """A named fact: a category attribute or an external-state predicate."""

    name: str
    args: tuple[Constant, ...]
    span: SourceSpan | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not self.args:
            raise InvalidInputError(f"attribute {self.name!r} needs arguments")
        if any(not isinstance(a, (str, int)) for a in self.args):
            raise InvalidInputError(
                f"attribute {self.name!r} arguments must be ground constants"
            )
        if self.name in CATEGORIES and len(self.args) != 1:
            raise InvalidInputError(
                f"category attribute {self.name!r} takes exactly one argument"
            )

    @property
    def is_category(self) -> bool:
        return self.name in CATEGORIES

    def __str__(self) -> str:
        return f"{self.name}({','.join(str(a) for a in self.args)})"

    def __repr__(self) -> str:
        return f"AttributeTerm({self})"


@dataclass(frozen=True)
class Request:
    """Immutable attribute facts plus the attributes marked as erroneous."""

    facts: frozenset[AttributeTerm]
    error_attributes: frozenset[AttributeTerm] = frozenset()

    def __post_init__(self) -> None:
        if not self.facts:
            raise InvalidInputError("a request needs at least one attribute fact")
        overlap = self.facts & self.error_attributes
        if overlap:
            raise InvalidInputError(
                f"attributes listed both as facts and as errors: "
                f"{sorted(str(t) for t in overlap)}"
            )

    def constants(self) -> tuple[Constant, ...]:
        """Constants occurring as fact arguments, deduplicated, in a
        deterministic order (strings before numbers)."""
        seen = {arg for fact in self.facts for arg in fact.args}
        strings = sorted(a for a in seen if isinstance(a, str))
        numbers = sorted(a for a in seen if not isinstance(a, str))
        return tuple(strings) + tuple(numbers)
