"""Decision value domains and the lattice primitives everything else uses.

Three families of values flow through evaluation:

* ``Decision3`` -- three-valued outcomes of match, target and condition
  checks, totally ordered BOTTOM <= INDET <= TOP;
* ``Decision6`` -- six-valued policy decisions that split applicable and
  indeterminate outcomes by effect;
* ``PairValue`` / ``PairValue9`` -- the numeric [deny, permit] encoding
  over {0, 1/2, 1}, ordered componentwise.

The three six-element decision lattices used by the combining
algorithms are stored as explicit cover relations, transcribed rather
than derived, and joins are computed from them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import InvalidInputError, UnknownLatticeError

ZERO = Fraction(0)
HALF = Fraction(1, 2)
ONE = Fraction(1)

_LEVELS = (ZERO, HALF, ONE)


class Decision3(enum.Enum):
    """Three-valued outcome: no, cannot tell, yes."""

    BOTTOM = 0
    INDET = 1
    TOP = 2

    @property
    def rank(self) -> int:
        return self.value

    @property
    def token(self) -> str:
        return _D3_TOKENS[self]


_D3_TOKENS = {
    Decision3.BOTTOM: "bottom",
    Decision3.INDET: "indeterminate",
    Decision3.TOP: "top",
}


def glb3(values: Iterable[Decision3]) -> Decision3:
    """Greatest lower bound; an empty collection yields TOP."""
    return min(values, key=lambda v: v.rank, default=Decision3.TOP)


def lub3(values: Iterable[Decision3]) -> Decision3:
    """Least upper bound; an empty collection yields BOTTOM."""
    return max(values, key=lambda v: v.rank, default=Decision3.BOTTOM)


class Effect(enum.Enum):
    DENY = "deny"
    PERMIT = "permit"

    @property
    def token(self) -> str:
        return self.value


class Decision6(enum.Enum):
    """Six-valued policy decision.

    Member order is the fixed enumeration order used wherever decision
    sequences are enumerated, so reports stay reproducible.
    """

    NOT_APPLICABLE = "NotApplicable"
    INDET_D = "Indeterminate{D}"
    INDET_P = "Indeterminate{P}"
    INDET_DP = "Indeterminate{DP}"
    DENY = "Deny"
    PERMIT = "Permit"

    @property
    def canonical(self) -> str:
        return self.value

    @classmethod
    def from_canonical(cls, text: str) -> "Decision6":
        for member in cls:
            if member.value == text:
                return member
        raise InvalidInputError(f"unknown decision name: {text!r}")

    @property
    def is_applicable(self) -> bool:
        return self in (Decision6.PERMIT, Decision6.DENY)

    @property
    def is_indeterminate(self) -> bool:
        return self in (Decision6.INDET_D, Decision6.INDET_P, Decision6.INDET_DP)


def arrow(f: Decision3, g: Decision3) -> Decision3:
    """Gate ``g`` behind ``f``: pass ``g`` through only when ``f`` is TOP."""
    return g if f is Decision3.TOP else f


def sigma(x: Decision3, effect: Effect) -> Decision6:
    """Lift a three-valued outcome into the six-valued domain for an effect.

    BOTTOM stays inapplicable; TOP and INDET pick up the effect as
    their annotation.
    """
    if x is Decision3.BOTTOM:
        return Decision6.NOT_APPLICABLE
    if x is Decision3.TOP:
        return Decision6.PERMIT if effect is Effect.PERMIT else Decision6.DENY
    return Decision6.INDET_P if effect is Effect.PERMIT else Decision6.INDET_D


def _level_text(value: Fraction) -> str:
    return str(value)


@dataclass(frozen=True, eq=False, repr=False)
class PairValue9:
    """A [deny, permit] value with components drawn from {0, 1/2, 1}.

    All nine component combinations are legal, including the conflict
    value [1,1]; the order is componentwise.
    """

    deny: Fraction
    permit: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "deny", Fraction(self.deny))
        object.__setattr__(self, "permit", Fraction(self.permit))
        if (self.deny, self.permit) not in self._legal():
            raise InvalidInputError(
                f"illegal {type(self).__name__} components "
                f"[{self.deny},{self.permit}]"
            )
        # Small-int ranks of the components (0, 1/2, 1 -> 0, 1, 2); the
        # combiner hot paths compare these instead of Fractions.
        object.__setattr__(self, "deny_level", _LEVELS.index(self.deny))
        object.__setattr__(self, "permit_level", _LEVELS.index(self.permit))

    @classmethod
    def _legal(cls) -> frozenset:
        return _LEGAL_9

    def __eq__(self, other: object) -> bool:
        # PairValue narrows PairValue9; equality is by components so the
        # same point compares equal across the two types.
        if isinstance(other, PairValue9):
            return self.deny == other.deny and self.permit == other.permit
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.deny, self.permit))

    def __str__(self) -> str:
        return f"[{_level_text(self.deny)},{_level_text(self.permit)}]"

    def __repr__(self) -> str:
        return f"{type(self).__name__}{self}"


_LEGAL_9 = frozenset((d, p) for d in _LEVELS for p in _LEVELS)
_LEGAL_6 = frozenset(
    [(ZERO, ZERO), (HALF, ZERO), (ZERO, HALF), (HALF, HALF), (ONE, ZERO), (ZERO, ONE)]
)


class PairValue(PairValue9):
    """The six-member restriction of ``PairValue9`` actually reachable
    by the standard combining algorithms."""

    @classmethod
    def _legal(cls) -> frozenset:
        return _LEGAL_6

    def widen(self) -> PairValue9:
        return PairValue9(self.deny, self.permit)


PAIR6_VALUES = tuple(
    PairValue(d, p) for d in _LEVELS for p in _LEVELS if (d, p) in _LEGAL_6
)
PAIR9_VALUES = tuple(PairValue9(d, p) for d in _LEVELS for p in _LEVELS)

# Interned instances indexed by component levels, for the hot paths.
PAIR9_BY_LEVEL = tuple(
    tuple(PairValue9(_LEVELS[d], _LEVELS[p]) for p in range(3)) for d in range(3)
)
PAIR6_BY_LEVEL = {
    (v.deny_level, v.permit_level): v for v in PAIR6_VALUES
}


_DELTA: Mapping[Decision6, PairValue] = {
    Decision6.NOT_APPLICABLE: PairValue(ZERO, ZERO),
    Decision6.INDET_D: PairValue(HALF, ZERO),
    Decision6.INDET_P: PairValue(ZERO, HALF),
    Decision6.INDET_DP: PairValue(HALF, HALF),
    Decision6.DENY: PairValue(ONE, ZERO),
    Decision6.PERMIT: PairValue(ZERO, ONE),
}

_DELTA_INVERSE = {(v.deny, v.permit): k for k, v in _DELTA.items()}


def delta(x: Decision6) -> PairValue:
    """Encode a six-valued decision as its [deny, permit] pair."""
    return _DELTA[x]


def delta_seq(decisions: Iterable[Decision6]) -> tuple[PairValue, ...]:
    return tuple(_DELTA[d] for d in decisions)


def delta_inverse(value: PairValue) -> Decision6:
    decision = _DELTA_INVERSE.get((value.deny, value.permit))
    if decision is None:
        raise InvalidInputError(f"{value} has no six-valued counterpart")
    return decision


def leq_pair(a: PairValue9, b: PairValue9) -> bool:
    """Componentwise order on pair values, with 0 <= 1/2 <= 1."""
    return a.deny <= b.deny and a.permit <= b.permit


def max_pair(values: Iterable[PairValue9]) -> PairValue9:
    """Componentwise maximum; the empty collection yields [0,0]."""
    deny = 0
    permit = 0
    for v in values:
        if v.deny_level > deny:
            deny = v.deny_level
        if v.permit_level > permit:
            permit = v.permit_level
    return PAIR9_BY_LEVEL[deny][permit]


def min_pair(values: Iterable[PairValue9]) -> PairValue9:
    """Componentwise minimum; the empty collection yields [1,1]."""
    deny = 2
    permit = 2
    for v in values:
        if v.deny_level < deny:
            deny = v.deny_level
        if v.permit_level < permit:
            permit = v.permit_level
    return PAIR9_BY_LEVEL[deny][permit]


class FiniteLattice:
    """One of the fixed finite lattices, given by its cover relation.

    The order is the reflexive-transitive closure of the covers; join
    and meet tables are computed once and must be unique, which the
    constructor verifies.
    """

    def __init__(self, name: str, elements: tuple, covers: tuple):
        self.name = name
        self.elements = tuple(elements)
        self.covers = tuple(covers)
        leq = {(e, e) for e in self.elements} | set(self.covers)
        changed = True
        while changed:
            changed = False
            for (a, b) in list(leq):
                for (c, d) in list(leq):
                    if b == c and (a, d) not in leq:
                        leq.add((a, d))
                        changed = True
        self._leq = frozenset(leq)
        self.bottom = self._unique_extreme(lambda e, x: (e, x))
        self.top = self._unique_extreme(lambda e, x: (x, e))
        self._join = {}
        self._meet = {}
        for a in self.elements:
            for b in self.elements:
                self._join[(a, b)] = self._bound(a, b, upper=True)
                self._meet[(a, b)] = self._bound(a, b, upper=False)

    def _unique_extreme(self, orient):
        found = [
            e
            for e in self.elements
            if all(orient(e, x) in self._leq for x in self.elements)
        ]
        if len(found) != 1:
            raise InvalidInputError(f"lattice {self.name} has no unique extreme")
        return found[0]

    def _bound(self, a, b, upper: bool):
        if upper:
            candidates = [
                u for u in self.elements if (a, u) in self._leq and (b, u) in self._leq
            ]
            best = [u for u in candidates if all((u, v) in self._leq for v in candidates)]
        else:
            candidates = [
                u for u in self.elements if (u, a) in self._leq and (u, b) in self._leq
            ]
            best = [u for u in candidates if all((v, u) in self._leq for v in candidates)]
        if len(best) != 1:
            raise InvalidInputError(
                f"{self.name}: no unique {'join' if upper else 'meet'} "
                f"for {a!r} and {b!r}"
            )
        return best[0]

    def leq(self, a, b) -> bool:
        return (a, b) in self._leq

    def join(self, a, b):
        return self._join[(a, b)]

    def meet(self, a, b):
        return self._meet[(a, b)]

    def lub(self, values: Iterable):
        result = self.bottom
        for v in values:
            result = self._join[(result, v)]
        return result

    def glb(self, values: Iterable):
        result = self.top
        for v in values:
            result = self._meet[(result, v)]
        return result


_D6 = Decision6

# Cover edges transcribed from the three decision-lattice diagrams.
_PO_COVERS = (
    (_D6.NOT_APPLICABLE, _D6.INDET_P),
    (_D6.NOT_APPLICABLE, _D6.INDET_D),
    (_D6.INDET_D, _D6.DENY),
    (_D6.INDET_P, _D6.INDET_DP),
    (_D6.DENY, _D6.INDET_DP),
    (_D6.INDET_DP, _D6.PERMIT),
)

_DO_COVERS = (
    (_D6.NOT_APPLICABLE, _D6.INDET_D),
    (_D6.NOT_APPLICABLE, _D6.INDET_P),
    (_D6.INDET_P, _D6.PERMIT),
    (_D6.INDET_D, _D6.INDET_DP),
    (_D6.PERMIT, _D6.INDET_DP),
    (_D6.INDET_DP, _D6.DENY),
)

_O1A_COVERS = (
    (_D6.NOT_APPLICABLE, _D6.DENY),
    (_D6.DENY, _D6.INDET_D),
    (_D6.INDET_D, _D6.INDET_DP),
    (_D6.NOT_APPLICABLE, _D6.PERMIT),
    (_D6.PERMIT, _D6.INDET_P),
    (_D6.INDET_P, _D6.INDET_DP),
)

V6_LATTICES: Mapping[str, FiniteLattice] = {
    "po": FiniteLattice("po", tuple(Decision6), _PO_COVERS),
    "do": FiniteLattice("do", tuple(Decision6), _DO_COVERS),
    "o1a": FiniteLattice("o1a", tuple(Decision6), _O1A_COVERS),
}


def lub_order(order: str, values: Iterable[Decision6]) -> Decision6:
    """Least upper bound in the named decision lattice (po, do or o1a).

    The empty collection yields the lattice bottom, NOT_APPLICABLE in
    all three.
    """
    lattice = V6_LATTICES.get(order)
    if lattice is None:
        raise UnknownLatticeError(f"unknown decision lattice: {order!r}")
    return lattice.lub(values)
