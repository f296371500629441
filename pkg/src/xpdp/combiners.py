"""The combining algorithms, in both decision encodings.

Every standard algorithm exists twice: once over six-valued decisions
(a least upper bound in a purpose-built lattice, plus two duplicate
detection cases for only-one-applicable) and once over the pairwise
[deny, permit] encoding (a case analysis over componentwise maxima).
``check_equivalence`` enumerates decision sequences exhaustively and
confirms the two formulations agree through the pair encoding of the
six-valued result.

The all-permit algorithm exists only in the pair encoding; asking for
it under v6 is an error rather than an invented extension.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

from .decisions import (
    HALF,
    ONE,
    PAIR6_BY_LEVEL,
    ZERO,
    Decision6,
    PairValue,
    delta,
    delta_seq,
    lub_order,
    max_pair,
    min_pair,
)
from .errors import (
    EncodingUnsupportedError,
    InvalidInputError,
    UnknownCombinerError,
)


class CombinerId(enum.Enum):
    PERMIT_OVERRIDES = "p-o"
    DENY_OVERRIDES = "d-o"
    FIRST_APPLICABLE = "f-a"
    ONLY_ONE_APPLICABLE = "o-1-a"
    ALL_PERMIT = "all-permit"

    @property
    def token(self) -> str:
        return self.value

    @classmethod
    def from_token(cls, token: str) -> "CombinerId":
        for member in cls:
            if member.value == token:
                return member
        raise UnknownCombinerError(f"unknown combining algorithm: {token!r}")


STANDARD_COMBINERS = (
    CombinerId.PERMIT_OVERRIDES,
    CombinerId.DENY_OVERRIDES,
    CombinerId.FIRST_APPLICABLE,
    CombinerId.ONLY_ONE_APPLICABLE,
)


def combine_po_v6(decisions: Sequence[Decision6]) -> Decision6:
    """Permit-overrides: least upper bound in the permit-overrides lattice."""
    return lub_order("po", decisions)


def combine_do_v6(decisions: Sequence[Decision6]) -> Decision6:
    """Deny-overrides: least upper bound in the deny-overrides lattice."""
    return lub_order("do", decisions)


def combine_fa_v6(decisions: Sequence[Decision6]) -> Decision6:
    """First-applicable: the first decision that is not NOT_APPLICABLE."""
    for d in decisions:
        if d is not Decision6.NOT_APPLICABLE:
            return d
    return Decision6.NOT_APPLICABLE


def _duplicated_against_blanks(decisions: Sequence[Decision6], value: Decision6) -> bool:
    # Two or more occurrences of `value`, everything else NOT_APPLICABLE.
    # Evaluated on the sequence, so duplicates count even though the
    # lattice fallback works on the set of values.
    hits = 0
    for d in decisions:
        if d is value:
            hits += 1
        elif d is not Decision6.NOT_APPLICABLE:
            return False
    return hits >= 2


def combine_o1a_v6(decisions: Sequence[Decision6]) -> Decision6:
    """Only-one-applicable: indeterminate when several decisions apply."""
    decisions = tuple(decisions)  # consumed twice
    if _duplicated_against_blanks(decisions, Decision6.DENY):
        return Decision6.INDET_D
    if _duplicated_against_blanks(decisions, Decision6.PERMIT):
        return Decision6.INDET_P
    return lub_order("o1a", decisions)


# Interned results; the case analyses work on the small-int component
# levels (0, 1/2, 1 as 0, 1, 2) rather than on Fractions.
_PAIR_NA = PairValue(ZERO, ZERO)
_PAIR_INDET_D = PairValue(HALF, ZERO)
_PAIR_INDET_P = PairValue(ZERO, HALF)
_PAIR_INDET_DP = PairValue(HALF, HALF)
_PAIR_DENY = PairValue(ONE, ZERO)
_PAIR_PERMIT = PairValue(ZERO, ONE)


def _narrow(m) -> PairValue:
    narrowed = PAIR6_BY_LEVEL.get((m.deny_level, m.permit_level))
    if narrowed is None:
        raise InvalidInputError(f"combined value {m} has no six-valued form")
    return narrowed


def combine_po_pair(values: Sequence[PairValue]) -> PairValue:
    m = max_pair(values)
    if m.permit_level == 2:
        return _PAIR_PERMIT
    if m.permit_level == 1 and m.deny_level >= 1:
        return _PAIR_INDET_DP
    return _narrow(m)


def combine_do_pair(values: Sequence[PairValue]) -> PairValue:
    m = max_pair(values)
    if m.deny_level == 2:
        return _PAIR_DENY
    if m.deny_level == 1 and m.permit_level >= 1:
        return _PAIR_INDET_DP
    return _narrow(m)


def combine_fa_pair(values: Sequence[PairValue]) -> PairValue:
    for v in values:
        if v.deny_level or v.permit_level:
            return v
    return _PAIR_NA


def combine_o1a_pair(values: Sequence[PairValue]) -> PairValue:
    values = tuple(values)  # consumed twice
    m = max_pair(values)
    if m.deny_level >= 1 and m.permit_level >= 1:
        return _PAIR_INDET_DP
    if m.permit_level == 0 and m.deny_level >= 1:
        if sum(1 for v in values if v.deny_level >= 1) >= 2:
            return _PAIR_INDET_D
    if m.deny_level == 0 and m.permit_level >= 1:
        if sum(1 for v in values if v.permit_level >= 1) >= 2:
            return _PAIR_INDET_P
    return _narrow(m)


def combine_all_permit(values: Sequence[PairValue]) -> PairValue:
    """Permit only when every input is permit; anything else denies.

    Unanimity over the empty sequence fails, because the componentwise
    minimum [1,1] and maximum [0,0] of nothing cannot both be [0,1].
    """
    values = tuple(values)  # consumed twice
    if min_pair(values) == _PAIR_PERMIT and max_pair(values) == _PAIR_PERMIT:
        return _PAIR_PERMIT
    return _PAIR_DENY


_V6_COMBINERS: dict[CombinerId, Callable] = {
    CombinerId.PERMIT_OVERRIDES: combine_po_v6,
    CombinerId.DENY_OVERRIDES: combine_do_v6,
    CombinerId.FIRST_APPLICABLE: combine_fa_v6,
    CombinerId.ONLY_ONE_APPLICABLE: combine_o1a_v6,
}

_PAIR_COMBINERS: dict[CombinerId, Callable] = {
    CombinerId.PERMIT_OVERRIDES: combine_po_pair,
    CombinerId.DENY_OVERRIDES: combine_do_pair,
    CombinerId.FIRST_APPLICABLE: combine_fa_pair,
    CombinerId.ONLY_ONE_APPLICABLE: combine_o1a_pair,
    CombinerId.ALL_PERMIT: combine_all_permit,
}


def combine(combiner: CombinerId, encoding: str, decisions: Sequence):
    """Dispatch to the named algorithm under the named encoding."""
    if encoding == "v6":
        table = _V6_COMBINERS
    elif encoding == "pair":
        table = _PAIR_COMBINERS
    else:
        raise InvalidInputError(f"unknown encoding: {encoding!r}")
    fn = table.get(combiner)
    if fn is None:
        if combiner is CombinerId.ALL_PERMIT:
            raise EncodingUnsupportedError(
                "all-permit is only defined under the pair encoding"
            )
        raise UnknownCombinerError(f"unknown combining algorithm: {combiner!r}")
    return fn(decisions)


@dataclass(frozen=True)
class Counterexample:
    decisions: tuple[Decision6, ...]
    v6_result: Decision6
    pair_result: PairValue


@dataclass(frozen=True)
class EquivalenceReport:
    """Outcome of exhaustively comparing the two encodings of one algorithm."""

    algorithm: CombinerId
    max_length: int
    sequences_checked: int
    counterexamples: tuple[Counterexample, ...]

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def check_equivalence(algorithm: CombinerId, max_length: int) -> EquivalenceReport:
    """Compare both encodings on every decision sequence up to a length.

    Sequences are enumerated by length, lexicographically in the fixed
    ``Decision6`` member order, so the report (counts and the order of
    any counterexamples) is deterministic.
    """
    if algorithm is CombinerId.ALL_PERMIT:
        raise EncodingUnsupportedError(
            "all-permit has no v6 formulation to compare against"
        )
    if algorithm not in _V6_COMBINERS:
        raise UnknownCombinerError(f"unknown combining algorithm: {algorithm!r}")
    if max_length < 0:
        raise InvalidInputError("max_length must be >= 0")

    v6_fn = _V6_COMBINERS[algorithm]
    pair_fn = _PAIR_COMBINERS[algorithm]
    members = tuple(Decision6)
    checked = 0
    bad: list[Counterexample] = []
    for length in range(max_length + 1):
        for seq in itertools.product(members, repeat=length):
            checked += 1
            v6_result = v6_fn(seq)
            pair_result = pair_fn(delta_seq(seq))
            if delta(v6_result) != pair_result:
                bad.append(Counterexample(seq, v6_result, pair_result))
    return EquivalenceReport(algorithm, max_length, checked, tuple(bad))
