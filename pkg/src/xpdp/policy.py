"""The policy tree and its evaluation pipeline.

A policy tree is a PolicySet of PolicySets or Policies, each Policy a
non-empty sequence of Rules. Evaluation runs bottom-up: matches feed
targets, targets and conditions feed rules, rule decisions feed the
policy's combining algorithm, and so on to the root. An optional trace
records every intermediate value on the way.

Rule evaluation is implemented twice on purpose: once as the literal
three-case analysis and once as the composed gate-and-lift form. They
agree on all inputs; the test suite compares them exhaustively and the
evaluator uses the composed form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional, Union

from .combiners import CombinerId, combine
from .conditions import ConditionExpr, check_range_restriction, eval_condition
from .decisions import Decision3, Decision6, Effect, arrow, glb3, lub3, sigma
from .errors import InvalidInputError, SourceSpan
from .requests import AttributeTerm, Request

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _check_name(name: str) -> None:
    if not _NAME_RE.match(name):
        raise InvalidInputError(f"not a usable node name: {name!r}")


@dataclass(frozen=True)
class AllOf:
    """Conjunction of category matches; all must hit."""

    matches: tuple[AttributeTerm, ...]
    span: SourceSpan | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not self.matches:
            raise InvalidInputError("an all-of group needs at least one match")
        for m in self.matches:
            if not m.is_category:
                raise InvalidInputError(
                    f"target matches must use a category attribute, got {m}"
                )


@dataclass(frozen=True)
class AnyOf:
    """Disjunction of all-of groups; one hit suffices."""

    all_ofs: tuple[AllOf, ...]
    span: SourceSpan | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not self.all_ofs:
            raise InvalidInputError("an any-of group needs at least one all-of")


@dataclass(frozen=True)
class Target:
    """Applicability filter: a conjunction of any-of groups, or null.

    ``any_ofs`` is None for the null target, which applies to every
    request; a present tuple must be non-empty.
    """

    any_ofs: tuple[AnyOf, ...] | None

    def __post_init__(self) -> None:
        if self.any_ofs is not None and not self.any_ofs:
            raise InvalidInputError("a non-null target needs at least one any-of")

    @property
    def is_null(self) -> bool:
        return self.any_ofs is None


NULL_TARGET = Target(None)


@dataclass(frozen=True)
class Rule:
    name: str
    effect: Effect
    target: Target
    condition: ConditionExpr
    span: SourceSpan | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        _check_name(self.name)
        check_range_restriction(self.condition)


@dataclass(frozen=True)
class Policy:
    name: str
    target: Target
    rules: tuple[Rule, ...]
    combiner: CombinerId
    span: SourceSpan | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        _check_name(self.name)
        if not self.rules:
            raise InvalidInputError(f"policy {self.name!r} needs at least one rule")


@dataclass(frozen=True)
class PolicySet:
    name: str
    target: Target
    children: tuple["PolicyNode", ...]
    combiner: CombinerId
    span: SourceSpan | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        _check_name(self.name)
        kinds = {type(c) for c in self.children}
        if len(kinds) > 1:
            raise InvalidInputError(
                f"policy set {self.name!r} mixes policies and policy sets"
            )


PolicyNode = Union[Policy, PolicySet]


def eval_match(match: AttributeTerm, request: Request) -> Decision3:
    """TOP when the request carries the attribute, INDET when the
    attribute is marked erroneous, BOTTOM otherwise."""
    if match in request.error_attributes:
        return Decision3.INDET
    if match in request.facts:
        return Decision3.TOP
    return Decision3.BOTTOM


def eval_target(target: Target, request: Request) -> Decision3:
    """Meet over any-ofs of the join over all-ofs of the meet of matches;
    the null target always matches."""
    if target.any_ofs is None:
        return Decision3.TOP
    return glb3(
        lub3(
            glb3(eval_match(m, request) for m in all_of.matches)
            for all_of in any_of.all_ofs
        )
        for any_of in target.any_ofs
    )


def rule_decision(target_value: Decision3, condition_value: Decision3, effect: Effect) -> Decision6:
    """Composed form: gate the condition behind the target, lift by effect."""
    return sigma(arrow(target_value, condition_value), effect)


def rule_decision_cases(
    target_value: Decision3, condition_value: Decision3, effect: Effect
) -> Decision6:
    """Literal case analysis of rule evaluation; equals ``rule_decision``."""
    if target_value is Decision3.TOP and condition_value is Decision3.TOP:
        return Decision6.PERMIT if effect is Effect.PERMIT else Decision6.DENY
    if (
        target_value is Decision3.TOP and condition_value is Decision3.BOTTOM
    ) or target_value is Decision3.BOTTOM:
        return Decision6.NOT_APPLICABLE
    return Decision6.INDET_P if effect is Effect.PERMIT else Decision6.INDET_D


def eval_rule(rule: Rule, request: Request) -> Decision6:
    return rule_decision(
        eval_target(rule.target, request),
        eval_condition(rule.condition, request),
        rule.effect,
    )


_WEAKEN = {
    Decision6.PERMIT: Decision6.INDET_P,
    Decision6.DENY: Decision6.INDET_D,
    Decision6.INDET_P: Decision6.INDET_P,
    Decision6.INDET_D: Decision6.INDET_D,
    Decision6.INDET_DP: Decision6.INDET_DP,
}


def weaken_to_indeterminate(value: Decision6) -> Decision6:
    """Downgrade an applicable decision to the indeterminate value with
    the same effect annotation; indeterminates are unchanged."""
    weakened = _WEAKEN.get(value)
    if weakened is None:
        raise InvalidInputError("NotApplicable cannot be weakened")
    return weakened


def _node_result(
    target_value: Decision3,
    combined: Decision6,
    inputs: tuple[Decision6, ...],
) -> Decision6:
    # Case order matters: an indeterminate target weakens an applicable
    # or indeterminate combination; an unmatched target, or a matched
    # one whose members were all inapplicable, is inapplicable; anything
    # else passes the combination through (including the combined
    # NOT_APPLICABLE under an indeterminate target).
    if target_value is Decision3.INDET and combined is not Decision6.NOT_APPLICABLE:
        return weaken_to_indeterminate(combined)
    if target_value is Decision3.BOTTOM or (
        target_value is Decision3.TOP
        and all(v is Decision6.NOT_APPLICABLE for v in inputs)
    ):
        return Decision6.NOT_APPLICABLE
    return combined


@dataclass(frozen=True)
class TraceNode:
    """Everything the evaluator knew at one node."""

    path: tuple[int, ...]
    kind: str
    name: str
    target_value: Decision3
    condition_value: Decision3 | None
    combiner: CombinerId | None
    inputs: tuple[Decision6, ...]
    combined: Decision6 | None
    result: Decision6
    children: tuple["TraceNode", ...]

    def lines(self) -> list[str]:
        indent = "  " * len(self.path)
        path_text = "/" + "/".join(str(i) for i in self.path)
        parts = [f"{indent}{path_text} {self.kind} {self.name}:"]
        parts.append(f"target={self.target_value.token}")
        if self.condition_value is not None:
            parts.append(f"condition={self.condition_value.token}")
        if self.combiner is not None:
            inputs = ",".join(v.canonical for v in self.inputs)
            parts.append(f"combiner={self.combiner.token}")
            parts.append(f"inputs=[{inputs}]")
            parts.append(f"combined={self.combined.canonical}")
        parts.append(f"result={self.result.canonical}")
        out = [" ".join(parts)]
        for child in self.children:
            out.extend(child.lines())
        return out

    def to_obj(self) -> dict:
        obj: dict = {
            "path": list(self.path),
            "kind": self.kind,
            "name": self.name,
            "target": self.target_value.token,
        }
        if self.condition_value is not None:
            obj["condition"] = self.condition_value.token
        if self.combiner is not None:
            obj["combiner"] = self.combiner.token
            obj["inputs"] = [v.canonical for v in self.inputs]
            obj["combined"] = self.combined.canonical
        obj["result"] = self.result.canonical
        if self.children:
            obj["children"] = [c.to_obj() for c in self.children]
        return obj


@dataclass(frozen=True)
class EvalTrace:
    root: TraceNode

    @property
    def result(self) -> Decision6:
        return self.root.result

    def lines(self) -> list[str]:
        return self.root.lines()

    def to_obj(self) -> dict:
        return self.root.to_obj()


def _eval_rule_node(
    rule: Rule, request: Request, path: tuple[int, ...], want_trace: bool
) -> tuple[Decision6, Optional[TraceNode]]:
    target_value = eval_target(rule.target, request)
    condition_value = eval_condition(rule.condition, request)
    result = rule_decision(target_value, condition_value, rule.effect)
    if not want_trace:
        return result, None
    node = TraceNode(
        path=path,
        kind="rule",
        name=rule.name,
        target_value=target_value,
        condition_value=condition_value,
        combiner=None,
        inputs=(),
        combined=None,
        result=result,
        children=(),
    )
    return result, node


def _eval_node(
    node: PolicyNode, request: Request, path: tuple[int, ...], want_trace: bool
) -> tuple[Decision6, Optional[TraceNode]]:
    target_value = eval_target(node.target, request)
    inputs: list[Decision6] = []
    child_traces: list[TraceNode] = []
    if isinstance(node, Policy):
        kind = "policy"
        for i, rule in enumerate(node.rules):
            value, trace = _eval_rule_node(rule, request, path + (i,), want_trace)
            inputs.append(value)
            if trace is not None:
                child_traces.append(trace)
    else:
        kind = "policyset"
        for i, child in enumerate(node.children):
            value, trace = _eval_node(child, request, path + (i,), want_trace)
            inputs.append(value)
            if trace is not None:
                child_traces.append(trace)
    combined = combine(node.combiner, "v6", tuple(inputs))
    result = _node_result(target_value, combined, tuple(inputs))
    if not want_trace:
        return result, None
    trace_node = TraceNode(
        path=path,
        kind=kind,
        name=node.name,
        target_value=target_value,
        condition_value=None,
        combiner=node.combiner,
        inputs=tuple(inputs),
        combined=combined,
        result=result,
        children=tuple(child_traces),
    )
    return result, trace_node


def eval_policy(policy: Policy, request: Request) -> Decision6:
    decision, _ = _eval_node(policy, request, (), False)
    return decision


def eval_policyset(policy_set: PolicySet, request: Request) -> Decision6:
    decision, _ = _eval_node(policy_set, request, (), False)
    return decision


def evaluate(
    root: PolicyNode, request: Request, with_trace: bool = False
) -> tuple[Decision6, Optional[EvalTrace]]:
    """Evaluate a policy tree against a request.

    Returns the decision and, when requested, a trace whose root result
    equals the returned decision.
    """
    decision, trace_node = _eval_node(root, request, (), with_trace)
    trace = EvalTrace(trace_node) if trace_node is not None else None
    return decision, trace
