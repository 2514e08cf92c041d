"""Turn a decomposition tree into an ordered assembly manual."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .hierarchy import PfdTree
from .model import Connection, ModelGraph


@dataclass(frozen=True)
class AssemblyStep:
    step_number: int
    target: frozenset[int]
    parts: tuple[frozenset[int], ...]
    dir: int
    joins: frozenset[Connection]


@dataclass(frozen=True)
class InstructionPlan:
    steps: tuple[AssemblyStep, ...]

    def __len__(self) -> int:
        return len(self.steps)


class IncompleteTree(ValueError):
    pass


def postorder(t: PfdTree) -> list[frozenset[int]]:
    """Children left to right, then the node itself."""
    out: list[frozenset[int]] = []
    stack = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded or not node.children:
            out.append(node.node)
        else:
            stack.append((node, True))
            stack.extend((c, False) for c in reversed(node.children))
    return out


def emit_plan(t: PfdTree) -> InstructionPlan:
    """One step per internal node, in postorder.  Leaves need no assembly."""
    if stuck := t.stuck_components():
        raise IncompleteTree(
            "tree has irreducible components: " + "; ".join(str(sorted(c)) for c in stuck)
        )
    by_node = {n.node: n for n in t.walk()}
    steps = []
    for node in postorder(t):
        sub = by_node[node]
        if sub.children:
            steps.append(
                AssemblyStep(
                    len(steps) + 1,
                    sub.node,
                    tuple(c.node for c in sub.children),
                    sub.dir,
                    sub.removed,
                )
            )
    return InstructionPlan(tuple(steps))


def render_plan(plan: InstructionPlan, g: ModelGraph) -> str:
    """Plain-text manual; block ids are the ones from the input model."""
    if not plan.steps:
        return "Model is a single block; no assembly required.\n"

    def fmt(component: frozenset[int]) -> str:
        return "[" + ", ".join(map(str, g.source_ids(component))) + "]"

    paragraphs = []
    for step in plan.steps:
        lines = [
            f"Step {step.step_number}: assemble {fmt(step.target)}",
            "  parts: " + ", ".join(fmt(p) for p in step.parts),
            f"  along direction {g.directions[step.dir]}",
            "  joins:",
        ]
        for e in sorted(step.joins, key=lambda e: (g.source_pair(e), e.key)):
            u, v = g.source_pair(e)
            line = f"    {u} -> {v}"
            if e.meta:
                line += " " + json.dumps(e.meta, sort_keys=True)
            lines.append(line)
        paragraphs.append("\n".join(lines))
    return "\n\n".join(paragraphs) + "\n"


def plan_to_dict(plan: InstructionPlan, g: ModelGraph) -> dict:
    """Machine-readable mirror of a plan, using input block ids."""
    return {
        "steps": [
            {
                "step": s.step_number,
                "target": g.source_ids(s.target),
                "parts": [g.source_ids(p) for p in s.parts],
                "direction": s.dir,
                "vector": list(g.directions[s.dir].vector),
                "joins": [
                    {"from": u, "to": v, **({"meta": e.meta} if e.meta else {})}
                    for e in sorted(s.joins, key=lambda e: (g.source_pair(e), e.key))
                    for u, v in [g.source_pair(e)]
                ],
            }
            for s in plan.steps
        ]
    }
