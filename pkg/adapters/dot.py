"""DOT export for graphs; node ids come from the label table when there is one."""

from __future__ import annotations

from core.errors import NotAGraph
from core.graph import is_undirected
from core.structure import LabelTable, Structure


def _node(g: Structure, tags: LabelTable | None, x: int) -> str:
    if tags is not None:
        return str(tags[x])
    return g.labels[x] if g.labels else f"x{x}"


def to_dot(g: Structure, tags: LabelTable | None = None, name: str = "G") -> str:
    if not g.is_graph:
        raise NotAGraph("DOT export is only defined for graphs")
    undirected = is_undirected(g)
    kind, arrow = ("graph", "--") if undirected else ("digraph", "->")
    lines = [f"{kind} {name} {{"]
    lines += [f'  "{_node(g, tags, x)}";' for x in g.domain]
    for u, v in g.edges:
        if undirected and u > v:
            continue
        lines.append(f'  "{_node(g, tags, u)}" {arrow} "{_node(g, tags, v)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
