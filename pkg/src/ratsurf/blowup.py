"""Multiplicity trees: the singular points infinitely near a rational one.

Blowing up the singular point leaves new singular points exactly where the
fundamental cycle pairs to zero; their resolution graphs are the connected
components of the vertices with Z.E_i = 0, with edges and weights inherited.
Recursing gives a tree of singularities. Components whose own multiplicity
is 1 or 2 are rational double points; they contribute nothing to the
dimension formulas downstream, so they are pruned from the tree, but their
count is kept for reporting.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .resgraph import (
    Cycle,
    NotRationalError,
    ResolutionGraph,
    fundamental_cycle,
    is_rational,
    is_reduced,
    multiplicity,
)


class NotApplicableError(ValueError):
    """The root singularity is a rational double point (multiplicity < 3)."""


@dataclass
class MultiplicityTree:
    """One singular point of the blow-up tower and everything beneath it."""

    graph: ResolutionGraph
    cycle: Cycle
    mult: int
    reduced: bool
    children: list = field(default_factory=list)
    dropped_rdp_count: int = 0

    def iter_nodes(self):
        """Preorder traversal of the tree."""
        yield self
        for child in self.children:
            yield from child.iter_nodes()

    def multiplicities(self) -> list:
        return [node.mult for node in self.iter_nodes()]

    def reduced_everywhere(self) -> bool:
        """Every node's fundamental cycle is reduced (pruned RDPs do not count)."""
        return all(node.reduced for node in self.iter_nodes())

    def __repr__(self) -> str:
        return "MultiplicityTree(mult=%d, children=%d, dropped=%d)" % (
            self.mult,
            len(self.children),
            self.dropped_rdp_count,
        )


def blowup_components(g: ResolutionGraph, z: Cycle) -> list:
    """Connected components of {E_i : Z.E_i = 0} as graphs of their own.

    Components come back ordered by their smallest contained vertex id;
    vertex ids and weights are inherited from g, as are internal edges with
    multiplicity.
    """
    if z.graph is not g:
        raise ValueError("cycle belongs to a different graph")
    keep = [i for i in range(g.n) if z.dot_vertex(g.ids[i]) == 0]
    keep_set = set(keep)
    seen = set()
    components = []
    for start in keep:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        frontier = [start]
        while frontier:
            i = frontier.pop()
            for j in g.neighbors(i):
                if j in keep_set and j not in seen:
                    seen.add(j)
                    comp.append(j)
                    frontier.append(j)
        comp.sort()
        vertices = [(g.ids[i], g.b[i]) for i in comp]
        edges = []
        for i in comp:
            for j, mult in g.neighbors(i).items():
                if j in keep_set and i < j:
                    edges.extend([(g.ids[i], g.ids[j])] * mult)
        components.append(ResolutionGraph(vertices, edges))
    components.sort(key=lambda c: min(c.ids))
    return components


def _build(g: ResolutionGraph) -> MultiplicityTree:
    z = fundamental_cycle(g)
    mult = -z.self_intersection()
    children = []
    dropped = 0
    for comp in blowup_components(g, z):
        if not is_rational(comp):
            # cannot happen for rational input; guard against corrupt state
            raise RuntimeError("internal: blow-up component is not rational")
        if multiplicity(comp) <= 2:
            dropped += 1
        else:
            children.append(_build(comp))
    return MultiplicityTree(
        graph=g,
        cycle=z,
        mult=mult,
        reduced=is_reduced(z),
        children=children,
        dropped_rdp_count=dropped,
    )


def multiplicity_tree(g: ResolutionGraph) -> MultiplicityTree:
    """Tree of infinitely near singular points with multiplicity >= 3.

    Raises NotRationalError for non-rational input and NotApplicableError
    when the root itself is a rational double point.
    """
    if not is_rational(g):
        raise NotRationalError("the singularity is not rational")
    if multiplicity(g) <= 2:
        raise NotApplicableError(
            "the singularity is a rational double point; the tree starts at multiplicity 3"
        )
    return _build(g)
