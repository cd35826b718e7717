"""Combinatorial wiring of the (2+6n)-ray pair gadget.

One description serves both the geometric builder (which instantiates the
slots with actual rays) and the abstract assignment problems (which only
need vertices, edges and basis triples).  Local slot layout:

    0: psi (outer +)        1: phi (outer -)
    per level k = 1..n, starting at 2 + 6*(k-1):
        +0 e_{k,+}   +1 e_{k,-}
        +2 x^{k+}_+  +3 x^{k+}_-    completions of the (k,+) basis
        +4 x^{k-}_+  +5 x^{k-}_-    completions of the (k,-) basis

x^{k,eps}_sigma is orthogonal to e_{k,eps} (its basis head) and to the
level-(k+1) chain ray of branch sigma, where level n+1 means (psi, phi).
Every edge listed is an orthogonality the geometry must realize.
"""

from __future__ import annotations

from dataclasses import dataclass

_BRANCHES = ("+", "-")


def chain_slot(k: int, branch: str) -> int:
    """Local index of chain ray e_{k,branch}."""
    return 2 + 6 * (k - 1) + (0 if branch == "+" else 1)


def completion_slot(k: int, branch: str, sigma: str) -> int:
    """Local index of completion ray x^{k,branch}_sigma."""
    offset = 2 if branch == "+" else 4
    return 2 + 6 * (k - 1) + offset + (0 if sigma == "+" else 1)


@dataclass(frozen=True)
class GadgetWiring:
    """Vertices, basis triples, and orthogonality edges of one gadget."""

    order: int
    labels: tuple[str, ...]
    bases: tuple[tuple[int, int, int], ...]
    basis_tags: tuple[tuple[int, str], ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.labels)


def gadget_wiring(order: int) -> GadgetWiring:
    """Wiring of the pair gadget with `order` nested levels (order >= 1)."""
    if order < 1:
        raise ValueError(f"gadget order must be positive, got {order}")
    labels = ["psi", "phi"]
    for k in range(1, order + 1):
        labels.extend(
            [
                f"e{k}+",
                f"e{k}-",
                f"x{k}++",
                f"x{k}+-",
                f"x{k}-+",
                f"x{k}--",
            ]
        )
    bases: list[tuple[int, int, int]] = []
    basis_tags: list[tuple[int, str]] = []
    edges: list[tuple[int, int]] = []

    def add_edge(u: int, v: int) -> None:
        edges.append((u, v) if u < v else (v, u))

    for k in range(1, order + 1):
        for branch in _BRANCHES:
            head = chain_slot(k, branch)
            plus = completion_slot(k, branch, "+")
            minus = completion_slot(k, branch, "-")
            bases.append((head, plus, minus))
            basis_tags.append((k, branch))
            add_edge(head, plus)
            add_edge(head, minus)
            add_edge(plus, minus)
            for sigma, slot in (("+", plus), ("-", minus)):
                if k == order:
                    outer = 0 if sigma == "+" else 1
                else:
                    outer = chain_slot(k + 1, sigma)
                add_edge(slot, outer)
    add_edge(chain_slot(1, "+"), chain_slot(1, "-"))
    return GadgetWiring(
        order=order,
        labels=tuple(labels),
        bases=tuple(bases),
        basis_tags=tuple(basis_tags),
        edges=tuple(edges),
    )
