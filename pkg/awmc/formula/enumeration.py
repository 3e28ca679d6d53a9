"""Exhaustive enumeration of normalized formulas up to a syntax-tree depth."""
from typing import AbstractSet, Iterator, List, Tuple

from awmc.formula.syntax import TOP, And, Atom, Formula, Knows, Not


def iter_formulas(
    atom_set: AbstractSet[str], agents: AbstractSet[str], max_depth: int
) -> Iterator[Formula]:
    """Yields every normalized formula of depth at most ``max_depth``, layer by layer.

    Within a layer the order is negations, then conjunctions as ordered pairs, then
    knowledge formulas by sorted agent. Atoms and agents are visited in sorted order,
    so the sequence is deterministic.
    """
    assert max_depth >= 0, f"Expected a non-negative depth, actual: {max_depth}"
    sorted_agents = sorted(agents)
    layers: List[Tuple[Formula, ...]] = [
        (TOP,) + tuple(Atom(name) for name in sorted(atom_set))
    ]
    yield from layers[0]
    below: List[Formula] = list(layers[0])
    for _ in range(max_depth):
        previous = layers[-1]
        layer: List[Formula] = [Not(phi) for phi in previous]
        previous_set = set(previous)
        layer.extend(
            And(left, right)
            for left in below
            for right in below
            if left in previous_set or right in previous_set
        )
        layer.extend(Knows(agent, phi) for agent in sorted_agents for phi in previous)
        yield from layer
        layers.append(tuple(layer))
        below.extend(layer)


def enumerate_formulas(
    atom_set: AbstractSet[str], agents: AbstractSet[str], max_depth: int
) -> Tuple[Formula, ...]:
    """Every normalized formula over ``atom_set`` and ``agents`` of depth at most ``max_depth``, each once.

    Args:
        atom_set: The atoms that may occur
        agents: The agents that may index a knowledge operator
        max_depth: The maximal height of the syntax tree, leaves have depth 0

    Returns:
        The formulas in the deterministic order of :func:`iter_formulas`
    """
    return tuple(iter_formulas(atom_set, agents, max_depth))


def count_formulas(n_atoms: int, n_agents: int, max_depth: int) -> int:
    """Counts the formulas :func:`enumerate_formulas` produces, without building them.

    With ``c(d)`` the number of formulas of depth at most ``d``,
    ``c(0) = n_atoms + 1`` and ``c(d) = c(0) + (1 + n_agents) * c(d - 1) + c(d - 1) ** 2``.
    """
    assert max_depth >= 0, f"Expected a non-negative depth, actual: {max_depth}"
    leaves = n_atoms + 1
    count = leaves
    for _ in range(max_depth):
        count = leaves + (1 + n_agents) * count + count**2
    return count
