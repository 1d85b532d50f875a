"""Naive oracles used by the tests, independent of the library internals."""

from __future__ import annotations


def naive_members(gens, bound):
    """All N0-combinations of gens up to bound, by breadth-first search."""
    members = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x + g
            if y <= bound and y not in members:
                members.add(y)
                frontier.append(y)
    return members


def naive_gaps(gens):
    """Gap list of <gens> by scanning for a run of min(gens) members."""
    smallest = min(gens)
    bound = smallest * max(gens) + smallest
    while True:
        members = naive_members(gens, bound)
        run = 0
        for n in range(1, bound + 1):
            run = run + 1 if n in members else 0
            if run == smallest:
                start = n - smallest + 1
                return [k for k in range(1, start) if k not in members]
        bound *= 2
