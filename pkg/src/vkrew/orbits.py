"""Orbit decomposition of a bijection acting on a finite set."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Callable, Iterable, TypeVar

X = TypeVar("X")

__all__ = ["OrbitReport", "orbit_cycles", "power_map", "orbit_decomposition"]


class ActionError(ValueError):
    """The map is not a bijection of the given set onto itself."""


def orbit_cycles(step: Callable[[X], X], elements: Iterable[X]) -> list[list[X]]:
    """Cycles of ``step`` on ``elements``; raises ActionError if the map
    leaves the set or identifies two elements."""
    items = list(elements)
    index = {x: i for i, x in enumerate(items)}
    if len(index) != len(items):
        raise ActionError("enumeration repeats an element")
    image = []
    hit = [0] * len(items)
    for x in items:
        y = step(x)
        if y not in index:
            raise ActionError(f"action leaves the set at {x!r} -> {y!r}")
        image.append(index[y])
        hit[index[y]] += 1
    for i, count in enumerate(hit):
        if count != 1:
            raise ActionError(f"{items[i]!r} has {count} preimages; not a bijection")
    seen = [False] * len(items)
    cycles = []
    for start in range(len(items)):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(items[i])
            i = image[i]
        cycles.append(cycle)
    return cycles


def power_map(cycles: list[list[X]], t: int) -> dict[X, X]:
    """x -> step^t(x) assembled from precomputed cycles."""
    out = {}
    for cycle in cycles:
        size = len(cycle)
        for i, x in enumerate(cycle):
            out[x] = cycle[(i + t) % size]
    return out


@dataclass
class OrbitReport:
    """Orbit statistics of one named action at one parameter point."""

    action: str
    params: dict
    count: int
    orbit_sizes: tuple[int, ...]  # sorted descending
    order: int
    checks: dict[str, bool] = field(default_factory=dict)
    counterexamples: dict = field(default_factory=dict)

    def __post_init__(self):
        if sum(self.orbit_sizes) != self.count:
            raise ValueError("orbit sizes do not sum to the element count")
        expected = lcm(*self.orbit_sizes) if self.orbit_sizes else 1
        if self.order != expected:
            raise ValueError(f"order {self.order} != lcm {expected}")

    @property
    def all_checks_pass(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        data = {
            "action": self.action,
            "params": dict(self.params),
            "count": self.count,
            "orbit_sizes": list(self.orbit_sizes),
            "order": self.order,
            "checks": dict(self.checks),
        }
        if self.counterexamples:
            data["counterexamples"] = dict(self.counterexamples)
        return data

    @classmethod
    def from_json(cls, data: dict) -> "OrbitReport":
        return cls(action=data["action"], params=dict(data["params"]),
                   count=data["count"],
                   orbit_sizes=tuple(data["orbit_sizes"]),
                   order=data["order"], checks=dict(data["checks"]),
                   counterexamples=dict(data.get("counterexamples", {})))


def orbit_decomposition(action: str, step: Callable[[X], X],
                        elements: Iterable[X],
                        params: dict | None = None) -> OrbitReport:
    """Partition a finite set into cycles of a named action."""
    cycles = orbit_cycles(step, elements)
    sizes = tuple(sorted((len(c) for c in cycles), reverse=True))
    return OrbitReport(action=action, params=dict(params or {}),
                       count=sum(sizes), orbit_sizes=sizes,
                       order=lcm(*sizes) if sizes else 1)
