"""Bounded order-preserving maps, toggles, rowmotion, toggle-promotion.

An ell-bounded partition assigns each poset element a value in 0..ell,
weakly increasing upward.  The toggle at p reflects its value inside
[max of lower covers, min of upper covers], where missing covers
contribute the virtual bounds 0 and ell.  Rowmotion composes all
toggles along a linear extension, maximal elements first;
toggle-promotion groups toggles along diagonals of V x [q-2].
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .poset import Element, LinearExtension, Poset, linear_extensions, \
    make_v, product_with_chain, v_chain_layers

__all__ = [
    "PPartition", "PosetAutomorphism", "enumerate_ppartitions", "toggle",
    "rowmotion", "togpro", "apply_automorphism", "flip_automorphism",
]


@dataclass(frozen=True)
class PPartition:
    """An order-preserving map poset -> {0, ..., ell}."""

    poset: Poset
    ell: int
    values: tuple[int, ...]  # aligned with poset.elements

    def __post_init__(self):
        if self.ell < 0:
            raise ValueError("ell must be >= 0")
        if len(self.values) != len(self.poset):
            raise ValueError("one value per element required")
        if any(not 0 <= v <= self.ell for v in self.values):
            raise ValueError(f"values must lie in 0..{self.ell}")
        for a, b in self.poset.covers:
            if self.value(a) > self.value(b):
                raise ValueError(f"values decrease across {a!r} < {b!r}")

    def value(self, p: Element) -> int:
        return self.values[self.poset.index(p)]

    def to_json(self) -> dict:
        k = v_chain_layers(self.poset)
        if k is None:
            raise ValueError("JSON form is defined for V x [k] only")
        return {"poset": "VxK", "k": k, "ell": self.ell,
                "values": {f"({p},{i})": self.value((p, i))
                           for p, i in self.poset.elements}}

    @classmethod
    def from_json(cls, data: dict) -> "PPartition":
        if data.get("poset") != "VxK":
            raise ValueError("unsupported poset tag")
        poset = product_with_chain(make_v(), data["k"])
        values = tuple(data["values"][f"({p},{i})"] for p, i in poset.elements)
        return cls(poset, data["ell"], values)

    def __repr__(self) -> str:
        return f"PPartition({self.values})"


def enumerate_ppartitions(poset: Poset, ell: int) -> Iterator[PPartition]:
    """All ell-bounded partitions, lexicographic on the value sequence
    read in element order."""
    if ell < 0:
        raise ValueError("ell must be >= 0")
    elems = poset.elements
    m = len(elems)
    below = [[j for j in range(i) if poset.leq(elems[j], elems[i])]
             for i in range(m)]
    above = [[j for j in range(i) if poset.leq(elems[i], elems[j])]
             for i in range(m)]
    values = [0] * m

    def rec(i: int) -> Iterator[PPartition]:
        if i == m:
            yield PPartition(poset, ell, tuple(values))
            return
        lo = max((values[j] for j in below[i]), default=0)
        hi = min((values[j] for j in above[i]), default=ell)
        for v in range(lo, hi + 1):
            values[i] = v
            yield from rec(i + 1)

    return rec(0)


def _toggle_index(f_values: list[int], poset: Poset, ell: int, idx: int) -> None:
    e = poset.elements[idx]
    top = min((f_values[poset.index(u)] for u in poset.upper_covers(e)),
              default=ell)
    bottom = max((f_values[poset.index(d)] for d in poset.lower_covers(e)),
                 default=0)
    f_values[idx] = top + bottom - f_values[idx]


def toggle(p: Element, f: PPartition) -> PPartition:
    """Reflect the value at p within the window its covers allow."""
    idx = f.poset.index(p)
    values = list(f.values)
    _toggle_index(values, f.poset, f.ell, idx)
    return PPartition(f.poset, f.ell, tuple(values))


@lru_cache(maxsize=None)
def _default_extension(poset: Poset) -> LinearExtension:
    return next(iter(linear_extensions(poset)))


def rowmotion(f: PPartition, ext: LinearExtension | None = None) -> PPartition:
    """Toggle every element once, from maximal down to minimal along a
    linear extension.  The result does not depend on the extension; the
    default is the canonical first one."""
    if ext is None:
        ext = _default_extension(f.poset)
    elif ext.poset != f.poset:
        raise ValueError("linear extension belongs to a different poset")
    values = list(f.values)
    poset = f.poset
    for e in reversed(ext.order()):
        _toggle_index(values, poset, f.ell, poset.index(e))
    return PPartition(poset, f.ell, tuple(values))


def togpro(f: PPartition, q: int) -> PPartition:
    """Toggle-promotion on V x [q-2]: sweep k = 1, 2, ... toggling the
    diagonal {(p, i) : i = q - 1 + rk(p) - k} at each step."""
    k_layers = v_chain_layers(f.poset)
    if k_layers is None or k_layers != q - 2:
        raise ValueError(f"poset must be V x [{q - 2}] for q={q}")
    values = list(f.values)
    poset = f.poset
    for k in range(1, q):
        for p, rk in (("A", 0), ("B", 1), ("C", 1)):
            i = q - 1 + rk - k
            if 1 <= i <= q - 2:
                _toggle_index(values, poset, f.ell, poset.index((p, i)))
    return PPartition(poset, f.ell, tuple(values))


@dataclass(frozen=True)
class PosetAutomorphism:
    """A cover-preserving bijection of a poset onto itself."""

    poset: Poset
    mapping: tuple[Element, ...]  # image of each element, in element order

    def __post_init__(self):
        if sorted(map(self.poset.index, self.mapping)) != list(range(len(self.poset))):
            raise ValueError("mapping is not a bijection on the elements")
        for a, b in self.poset.covers:
            if (self(a), self(b)) not in self.poset.covers:
                raise ValueError(f"image of cover ({a!r}, {b!r}) is not a cover")

    def __call__(self, e: Element) -> Element:
        return self.mapping[self.poset.index(e)]

    def inverse(self) -> "PosetAutomorphism":
        inv = [None] * len(self.poset)
        for e, img in zip(self.poset.elements, self.mapping):
            inv[self.poset.index(img)] = e
        return PosetAutomorphism(self.poset, tuple(inv))


def flip_automorphism(poset: Poset) -> PosetAutomorphism:
    """The automorphism exchanging B and C (layerwise on V x [k])."""
    swap = {"A": "A", "B": "C", "C": "B"}
    if poset == make_v():
        mapping = tuple(swap[p] for p in poset.elements)
    elif v_chain_layers(poset) is not None:
        mapping = tuple((swap[p], i) for p, i in poset.elements)
    else:
        raise ValueError("flip is defined on V and V x [k] only")
    return PosetAutomorphism(poset, mapping)


def apply_automorphism(psi: PosetAutomorphism, f: PPartition) -> PPartition:
    """Relabel a partition along an automorphism: the new value at p is
    the old value at psi(p)."""
    if psi.poset != f.poset:
        raise ValueError("automorphism belongs to a different poset")
    values = tuple(f.value(psi(p)) for p in f.poset.elements)
    return PPartition(f.poset, f.ell, values)
