"""Block Kreweras words: ell of each letter spread over q blocks.

A word is a sequence of q multisets over {A, B, C} such that through
block i there are no more B's (and no more C's) than A's through block
i-1.  Words are in bijection with strict labelings of V x [ell] (block
index = label), carry the conjugated promotion action, and decompose
into noncrossing layers via a generalized bump diagram whose matchings
tolerate several closers per block.
"""

from __future__ import annotations

from dataclasses import dataclass

from .kreweras import KrewerasWord, is_crossing
from .poset import make_v
from .pstrict import PStrictLabeling, enumerate_labelings, promote_pstrict, \
    restriction_rq

__all__ = [
    "WordCountError", "WordPrefixError", "PartialMultiKrewerasWord",
    "VLayer", "GeneralizedBumpDiagram", "validate_word", "word_of_labeling",
    "labeling_of_word", "enumerate_words", "generalized_bump_diagram",
    "layer_decomposition", "promote_word", "promote_vlayer",
    "promote_word_layerwise", "double_arcs", "rotate_double_arc",
    "delete_double_arc", "shortest_arc_triples", "standardize",
    "destandardize", "swap_bc_word",
]

EMPTY_BLOCK = "∅"  # printed for a block with no letters


class WordCountError(ValueError):
    """A letter does not occur exactly ell times."""


class WordPrefixError(ValueError):
    """Some prefix holds more B's or C's than A's one block earlier."""


@dataclass(frozen=True)
class PartialMultiKrewerasWord:
    ell: int
    q: int
    blocks: tuple[tuple[int, int, int], ...]  # (#A, #B, #C) per block

    def __post_init__(self):
        if self.ell < 0 or self.q < 1:
            raise ValueError("need ell >= 0 and q >= 1")
        if len(self.blocks) != self.q:
            raise ValueError(f"expected {self.q} blocks, got {len(self.blocks)}")
        if any(len(b) != 3 or min(b) < 0 for b in self.blocks):
            raise ValueError("blocks must be triples of nonnegative counts")
        for letter, idx in (("A", 0), ("B", 1), ("C", 2)):
            total = sum(b[idx] for b in self.blocks)
            if total != self.ell:
                raise WordCountError(
                    f"{letter} occurs {total} times, expected {self.ell}")
        seen_a = 0
        seen_b = 0
        seen_c = 0
        for i, (na, nb, nc) in enumerate(self.blocks, start=1):
            seen_b += nb
            seen_c += nc
            if seen_b > seen_a or seen_c > seen_a:
                raise WordPrefixError(
                    f"block {i} accumulates {seen_b} B's / {seen_c} C's "
                    f"against {seen_a} earlier A's")
            seen_a += na

    def block(self, i: int) -> tuple[int, int, int]:
        if not 1 <= i <= self.q:
            raise ValueError(f"block {i} out of range 1..{self.q}")
        return self.blocks[i - 1]

    def block_size(self, i: int) -> int:
        return sum(self.block(i))

    def to_text(self) -> str:
        """Blocks joined by '|'; within a block B's, then C's, then A's."""
        parts = []
        for na, nb, nc in self.blocks:
            s = "B" * nb + "C" * nc + "A" * na
            parts.append(s if s else EMPTY_BLOCK)
        return "|".join(parts)

    @classmethod
    def from_text(cls, text: str) -> "PartialMultiKrewerasWord":
        blocks = []
        for part in text.split("|"):
            part = part.strip()
            if part in ("", EMPTY_BLOCK):
                blocks.append((0, 0, 0))
                continue
            if set(part) - set("ABC"):
                raise ValueError(f"bad block {part!r}")
            blocks.append((part.count("A"), part.count("B"), part.count("C")))
        ell = sum(b[0] for b in blocks)
        return cls(ell, len(blocks), tuple(blocks))

    def to_json(self) -> dict:
        return {"ell": self.ell, "q": self.q,
                "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, data: dict) -> "PartialMultiKrewerasWord":
        return cls(data["ell"], data["q"],
                   tuple(tuple(b) for b in data["blocks"]))

    def __repr__(self) -> str:
        return f"PartialMultiKrewerasWord({self.to_text()!r})"


def validate_word(blocks, ell: int, q: int) -> PartialMultiKrewerasWord:
    """Build a word from block count triples, or raise WordCountError /
    WordPrefixError describing what failed."""
    return PartialMultiKrewerasWord(ell, q, tuple(tuple(b) for b in blocks))


def word_of_labeling(f: PStrictLabeling) -> PartialMultiKrewerasWord:
    """Block i collects one letter p for every fiber entry f(p, .) = i."""
    if f.restriction.poset != make_v():
        raise ValueError("words model labelings of V only")
    blocks = []
    for i in range(1, f.q + 1):
        na, nb, nc = (f.fiber(p).count(i) for p in ("A", "B", "C"))
        blocks.append((na, nb, nc))
    return PartialMultiKrewerasWord(f.ell, f.q, tuple(blocks))


def labeling_of_word(w: PartialMultiKrewerasWord) -> PStrictLabeling:
    """Inverse of word_of_labeling: fibers list block indices in order."""
    rf = restriction_rq(make_v(), w.q)
    fibers = []
    for idx in range(3):
        fiber = []
        for i, counts in enumerate(w.blocks, start=1):
            fiber += [i] * counts[idx]
        fibers.append(tuple(fiber))
    return PStrictLabeling(rf, w.ell, tuple(fibers))


def enumerate_words(ell: int, q: int):
    """All (ell, q) words in the order inherited from labelings."""
    return (word_of_labeling(f) for f in enumerate_labelings(ell, q))


@dataclass(frozen=True)
class VLayer:
    """One V-shaped layer read off an A and its two closers' blocks."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if not (1 <= self.a < self.b and self.a < self.c):
            raise ValueError(f"not a strict V layer: {(self.a, self.b, self.c)}")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


def promote_vlayer(layer: VLayer, q: int) -> VLayer:
    """Promotion of a single V layer with labels in 1..q: shift all three
    labels down, the label 1 case recycling the smaller closer."""
    a, b, c = layer.as_tuple()
    if max(b, c) > q:
        raise ValueError(f"layer {layer} exceeds q={q}")
    if a > 1:
        return VLayer(a - 1, b - 1, c - 1)
    if b == c:
        return VLayer(b - 1, q, q)
    if b < c:
        return VLayer(b - 1, q, c - 1)
    return VLayer(c - 1, b - 1, q)


@dataclass(frozen=True)
class GeneralizedBumpDiagram:
    """Arc data of a word over its canonical slot order.

    Slots list every letter, block by block; within a block the B's come
    first, then the C's, then the A's.  Each matching pairs A slots with
    closer slots of its color by stack discipline, so arcs sharing a
    closer block nest rather than cross.
    """

    word: PartialMultiKrewerasWord
    slots: tuple[tuple[int, str], ...]            # (block, letter) per slot
    arcs_b: tuple[tuple[int, int], ...]           # (opener slot, closer slot)
    arcs_c: tuple[tuple[int, int], ...]

    def slot_block(self, pos: int) -> int:
        return self.slots[pos - 1][0]

    def opener_slots(self) -> tuple[int, ...]:
        """A slots in diagram order; the i-th is the opener of layer i."""
        return tuple(p for p, (_, ch) in enumerate(self.slots, start=1)
                     if ch == "A")

    def arcs_by_opener(self) -> dict[int, tuple[int, int]]:
        """opener slot -> (B closer slot, C closer slot)."""
        by_b = dict(self.arcs_b)
        by_c = dict(self.arcs_c)
        return {p: (by_b[p], by_c[p]) for p in self.opener_slots()}

    def layers(self) -> tuple[VLayer, ...]:
        """One layer per A, in diagram order of the A's."""
        out = []
        for p, (cb, cc) in sorted(self.arcs_by_opener().items()):
            out.append(VLayer(self.slot_block(p), self.slot_block(cb),
                              self.slot_block(cc)))
        return tuple(out)

    def double_arc_openers(self) -> tuple[int, ...]:
        """A slots whose B and C closers land in the same block."""
        return tuple(p for p, (cb, cc) in sorted(self.arcs_by_opener().items())
                     if self.slot_block(cb) == self.slot_block(cc))


def generalized_bump_diagram(w: PartialMultiKrewerasWord) -> GeneralizedBumpDiagram:
    """Build both matchings by one stack per color over the slot order."""
    slots: list[tuple[int, str]] = []
    for i, (na, nb, nc) in enumerate(w.blocks, start=1):
        slots += [(i, "B")] * nb + [(i, "C")] * nc + [(i, "A")] * na
    arcs = {"B": [], "C": []}
    stacks: dict[str, list[int]] = {"B": [], "C": []}
    for pos, (_, ch) in enumerate(slots, start=1):
        if ch == "A":
            stacks["B"].append(pos)
            stacks["C"].append(pos)
        else:
            if not stacks[ch]:
                raise ValueError("closer without an open A")
            arcs[ch].append((stacks[ch].pop(), pos))
    return GeneralizedBumpDiagram(
        w, tuple(slots), tuple(sorted(arcs["B"])), tuple(sorted(arcs["C"])))


def layer_decomposition(w: PartialMultiKrewerasWord) -> tuple[VLayer, ...]:
    """The multiset of V layers of a word, canonically sorted."""
    layers = generalized_bump_diagram(w).layers()
    return tuple(sorted(layers, key=VLayer.as_tuple))


def promote_word(w: PartialMultiKrewerasWord) -> PartialMultiKrewerasWord:
    """Promotion transported through the labeling bijection.  The empty
    word (ell = 0) is a fixed point."""
    if w.ell == 0:
        return w
    return word_of_labeling(promote_pstrict(labeling_of_word(w)))


def promote_word_layerwise(w: PartialMultiKrewerasWord) -> PartialMultiKrewerasWord:
    """Independent route: promote every layer and reassemble the blocks."""
    promoted = [promote_vlayer(layer, w.q) for layer in layer_decomposition(w)]
    blocks = [[0, 0, 0] for _ in range(w.q)]
    for layer in promoted:
        blocks[layer.a - 1][0] += 1
        blocks[layer.b - 1][1] += 1
        blocks[layer.c - 1][2] += 1
    return PartialMultiKrewerasWord(w.ell, w.q, tuple(tuple(b) for b in blocks))


def double_arcs(w: PartialMultiKrewerasWord) -> list[tuple[int, int]]:
    """Block pairs (opener block, closer block) of the double arcs, sorted,
    with multiplicity."""
    diagram = generalized_bump_diagram(w)
    by_opener = diagram.arcs_by_opener()
    pairs = [(diagram.slot_block(p), diagram.slot_block(cb))
             for p, (cb, cc) in by_opener.items()
             if diagram.slot_block(cb) == diagram.slot_block(cc)]
    return sorted(pairs)


def rotate_double_arc(arc: tuple[int, int], q: int) -> tuple[int, int]:
    """Where promotion sends a double arc: down one block on both ends,
    wrapping a block-1 opener to (closer-1, q)."""
    k, j = arc
    if k > 1:
        return (k - 1, j - 1)
    return (j - 1, q)


def delete_double_arc(w: PartialMultiKrewerasWord,
                      arc: tuple[int, int]) -> PartialMultiKrewerasWord:
    """Remove a double arc (one A from block k, one B and one C from
    block j), yielding an (ell-1, q) word."""
    k, j = arc
    if arc not in double_arcs(w):
        raise ValueError(f"no double arc {arc} in this word")
    blocks = [list(b) for b in w.blocks]
    blocks[k - 1][0] -= 1
    blocks[j - 1][1] -= 1
    blocks[j - 1][2] -= 1
    return PartialMultiKrewerasWord(w.ell - 1, w.q,
                                    tuple(tuple(b) for b in blocks))


def shortest_arc_triples(w: PartialMultiKrewerasWord) -> tuple[tuple[str, int, int], ...]:
    """Per A: the color and blocks of its shorter arc ('=' on a tie),
    as a canonically sorted multiset of (color, opener block, closer block)."""
    triples = []
    for layer in layer_decomposition(w):
        if layer.b < layer.c:
            triples.append(("B", layer.a, layer.b))
        elif layer.c < layer.b:
            triples.append(("C", layer.a, layer.c))
        else:
            triples.append(("=", layer.a, layer.b))
    return tuple(sorted(triples))


def standardize(w: PartialMultiKrewerasWord) -> tuple[KrewerasWord, tuple[int, ...]]:
    """Flatten a double-arc-free word to a Kreweras word plus block sizes.

    Within each block the closers are ordered so that arcs ending there
    nest (matched opener slot descending; openers are distinct absent
    double arcs), followed by the A's.
    """
    diagram = generalized_bump_diagram(w)
    if diagram.double_arc_openers():
        raise ValueError("word has double arcs; standardization undefined")
    opener_of = {c: o for o, c in diagram.arcs_b}
    opener_of.update({c: o for o, c in diagram.arcs_c})
    letters = []
    for i in range(1, w.q + 1):
        closers = [pos for pos, (blk, ch) in enumerate(diagram.slots, start=1)
                   if blk == i and ch != "A"]
        closers.sort(key=lambda pos: -opener_of[pos])
        letters += [diagram.slots[pos - 1][1] for pos in closers]
        letters += ["A"] * w.blocks[i - 1][0]
    sizes = tuple(w.block_size(i) for i in range(1, w.q + 1))
    return KrewerasWord("".join(letters)), sizes


def destandardize(word: KrewerasWord,
                  block_sizes: tuple[int, ...]) -> PartialMultiKrewerasWord:
    """Regroup a Kreweras word into blocks of the given sizes."""
    if sum(block_sizes) != len(word):
        raise ValueError(
            f"block sizes sum to {sum(block_sizes)}, word has {len(word)} letters")
    blocks = []
    pos = 0
    for size in block_sizes:
        chunk = word.letters[pos:pos + size]
        pos += size
        blocks.append((chunk.count("A"), chunk.count("B"), chunk.count("C")))
    return PartialMultiKrewerasWord(word.n, len(block_sizes), tuple(blocks))


def swap_bc_word(w: PartialMultiKrewerasWord) -> PartialMultiKrewerasWord:
    """Exchange the B and C counts in every block."""
    return PartialMultiKrewerasWord(
        w.ell, w.q, tuple((na, nc, nb) for na, nb, nc in w.blocks))


def same_block_closers_nest(word: KrewerasWord,
                            block_sizes: tuple[int, ...]) -> bool:
    """Check that no two arcs of a standardized word cross when both end
    inside the same block."""
    from .kreweras import bump_diagram

    block_of = {}
    pos = 0
    for i, size in enumerate(block_sizes, start=1):
        for _ in range(size):
            pos += 1
            block_of[pos] = i
    diagram = bump_diagram(word)
    arcs = sorted(diagram.arcs_b | diagram.arcs_c)
    for x in range(len(arcs)):
        for y in range(x + 1, len(arcs)):
            if block_of[arcs[x][1]] == block_of[arcs[y][1]] \
                    and is_crossing(arcs[x], arcs[y]):
                return False
    return True
