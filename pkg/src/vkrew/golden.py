"""Worked examples used as golden data by the verification suites.

Everything here is fixed reference data for one 18-letter word, its
six-layer block form, and two small standardization examples; the
"figures" suite recomputes each piece and compares exactly.
"""

from __future__ import annotations

from .kreweras import KrewerasWord
from .poset import LinearExtension, make_v, product_with_chain
from .pstrict import PStrictLabeling, restriction_rq
from .words import PartialMultiKrewerasWord

# Linear extension of V x [6] and its image under promotion, as fibers
# of labels along the A, B, C chains.
EXT18_FIBERS = {"A": (1, 3, 6, 7, 11, 14),
                "B": (4, 5, 8, 13, 15, 18),
                "C": (2, 9, 10, 12, 16, 17)}
EXT18_PROMOTED_FIBERS = {"A": (1, 2, 5, 6, 10, 13),
                         "B": (3, 4, 7, 12, 14, 17),
                         "C": (8, 9, 11, 15, 16, 18)}

# The same pair as Kreweras words.
WORD18 = "ACABBAABCCACBABCCB"
WORD18_PROMOTED = "AABBAABCCACBABCCBC"

# Arc sets of the 18-letter word's bump diagram.
ARCS18_B = frozenset({(1, 5), (3, 4), (6, 18), (7, 8), (11, 13), (14, 15)})
ARCS18_C = frozenset({(1, 2), (3, 17), (6, 10), (7, 9), (11, 12), (14, 16)})

# A (6,9) block word, the labeling it encodes, its layer decomposition,
# and everything promotion does to it.
WORD69_TEXT = "A|CA|BBAA|BCCA|C|BA|B|CC|B"
WORD69_PROMOTED_TEXT = "AA|BBAA|BCCA|C|BA|B|CC|B|C"
LABELING69_FIBERS = {"A": (1, 2, 3, 3, 4, 6),
                     "B": (3, 3, 4, 6, 7, 9),
                     "C": (2, 4, 4, 5, 8, 8)}
LAYERS69 = ((1, 3, 2), (2, 3, 8), (3, 4, 4), (3, 9, 4), (4, 6, 5), (6, 7, 8))
LAYERS69_PROMOTED = ((1, 2, 7), (1, 2, 9), (2, 3, 3), (2, 8, 3), (3, 5, 4),
                     (5, 6, 7))
WORD69_DOUBLE_ARCS = [(3, 4)]
WORD69_DELETED_TEXT = "A|CA|BBA|CA|C|BA|B|CC|B"

# Two (2,4) block words sharing one standardization.
STD_PAIRS = (
    ("∅|AA|CC|BB", "AACCBB", (0, 2, 2, 2)),
    ("A|A|CC|BB", "AACCBB", (1, 1, 2, 2)),
)


def extension_from_fibers(n: int, fibers: dict[str, tuple[int, ...]]) -> LinearExtension:
    """Build a linear extension of V x [n] from per-chain label fibers."""
    poset = product_with_chain(make_v(), n)
    labels = [0] * len(poset)
    for p, chain in fibers.items():
        for i, label in enumerate(chain, start=1):
            labels[poset.index((p, i))] = label
    return LinearExtension(poset, tuple(labels))


def ext18() -> LinearExtension:
    return extension_from_fibers(6, EXT18_FIBERS)


def ext18_promoted() -> LinearExtension:
    return extension_from_fibers(6, EXT18_PROMOTED_FIBERS)


def word18() -> KrewerasWord:
    return KrewerasWord(WORD18)


def word69() -> PartialMultiKrewerasWord:
    return PartialMultiKrewerasWord.from_text(WORD69_TEXT)


def labeling69() -> PStrictLabeling:
    rf = restriction_rq(make_v(), 9)
    return PStrictLabeling(rf, 6, (LABELING69_FIBERS["A"],
                                   LABELING69_FIBERS["B"],
                                   LABELING69_FIBERS["C"]))
