"""Raising and lowering operators on words of letters, via the signature rule.

For an index i, scan the word mapping letter i to "+", letter i+1 to "-",
everything else transparent, then cancel adjacent "+-" pairs until none
remain.  The lowering operator turns the leftmost surviving "+" into i+1;
the raising operator turns the rightmost surviving "-" into i.  Either
returns None when nothing survives, the word-level analogue of the
operator killing the element.

The only consumer in this package is verify_embedding, which checks that
reading tableaux along an admissible order gives a set of words closed
under both operators.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .pictures import TotalOrder
from .shapes import Partition
from .tableaux import enumerate_ssyt, reading_by_order


class IndexOutOfRange(ValueError):
    """Operator index outside the valid range for the letter bound."""


def _checked(word: Sequence[int], i: int, max_letter: int) -> tuple[int, ...]:
    if not 1 <= i <= max_letter - 1:
        raise IndexOutOfRange(f"index {i} not in 1..{max_letter - 1}")
    letters = tuple(word)
    for a in letters:
        if not 1 <= a <= max_letter:
            raise ValueError(f"letter {a} outside 1..{max_letter}")
    return letters


def _survivors(letters: tuple[int, ...], i: int) -> tuple[list[int], list[int]]:
    """Positions of the uncancelled plus and minus signs, left to right.

    A minus cancels the nearest unmatched plus to its left, so a stack of
    plus positions implements the repeated cancellation in one pass.
    """
    plus: list[int] = []
    minus: list[int] = []
    for k, a in enumerate(letters):
        if a == i:
            plus.append(k)
        elif a == i + 1:
            if plus:
                plus.pop()
            else:
                minus.append(k)
    return plus, minus


def lowering_operator(word: Sequence[int], i: int,
                      max_letter: int) -> tuple[int, ...] | None:
    """Turn the leftmost uncancelled letter i into i+1, or return None."""
    letters = _checked(word, i, max_letter)
    plus, _ = _survivors(letters, i)
    if not plus:
        return None
    out = list(letters)
    out[plus[0]] = i + 1
    return tuple(out)


def raising_operator(word: Sequence[int], i: int,
                     max_letter: int) -> tuple[int, ...] | None:
    """Turn the rightmost uncancelled letter i+1 into i, or return None."""
    letters = _checked(word, i, max_letter)
    _, minus = _survivors(letters, i)
    if not minus:
        return None
    out = list(letters)
    out[minus[-1]] = i
    return tuple(out)


class EmbeddingReport(NamedTuple):
    ok: bool
    counterexample: dict | None


def verify_embedding(shape: Partition, max_entry: int,
                     order: TotalOrder) -> EmbeddingReport:
    """Check that reading along the order embeds the tableau set into words.

    The image of the reading map must be closed under both operators:
    applying either to an image word yields None or another image word.
    The first violation is returned as the counterexample.
    """
    image = {reading_by_order(tab, order).letters
             for tab in enumerate_ssyt(shape, max_entry)}
    for word in sorted(image):
        for i in range(1, max_entry):
            for name, operator in (("lowering", lowering_operator),
                                   ("raising", raising_operator)):
                result = operator(word, i, max_entry)
                if result is not None and result not in image:
                    return EmbeddingReport(False, {
                        "word": list(word),
                        "operator": name,
                        "index": i,
                        "result": list(result),
                    })
    return EmbeddingReport(True, None)
