"""Cyclic reduced words in the rank-2 free group F(x, y).

A free homotopy class of a closed curve in the once-punctured torus is a
conjugacy class in F(x, y), where x is the class crossing the vertical cut
circle once (rightward) and y the class crossing the horizontal cut circle
once (upward).  We name such classes by cyclically reduced words in a fixed
canonical rotation, quotienting by inversion because curves are unoriented.

Letters are small ints so that the canonical letter order x < x^-1 < y < y^-1
is the natural integer order:

    X, XI, Y, YI = 0, 1, 2, 3
"""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

X, XI, Y, YI = 0, 1, 2, 3

_NAMES = ("x", "x-", "y", "y-")

Word = Tuple[int, ...]


def inv_letter(a: int) -> int:
    """Inverse letter: x <-> x^-1, y <-> y^-1."""
    return a ^ 1


def word_str(w: Sequence[int]) -> str:
    return "." .join(_NAMES[a] for a in w) if w else "1"


def free_reduce(letters: Iterable[int]) -> list[int]:
    """Remove adjacent inverse pairs until none remain (stack reduction)."""
    out: list[int] = []
    for a in letters:
        if out and out[-1] == inv_letter(a):
            out.pop()
        else:
            out.append(a)
    return out


def cyclic_reduce(letters: Iterable[int]) -> list[int]:
    """Freely reduce, then cancel across the cyclic seam."""
    w = free_reduce(letters)
    while len(w) >= 2 and w[0] == inv_letter(w[-1]):
        w = w[1:-1]
    return w


def invert_word(w: Sequence[int]) -> list[int]:
    return [inv_letter(a) for a in reversed(w)]


def _least_rotation(w: Sequence[int]) -> Tuple[int, ...]:
    """Lexicographically least rotation (Booth-style; words here are short)."""
    n = len(w)
    if n == 0:
        return ()
    doubled = tuple(w) + tuple(w)
    best = 0
    for i in range(1, n):
        if doubled[i : i + n] < doubled[best : best + n]:
            best = i
    return doubled[best : best + n]


def abelianization(w: Sequence[int]) -> Tuple[int, int]:
    """Image in H_1 of the torus: (total x-exponent, total y-exponent)."""
    dx = sum(1 for a in w if a == X) - sum(1 for a in w if a == XI)
    dy = sum(1 for a in w if a == Y) - sum(1 for a in w if a == YI)
    return dx, dy


def reduce_word(raw: Iterable[int]) -> Word:
    """Canonical name of the unoriented conjugacy class of ``raw``.

    Cyclically reduces, then takes the lexicographically least rotation of
    the word and of its inverse (a word and its inverse name the same
    unoriented curve).  The empty word names the trivial class.
    """
    w = cyclic_reduce(raw)
    if not w:
        return ()
    return min(_least_rotation(w), _least_rotation(invert_word(w)))


def primitive_root(w: Sequence[int]) -> Tuple[Tuple[int, ...], int]:
    """Write the cyclic word as root**power with maximal power.

    Assumes ``w`` is already cyclically reduced.
    """
    n = len(w)
    if n == 0:
        return (), 1
    for d in range(1, n + 1):
        if n % d:
            continue
        root = tuple(w[:d])
        if root * (n // d) == tuple(w):
            return root, n // d
    return tuple(w), 1


def word_power(w: Sequence[int], k: int) -> Word:
    if k < 0:
        raise ValueError("negative power")
    return tuple(w) * k


def parse_word(text: str) -> Word:
    """Parse 'x.y.x-.y-' style text (inverse marked by trailing '-')."""
    if text in ("", "1"):
        return ()
    table = {name: i for i, name in enumerate(_NAMES)}
    letters = []
    for tok in text.split("."):
        if tok not in table:
            raise ValueError(f"bad letter {tok!r}")
        letters.append(table[tok])
    return tuple(letters)
