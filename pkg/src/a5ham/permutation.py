"""Exact arithmetic for permutations of {1,...,5}.

A permutation is a plain 5-tuple of images: ``g[i-1]`` is the value ``g``
sends ``i`` to.  Tuples give value semantics, hashing and a total
(lexicographic) order for free, which keeps every closure and orbit
computation deterministic.

Permutations act on the left: ``(g*s)(i) = g(s(i))``.  Walks in a Cayley
graph therefore append factors on the right, e.g. the walk ``a, b`` visits
``e, a, a*b``.
"""

from __future__ import annotations

from itertools import permutations as _permutations
from math import lcm
from typing import Iterable

Perm = tuple[int, int, int, int, int]

IDENTITY: Perm = (1, 2, 3, 4, 5)


def perm_from_images(images: Iterable[int]) -> Perm:
    """Validate and freeze an image array as a permutation."""
    g = tuple(images)
    if len(g) != 5 or sorted(g) != [1, 2, 3, 4, 5]:
        raise ValueError(f"not a permutation of 1..5: {g!r}")
    return g


def compose(g: Perm, s: Perm) -> Perm:
    """Product g*s under the left-action convention: (g*s)(i) = g(s(i))."""
    return (g[s[0] - 1], g[s[1] - 1], g[s[2] - 1], g[s[3] - 1], g[s[4] - 1])


def inverse(g: Perm) -> Perm:
    out = [0, 0, 0, 0, 0]
    for i in range(5):
        out[g[i] - 1] = i + 1
    return (out[0], out[1], out[2], out[3], out[4])


def power(g: Perm, k: int) -> Perm:
    if k < 0:
        return power(inverse(g), -k)
    out = IDENTITY
    for _ in range(k % element_order(g)):
        out = compose(out, g)
    return out


def conjugate(sigma: Perm, g: Perm) -> Perm:
    """sigma * g * sigma^-1."""
    return compose(compose(sigma, g), inverse(sigma))


def cycle_lengths(g: Perm) -> list[int]:
    seen: set[int] = set()
    lengths = []
    for i in range(1, 6):
        if i in seen:
            continue
        n, j = 1, g[i - 1]
        seen.add(i)
        while j != i:
            seen.add(j)
            j = g[j - 1]
            n += 1
        lengths.append(n)
    return lengths


def cycle_type(g: Perm) -> tuple[int, ...]:
    return tuple(sorted(n for n in cycle_lengths(g) if n > 1))


def element_order(g: Perm) -> int:
    return lcm(*cycle_lengths(g))


def is_even(g: Perm) -> bool:
    return sum(n - 1 for n in cycle_lengths(g)) % 2 == 0


def closure(gens: Iterable[Perm]) -> set[Perm]:
    """The subgroup generated by ``gens``, as an explicit element set.

    Iterates multiplication to a fixpoint; at order <= 120 this is always
    cheap and needs no stabilizer-chain machinery.
    """
    gen_list = [perm_from_images(g) for g in gens]
    if not gen_list:
        raise ValueError("closure of an empty generating set")
    elems = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        new = []
        for x in frontier:
            for g in gen_list:
                y = (x[g[0] - 1], x[g[1] - 1], x[g[2] - 1], x[g[3] - 1], x[g[4] - 1])
                if y not in elems:
                    elems.add(y)
                    new.append(y)
        frontier = new
    return elems


_S5: list[Perm] | None = None
_A5: list[Perm] | None = None


def s5_elements() -> list[Perm]:
    """All 120 permutations, lexicographically ordered by image array."""
    global _S5
    if _S5 is None:
        _S5 = [tuple(p) for p in _permutations((1, 2, 3, 4, 5))]
    return list(_S5)


def a5_elements() -> list[Perm]:
    """All 60 even permutations, lexicographically ordered."""
    global _A5
    if _A5 is None:
        _A5 = [g for g in s5_elements() if is_even(g)]
    return list(_A5)


# -- text form ---------------------------------------------------------------
#
# Cycle notation "(1,2)(3,4)", "e" or "()" for the identity, and image-array
# notation "[2,1,4,3,5]"; all accepted wherever a permutation is read.

def parse_perm(text: str) -> Perm:
    t = text.strip()
    if t in ("e", "()"):
        return IDENTITY
    if t.startswith("["):
        if not t.endswith("]"):
            raise ValueError(f"unterminated image array: {text!r}")
        body = t[1:-1].strip()
        try:
            images = [int(tok) for tok in body.split(",")] if body else []
        except ValueError:
            raise ValueError(f"bad image array: {text!r}") from None
        return perm_from_images(images)
    if not t.startswith("("):
        raise ValueError(f"bad permutation text: {text!r}")
    out = list(IDENTITY)
    moved: set[int] = set()
    pos = 0
    while pos < len(t):
        if t[pos] != "(":
            raise ValueError(f"bad permutation text at index {pos}: {text!r}")
        end = t.find(")", pos)
        if end < 0:
            raise ValueError(f"unterminated cycle: {text!r}")
        body = t[pos + 1:end].replace(" ", "")
        pts = []
        if body:
            for tok in body.split(","):
                if not tok.isdigit() or not 1 <= int(tok) <= 5:
                    raise ValueError(f"bad cycle point {tok!r} in {text!r}")
                pts.append(int(tok))
        if len(set(pts)) != len(pts) or moved & set(pts):
            raise ValueError(f"repeated point in cycles: {text!r}")
        moved |= set(pts)
        for i, p in enumerate(pts):
            out[p - 1] = pts[(i + 1) % len(pts)]
        pos = end + 1
        while pos < len(t) and t[pos] == " ":
            pos += 1
    return perm_from_images(out)


def format_perm(g: Perm) -> str:
    """Cycle notation, "e" for the identity."""
    if g == IDENTITY:
        return "e"
    seen: set[int] = set()
    parts = []
    for i in range(1, 6):
        if i in seen or g[i - 1] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = g[i - 1]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = g[j - 1]
        parts.append("(" + ",".join(str(k) for k in cyc) + ")")
    return "".join(parts)


def format_perm_images(g: Perm) -> str:
    return "[" + ",".join(str(k) for k in g) + "]"
