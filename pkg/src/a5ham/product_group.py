"""Elements and arithmetic of the direct product A5 x Z_p.

A group element is a pair ``(perm, res)`` with ``perm`` an even permutation
tuple and ``res`` a residue in ``0..p-1``.  The Z_p factor is central, which
every lifting construction leans on.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterable

from .permutation import (
    IDENTITY,
    Perm,
    element_order,
    format_perm,
    inverse,
    is_even,
    parse_perm,
    perm_from_images,
)

GElem = tuple[Perm, int]

GIDENTITY: GElem = (IDENTITY, 0)


class ModulusMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class PrimeModulus:
    """A prime modulus p, checked by trial division at construction."""

    p: int

    def __post_init__(self) -> None:
        n = self.p
        if n < 2:
            raise ValueError(f"not a prime: {n}")
        d = 2
        while d * d <= n:
            if n % d == 0:
                raise ValueError(f"not a prime: {n}")
            d += 1

    def __int__(self) -> int:
        return self.p


def gelem(perm: Perm, res: int, p: PrimeModulus) -> GElem:
    """Validate and build an element of A5 x Z_p (residue reduced mod p)."""
    g = perm_from_images(perm)
    if not is_even(g):
        raise ValueError(f"permutation part must be even: {format_perm(g)}")
    return (g, res % p.p)


def _check_reduced(x: GElem, p: int) -> None:
    if not 0 <= x[1] < p:
        raise ModulusMismatchError(f"residue {x[1]} not reduced mod {p}")


def gmul(x: GElem, y: GElem, p: PrimeModulus) -> GElem:
    """Componentwise product; the Z_p coordinate is central."""
    pp = p.p
    _check_reduced(x, pp)
    _check_reduced(y, pp)
    xp, yp = x[0], y[0]
    return (
        (xp[yp[0] - 1], xp[yp[1] - 1], xp[yp[2] - 1], xp[yp[3] - 1], xp[yp[4] - 1]),
        (x[1] + y[1]) % pp,
    )


def ginv(x: GElem, p: PrimeModulus) -> GElem:
    pp = p.p
    _check_reduced(x, pp)
    return (inverse(x[0]), (-x[1]) % pp)


def gorder(x: GElem, p: PrimeModulus) -> int:
    """Order of x in A5 x Z_p: lcm of the two coordinate orders."""
    _check_reduced(x, p.p)
    res_order = 1 if x[1] == 0 else p.p
    return lcm(element_order(x[0]), res_order)


def product_closure(gens: Iterable[GElem], p: PrimeModulus) -> set[GElem]:
    """The subgroup generated by ``gens`` as an explicit element set.

    Used concretely for generation tests (size 60p) and minimality tests;
    nothing is inferred from quotient reasoning.
    """
    pp = p.p
    gen_list = list(gens)
    if not gen_list:
        raise ValueError("closure of an empty generating set")
    for g in gen_list:
        _check_reduced(g, pp)
        if not is_even(g[0]):
            raise ValueError(f"permutation part must be even: {format_perm(g[0])}")
    elems = {GIDENTITY}
    frontier = [GIDENTITY]
    while frontier:
        new = []
        for xp, xr in frontier:
            for gp, gr in gen_list:
                y = (
                    (xp[gp[0] - 1], xp[gp[1] - 1], xp[gp[2] - 1], xp[gp[3] - 1], xp[gp[4] - 1]),
                    (xr + gr) % pp,
                )
                if y not in elems:
                    elems.add(y)
                    new.append(y)
        frontier = new
    return elems


def generates_product(gens: Iterable[GElem], p: PrimeModulus) -> bool:
    return len(product_closure(gens, p)) == 60 * p.p


def is_minimal_generating(gens: list[GElem], p: PrimeModulus) -> tuple[bool, int | None]:
    """(generates and no proper subset does, index of a droppable element).

    The drop test matches the standing hypothesis verbatim: for every s in S,
    S minus {s} must not generate.
    """
    if not generates_product(gens, p):
        return False, None
    for i in range(len(gens)):
        rest = gens[:i] + gens[i + 1:]
        if rest and generates_product(rest, p):
            return False, i
    return True, None


# -- text form ---------------------------------------------------------------
#
# "(cycles | r)", e.g. "((1,2)(3,4) | 0)"; accepted in witness files and CLI
# arguments.

def parse_gelem(text: str, p: PrimeModulus) -> GElem:
    t = text.strip()
    if not (t.startswith("(") and t.endswith(")")) or "|" not in t:
        raise ValueError(f"bad group element text: {text!r}")
    body = t[1:-1]
    perm_part, _, res_part = body.rpartition("|")
    try:
        res = int(res_part.strip())
    except ValueError:
        raise ValueError(f"bad residue in {text!r}") from None
    if not 0 <= res < p.p:
        raise ValueError(f"residue {res} out of range mod {p.p}")
    return gelem(parse_perm(perm_part.strip()), res, p)


def format_gelem(x: GElem) -> str:
    return f"({format_perm(x[0])} | {x[1]})"
