"""Lifting constructions: from quotient cycles to cycles in A5 x Z_p.

Four routes produce a Hamiltonian cycle in the product from data in the
quotient: repetition with nonzero voltage, the double-edge substitution for
a central prime factor, interleaving over a dropped generator, and the
coset walk for an order-3 generator carrying the residue.  The determinant
criterion picks a usable quotient cycle from a family via the weight
matrix.

No construction is trusted: every lift re-verifies its output as a
Hamiltonian cycle before returning it, including the plain repetition
whose correctness is classical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .canonical import normalize
from .hamsearch import find_cycle
from .permutation import IDENTITY, closure, element_order, format_perm
from .product_group import (
    GElem,
    PrimeModulus,
    format_gelem,
    product_closure,
)
from .words import (
    GenSet,
    Word,
    expand,
    is_hamiltonian_cycle,
    net_weights,
    parse_word_expr,
    voltage,
)


class LiftError(ValueError):
    pass


class ZeroVoltageError(LiftError):
    pass


class CriterionInapplicableError(LiftError):
    pass


def quotient_universe(S: GenSet) -> set[GElem]:
    """Closure of the bar projection of S, embedded with residue 0."""
    return {(g, 0) for g in closure(S.perms())}


def _require_quotient_cycle(word: Word, S: GenSet, p: PrimeModulus) -> set[GElem]:
    universe = quotient_universe(S)
    report = is_hamiltonian_cycle(word, S.quotient(), p, universe)
    if not report:
        raise LiftError(f"input is not a quotient hamiltonian cycle: {report.detail}")
    return universe


def _verify_output(word: Word, S: GenSet, p: PrimeModulus) -> Word:
    universe = product_closure(S.elements(), p)
    report = is_hamiltonian_cycle(word, S, p, universe)
    if not report:
        raise LiftError(f"constructed word failed verification: {report.detail}")
    return word


def fgl_lift(quotient_cycle: Word, S: GenSet, p: PrimeModulus) -> Word:
    """Repeat a quotient cycle p times.

    Requires the cycle's voltage to generate Z_p, i.e. a nonzero residue
    (the permutation part closes because the input is a cycle).
    """
    _require_quotient_cycle(quotient_cycle, S, p)
    volt = voltage(quotient_cycle, S, p)
    if volt[0] != IDENTITY:
        raise LiftError(f"voltage has nontrivial permutation part {format_perm(volt[0])}")
    if volt[1] == 0:
        raise ZeroVoltageError("voltage does not generate N")
    return _verify_output(quotient_cycle * p.p, S, p)


def _parse_signed(step: str) -> tuple[str, int]:
    if len(step) != 1 or not step.isalpha():
        raise LiftError(f"bad signed letter {step!r}")
    return step.lower(), -1 if step.isupper() else 1


def double_edge_lift(S: GenSet, p: PrimeModulus, s: str, t: str) -> Word:
    """Lift via two generators that agree modulo Z_p.

    ``s`` and ``t`` name elements of S union S^-1 in flat-word convention
    (uppercase = inverse); they must project to the same A5 element while
    differing in the product.  A quotient cycle is searched; if its voltage
    vanishes, one occurrence of s is swapped for t, which shifts the
    voltage by the central element t*s^-1 != e.
    """
    s_letter, s_sign = _parse_signed(s)
    t_letter, t_sign = _parse_signed(t)
    se, te = S.element(s_letter), S.element(t_letter)
    pp = p.p
    s_elem = se if s_sign > 0 else (se[0] and __import__("a5ham.product_group", fromlist=["ginv"]).ginv(se, p))
    raise NotImplementedError
