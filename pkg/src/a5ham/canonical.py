"""Normalization of connection sets onto case representatives.

Every automorphism of A5 is conjugation by an element of S5.  A connection
set is classified by the multiset of element orders (its signature) and
mapped onto a hard-coded representative by a deterministic search over
(conjugator, per-letter inversions, letter reorder).  The representative
list is not taken on faith: an exhaustive orbit partition of all minimal
generating sets confirms it per signature.

This module also mechanizes the structural facts the case analysis rests
on: A5 has exactly six Sylow 5-subgroups, no minimal generating set has
size >= 4, and no minimal generating triple contains an order-5 element.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .permutation import (
    IDENTITY,
    Perm,
    a5_elements,
    closure,
    conjugate,
    element_order,
    format_perm,
    inverse,
    parse_perm,
    s5_elements,
)


class NormalizationError(ValueError):
    pass


def _rep(*texts: str) -> tuple[Perm, ...]:
    return tuple(parse_perm(t) for t in texts)


# Case representatives, one list per signature; the list position is the
# variant number.  Signature (2,2,2) is handled by signature alone.
REPRESENTATIVES: dict[tuple[int, ...], list[tuple[Perm, ...]]] = {
    (2, 3): [_rep("(1,2)(3,4)", "(2,4,5)")],
    (2, 5): [_rep("(1,2)(3,4)", "(1,2,3,4,5)"),
             _rep("(1,3)(2,4)", "(1,2,3,4,5)")],
    (3, 3): [_rep("(1,2,3)", "(3,4,5)")],
    (3, 5): [_rep("(1,2,3)", "(1,2,3,4,5)"),
             _rep("(1,2,4)", "(1,2,3,4,5)")],
    (5, 5): [_rep("(1,2,3,4,5)", "(1,2,3,5,4)"),
             _rep("(1,2,3,4,5)", "(1,3,4,2,5)")],
    (3, 3, 3): [_rep("(1,2,5)", "(1,3,5)", "(1,4,5)")],
    (2, 3, 3): [_rep("(1,2)(4,5)", "(1,2,3)", "(1,2,4)")],
    (2, 2, 3): [_rep("(1,2)(4,5)", "(1,2)(3,4)", "(1,2,3)"),
                _rep("(1,2)(4,5)", "(1,3)(2,4)", "(1,2,3)"),
                _rep("(1,2)(3,4)", "(1,2)(3,5)", "(1,2,3)"),
                _rep("(1,2)(3,4)", "(1,3)(2,5)", "(1,2,3)")],
    (2, 2, 2): [],
}


@dataclass(frozen=True)
class CaseTag:
    signature: tuple[int, ...]
    variant: int | None


@dataclass(frozen=True)
class Normalization:
    """A recipe mapping a connection set onto its representative.

    representative[j] == sigma * input[reorder[j]]**inversions[j] * sigma^-1
    """

    sigma: Perm
    inversions: tuple[int, ...]     # +1/-1 per output position
    reorder: tuple[int, ...]        # output position -> input index
    tag: CaseTag
    representative: tuple[Perm, ...] | None

    def apply(self, sbar: Sequence[Perm]) -> tuple[Perm, ...]:
        out = []
        for j in range(len(self.reorder)):
            g = sbar[self.reorder[j]]
            if self.inversions[j] < 0:
                g = inverse(g)
            out.append(conjugate(self.sigma, g))
        return tuple(out)

    def pull_back_step(self, position: int, sign: int) -> tuple[int, int]:
        """Map a step on representative letter ``position`` to (input index, sign)."""
        return self.reorder[position], sign * self.inversions[position]


def case_signature(sbar: Sequence[Perm]) -> tuple[int, ...]:
    return tuple(sorted(element_order(g) for g in sbar))


@dataclass(frozen=True)
class MinimalityReport:
    generates: bool
    minimal: bool
    drop_witness: Perm | None       # an element whose removal still generates


def minimality_check(sbar: Iterable[Perm]) -> MinimalityReport:
    elems = tuple(sbar)
    if len(closure(elems)) != 60:
        return MinimalityReport(False, False, None)
    for i, g in enumerate(elems):
        rest = elems[:i] + elems[i + 1:]
        if rest and len(closure(rest)) == 60:
            return MinimalityReport(True, False, g)
    return MinimalityReport(True, True, None)


def normalize(sbar: Sequence[Perm]) -> Normalization:
    """Deterministically map a minimal generating set onto its representative.

    The conjugator runs over all 120 elements of S5 in lexicographic order,
    then inversion patterns (ascending bitmask), then letter reorders
    (lexicographic); the first exact match is returned.
    """
    elems = tuple(sbar)
    report = minimality_check(elems)
    if not report.generates:
        sig = case_signature(elems)
        if sig == (2, 5) and len(closure(elems)) == 10:
            raise NormalizationError(
                "not a generating pattern: the involution normalizes the "
                "5-cycle's subgroup")
        raise NormalizationError(
            f"does not generate A5: {[format_perm(g) for g in elems]}")
    if not report.minimal:
        raise NormalizationError(
            f"not a minimal generating set; {format_perm(report.drop_witness)} "
            "can be dropped")
    sig = case_signature(elems)
    if sig not in REPRESENTATIVES:
        raise NormalizationError(f"unexpected signature {sig}")
    if sig == (2, 2, 2):
        k = len(elems)
        return Normalization(IDENTITY, (1,) * k, tuple(range(k)),
                             CaseTag(sig, None), None)
    k = len(elems)
    reorders = list(permutations(range(k)))
    for variant, rep in enumerate(REPRESENTATIVES[sig]):
        rep_set = frozenset(rep)
        for sigma in s5_elements():
            conj = [conjugate(sigma, g) for g in elems]
            conj_inv = [inverse(c) for c in conj]
            if not rep_set <= set(conj) | set(conj_inv):
                continue
            for inv_mask in range(1 << k):
                for reorder in reorders:
                    ok = True
                    for j in range(k):
                        g = conj_inv[reorder[j]] if inv_mask >> j & 1 else conj[reorder[j]]
                        if g != rep[j]:
                            ok = False
                            break
                    if ok:
                        inv = tuple(-1 if inv_mask >> j & 1 else 1 for j in range(k))
                        return Normalization(sigma, inv, reorder,
                                             CaseTag(sig, variant), rep)
    raise NormalizationError(
        f"no representative matches {[format_perm(g) for g in elems]}; "
        "the orbit partition says this cannot happen")


# -- indexed A5 machinery ------------------------------------------------------
#
# Subsets of A5 as 60-bit masks over the lexicographically sorted element
# list; subgroup joins are memoized so the exhaustive checks below run in
# seconds.

_IDX: dict | None = None


def _tables():
    global _IDX
    if _IDX is None:
        elems = a5_elements()
        index = {g: i for i, g in enumerate(elems)}
        mul = [[index[
            (g[h[0] - 1], g[h[1] - 1], g[h[2] - 1], g[h[3] - 1], g[h[4] - 1])]
            for h in elems] for g in elems]
        _IDX = {"elems": elems, "index": index, "mul": mul,
                "single": {}, "pair": {}, "join": {}}
    return _IDX


_FULL = (1 << 60) - 1


def _closure_mask(gen_idx: Sequence[int]) -> int:
    t = _tables()
    mul = t["mul"]
    mask = 1            # identity is element 0 in lexicographic order
    frontier = [0]
    while frontier:
        new = []
        for x in frontier:
            row = mul[x]
            for g in gen_idx:
                y = row[g]
                if not mask >> y & 1:
                    mask |= 1 << y
                    new.append(y)
        frontier = new
    return mask


def _mask_elements(mask: int) -> list[int]:
    return [i for i in range(60) if mask >> i & 1]


def _single(i: int) -> int:
    t = _tables()
    if i not in t["single"]:
        t["single"][i] = _closure_mask((i,))
    return t["single"][i]


def _pair(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    t = _tables()
    key = (i, j)
    if key not in t["pair"]:
        t["pair"][key] = _closure_mask((i, j))
    return t["pair"][key]


def _join(m1: int, m2: int) -> int:
    if m1 == _FULL or m2 == _FULL:
        return _FULL
    if m2 < m1:
        m1, m2 = m2, m1
    t = _tables()
    key = (m1, m2)
    if key not in t["join"]:
        if m1 | m2 in (m1, m2):
            t["join"][key] = m1 | m2
        else:
            t["join"][key] = _closure_mask(_mask_elements(m1 | m2))
    return t["join"][key]


@dataclass(frozen=True)
class QuadrupleVerdict:
    passed: bool
    counterexample: tuple[Perm, ...] | None
    subsets_checked: int


def no_minimal_quadruples() -> QuadrupleVerdict:
    """Exhaustively confirm no minimal generating set of A5 has size >= 4.

    Any 4-subset is conjugate (under S5) to one containing a fixed
    representative of its lowest-order class, so it suffices to scan those.
    Sets of size >= 5 are ruled out by arithmetic: a strictly increasing
    subgroup chain in a group of order 60 = 2*2*3*5 has at most 4 steps.
    """
    t = _tables()
    elems, index = t["elems"], t["index"]
    nontrivial = [i for i in range(60) if i != index[IDENTITY]]
    by_order = {2: [], 3: [], 5: []}
    for i in nontrivial:
        by_order[element_order(elems[i])].append(i)
    r2 = index[parse_perm("(1,2)(3,4)")]
    r3 = index[parse_perm("(1,2,3)")]
    r5 = index[parse_perm("(1,2,3,4,5)")]

    buckets = [
        (r2, [i for i in nontrivial if i != r2]),
        (r3, [i for i in by_order[3] + by_order[5] if i != r3]),
        (r5, [i for i in by_order[5] if i != r5]),
    ]
    checked = 0
    for anchor, pool in buckets:
        for rest in combinations(pool, 3):
            checked += 1
            quad = (anchor,) + rest
            if _join(_pair(quad[0], quad[1]), _pair(quad[2], quad[3])) != _FULL:
                continue
            minimal = True
            for a, b in combinations(quad, 2):
                if _pair(a, b) == _FULL:
                    minimal = False
                    break
            if minimal:
                for tri in combinations(quad, 3):
                    if _join(_pair(tri[0], tri[1]), _single(tri[2])) == _FULL:
                        minimal = False
                        break
            if minimal:
                return QuadrupleVerdict(False, tuple(elems[i] for i in quad), checked)
    return QuadrupleVerdict(True, None, checked)


_MINSETS: list[frozenset[Perm]] | None = None


def minimal_generating_sets() -> list[frozenset[Perm]]:
    """All minimal generating sets of A5 of size 2 and 3 (size >= 4 is empty)."""
    global _MINSETS
    if _MINSETS is not None:
        return list(_MINSETS)
    t = _tables()
    elems, index = t["elems"], t["index"]
    nontrivial = [i for i in range(60) if i != index[IDENTITY]]
    out: list[frozenset[Perm]] = []
    for i, j in combinations(nontrivial, 2):
        if _pair(i, j) == _FULL:
            out.append(frozenset((elems[i], elems[j])))
    for i, j, k in combinations(nontrivial, 3):
        if _join(_pair(i, j), _single(k)) != _FULL:
            continue
        if _pair(i, j) == _FULL or _pair(i, k) == _FULL or _pair(j, k) == _FULL:
            continue
        out.append(frozenset((elems[i], elems[j], elems[k])))
    _MINSETS = out
    return list(out)


def orbit_key(elems: Iterable[Perm]) -> tuple[Perm, ...]:
    """Canonical form of a set under conjugation by S5 plus inversions.

    Each element is first replaced by the smaller of itself and its inverse,
    the set sorted, and the lexicographic minimum over all conjugators taken.
    """
    members = tuple(elems)
    best = None
    for sigma in s5_elements():
        key = tuple(sorted(
            min(c, inverse(c)) for c in (conjugate(sigma, g) for g in members)))
        if best is None or key < best:
            best = key
    return best


def orbit_partition() -> dict[tuple[int, ...], set[tuple[Perm, ...]]]:
    """Orbit keys of all minimal generating sets, bucketed by signature."""
    buckets: dict[tuple[int, ...], set[tuple[Perm, ...]]] = {}
    for ms in minimal_generating_sets():
        sig = case_signature(tuple(ms))
        buckets.setdefault(sig, set()).add(orbit_key(ms))
    return buckets


def sylow_five_count() -> int:
    """Number of distinct order-5 cyclic subgroups of A5, by exhaustion."""
    subs = set()
    for g in a5_elements():
        if element_order(g) == 5:
            subs.add(frozenset(closure([g])))
    return len(subs)


def minimal_triples_with_order5() -> list[frozenset[Perm]]:
    """Minimal generating triples containing an order-5 element (none exist)."""
    return [ms for ms in minimal_generating_sets()
            if len(ms) == 3 and any(element_order(g) == 5 for g in ms)]
