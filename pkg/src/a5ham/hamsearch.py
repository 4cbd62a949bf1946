"""Backtracking Hamiltonian-cycle search in Cayley graphs.

The search is deliberately naive: depth-first over signed generator steps in
a fixed order (a+, a-, b+, b-, ...), pruning only immediate backtracking
(never follow a step by its inverse) and, when a target weight vector is
given, branches that can no longer reach it.  At the scales this package
works with (60 vertices in the quotient) that is entirely sufficient.

A brute-force cycle counter doubles as an independent oracle on tiny groups.
"""

from __future__ import annotations

from typing import Callable, Hashable, Mapping, Sequence

from .product_group import GElem, GIDENTITY, PrimeModulus, ginv, gmul
from .words import GenSet, Step, Word


class PrefixError(ValueError):
    pass


class UniverseTooLargeError(ValueError):
    pass


def _signed_steps(gens, inv):
    """(name, sign, element) triples in the fixed exploration order."""
    steps = []
    for name, elem in gens:
        steps.append((name, 1, elem))
        steps.append((name, -1, inv(elem)))
    return steps


def find_cycle_generic(
    gens: Sequence[tuple[str, Hashable]],
    identity: Hashable,
    mul: Callable,
    inv: Callable,
    universe: set,
    *,
    target_weights: Mapping[str, int] | None = None,
    prefix: Word | None = None,
    deterministic: bool = True,
) -> Word | None:
    """DFS for a rooted, directed Hamiltonian cycle based at the identity.

    Returns the first word found in the fixed step order, or None once the
    pruned search space is exhausted.  Every returned word is re-checked
    against the universe before being handed back.  The deterministic flag
    is part of the search contract (a parallel driver may return any
    verified solution when it is off); this sequential implementation is
    deterministic either way.
    """
    del deterministic
    n = len(universe)
    if n < 3:
        return None
    steps = _signed_steps(gens, inv)
    step_elem = {(name, sign): elem for name, sign, elem in steps}

    target = dict(target_weights) if target_weights is not None else None
    if target is not None:
        for name in target:
            if name not in {g[0] for g in gens}:
                raise KeyError(f"target weight for unknown letter {name!r}")
        for name, _ in gens:
            target.setdefault(name, 0)

    path: list[Step] = []
    visited = {identity}
    current = identity
    weights = {name: 0 for name, _ in gens}

    if prefix:
        for letter, sign in prefix:
            if (letter, sign) not in step_elem:
                raise PrefixError(f"prefix uses unknown step {letter}{sign:+d}")
            current = mul(current, step_elem[(letter, sign)])
            if current in visited:
                raise PrefixError(f"prefix revisits {current!r}")
            if current not in universe:
                raise PrefixError(f"prefix leaves the universe at {current!r}")
            visited.add(current)
            path.append((letter, sign))
            weights[letter] += sign

    def deviation() -> int:
        return sum(abs(target[name] - weights[name]) for name in target)

    # Iterative DFS: the stack holds (vertex, next step index to try).
    # Depth can reach 60p, far past the recursion limit.  Prefix steps are
    # pinned: backtracking never unwinds below base_depth.
    base_depth = len(path)
    stack: list[tuple[Hashable, int]] = [(current, 0)]
    found: Word | None = None
    while stack:
        vertex, idx = stack[-1]
        depth = len(path)
        if idx >= len(steps):
            stack.pop()
            if len(path) > base_depth:
                last = path.pop()
                weights[last[0]] -= last[1]
                visited.discard(vertex)
            continue
        stack[-1] = (vertex, idx + 1)
        name, sign, elem = steps[idx]
        if path:
            prev = step_elem[path[-1]]
            if elem == inv(prev):
                continue
        if target is not None:
            remaining = n - depth - 1
            weights[name] += sign
            dev = deviation()
            weights[name] -= sign
            if dev > remaining or (dev - remaining) % 2 != 0:
                continue
        nxt = mul(vertex, elem)
        if depth == n - 1:
            if nxt != identity:
                continue
            if target is not None:
                weights[name] += sign
                ok = all(weights[m] == target[m] for m in target)
                weights[name] -= sign
                if not ok:
                    continue
            found = tuple(path) + ((name, sign),)
            break
        if nxt in visited or nxt == identity or nxt not in universe:
            continue
        visited.add(nxt)
        path.append((name, sign))
        weights[name] += sign
        stack.append((nxt, 0))

    if found is None:
        return None
    _check_generic_cycle(found, step_elem, identity, mul, universe)
    if target is not None:
        got = {name: 0 for name, _ in gens}
        for letter, sign in found:
            got[letter] += sign
        assert got == target, f"search returned weights {got}, wanted {target}"
    return found


def _check_generic_cycle(word, step_elem, identity, mul, universe) -> None:
    # Inline soundness check: no word leaves this module unverified.
    cur = identity
    seen = {identity}
    for k, st in enumerate(word):
        cur = mul(cur, step_elem[st])
        if k < len(word) - 1:
            assert cur not in seen, "search produced a revisiting walk"
            seen.add(cur)
    assert cur == identity, "search produced an open walk"
    assert seen == universe, "search missed part of the universe"


def count_cycles_bruteforce_generic(
    gens: Sequence[tuple[str, Hashable]],
    identity: Hashable,
    mul: Callable,
    inv: Callable,
    universe: set,
) -> int:
    """Count directed Hamiltonian cycles based at the identity.

    Counts distinct step sequences by exhaustive enumeration, so it is an
    oracle for find_cycle on small instances only (|universe| <= 12).
    """
    n = len(universe)
    if n > 12:
        raise UniverseTooLargeError(f"brute force capped at 12 vertices, got {n}")
    if n < 3:
        return 0
    steps = _signed_steps(gens, inv)

    def count_from(vertex, visited, depth) -> int:
        if depth == n - 1:
            return sum(1 for _, _, elem in steps if mul(vertex, elem) == identity)
        total = 0
        for _, _, elem in steps:
            nxt = mul(vertex, elem)
            if nxt == identity or nxt in visited or nxt not in universe:
                continue
            visited.add(nxt)
            total += count_from(nxt, visited, depth + 1)
            visited.discard(nxt)
        return total

    return count_from(identity, {identity}, 0)


# -- Cayley graphs on A5 x Z_p -------------------------------------------------

def find_cycle(
    S: GenSet,
    p: PrimeModulus,
    universe: set[GElem],
    *,
    target_weights: Mapping[str, int] | None = None,
    prefix: Word | None = None,
    deterministic: bool = True,
) -> Word | None:
    """Hamiltonian-cycle search in Cay(<S>; S) over A5 x Z_p."""
    return find_cycle_generic(
        S.letters,
        GIDENTITY,
        lambda x, y: gmul(x, y, p),
        lambda x: ginv(x, p),
        universe,
        target_weights=target_weights,
        prefix=prefix,
        deterministic=deterministic,
    )


def count_cycles_bruteforce(S: GenSet, p: PrimeModulus, universe: set[GElem]) -> int:
    return count_cycles_bruteforce_generic(
        S.letters,
        GIDENTITY,
        lambda x, y: gmul(x, y, p),
        lambda x: ginv(x, p),
        universe,
    )
