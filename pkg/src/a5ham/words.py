"""Generator alphabets, walk words and the compact word notation.

A word is a sequence of signed generator letters; its walk starts at the
identity and appends one factor per step.  The compact notation mirrors the
shorthand used when cycles are written down by hand: ``(a,b^2)^3`` repeats
the segment ``a,b,b`` three times, exponents may be negative (inverted,
reversed segment) or linear in the prime, e.g. ``b^(3p-1)``.

Flat form: letters with case encoding sign (``A`` is ``a^-1``), optionally
space separated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .permutation import IDENTITY, element_order, format_perm, inverse
from .product_group import GElem, GIDENTITY, PrimeModulus, format_gelem

Step = tuple[str, int]          # (letter name, +1 or -1)
Word = tuple[Step, ...]


class WordSyntaxError(ValueError):
    """Raised on malformed word text, with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at index {position})")
        self.position = position


class UnknownLetterError(ValueError):
    pass


# -- generator sets ----------------------------------------------------------

class GenSet:
    """An ordered connection set: distinct letters bound to group elements.

    The a/b split of the determinant criterion is derived on demand:
    a-letters are those whose permutation part has order 2, b-letters are
    the rest.
    """

    def __init__(self, letters: Iterable[tuple[str, GElem]]):
        items = tuple(letters)
        names = [n for n, _ in items]
        if not items:
            raise ValueError("empty generator set")
        for n in names:
            if len(n) != 1 or not n.isalpha() or not n.islower():
                raise ValueError(f"letter names must be single lowercase letters: {n!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate letter names: {names}")
        elems = [e for _, e in items]
        if len(set(elems)) != len(elems):
            raise ValueError("duplicate generator elements")
        if any(e == GIDENTITY for e in elems):
            raise ValueError("identity is not allowed as a generator")
        self.letters = items
        self._by_name = dict(items)

    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.letters)

    def element(self, name: str) -> GElem:
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownLetterError(f"unknown letter {name!r}") from None

    def elements(self) -> tuple[GElem, ...]:
        return tuple(e for _, e in self.letters)

    def perms(self) -> tuple:
        return tuple(e[0] for _, e in self.letters)

    def a_letters(self) -> tuple[str, ...]:
        return tuple(n for n, e in self.letters if element_order(e[0]) == 2)

    def b_letters(self) -> tuple[str, ...]:
        return tuple(n for n, e in self.letters if element_order(e[0]) != 2)

    def quotient(self) -> "GenSet":
        """The same letters with all residues zeroed (the bar projection)."""
        return GenSet((n, (e[0], 0)) for n, e in self.letters)

    def __repr__(self) -> str:
        inner = "; ".join(f"{n}={format_gelem(e)}" for n, e in self.letters)
        return f"GenSet({inner})"


# -- flat words ---------------------------------------------------------------

def parse_flat_word(text: str) -> Word:
    steps = []
    for i, ch in enumerate(text):
        if ch.isspace():
            continue
        if not ch.isalpha():
            raise WordSyntaxError(f"bad step character {ch!r}", i)
        steps.append((ch.lower(), -1 if ch.isupper() else 1))
    return tuple(steps)


def format_flat_word(word: Word, sep: str = " ") -> str:
    return sep.join(l.upper() if s < 0 else l for l, s in word)


def invert_word(word: Word) -> Word:
    """Reverse the steps and flip every sign (the inverse walk)."""
    return tuple((l, -s) for l, s in reversed(word))


# -- compact word expressions --------------------------------------------------

@dataclass(frozen=True)
class LinExp:
    """An exponent: coef*p + const (coef = 0 for plain integers)."""

    coef: int
    const: int

    def value(self, p: int) -> int:
        return self.coef * p + self.const

    def negated(self) -> "LinExp":
        return LinExp(-self.coef, -self.const)

    def text(self) -> str:
        if self.coef == 0:
            return str(self.const)
        if self.coef < 0 or (self.coef == 0 and self.const < 0):
            return "-" + self.negated().text()
        coef = "" if self.coef == 1 else str(self.coef)
        if self.const > 0:
            return f"({coef}p+{self.const})"
        if self.const < 0:
            return f"({coef}p-{-self.const})"
        return f"({coef}p)" if coef else "p"


ONE = LinExp(0, 1)


@dataclass(frozen=True)
class Atom:
    letter: str
    sign: int
    exp: LinExp = ONE


@dataclass(frozen=True)
class Group:
    items: tuple = ()
    exp: LinExp = ONE


WordExpr = Atom | Group


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str) -> WordSyntaxError:
        return WordSyntaxError(msg, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def parse_lin(self) -> LinExp:
        # lin := INT? "p" (("+"|"-") INT)? | INT   (sign handled by caller)
        self.skip_ws()
        coef = 1
        have_int = False
        if self.peek().isdigit():
            coef = self.parse_int()
            have_int = True
        if self.peek() == "p":
            self.pos += 1
            const = 0
            nxt = self.peek()
            if nxt in "+-":
                self.pos += 1
                k = self.parse_int()
                const = k if nxt == "+" else -k
            return LinExp(coef, const)
        if not have_int:
            raise self.error("expected an exponent")
        return LinExp(0, coef)

    def parse_exp(self) -> LinExp:
        sign = 1
        if self.peek() == "-":
            self.pos += 1
            sign = -1
        if self.peek() == "(":
            self.pos += 1
            lin = self.parse_lin()
            self.take(")")
        else:
            lin = self.parse_lin()
        return lin.negated() if sign < 0 else lin

    def parse_power(self) -> LinExp:
        if self.peek() == "^":
            self.pos += 1
            return self.parse_exp()
        return ONE

    def parse_term(self) -> WordExpr:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            items: tuple = ()
            if self.peek() != ")":
                items = self.parse_items()
            self.take(")")
            return Group(items, self.parse_power())
        if ch.isalpha():
            self.pos += 1
            return Atom(ch.lower(), -1 if ch.isupper() else 1, self.parse_power())
        raise self.error("expected a letter or '('")

    def parse_items(self) -> tuple:
        items = [self.parse_term()]
        while self.peek() == ",":
            self.pos += 1
            items.append(self.parse_term())
        return tuple(items)

    def parse(self) -> WordExpr:
        self.skip_ws()
        if self.pos >= len(self.text):
            raise self.error("empty expression")
        items = self.parse_items()
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("trailing input")
        if len(items) == 1:
            return items[0]
        return Group(items, ONE)


def parse_word_expr(text: str) -> WordExpr:
    """Parse compact word notation; see the module docstring for the grammar."""
    return _Parser(text).parse()


def format_word_expr(expr: WordExpr) -> str:
    def fmt(e: WordExpr) -> str:
        if isinstance(e, Atom):
            base = e.letter.upper() if e.sign < 0 else e.letter
            return base if e.exp == ONE else f"{base}^{e.exp.text()}"
        inner = ",".join(fmt(i) for i in e.items)
        return f"({inner})" if e.exp == ONE else f"({inner})^{e.exp.text()}"

    if isinstance(expr, Group) and expr.exp == ONE:
        return "(" + ",".join(fmt(i) for i in expr.items) + ")"
    return fmt(expr)


def expand(expr: WordExpr, p: PrimeModulus, gens: GenSet | None = None) -> Word:
    """Flatten a compact expression at a concrete prime.

    A negative exponent repeats the inverted, reversed segment.  When a
    generator set is supplied, letters are checked against it.
    """

    def flatten(e: WordExpr) -> list[Step]:
        k = e.exp.value(p.p)
        if isinstance(e, Atom):
            if gens is not None:
                gens.element(e.letter)
            if k >= 0:
                return [(e.letter, e.sign)] * k
            return [(e.letter, -e.sign)] * (-k)
        body: list[Step] = []
        for item in e.items:
            body.extend(flatten(item))
        if k < 0:
            body = [(l, -s) for l, s in reversed(body)]
            k = -k
        return body * k

    return tuple(flatten(expr))


def word_to_expr(word: Word) -> WordExpr:
    """The trivial compact form of a flat word (one atom per step)."""
    return Group(tuple(Atom(l, s) for l, s in word), ONE)


# -- walk evaluation -----------------------------------------------------------

def _step_table(S: GenSet, p: PrimeModulus) -> dict[Step, GElem]:
    pp = p.p
    table: dict[Step, GElem] = {}
    for name, (perm, res) in S.letters:
        if not 0 <= res < pp:
            raise ValueError(f"residue of {name!r} not reduced mod {pp}")
        table[(name, 1)] = (perm, res)
        table[(name, -1)] = (inverse(perm), (-res) % pp)
    return table


def eval_walk(word: Word, S: GenSet, p: PrimeModulus) -> tuple[list[GElem], GElem]:
    """Vertices visited by the walk, starting at the identity.

    Returns (vertices, endpoint); vertices[0] is the identity and the
    endpoint repeats as vertices[-1].
    """
    table = _step_table(S, p)
    pp = p.p
    cur_p, cur_r = IDENTITY, 0
    vertices: list[GElem] = [(cur_p, cur_r)]
    append = vertices.append
    for st in word:
        try:
            gp, gr = table[st]
        except KeyError:
            raise UnknownLetterError(f"unknown letter {st[0]!r}") from None
        cur_p = (cur_p[gp[0] - 1], cur_p[gp[1] - 1], cur_p[gp[2] - 1],
                 cur_p[gp[3] - 1], cur_p[gp[4] - 1])
        cur_r = (cur_r + gr) % pp
        append((cur_p, cur_r))
    return vertices, vertices[-1]


@dataclass(frozen=True)
class CycleReport:
    """Hamiltonicity verdict; verdicts are data, never exceptions."""

    passed: bool
    failure: str | None = None          # "length" | "endpoint" | "revisit" | "coverage"
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed


def is_hamiltonian_cycle(word: Word, S: GenSet, p: PrimeModulus,
                         universe: set[GElem]) -> CycleReport:
    """Check a word against the four Hamiltonian-cycle conditions.

    The universe must be the closure of S (caller supplied).  Reports the
    first violation among: length, endpoint, vertex distinctness, coverage.
    """
    n = len(universe)
    if len(word) != n:
        return CycleReport(False, "length",
                           f"word length {len(word)} != universe size {n}")
    vertices, endpoint = eval_walk(word, S, p)
    if endpoint != GIDENTITY:
        return CycleReport(False, "endpoint",
                           f"endpoint {format_gelem(endpoint)} != identity")
    inner = vertices[:-1]
    seen: set[GElem] = set()
    for k, v in enumerate(inner):
        if v in seen:
            return CycleReport(False, "revisit",
                               f"vertex {format_gelem(v)} revisited at step {k}")
        seen.add(v)
    if seen != universe:
        missing = next(iter(universe - seen))
        return CycleReport(False, "coverage",
                           f"vertex {format_gelem(missing)} never visited")
    return CycleReport(True)


def net_weights(word: Word, S: GenSet) -> dict[str, int]:
    """Occurrences of each letter minus occurrences of its inverse."""
    wt = {name: 0 for name in S.names()}
    for letter, sign in word:
        if letter not in wt:
            raise UnknownLetterError(f"unknown letter {letter!r}")
        wt[letter] += sign
    return wt


def voltage(word: Word, S: GenSet, p: PrimeModulus) -> GElem:
    """Product of all steps (the walk endpoint).

    When the permutation part closes, the residue must equal the weighted
    residue sum of the letters; that identity is asserted here rather than
    assumed anywhere.
    """
    _, endpoint = eval_walk(word, S, p)
    if endpoint[0] == IDENTITY:
        wt = net_weights(word, S)
        total = sum(wt[name] * elem[1] for name, elem in S.letters) % p.p
        assert endpoint[1] == total, (
            f"voltage residue {endpoint[1]} != weighted residue sum {total}")
    return endpoint
