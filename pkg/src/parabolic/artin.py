"""Positive Artin monoid arithmetic.

Elements of A_S^+ are kept in left greedy normal form: a sequence of
nontrivial reduced factors (g_1, ..., g_n) with g_i the largest reduced left
divisor of g_i...g_n.  Reduced factors are identified with their Coxeter
images, so each factor is stored as a canonical ShortLex reduced index word
and all factor arithmetic goes through the cached word operations of the
underlying CoxeterSystem.

Right-handed operations are answered through the word-reversal
anti-automorphism (the defining relations are palindromic), so only the left
normal form is ever stored.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import errors
from .coxeter import INF, CoxeterElement, CoxeterSystem


@dataclass(frozen=True)
class PositiveBraid:
    """Element of A_S^+ as its left greedy normal form; () is the identity."""
    system: CoxeterSystem
    factors: tuple[tuple[int, ...], ...]

    @property
    def is_identity(self) -> bool:
        return not self.factors

    @property
    def length(self) -> int:
        return sum(len(f) for f in self.factors)

    @property
    def iword(self) -> tuple[int, ...]:
        return tuple(x for f in self.factors for x in f)

    @property
    def word(self) -> tuple[str, ...]:
        return self.system.letter_names(self.iword)

    @property
    def factor_words(self) -> tuple[tuple[str, ...], ...]:
        return tuple(self.system.letter_names(f) for f in self.factors)

    def image(self) -> CoxeterElement:
        """p+(g): the image in the Coxeter group."""
        return CoxeterElement(self.system, self.system.canon(self.iword))

    def support(self) -> frozenset[int]:
        return frozenset(self.iword)

    def __mul__(self, other: "PositiveBraid") -> "PositiveBraid":
        return PositiveBraid(self.system,
                             _normalize(self.system, self.factors + other.factors))

    def __pow__(self, n: int) -> "PositiveBraid":
        if n < 0:
            raise ValueError("positive braids only take nonnegative powers")
        out = identity(self.system)
        for _ in range(n):
            out = out * self
        return out

    def __repr__(self):
        if not self.factors:
            return "<A+: 1>"
        return "<A+: " + " . ".join(" ".join(f) for f in self.factor_words) + ">"


# ---------------------------------------------------------------------------
# normal form machinery


def _slide(sys: CoxeterSystem, a: tuple, b: tuple) -> tuple[tuple, tuple]:
    """Move the largest absorbable head of b into a (Lemma-style local step).

    a, b are canonical reduced words; returns (a', b') with a'b' = ab,
    a' = a * (absorbed head) still reduced.  The pair is left-weighted when
    a' == a on entry of every letter test.
    """
    cache = sys.__dict__.setdefault("_slide_cache", {})
    key = (a, b)
    hit = cache.get(key)
    if hit is not None:
        return hit
    a0, b0 = a, b
    progress = True
    while progress and b:
        progress = False
        for s in sys.left_descents(b):
            c = sys.mult(a, (s,))
            if len(c) == len(a) + 1:
                a = c
                b = sys.mult((s,), b)
                progress = True
                break
    cache[(a0, b0)] = (a, b)
    return a, b


def _normalize(sys: CoxeterSystem, factors: Iterable[tuple]) -> tuple:
    facs = [f for f in factors if f]
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(facs) - 1:
            a2, b2 = _slide(sys, facs[i], facs[i + 1])
            if a2 != facs[i]:
                changed = True
                facs[i] = a2
                if b2:
                    facs[i + 1] = b2
                else:
                    del facs[i + 1]
            else:
                i += 1
    return tuple(facs)


def identity(sys: CoxeterSystem) -> PositiveBraid:
    return PositiveBraid(sys, ())


def from_letters(sys: CoxeterSystem, letters: Iterable[str]) -> PositiveBraid:
    return canonicalize(sys, letters)


def canonicalize(sys: CoxeterSystem, word: Iterable[str]) -> PositiveBraid:
    """Greedy normal form of a positive word."""
    iword = sys.indices(word)
    return PositiveBraid(sys, _normalize(sys, [(i,) for i in iword]))


def from_reduced_word(sys: CoxeterSystem, iword: tuple[int, ...]) -> PositiveBraid:
    """pi(w) for a canonical reduced word w: the one-factor braid."""
    if not iword:
        return identity(sys)
    return PositiveBraid(sys, (iword,))


def alpha(g: PositiveBraid) -> PositiveBraid:
    """The largest reduced left divisor (head) of g."""
    if g.is_identity:
        return g
    return PositiveBraid(g.system, (g.factors[0],))


def is_reduced(sys: CoxeterSystem, word: Iterable[str]) -> bool:
    """Whether the positive word has the same length as its Coxeter image."""
    iword = sys.indices(word)
    return len(sys.canon(iword)) == len(iword)


# ---------------------------------------------------------------------------
# divisibility


def letter_divisors_left(g: PositiveBraid) -> tuple[int, ...]:
    """Indices s with s a left divisor of g (= left descents of the head)."""
    if g.is_identity:
        return ()
    return g.system.left_descents(g.factors[0])


def left_quotient_letter(g: PositiveBraid, s: int) -> PositiveBraid:
    sys = g.system
    head = sys.mult((s,), g.factors[0])
    return PositiveBraid(sys, _normalize(sys, (head,) + g.factors[1:]))


def left_quotient(g: PositiveBraid, a: PositiveBraid) -> PositiveBraid | None:
    """c with g = a*c, or None when a does not left-divide g."""
    cur = g
    for s in a.iword:
        if s not in letter_divisors_left(cur):
            return None
        cur = left_quotient_letter(cur, s)
    return cur


def left_divides(a: PositiveBraid, g: PositiveBraid) -> bool:
    return left_quotient(g, a) is not None


def reverse(g: PositiveBraid) -> PositiveBraid:
    """Image under the anti-automorphism fixing S (word reversal)."""
    sys = g.system
    rev = tuple(reversed(g.iword))
    return PositiveBraid(sys, _normalize(sys, [(i,) for i in rev]))


def right_quotient(g: PositiveBraid, a: PositiveBraid) -> PositiveBraid | None:
    """c with g = c*a, or None."""
    q = left_quotient(reverse(g), reverse(a))
    return None if q is None else reverse(q)


def right_divides(a: PositiveBraid, g: PositiveBraid) -> bool:
    return right_quotient(g, a) is not None


def letter_divisors_right(g: PositiveBraid) -> tuple[int, ...]:
    return letter_divisors_left(reverse(g))


# ---------------------------------------------------------------------------
# lattice operations


def gcd_left(a: PositiveBraid, b: PositiveBraid) -> PositiveBraid:
    """Greatest common left divisor, by iterated letter extraction."""
    sys = a.system
    letters = []
    while True:
        common = set(letter_divisors_left(a)) & set(letter_divisors_left(b))
        if not common:
            break
        s = min(common)
        letters.append(s)
        a = left_quotient_letter(a, s)
        b = left_quotient_letter(b, s)
    return PositiveBraid(sys, _normalize(sys, [(i,) for i in letters]))


def gcd_right(a: PositiveBraid, b: PositiveBraid) -> PositiveBraid:
    return reverse(gcd_left(reverse(a), reverse(b)))


def _alternating(x: int, y: int, k: int) -> list[int]:
    """x y x y ... (k letters)."""
    return [x if i % 2 == 0 else y for i in range(k)]


DEFAULT_REVERSING_STEPS = 64


def _reversing_bound(sys: CoxeterSystem, a: PositiveBraid, b: PositiveBraid,
                     max_steps: int | None) -> int:
    if max_steps is not None:
        return max_steps
    full = frozenset(range(sys.rank))
    if sys.is_spherical(full):
        return max(1, len(sys.positive_roots(full)) * (a.length + b.length))
    return DEFAULT_REVERSING_STEPS


def lcm_left(a: PositiveBraid, b: PositiveBraid,
             max_steps: int | None = None) -> PositiveBraid | None:
    """Least common multiple for left divisibility, by subword reversing.

    Returns None when no common multiple exists, or when the rewriting
    budget is exhausted (possible only in non-spherical systems; the default
    budget is sound for spherical type).
    """
    sys = a.system
    budget = _reversing_bound(sys, a, b, max_steps)
    # signed word for a^-1 b; -1 entries are inverse letters
    word = [(x, -1) for x in reversed(a.iword)] + [(x, 1) for x in b.iword]
    steps = 0
    i = 0
    while True:
        while i < len(word) - 1 and not (word[i][1] < 0 and word[i + 1][1] > 0):
            i += 1
        if i >= len(word) - 1:
            break
        x, y = word[i][0], word[i + 1][0]
        if x == y:
            del word[i:i + 2]
        else:
            m = sys.matrix[x][y]
            if m == INF:
                return None
            pos = [(l, 1) for l in _alternating(y, x, m - 1)]
            neg = [(l, -1) for l in reversed(_alternating(x, y, m - 1))]
            word[i:i + 2] = pos + neg
        steps += 1
        if steps > budget:
            return None
        i = max(i - 1, 0)
    comp = [l for l, sign in word if sign > 0]
    result = a * canonicalize(sys, sys.letter_names(comp))
    assert left_divides(b, result), "reversing produced a non-multiple"
    return result


def lcm_right(a: PositiveBraid, b: PositiveBraid,
              max_steps: int | None = None) -> PositiveBraid | None:
    m = lcm_left(reverse(a), reverse(b), max_steps=max_steps)
    return None if m is None else reverse(m)


# ---------------------------------------------------------------------------
# parabolic heads


def parabolic_head_left(g: PositiveBraid,
                        Y: Iterable[str]) -> tuple[PositiveBraid, PositiveBraid]:
    """Maximal head in A_Y^+: g = a * rest with rest not left-divisible by Y."""
    sys = g.system
    iY = sys.subset(Y)
    letters = []
    rest = g
    while True:
        common = set(letter_divisors_left(rest)) & iY
        if not common:
            break
        s = min(common)
        letters.append(s)
        rest = left_quotient_letter(rest, s)
    head = PositiveBraid(sys, _normalize(sys, [(i,) for i in letters]))
    return head, rest


def parabolic_head_right(g: PositiveBraid,
                         Y: Iterable[str]) -> tuple[PositiveBraid, PositiveBraid]:
    """g = rest * a with a in A_Y^+ maximal, rest not right-divisible by Y."""
    head, rest = parabolic_head_left(reverse(g), Y)
    return reverse(head), reverse(rest)


def is_x_reduced(g: PositiveBraid, X: Iterable[str]) -> bool:
    """Not left-divisible by any letter of X."""
    return not (set(letter_divisors_left(g)) & g.system.subset(X))


def is_reduced_x(g: PositiveBraid, X: Iterable[str]) -> bool:
    """Not right-divisible by any letter of X."""
    return not (set(letter_divisors_right(g)) & g.system.subset(X))


# ---------------------------------------------------------------------------
# chains


@dataclass(frozen=True)
class Chain:
    """Product of simple chains governing divisibility propagation."""
    origin: str
    target: str
    simple_parts: tuple[tuple[str, ...], ...]

    def word(self) -> tuple[str, ...]:
        return tuple(x for part in self.simple_parts for x in part)


@dataclass(frozen=True)
class ChainDecomposition:
    divisible: bool
    chain: Chain | None = None
    remainder: PositiveBraid | None = None


def chain_decompose(h: PositiveBraid, s: str) -> ChainDecomposition:
    """Split h as (s-chain) * k when s does not left-divide h.

    The remainder k is either trivial or starts with a letter r such that
    r and the chain's target have no common multiple.  Among possible chain
    prefixes we take the greedy leftmost one (least dividing letter first).
    """
    sys = h.system
    i_s = sys.index[s]
    if i_s in letter_divisors_left(h):
        return ChainDecomposition(divisible=True)
    sigma = i_s
    parts: list[tuple[str, ...]] = []
    rem = h
    while not rem.is_identity:
        r = min(letter_divisors_left(rem))
        assert r != sigma
        m = sys.matrix[sigma][r]
        if m == INF:
            break
        j = 0
        part: list[int] = []
        while j < m - 1:
            nxt = r if j % 2 == 0 else sigma
            if nxt not in letter_divisors_left(rem):
                break
            part.append(nxt)
            rem = left_quotient_letter(rem, nxt)
            j += 1
        assert part, "dividing letter vanished"
        parts.append(sys.letter_names(part))
        sigma = r if j % 2 == 0 else sigma  # next letter of the alternation
    chain = Chain(origin=s, target=sys.names[sigma], simple_parts=tuple(parts))
    return ChainDecomposition(divisible=False, chain=chain, remainder=rem)


# ---------------------------------------------------------------------------
# factorwise conjugation


def conjugate_through_factors(g: PositiveBraid, t: str) -> tuple[str, ...] | None:
    """Letters (s_0 = t, ..., s_n) with s_{i-1} g_i = g_i s_i, or None.

    Succeeds exactly when t*g = g*s for some letter s; the last entry is s.
    """
    sys = g.system
    cur = sys.index.get(t)
    if cur is None:
        raise errors.UnknownGenerator(f"unknown generator {t!r}")
    letters = [cur]
    for f in g.factors:
        u = sys.mult(sys.mult(sys.inv(f), (cur,)), f)
        if len(u) != 1:
            return None
        cur = u[0]
        letters.append(cur)
    return sys.letter_names(letters)
