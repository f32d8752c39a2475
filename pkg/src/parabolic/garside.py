"""Spherical-type Garside structure on A_S.

Provides Delta_X with its conjugation automorphism, group elements of A_S in
right normal form a*b^-1 (a, b positive with trivial common right divisor),
and the Delta-power form of group elements.  Group elements are only defined
over spherical ambient systems; non-spherical systems stay monoid-only.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import artin, errors
from .artin import PositiveBraid
from .coxeter import CoxeterSystem


def _require_spherical(sys: CoxeterSystem):
    if not sys.is_spherical(frozenset(range(sys.rank))):
        raise errors.NotSpherical(
            "group-level elements need a spherical ambient system")


@dataclass(frozen=True)
class GarsideData:
    """Delta_X, the permutation it induces on X, and its centrality order."""
    system: CoxeterSystem
    subset: frozenset[str]
    delta: PositiveBraid
    sigma: dict[str, str]
    epsilon: int

    def __repr__(self):
        return (f"GarsideData(X={sorted(self.subset)}, "
                f"delta={' '.join(self.delta.word)}, eps={self.epsilon})")


def delta(sys: CoxeterSystem, X: Iterable[str]) -> GarsideData:
    """Garside element of the standard parabolic A_X (X spherical)."""
    iX = sys.subset(X)
    if not sys.is_spherical(iX):
        raise errors.NotSpherical(f"subset {sorted(X)} is not spherical")
    w0 = sys.longest_word(iX)
    d = artin.from_reduced_word(sys, w0)
    sigma = {}
    for x in iX:
        img = sys.mult(sys.mult(w0, (x,)), w0)
        assert len(img) == 1 and img[0] in iX
        sigma[sys.names[x]] = sys.names[img[0]]
    eps = 1 if all(k == v for k, v in sigma.items()) else 2
    return GarsideData(sys, frozenset(sys.letter_names(iX)), d, sigma, eps)


def conj_by_delta(data: GarsideData, g: PositiveBraid) -> PositiveBraid:
    """sigma applied letterwise: Delta_X g Delta_X^-1 for g supported on X."""
    sys = g.system
    word = g.word
    if not set(word) <= data.subset:
        raise errors.SupportOutsideX(
            f"support {sorted(set(word))} not inside {sorted(data.subset)}")
    return artin.canonicalize(sys, [data.sigma[x] for x in word])


# ---------------------------------------------------------------------------
# group elements


@dataclass(frozen=True)
class ArtinElement:
    """g = pos * neg^-1 with gcd_right(pos, neg) = 1 (right normal form)."""
    system: CoxeterSystem
    pos: PositiveBraid
    neg: PositiveBraid

    @property
    def is_identity(self) -> bool:
        return self.pos.is_identity and self.neg.is_identity

    @property
    def is_positive(self) -> bool:
        return self.neg.is_identity

    def __mul__(self, other: "ArtinElement") -> "ArtinElement":
        u, v = _mixed_pair(self.neg, other.pos)
        return artin_element(self.pos * u, other.neg * v)

    def inverse(self) -> "ArtinElement":
        return artin_element(self.neg, self.pos)

    def conjugate(self, other: "ArtinElement") -> "ArtinElement":
        """self * other * self^-1."""
        return self * other * self.inverse()

    def __pow__(self, n: int) -> "ArtinElement":
        base = self if n >= 0 else self.inverse()
        out = identity_element(self.system)
        for _ in range(abs(n)):
            out = out * base
        return out

    def support(self) -> frozenset[str]:
        return frozenset(self.pos.word) | frozenset(self.neg.word)

    def __repr__(self):
        if self.is_identity:
            return "<A: 1>"
        parts = []
        if not self.pos.is_identity:
            parts.append(" ".join(self.pos.word))
        if not self.neg.is_identity:
            parts.append("(" + " ".join(self.neg.word) + ")^-1")
        return "<A: " + " . ".join(parts) + ">"


def _mixed_pair(b: PositiveBraid, c: PositiveBraid) -> tuple[PositiveBraid, PositiveBraid]:
    """u, v with b^-1 c = u v^-1 (clearing the inner inverse via lcm)."""
    m = artin.lcm_left(b, c)
    assert m is not None, "lcm must exist in a spherical system"
    u = artin.left_quotient(m, b)
    v = artin.left_quotient(m, c)
    assert u is not None and v is not None
    return u, v


def artin_element(a: PositiveBraid, b: PositiveBraid) -> ArtinElement:
    """a * b^-1 brought to right normal form (common right divisor removed)."""
    sys = a.system
    _require_spherical(sys)
    d = artin.gcd_right(a, b)
    if not d.is_identity:
        a = artin.right_quotient(a, d)
        b = artin.right_quotient(b, d)
    return ArtinElement(sys, a, b)


def identity_element(sys: CoxeterSystem) -> ArtinElement:
    return artin_element(artin.identity(sys), artin.identity(sys))


def positive_element(g: PositiveBraid) -> ArtinElement:
    return artin_element(g, artin.identity(g.system))


def letter_element(sys: CoxeterSystem, name: str, sign: int = 1) -> ArtinElement:
    b = artin.canonicalize(sys, [name])
    if sign >= 0:
        return positive_element(b)
    return artin_element(artin.identity(sys), b)


def parse_signed_word(sys: CoxeterSystem, tokens: Iterable[str]) -> list[tuple[str, int]]:
    """Tokens are generator names, with a trailing apostrophe for inverses."""
    out = []
    for tok in tokens:
        sign = 1
        if tok.endswith("'"):
            sign = -1
            tok = tok[:-1]
        if tok not in sys.index:
            raise errors.UnknownGenerator(f"unknown generator {tok!r}")
        out.append((tok, sign))
    return out


def group_from_word(sys: CoxeterSystem, tokens: Iterable[str]) -> ArtinElement:
    """Canonical right normal form of a signed word."""
    _require_spherical(sys)
    g = identity_element(sys)
    for name, sign in parse_signed_word(sys, tokens):
        g = g * letter_element(sys, name, sign)
    return g


def left_normal_pair(g: ArtinElement) -> tuple[PositiveBraid, PositiveBraid]:
    """(c, d) with g = c^-1 d and gcd_left(c, d) = 1."""
    m = artin.lcm_right(g.pos, g.neg)
    assert m is not None
    c = artin.right_quotient(m, g.pos)
    d = artin.right_quotient(m, g.neg)
    assert c is not None and d is not None
    # m = c*pos = d*neg, so g = pos*neg^-1 = c^-1 * d
    return c, d


# ---------------------------------------------------------------------------
# Delta-power form


def delta_power_form(g: ArtinElement,
                     data: GarsideData | None = None) -> tuple[PositiveBraid, int]:
    """g = g1 * Delta_S^n with n maximal and g1 positive."""
    sys = g.system
    if data is None:
        data = delta(sys, sys.names)
    if data.subset != frozenset(sys.names):
        raise errors.NotSpherical("Delta-power form is taken over the full system")
    d = data.delta
    k = len(g.neg.factors)
    dk = d ** k
    comp = artin.left_quotient(dk, g.neg)
    assert comp is not None, "a k-factor braid must divide Delta^k"
    h = g.pos * comp
    n = -k
    while True:
        q = artin.right_quotient(h, d)
        if q is None:
            break
        h = q
        n += 1
    return h, n


def delta_power_form_even(g: ArtinElement,
                          data: GarsideData | None = None) -> tuple[PositiveBraid, int]:
    """Variant with an even Delta exponent (g1 need not be Delta-free)."""
    sys = g.system
    if data is None:
        data = delta(sys, sys.names)
    h, n = delta_power_form(g, data)
    if n % 2:
        h = h * data.delta
        n -= 1
    return h, n
