"""Coxeter systems, the reflection representation and root bookkeeping.

Everything downstream (the positive monoid, Garside structure, ribbons)
reduces to word arithmetic in the Coxeter group: canonical ShortLex reduced
words, descent sets, root actions, longest elements of finite standard
parabolics, and Deodhar's nu-elements transporting one set of simple roots
to another.

Letters are exposed as generator names (strings); internally all words are
tuples of generator indices fed to the numeric kernel.  Subsets of S are
frozensets of names at the API boundary.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from . import errors
from ._kernel_py import EPS_ROOT, EPS_SIGN
from .kernel import WordKernel

INF = math.inf


def _as_m(value):
    if value in ("inf", "infinity", INF, None):
        return INF
    v = int(value)
    return v


class CoxeterSystem:
    """A finite generating set S with its Coxeter matrix and derived data.

    Immutable after construction; the lazy caches only ever fill in values
    that behave as if computed eagerly.
    """

    def __init__(self, names: Iterable[str], matrix):
        self.names = tuple(names)
        self.rank = len(self.names)
        if len(set(self.names)) != self.rank:
            raise errors.UnknownGenerator("duplicate generator names")
        self.index = {n: i for i, n in enumerate(self.names)}
        self.matrix = [list(row) for row in matrix]
        self.gram = [
            [
                -1.0 if self.matrix[i][j] == INF
                else -math.cos(math.pi / self.matrix[i][j])
                for j in range(self.rank)
            ]
            for i in range(self.rank)
        ]
        self.kernel = WordKernel(self.gram)
        self._canon_cache: dict[tuple, tuple] = {}
        self._mult_cache: dict[tuple, tuple] = {}
        self._inv_cache: dict[tuple, tuple] = {}
        self._descent_cache: dict[tuple, tuple] = {}
        self._spherical_cache: dict[frozenset, bool] = {}
        self._longest_cache: dict[frozenset, tuple] = {}
        self._posroots_cache: dict[frozenset, list] = {}

    # -- basic accessors ----------------------------------------------------

    def m(self, s: str, t: str):
        return self.matrix[self.index[s]][self.index[t]]

    def indices(self, letters: Iterable[str]) -> tuple[int, ...]:
        try:
            return tuple(self.index[x] for x in letters)
        except KeyError as exc:
            raise errors.UnknownGenerator(f"unknown generator {exc.args[0]!r}")

    def subset(self, letters: Iterable[str]) -> frozenset[int]:
        return frozenset(self.indices(letters))

    def letter_names(self, iword: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.names[i] for i in iword)

    def __repr__(self):
        return f"CoxeterSystem({list(self.names)})"

    # -- word arithmetic (index words) --------------------------------------

    def canon(self, iword: tuple[int, ...]) -> tuple[int, ...]:
        c = self._canon_cache.get(iword)
        if c is None:
            c = self.kernel.canonical(iword)
            self._canon_cache[iword] = c
            self._canon_cache[c] = c
        return c

    def mult(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        key = (a, b)
        c = self._mult_cache.get(key)
        if c is None:
            c = self.canon(a + b)
            self._mult_cache[key] = c
        return c

    def inv(self, a: tuple[int, ...]) -> tuple[int, ...]:
        c = self._inv_cache.get(a)
        if c is None:
            c = self.canon(tuple(reversed(a)))
            self._inv_cache[a] = c
        return c

    def left_descents(self, a: tuple[int, ...]) -> tuple[int, ...]:
        c = self._descent_cache.get(a)
        if c is None:
            c = self.kernel.left_descents(a)
            self._descent_cache[a] = c
        return c

    def right_descents(self, a: tuple[int, ...]) -> tuple[int, ...]:
        return self.left_descents(self.inv(a))

    def simple_coords(self, s: int) -> tuple[float, ...]:
        v = [0.0] * self.rank
        v[s] = 1.0
        return tuple(v)

    def act_coords(self, iword, coords):
        if len(coords) != self.rank:
            raise errors.DimensionMismatch(
                f"vector of dimension {len(coords)}, rank {self.rank}")
        return self.kernel.act(iword, coords)

    def match_simple(self, coords) -> int | None:
        """Index s with coords ~ e_s, or None."""
        for s in range(self.rank):
            if all(abs(coords[j] - (1.0 if j == s else 0.0)) <= EPS_ROOT
                   for j in range(self.rank)):
                return s
        return None

    # -- graph structure and sphericity -------------------------------------

    def components(self, X: frozenset[int]) -> list[frozenset[int]]:
        """Indecomposable components of the induced Coxeter graph on X."""
        rest = set(X)
        comps = []
        while rest:
            seed = min(rest)
            comp = {seed}
            frontier = [seed]
            while frontier:
                i = frontier.pop()
                for j in list(rest - comp):
                    if self.matrix[i][j] != 2:
                        comp.add(j)
                        frontier.append(j)
            comps.append(frozenset(comp))
            rest -= comp
        return comps

    def component_of(self, X: frozenset[int], t: int) -> frozenset[int]:
        """X(t): the indecomposable component of X | {t} containing t."""
        for comp in self.components(X | {t}):
            if t in comp:
                return comp
        raise AssertionError

    def _component_is_finite(self, comp: frozenset[int]) -> bool:
        n = len(comp)
        if n <= 1:
            return True
        nodes = sorted(comp)
        edges = []
        for a in nodes:
            for b in nodes:
                if a < b and self.matrix[a][b] != 2:
                    m = self.matrix[a][b]
                    if m == INF:
                        return False
                    edges.append((a, b, m))
        if len(edges) != n - 1:
            return False  # a cycle; no finite type contains one
        deg = {a: 0 for a in nodes}
        for a, b, _ in edges:
            deg[a] += 1
            deg[b] += 1
        if max(deg.values()) > 3:
            return False
        if n == 2:
            return True  # I2(m), m finite
        branch = [a for a in nodes if deg[a] == 3]
        labels = sorted(m for _, _, m in edges)
        if branch:
            if len(branch) > 1 or labels[-1] > 3:
                return False
            # arm lengths from the unique branch node
            arms = self._arm_lengths(nodes, edges, branch[0])
            arms.sort()
            if arms[0] == arms[1] == 1:
                return True  # D_n
            return arms in ([1, 2, 2], [1, 2, 3], [1, 2, 4])  # E6/E7/E8
        # path: read edge labels end to end
        ends = [a for a in nodes if deg[a] == 1]
        seq = self._path_labels(nodes, edges, ends[0])
        big = [m for m in seq if m > 3]
        if not big:
            return True  # A_n
        if len(big) > 1:
            return False
        if big[0] == 4:
            if seq[0] == 4 or seq[-1] == 4:
                return True  # B_n
            return n == 4 and seq == [3, 4, 3]  # F4
        if big[0] == 5:
            return n <= 4 and (seq[0] == 5 or seq[-1] == 5)  # H3 / H4
        return False

    def _arm_lengths(self, nodes, edges, center):
        adj = {a: [] for a in nodes}
        for a, b, _ in edges:
            adj[a].append(b)
            adj[b].append(a)
        arms = []
        for start in adj[center]:
            length = 1
            prev, cur = center, start
            while True:
                nxt = [x for x in adj[cur] if x != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
        return arms

    def _path_labels(self, nodes, edges, end):
        label = {}
        adj = {a: [] for a in nodes}
        for a, b, m in edges:
            adj[a].append(b)
            adj[b].append(a)
            label[(a, b)] = label[(b, a)] = m
        seq = []
        prev, cur = None, end
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                return seq
            seq.append(label[(cur, nxt[0])])
            prev, cur = cur, nxt[0]

    def is_spherical(self, X: frozenset[int]) -> bool:
        X = frozenset(X)
        v = self._spherical_cache.get(X)
        if v is None:
            v = all(self._component_is_finite(c) for c in self.components(X))
            self._spherical_cache[X] = v
        return v

    # -- roots and longest elements -----------------------------------------

    def positive_roots(self, X: frozenset[int]) -> list[tuple[float, ...]]:
        """All positive roots of the standard parabolic W_X (X spherical)."""
        X = frozenset(X)
        cached = self._posroots_cache.get(X)
        if cached is not None:
            return cached
        if not self.is_spherical(X):
            raise errors.NotSpherical(f"subset {sorted(X)} is not spherical")
        seen = {}
        frontier = [self.simple_coords(s) for s in sorted(X)]
        for v in frontier:
            seen[self._root_key(v)] = v
        while frontier:
            nxt = []
            for v in frontier:
                for s in X:
                    w = self.kernel.reflect(s, v)
                    if min(w) < -EPS_SIGN:
                        continue
                    key = self._root_key(w)
                    if key not in seen:
                        seen[key] = w
                        nxt.append(w)
            frontier = nxt
        roots = sorted(seen.values())
        self._posroots_cache[X] = roots
        return roots

    @staticmethod
    def _root_key(coords):
        return tuple(round(c, 6) for c in coords)

    def longest_word(self, X: frozenset[int]) -> tuple[int, ...]:
        X = frozenset(X)
        cached = self._longest_cache.get(X)
        if cached is not None:
            return cached
        if not self.is_spherical(X):
            raise errors.NotSpherical(f"subset {sorted(X)} is not spherical")
        w = ()
        changed = True
        while changed:
            changed = False
            for s in sorted(X):
                c = self.mult(w, (s,))
                if len(c) > len(w):
                    w = c
                    changed = True
        self._longest_cache[X] = w
        return w


# ---------------------------------------------------------------------------
# value types


@dataclass(frozen=True)
class Root:
    system: CoxeterSystem
    coords: tuple[float, ...]

    @property
    def is_positive(self) -> bool:
        return min(self.coords) >= -EPS_SIGN

    @property
    def is_negative(self) -> bool:
        return max(self.coords) <= EPS_SIGN

    @property
    def sign(self) -> int:
        if self.is_positive:
            return 1
        if self.is_negative:
            return -1
        raise AssertionError(f"mixed-sign root {self.coords}")

    def __neg__(self) -> "Root":
        return Root(self.system, tuple(-c for c in self.coords))

    def approx_eq(self, other: "Root", tol: float = EPS_ROOT) -> bool:
        return max(abs(a - b) for a, b in zip(self.coords, other.coords)) <= tol


@dataclass(frozen=True)
class CoxeterElement:
    """Group element as its canonical ShortLex-minimal reduced word."""
    system: CoxeterSystem
    iword: tuple[int, ...]

    @property
    def word(self) -> tuple[str, ...]:
        return self.system.letter_names(self.iword)

    @property
    def length(self) -> int:
        return len(self.iword)

    @property
    def is_identity(self) -> bool:
        return not self.iword

    def __mul__(self, other: "CoxeterElement") -> "CoxeterElement":
        return CoxeterElement(self.system, self.system.mult(self.iword, other.iword))

    def inverse(self) -> "CoxeterElement":
        return CoxeterElement(self.system, self.system.inv(self.iword))

    def conjugate(self, other: "CoxeterElement") -> "CoxeterElement":
        """self * other * self^-1."""
        return self * other * self.inverse()

    def act(self, root: Root) -> Root:
        return Root(self.system, self.system.act_coords(self.iword, root.coords))

    def left_descents(self) -> tuple[str, ...]:
        return self.system.letter_names(self.system.left_descents(self.iword))

    def __repr__(self):
        return f"<W: {' '.join(self.word) or '1'}>"


@dataclass(frozen=True)
class NuStep:
    """One Deodhar step nu(X, s) = w_{X(s)-{s}} w_{X(s)} transporting Pi_X."""
    origin: frozenset[str]
    letter: str
    target: frozenset[str]
    exchanged: str          # the t with X | {s} = Y | {t}
    element: CoxeterElement


# ---------------------------------------------------------------------------
# construction

_PRESET_RE = re.compile(r"^([ABDFHI])(\d+)(?:\((\d+|inf)\))?$")


def preset(name: str) -> CoxeterSystem:
    """Named system: A{n}, B{n}, D{n}, F4, H3, H4, I2(m) or I2(inf)."""
    m = _PRESET_RE.match(name.strip())
    if not m:
        raise errors.UnknownPreset(f"cannot parse preset {name!r}")
    family, rank, param = m.group(1), int(m.group(2)), m.group(3)
    if family != "I" and param is not None:
        raise errors.UnknownPreset(f"only I2 takes a parameter: {name!r}")
    names = [f"s{i}" for i in range(1, rank + 1)]
    entries: dict[tuple[str, str], object] = {}

    def chain(ms):
        for i, mv in enumerate(ms):
            entries[(names[i], names[i + 1])] = mv

    if family == "A" and rank >= 1:
        chain([3] * (rank - 1))
    elif family == "B" and rank >= 2:
        chain([3] * (rank - 2) + [4])
    elif family == "D" and rank >= 4:
        # path on s1..s_{n-1}, with s_n branching off s_{n-2}
        chain([3] * (rank - 2))
        entries[(names[rank - 3], names[rank - 1])] = 3
    elif family == "F" and rank == 4:
        chain([3, 4, 3])
    elif family == "H" and rank in (3, 4):
        chain([5] + [3] * (rank - 2))
    elif family == "I" and rank == 2:
        if param is None:
            raise errors.UnknownPreset("I2 needs a parameter, e.g. I2(7) or I2(inf)")
        mv = INF if param == "inf" else int(param)
        if mv != INF and mv < 3:
            raise errors.UnknownPreset("I2(m) needs m >= 3")
        entries[(names[0], names[1])] = mv
    else:
        raise errors.UnknownPreset(f"no finite-type preset {name!r}")
    return build_system(names, entries)


def build_system(names: Iterable[str],
                 entries: Mapping[tuple[str, str], object]) -> CoxeterSystem:
    """Validated system from explicit matrix entries; omitted pairs mean 2."""
    names = tuple(names)
    idx = {n: i for i, n in enumerate(names)}
    n = len(names)
    matrix = [[2] * n for _ in range(n)]
    for i in range(n):
        matrix[i][i] = 1
    given: dict[tuple[int, int], object] = {}
    for (a, b), raw in entries.items():
        if a not in idx or b not in idx:
            raise errors.UnknownGenerator(f"unknown generator in pair ({a}, {b})")
        v = _as_m(raw)
        i, j = idx[a], idx[b]
        if i == j:
            if v != 1:
                raise errors.BadDiagonal(f"m({a},{a}) must be 1, got {raw}")
            continue
        prev = given.get((min(i, j), max(i, j)))
        if prev is not None and prev != v:
            raise errors.AsymmetricMatrix(
                f"conflicting values for m({a},{b}): {prev} vs {v}")
        if v != INF and v < 2:
            raise errors.BadOffDiagonal(f"m({a},{b}) must be >= 2, got {raw}")
        given[(min(i, j), max(i, j))] = v
        matrix[i][j] = matrix[j][i] = v
    return CoxeterSystem(names, matrix)


# ---------------------------------------------------------------------------
# operations


def length_and_canonical(sys: CoxeterSystem, word: Iterable[str]) -> CoxeterElement:
    """Canonical ShortLex reduced form of an arbitrary word over S."""
    return CoxeterElement(sys, sys.canon(sys.indices(word)))


def element(sys: CoxeterSystem, word: Iterable[str]) -> CoxeterElement:
    return length_and_canonical(sys, word)


def identity(sys: CoxeterSystem) -> CoxeterElement:
    return CoxeterElement(sys, ())


def simple_root(sys: CoxeterSystem, s: str) -> Root:
    return Root(sys, sys.simple_coords(sys.index[s]))


def act(w: CoxeterElement, v: Root) -> Root:
    return w.act(v)


def longest_element(sys: CoxeterSystem, X: Iterable[str]) -> CoxeterElement:
    return CoxeterElement(sys, sys.longest_word(sys.subset(X)))


def transports_pi(sys: CoxeterSystem, w: CoxeterElement,
                  X: Iterable[str], Y: Iterable[str]) -> bool:
    """Whether {w^-1 e_x : x in X} equals Pi_Y as a set of roots."""
    iX, iY = sys.subset(X), sys.subset(Y)
    if len(iX) != len(iY):
        return False
    winv = sys.inv(w.iword)
    targets = set()
    for x in iX:
        v = sys.act_coords(winv, sys.simple_coords(x))
        y = sys.match_simple(v)
        if y is None or y not in iY:
            return False
        targets.add(y)
    return targets == iY


def nu(sys: CoxeterSystem, X: Iterable[str], s: str) -> NuStep:
    """Deodhar's nu(X, s) with its computed target subset."""
    iX = sys.subset(X)
    i_s = sys.index.get(s)
    if i_s is None:
        raise errors.UnknownGenerator(f"unknown generator {s!r}")
    if i_s in iX:
        raise ValueError(f"letter {s!r} must lie outside X")
    comp = sys.component_of(iX, i_s)
    if not sys.is_spherical(comp):
        raise errors.ComponentNotSpherical(
            f"component of {s!r} in X | {{{s!r}}} is not spherical")
    w = sys.mult(sys.longest_word(comp - {i_s}), sys.longest_word(comp))
    elt = CoxeterElement(sys, w)
    winv = sys.inv(w)
    target = set()
    for x in iX:
        v = sys.act_coords(winv, sys.simple_coords(x))
        y = sys.match_simple(v)
        if y is None:
            raise AssertionError("nu failed to transport a simple root")
        target.add(y)
    target = frozenset(target)
    leftover = (iX | {i_s}) - target
    if len(leftover) != 1:
        raise AssertionError("nu target is not X | {s} minus one letter")
    (i_t,) = leftover
    return NuStep(
        origin=frozenset(sys.letter_names(iX)),
        letter=s,
        target=frozenset(sys.letter_names(target)),
        exchanged=sys.names[i_t],
        element=elt,
    )


def deodhar_decompose(sys: CoxeterSystem, w: CoxeterElement,
                      X: Iterable[str], Y: Iterable[str]) -> list[NuStep]:
    """Greedy factorization w = nu(X0,s0) ... nu(Xn-1,sn-1), lengths additive.

    Requires w^-1 Pi_X = Pi_Y; among valid letters we always take the
    ShortLex-least one whose nu divides the remainder subtractively.
    """
    Xset = frozenset(X)
    Yset = frozenset(Y)
    if not transports_pi(sys, w, Xset, Yset):
        raise errors.NotPiTransporter(
            f"{w!r} does not transport Pi_{sorted(Xset)} to Pi_{sorted(Yset)}")
    steps: list[NuStep] = []
    cur = Xset
    rem = w
    while not rem.is_identity:
        for s in sys.names:
            if s in cur:
                continue
            icomp = sys.component_of(sys.subset(cur), sys.index[s])
            if not sys.is_spherical(icomp):
                continue
            step = nu(sys, cur, s)
            q = step.element.inverse() * rem
            if q.length == rem.length - step.element.length:
                steps.append(step)
                cur = step.target
                rem = q
                break
        else:
            raise AssertionError("no subtractive nu step found; decomposition stuck")
    if cur != Yset:
        raise AssertionError("decomposition terminated away from Y")
    return steps


def normalizer_decompose_w(sys: CoxeterSystem, w: CoxeterElement,
                           X: Iterable[str]) -> tuple[CoxeterElement, CoxeterElement]:
    """Split w in N_W(W_X) as g*u with g Pi_X = Pi_X and u in W_X."""
    iX = sys.subset(X)
    g = w.iword
    u: tuple[int, ...] = ()
    stripped = True
    while stripped:
        stripped = False
        for x in sorted(iX):
            if x in sys.right_descents(g):
                g = sys.mult(g, (x,))
                u = sys.mult((x,), u)
                stripped = True
                break
    mapped = set()
    for x in iX:
        v = sys.act_coords(g, sys.simple_coords(x))
        y = sys.match_simple(v)
        if y is None or y not in iX:
            raise errors.NotInNormalizer(
                f"{w!r} does not normalize W_{sorted(sys.letter_names(iX))}")
        mapped.add(y)
    if mapped != iX:
        raise errors.NotInNormalizer("Pi_X is not stabilized")
    return CoxeterElement(sys, g), CoxeterElement(sys, u)


def enumerate_elements(sys: CoxeterSystem, X: Iterable[str] | None = None,
                       cap: int = 40320) -> list[CoxeterElement]:
    """All elements of W_X by BFS on canonical words (X defaults to S)."""
    iX = sys.subset(X) if X is not None else frozenset(range(sys.rank))
    seen = {(): None}
    frontier = [()]
    while frontier:
        nxt = []
        for w in frontier:
            for s in iX:
                c = sys.mult(w, (s,))
                if c not in seen:
                    seen[c] = None
                    nxt.append(c)
                    if len(seen) > cap:
                        raise errors.NotEnumerable(
                            f"group exceeds enumeration cap {cap}")
        frontier = nxt
    return [CoxeterElement(sys, w) for w in sorted(seen, key=lambda t: (len(t), t))]
