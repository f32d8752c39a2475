"""Pure-Python word kernel.

Low-level arithmetic on Coxeter words through the reflection representation:
canonical ShortLex reduced words, descent sets and root actions.  Everything
above this layer (monoid normal forms, ribbons, ...) only talks to words via
these three entry points, so this module and its compiled twin
(`parabolic._kernel_c`) must stay behaviourally identical.

Words are tuples of generator indices; vectors are tuples of floats in the
simple-root basis.  A word acts on a vector letter by letter, rightmost
letter first.
"""

EPS_SIGN = 1e-9   # componentwise sign test for roots
EPS_ROOT = 1e-6   # identification of a vector with a simple root


class PyWordKernel:
    def __init__(self, gram):
        self.gram = [tuple(float(x) for x in row) for row in gram]
        self.rank = len(gram)

    # -- elementary moves ---------------------------------------------------

    def reflect(self, s, v):
        """Apply the simple reflection s:  v - 2(v, e_s) e_s."""
        row = self.gram[s]
        ip = 0.0
        for j in range(self.rank):
            ip += row[j] * v[j]
        w = list(v)
        w[s] -= 2.0 * ip
        return tuple(w)

    def act(self, word, v):
        """Apply the element spelled by `word` to the vector v."""
        if len(v) != self.rank:
            raise ValueError("vector dimension does not match rank")
        for j in range(len(word) - 1, -1, -1):
            v = self.reflect(word[j], v)
        return v

    # -- reduced words ------------------------------------------------------

    def _simple(self, s):
        v = [0.0] * self.rank
        v[s] = 1.0
        return tuple(v)

    def _is_simple(self, v, s):
        for j in range(self.rank):
            target = 1.0 if j == s else 0.0
            if abs(v[j] - target) > EPS_ROOT:
                return False
        return True

    def _mult_right(self, word, s):
        """Reduced word for w*s given a reduced word for w.

        If the length goes up, append; otherwise delete the letter found by
        the exchange condition (the unique j with r_{j+1}..r_{k-1} e_s =
        e_{r_j}).
        """
        v = self._simple(s)
        for j in range(len(word) - 1, -1, -1):
            v = self.reflect(word[j], v)
        if min(v) >= -EPS_SIGN:
            return word + (s,)
        v = self._simple(s)
        for j in range(len(word) - 1, -1, -1):
            if self._is_simple(v, word[j]):
                return word[:j] + word[j + 1:]
            v = self.reflect(word[j], v)
        raise AssertionError("exchange condition failed on a reduced word")

    def reduce(self, word):
        """Some reduced word for the element spelled by `word`."""
        r = ()
        for s in word:
            r = self._mult_right(r, s)
        return r

    def canonical(self, word):
        """The ShortLex-minimal reduced word for the element of `word`.

        Greedily emits the least left descent: s is a left descent of w
        exactly when w^{-1} e_s is a negative root.
        """
        inv = tuple(reversed(self.reduce(word)))
        out = []
        while inv:
            for s in range(self.rank):
                v = self.act(inv, self._simple(s))
                if max(v) <= EPS_SIGN:
                    out.append(s)
                    inv = self._mult_right(inv, s)
                    break
            else:
                raise AssertionError("nontrivial element without left descent")
        return tuple(out)

    def left_descents(self, word):
        """Indices s with l(s*w) < l(w), for the element spelled by `word`."""
        inv = tuple(reversed(self.reduce(word)))
        out = []
        for s in range(self.rank):
            v = self.act(inv, self._simple(s))
            if max(v) <= EPS_SIGN:
                out.append(s)
        return tuple(out)
