"""Permutations in one-line notation and the statistics used throughout.

Positions and values are 1-based.  A permutation of length 2n is
centrosymmetric when p(i) + p(2n+1-i) = 2n+1 for every i, i.e. its plot is
invariant under a half-turn.  The empty permutation is a valid member of
every class here and anchors the recurrences at n = 0.
"""

from bisect import bisect_left
from dataclasses import dataclass


class InvalidPermutation(ValueError):
    """Input is not a permutation or lacks a property an operation requires."""


class Permutation:
    """A permutation of {1, ..., n} in one-line notation.

    >>> str(Permutation((2, 4, 1, 3)))
    '2 4 1 3'
    """

    __slots__ = ("values",)

    def __init__(self, values):
        values = tuple(values)
        n = len(values)
        seen = set()
        for pos, v in enumerate(values, start=1):
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidPermutation(f"non-integer entry {v!r} at position {pos}")
            if not 1 <= v <= n:
                raise InvalidPermutation(
                    f"value {v} out of range 1..{n} at position {pos}"
                )
            if v in seen:
                raise InvalidPermutation(f"duplicate value {v} at position {pos}")
            seen.add(v)
        self.values = values

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.values == other.values

    def __lt__(self, other):
        return self.values < other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"Permutation({self.values!r})"

    def __str__(self):
        return " ".join(str(v) for v in self.values)


def parse_permutation(text: str) -> Permutation:
    """Parse space- or comma-separated 1-based values.

    >>> parse_permutation("2, 4, 1, 3") == Permutation((2, 4, 1, 3))
    True
    """
    tokens = text.replace(",", " ").split()
    values = []
    for pos, tok in enumerate(tokens, start=1):
        try:
            values.append(int(tok))
        except ValueError:
            raise InvalidPermutation(
                f"non-integer token {tok!r} at position {pos}"
            ) from None
    return Permutation(values)


def reverse(p: Permutation) -> Permutation:
    return Permutation(p.values[::-1])


def complement(p: Permutation) -> Permutation:
    n = len(p)
    return Permutation(tuple(n + 1 - v for v in p.values))


def is_centrosymmetric(p: Permutation) -> bool:
    n = len(p)
    return all(p.values[i] + p.values[n - 1 - i] == n + 1 for i in range(n))


def descent_set(p: Permutation) -> tuple:
    """Positions i with p(i) > p(i+1), 1-based."""
    v = p.values
    return tuple(i for i in range(1, len(v)) if v[i - 1] > v[i])


def descent_count(p: Permutation) -> int:
    v = p.values
    return sum(v[i - 1] > v[i] for i in range(1, len(v)))


def lis_length(seq) -> int:
    """Length of a longest increasing subsequence (patience sorting)."""
    tails = []
    for v in seq:
        i = bisect_left(tails, v)
        if i == len(tails):
            tails.append(v)
        else:
            tails[i] = v
    return len(tails)


def word_contains_pattern(word, pattern) -> bool:
    """Classical containment for a word of distinct integers.

    Pruned backtracking over positions: an occurrence is grown left to
    right and every partial choice must already be order-isomorphic to the
    corresponding pattern prefix.
    """
    word = tuple(word)
    pattern = tuple(pattern)
    n, k = len(word), len(pattern)
    if k == 0:
        return True
    if k > n:
        return False

    def extend(chosen, start):
        m = len(chosen)
        if m == k:
            return True
        for i in range(start, n - (k - m) + 1):
            v = word[i]
            if all(
                (v > word[c]) == (pattern[m] > pattern[j])
                for j, c in enumerate(chosen)
            ):
                chosen.append(i)
                if extend(chosen, i + 1):
                    return True
                chosen.pop()
        return False

    return extend([], 0)


def contains_pattern(p: Permutation, pattern) -> bool:
    """Does p contain the pattern as an order-isomorphic subsequence?

    The pattern 123 gets a fast path (longest increasing subsequence of
    length 3); everything else goes through backtracking.
    """
    pat = pattern if isinstance(pattern, Permutation) else Permutation(pattern)
    if pat.values == (1, 2, 3):
        return lis_length(p.values) >= 3
    return word_contains_pattern(p.values, pat.values)


def avoids_pattern(p: Permutation, pattern) -> bool:
    return not contains_pattern(p, pattern)


def ltr_minima(p: Permutation) -> tuple:
    """Values of the left-to-right minima, in position order."""
    out = []
    cur = len(p) + 1
    for v in p.values:
        if v < cur:
            out.append(v)
            cur = v
    return tuple(out)


def connected_components(p: Permutation) -> tuple:
    """Finest split into position intervals I with p(I) = I.

    Returns 1-based (start, end) pairs.  A cut is legal after position i
    exactly when max(p(1..i)) = i.
    """
    out = []
    start = 1
    mx = 0
    for i, v in enumerate(p.values, start=1):
        if v > mx:
            mx = v
        if mx == i:
            out.append((start, i))
            start = i + 1
    return tuple(out)


def right_connected_components(p: Permutation) -> tuple:
    """Connected components of the reversed permutation, mapped back.

    For a centrosymmetric permutation the resulting intervals coincide with
    the blocks one sees when reading the plot from the right edge.
    """
    m = len(p)
    return tuple(
        sorted((m + 1 - b, m + 1 - a) for a, b in connected_components(reverse(p)))
    )


def _require_even_centrosymmetric(p: Permutation):
    if len(p) % 2 or not is_centrosymmetric(p):
        raise InvalidPermutation("not centrosymmetric of even length")


def require_member(p: Permutation):
    """Check p is an even-length centrosymmetric 123-avoider."""
    _require_even_centrosymmetric(p)
    if contains_pattern(p, (1, 2, 3)):
        raise InvalidPermutation("contains the pattern 123")


def left_half_word(p: Permutation) -> tuple:
    """First n entries of a centrosymmetric permutation of length 2n.

    The first half determines the whole permutation: position 2n+1-i must
    carry the complement of position i.
    """
    _require_even_centrosymmetric(p)
    return p.values[: len(p) // 2]


def descents_from_half(p: Permutation) -> int:
    """des(p) recovered from the first half alone.

    Descent positions of a centrosymmetric permutation are mirror
    symmetric, so des(p) = 2 des(w) plus one middle descent exactly when
    p(n) > n.
    """
    _require_even_centrosymmetric(p)
    n = len(p) // 2
    if n == 0:
        return 0
    w = p.values[:n]
    d = sum(w[i] > w[i + 1] for i in range(n - 1))
    return 2 * d + (1 if w[-1] > n else 0)


def middle_element(alphabet) -> int:
    """Lower median of an even-size sorted alphabet: entry at index h of 2h."""
    h, odd = divmod(len(alphabet), 2)
    if odd or h == 0:
        raise ValueError("alphabet must have positive even size")
    return alphabet[h - 1]


def rank_within(word, alphabet) -> tuple:
    """Rewrite a word over a sorted alphabet by ranks (order isomorphism)."""
    rank = {a: i for i, a in enumerate(alphabet, start=1)}
    return tuple(rank[v] for v in word)


def embed_in(word, alphabet) -> tuple:
    """Inverse of rank_within: send value v to the v-th smallest symbol."""
    return tuple(alphabet[v - 1] for v in word)


@dataclass(frozen=True)
class MinimaDecomposition:
    """Left-to-right minima split of the first half of a 123-avoiding member.

    The half word factors as x_1 w_1 x_2 w_2 ... x_s w_s where the x_i are
    the left-to-right minima.  Alphabet A_0 = {1..2n}; A_i removes from
    A_{i-1} the pair {x_i, 2n+1-x_i} and the entries of w_i together with
    their complements.  The minimum x_i is "tiny" when it equals the lower
    median of A_{i-1}; once a minimum is tiny all later ones are.
    """

    blocks: tuple  # ((x_i, w_i), ...) with w_i a tuple of values
    alphabets: tuple  # sorted tuples A_0 .. A_s
    middles: tuple  # lower medians m(A_0) .. m(A_{s-1})
    tiny_flags: tuple

    @property
    def minima(self) -> tuple:
        return tuple(x for x, _ in self.blocks)

    @property
    def lengths(self) -> tuple:
        """Block word lengths l_1 .. l_s."""
        return tuple(len(w) for _, w in self.blocks)

    @property
    def tiny_values(self) -> tuple:
        return tuple(x for (x, _), t in zip(self.blocks, self.tiny_flags) if t)


def minima_decomposition(p: Permutation) -> MinimaDecomposition:
    """Decompose the first half of p (must avoid 123) at its minima."""
    require_member(p)
    n2 = len(p)
    w = p.values[: n2 // 2]

    blocks = []
    i = 0
    while i < len(w):
        x = w[i]
        j = i + 1
        while j < len(w) and w[j] > x:
            j += 1
        blocks.append((x, w[i + 1 : j]))
        i = j

    alphabet = tuple(range(1, n2 + 1))
    alphabets = [alphabet]
    middles = []
    tiny_flags = []
    for x, wi in blocks:
        middles.append(middle_element(alphabet))
        tiny_flags.append(x == middles[-1])
        removed = {x, n2 + 1 - x}
        for v in wi:
            removed.add(v)
            removed.add(n2 + 1 - v)
        alphabet = tuple(a for a in alphabet if a not in removed)
        alphabets.append(alphabet)
        assert len(alphabets[-2]) - len(alphabet) == 2 + 2 * len(wi)

    return MinimaDecomposition(
        blocks=tuple(blocks),
        alphabets=tuple(alphabets),
        middles=tuple(middles),
        tiny_flags=tuple(tiny_flags),
    )


def stats(p: Permutation) -> dict:
    """The statistics record emitted by the command line interface.

    tiny_minima is populated only for even-length centrosymmetric
    123-avoiders, where the notion is defined; otherwise it is None.
    """
    record = {
        "n": len(p),
        "centrosymmetric": is_centrosymmetric(p),
        "descents": list(descent_set(p)),
        "des": descent_count(p),
        "ltr_minima": list(ltr_minima(p)),
        "tiny_minima": None,
        "right_components": len(right_connected_components(p)),
    }
    if (
        len(p) % 2 == 0
        and record["centrosymmetric"]
        and not contains_pattern(p, (1, 2, 3))
    ):
        record["tiny_minima"] = list(minima_decomposition(p).tiny_values)
    return record
