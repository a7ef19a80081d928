"""The bijection phi between even-length centrosymmetric 123-avoiders and
Dyck prefixes, the structural maps around it, and class generators.

phi works block by block on the minima decomposition of the first half.
A block (x_1, w_1) with l_1 = |w_1| at a level with half length n emits

    U^k D^(l_1+1)   with k = 2n+1-x_1,          when x_1 > n (not tiny),
    U^k D^l_1       with k = n+1,               when x_1 = n (tiny),

then recurses on the renormalized remainder sigma' and appends its path
with the leftmost k-l_1-1 (tiny: k-l_1-2) steps removed; those removed
steps are always U steps.  The final height of phi(p) is twice the number
of tiny minima, so phi(p) is a Dyck path exactly when p has none.
"""

from dataclasses import dataclass

from .perms import (
    InvalidPermutation,
    Permutation,
    avoids_pattern,
    contains_pattern,
    descent_count,
    embed_in,
    is_centrosymmetric,
    minima_decomposition,
    rank_within,
    require_member,
    right_connected_components,
)
from .paths import InvalidPath, LatticePath, enumerate_prefixes


class VerificationError(Exception):
    """A theorem-backed consistency check failed for a concrete input."""


@dataclass(frozen=True)
class PhiBlock:
    """One minima-decomposition block together with its emitted steps.

    deleted is the number of leading steps removed from the recursive
    remainder path at this block's level: k-l-1 when the block is not tiny
    and k-l-2 when it is, with k computed at that level.
    """

    minimum: int
    word: tuple
    tiny: bool
    emitted: str
    deleted: int


@dataclass(frozen=True)
class PhiTrace:
    """Per-block emission record of phi; fragments concatenate to the path.

    predicted_heights lists the closed-form pairs (height after the block's
    first descent, height after the whole block); the formulas hold only
    when no minimum is tiny, so the field is None otherwise.
    """

    blocks: tuple
    predicted_heights: tuple | None

    @property
    def path(self) -> LatticePath:
        return LatticePath("".join(b.emitted for b in self.blocks))

    def block_heights(self) -> tuple:
        """Measured (after-first-descent, after-block) height pairs."""
        if any(b.tiny for b in self.blocks):
            raise ValueError("block heights are read off only without tiny minima")
        out = []
        h = 0
        for b in self.blocks:
            first_d = b.emitted.index("D")
            p_height = h + first_d - 1
            q_height = h + b.emitted.count("U") - b.emitted.count("D")
            out.append((p_height, q_height))
            h = q_height
        return tuple(out)


def _phi_blocks(w):
    """Emit (fragments, deletions, tiny flags) for a renormalized half word.

    w must be the first half of a valid member, rewritten onto {1..2n}.
    """
    if not w:
        return [], [], []
    n = len(w)
    x1 = w[0]
    j = 1
    while j < n and w[j] > x1:
        j += 1
    l1 = j - 1
    k = 2 * n + 1 - x1
    tiny = x1 == n

    removed = {x1, 2 * n + 1 - x1}
    for v in w[1:j]:
        removed.add(v)
        removed.add(2 * n + 1 - v)
    alphabet = tuple(a for a in range(1, 2 * n + 1) if a not in removed)
    sub = rank_within(w[j:], alphabet)

    fragments, deletions, tiny_flags = _phi_blocks(sub)
    if tiny:
        emitted = "U" * k + "D" * l1
        delete = k - l1 - 2
    else:
        emitted = "U" * k + "D" * (l1 + 1)
        delete = k - l1 - 1
    if fragments:
        head = fragments[0]
        assert "D" not in head[:delete], "removed steps must all be ups"
        fragments[0] = head[delete:]
    else:
        assert delete == 0
    return [emitted] + fragments, [delete] + deletions, [tiny] + tiny_flags


def phi(p: Permutation) -> LatticePath:
    """Map a member of the even centrosymmetric 123-avoiding class to its path."""
    require_member(p)
    fragments, _, _ = _phi_blocks(p.values[: len(p) // 2])
    return LatticePath("".join(fragments))


def phi_trace(p: Permutation) -> PhiTrace:
    """phi with per-block bookkeeping (validates membership)."""
    dec = minima_decomposition(p)
    fragments, deletions, tiny_flags = _phi_blocks(p.values[: len(p) // 2])
    assert tuple(tiny_flags) == dec.tiny_flags
    blocks = tuple(
        PhiBlock(minimum=x, word=wi, tiny=t, emitted=f, deleted=d)
        for (x, wi), t, f, d in zip(dec.blocks, tiny_flags, fragments, deletions)
    )
    predicted = None
    if not any(tiny_flags):
        predicted = _predicted_heights(dec, len(p) // 2)
    return PhiTrace(blocks=blocks, predicted_heights=predicted)


def _predicted_heights(dec, n):
    out = []
    consumed = 0  # l_1 + ... + l_{j-1}
    for j, (x, wi) in enumerate(dec.blocks, start=1):
        after_first_descent = 2 * n - (j - 1) - x - consumed
        consumed += len(wi)
        after_block = 2 * n - (j - 1) - x - consumed
        out.append((after_first_descent, after_block))
    return tuple(out)


def predicted_heights(p: Permutation) -> tuple:
    """Closed-form block heights of phi(p); requires no tiny minimum."""
    dec = minima_decomposition(p)
    if any(dec.tiny_flags):
        raise InvalidPermutation("height formulas require a member with no tiny minima")
    return _predicted_heights(dec, len(p) // 2)


def _inv_half(steps: str):
    """First half of the preimage of a Dyck prefix, on the {1..2n} scale."""
    if not steps:
        return ()
    n = len(steps) // 2
    j = 0
    while j < len(steps) and steps[j] == "U":
        j += 1
    k = 0
    while j + k < len(steps) and steps[j + k] == "D":
        k += 1
    rest = steps[j + k :]

    if j <= n:
        # first block not tiny: x_1 = 2n+1-j, w_1 = 2n .. 2n-k+2
        head = (2 * n + 1 - j,) + tuple(range(2 * n, 2 * n - k + 1, -1))
        used = {j, 2 * n + 1 - j}
        used.update(range(2 * n - k + 2, 2 * n + 1))
        used.update(range(1, k))
        sub = _inv_half("U" * (j - k) + rest)
    elif j == n + 1:
        # tiny first block: x_1 = n, w_1 = 2n .. 2n-k+1
        head = (n,) + tuple(range(2 * n, 2 * n - k, -1))
        used = {n, n + 1}
        used.update(range(2 * n - k + 1, 2 * n + 1))
        used.update(range(1, k + 1))
        sub = _inv_half("U" * (j - k - 2) + rest)
    else:
        # run of tiny blocks with empty words: peel one symbol pair
        head = (n,)
        used = {n, n + 1}
        sub = _inv_half("U" * (j - 2) + "D" * k + rest)

    middle_alphabet = tuple(a for a in range(1, 2 * n + 1) if a not in used)
    return head + embed_in(sub, middle_alphabet)


def phi_inverse(path: LatticePath) -> Permutation:
    """Preimage of an even-length Dyck prefix under phi."""
    if len(path) % 2:
        raise InvalidPath("preimages exist for even lengths only")
    half = _inv_half(path.steps)
    m = 2 * len(half)
    return Permutation(half + tuple(m + 1 - v for v in reversed(half)))


def components_vs_returns(p: Permutation) -> dict:
    """Check the component/return relation and report both sides.

    The number of right connected components equals twice the number of
    returns of phi(p), plus one when phi(p) is not a Dyck path.
    """
    components = len(right_connected_components(p))
    path = phi(p)
    expected = 2 * path.returns + (0 if path.is_dyck_path else 1)
    if components != expected:
        raise VerificationError(
            f"component/return relation failed for {p}: "
            f"{components} components vs {expected} expected"
        )
    return {
        "components": components,
        "returns": path.returns,
        "dyck": path.is_dyck_path,
    }


# ---------------------------------------------------------------------------
# odd-length 123-avoiders


def odd_embed(alpha: Permutation) -> Permutation:
    """Embed a 123-avoiding alpha in S_n as the centrosymmetric member of
    length 2n+1 whose right half is alpha itself.

    The left half is the reverse of alpha complemented to 2n+2, and n+1
    sits in the middle.  For nonempty alpha, des grows to 2 des(alpha) + 2.
    """
    if contains_pattern(alpha, (1, 2, 3)):
        raise InvalidPermutation("contains the pattern 123")
    n = len(alpha)
    left = tuple(2 * n + 2 - v for v in reversed(alpha.values))
    return Permutation(left + (n + 1,) + alpha.values)


def odd_project(p: Permutation) -> Permutation:
    """Inverse of odd_embed: the right half of an odd-length member.

    Avoiding 123 forces the right half of a centrosymmetric permutation of
    length 2n+1 to be exactly the values {1..n}.
    """
    if len(p) % 2 == 0:
        raise InvalidPermutation("odd length required")
    if not is_centrosymmetric(p):
        raise InvalidPermutation("not centrosymmetric")
    if contains_pattern(p, (1, 2, 3)):
        raise InvalidPermutation("contains the pattern 123")
    return Permutation(p.values[len(p) // 2 + 1 :])


# ---------------------------------------------------------------------------
# 132-avoiders


def even_to_odd_132(p: Permutation) -> Permutation:
    """Insert a middle fixed point: C_{2n}(132) -> C_{2n+1}(132).

    Values above n shift up by one to make room for the new middle value
    n+1.  Descents are preserved except that a middle descent of p (an odd
    des) turns into one more: des goes from 2t+1 to 2t+2.
    """
    if len(p) % 2 or not is_centrosymmetric(p):
        raise InvalidPermutation("not centrosymmetric of even length")
    if contains_pattern(p, (1, 3, 2)):
        raise InvalidPermutation("contains the pattern 132")
    n = len(p) // 2
    shifted = tuple(v + 1 if v > n else v for v in p.values)
    return Permutation(shifted[:n] + (n + 1,) + shifted[n:])


def generate_c132(n: int):
    """All centrosymmetric 132-avoiders of length n.

    Even lengths by structure: the identity, or y y+1 .. n, then a smaller
    member renormalized into the middle values, then 1 2 .. n+1-y, for each
    y above n/2.  Odd lengths via even_to_odd_132.
    """
    if n < 0:
        raise InvalidPermutation("length must be nonnegative")
    if n == 0:
        yield Permutation(())
        return
    if n % 2:
        for p in generate_c132(n - 1):
            yield even_to_odd_132(p)
        return
    yield Permutation(range(1, n + 1))
    for y in range((n + 1) // 2 + 1, n + 1):
        inner = 2 * y - 2 - n
        prefix = tuple(range(y, n + 1))
        suffix = tuple(range(1, n + 2 - y))
        for beta in generate_c132(inner):
            middle = tuple(v + (n + 1 - y) for v in beta.values)
            yield Permutation(prefix + middle + suffix)


# ---------------------------------------------------------------------------
# class generators for even-length 123-avoiders


def generate_c123_even(length: int):
    """All members of even length, as preimages of Dyck prefixes.

    The enumeration order follows the lexicographic prefix order (U < D),
    so it is deterministic; there are binomial(2n, n) members.
    """
    if length % 2:
        raise InvalidPermutation("length must be even")
    for path in enumerate_prefixes(length):
        yield phi_inverse(path)


def _structural_half_words(n: int):
    """Half words of members of length 2n, built from the block structure.

    A half word is x_1 w_1 followed by a smaller half word embedded in the
    reduced alphabet, where x_1 >= n, w_1 runs down from 2n through
    2n-l_1+1 with 2n-l_1+1 > x_1, and the embedded remainder starts below
    x_1.
    """
    if n == 0:
        yield ()
        return
    full = 2 * n
    for l1 in range(n):
        w1 = tuple(range(full, full - l1, -1))
        for x1 in range(n, full - l1 + 1):
            removed = {x1, full + 1 - x1}
            removed.update(w1)
            removed.update(full + 1 - v for v in w1)
            alphabet = tuple(a for a in range(1, full + 1) if a not in removed)
            for sub in _structural_half_words(n - 1 - l1):
                embedded = embed_in(sub, alphabet)
                if embedded and embedded[0] >= x1:
                    continue
                yield (x1,) + w1 + embedded


def generate_c123_structural(length: int):
    """Second, independent generator for the even class (block structure)."""
    if length % 2:
        raise InvalidPermutation("length must be even")
    for half in _structural_half_words(length // 2):
        yield Permutation(half + tuple(length + 1 - v for v in reversed(half)))
