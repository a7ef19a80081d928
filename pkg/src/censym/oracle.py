"""Exhaustive ground truth, independent of the bijection and the formulas.

Centrosymmetric permutations are generated directly from first-half
choices: the complement pairs {v, m+1-v} partition the values, each pair
contributes exactly one value to the first half, and the second half is
forced (odd lengths pin the middle fixed point).  That is n! 2^n candidates
for length 2n instead of (2n)!.

Pattern filters prune during the search: containment is monotone under
extension, so a partial first half that already contains the pattern can be
cut.  Survivors are checked once more on the full permutation, since an
occurrence may straddle the middle.
"""

import os
from collections import Counter
from dataclasses import dataclass
from itertools import permutations as _all_permutations

from .bijection import phi
from .paths import classify
from .perms import Permutation, descent_count, lis_length, word_contains_pattern

GENERAL_MAX_LENGTH = 9
DEFAULT_MAX_EVEN_LENGTH = 16
SUBCLASSES = ("k", "ck", "g", "composite")


class CapExceeded(ValueError):
    """Requested enumeration is larger than the configured budget."""


def max_even_length() -> int:
    """Cap on centrosymmetric even lengths (odd may go one further).

    Configured through the environment variable CENSYM_MAX_ORACLE_N.
    """
    return int(os.environ.get("CENSYM_MAX_ORACLE_N", DEFAULT_MAX_EVEN_LENGTH))


@dataclass(frozen=True)
class ClassSpec:
    """A permutation class to enumerate by brute force.

    avoid is a pattern in one-line tuple form, e.g. (1, 2, 3).  subclass
    refines the even centrosymmetric 123-avoiders by the shape of their
    path image: 'k' Dyck paths, 'ck' elevated Dyck paths, 'g' elevated
    proper prefixes, 'composite' the rest.
    """

    length: int
    centrosymmetric: bool = False
    avoid: tuple | None = None
    subclass: str | None = None

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be nonnegative")
        if self.avoid is not None and not isinstance(self.avoid, tuple):
            raise ValueError("avoid must be a tuple of values or None")
        if self.subclass is not None:
            if self.subclass not in SUBCLASSES:
                raise ValueError(f"unknown subclass {self.subclass!r}")
            if not (
                self.centrosymmetric
                and self.avoid == (1, 2, 3)
                and self.length % 2 == 0
            ):
                raise ValueError(
                    "subclasses are defined for even centrosymmetric 123-avoiders"
                )


def _check_cap(spec: ClassSpec):
    if spec.centrosymmetric:
        cap = max_even_length()
        limit = cap if spec.length % 2 == 0 else cap + 1
        if spec.length > limit:
            raise CapExceeded(
                f"centrosymmetric length {spec.length} exceeds cap {limit} "
                "(set CENSYM_MAX_ORACLE_N to raise it)"
            )
    elif spec.length > GENERAL_MAX_LENGTH:
        raise CapExceeded(
            f"general length {spec.length} exceeds cap {GENERAL_MAX_LENGTH}"
        )


def _contains(values, pattern) -> bool:
    if pattern == (1, 2, 3):
        return lis_length(values) >= 3
    return word_contains_pattern(values, pattern)


def _centro_members(length: int, avoid):
    """Centrosymmetric permutations from first-half choices, filtered."""
    n = length // 2
    middle = (n + 1,) if length % 2 else ()
    fast123 = avoid == (1, 2, 3)
    big = length + 1  # sentinel above every value
    half = []
    used_pairs = set()
    out = []

    def rec(min_seen, best_pair_tail):
        if len(half) == n:
            values = tuple(half) + middle + tuple(
                length + 1 - v for v in reversed(half)
            )
            if avoid is None or not _contains(values, avoid):
                out.append(Permutation(values))
            return
        for v in range(1, length + 1):
            if length % 2 and v == n + 1:
                continue
            pair = min(v, length + 1 - v)
            if pair in used_pairs:
                continue
            if fast123:
                if v > best_pair_tail:
                    continue  # the half already ends an increasing triple
                tail = min(best_pair_tail, v) if v > min_seen else best_pair_tail
            else:
                tail = best_pair_tail
                if avoid is not None:
                    half.append(v)
                    bad = word_contains_pattern(half, avoid)
                    half.pop()
                    if bad:
                        continue
            used_pairs.add(pair)
            half.append(v)
            rec(min(min_seen, v), tail)
            half.pop()
            used_pairs.remove(pair)

    rec(big, big)
    return out


def _general_members(length: int, avoid):
    out = []
    for values in _all_permutations(range(1, length + 1)):
        if avoid is None or not _contains(values, avoid):
            out.append(Permutation(values))
    return out


def _subclass_match(p: Permutation, name: str) -> bool:
    c = classify(phi(p))
    if name == "k":
        return c.is_dyck_path
    if name == "ck":
        return c.is_dyck_path and c.is_elevated
    if name == "g":
        return not c.is_dyck_path and c.split is None
    return c.split is not None  # composite


def enumerate_class(spec: ClassSpec):
    """Members of the class, in a deterministic (lexicographic) order."""
    _check_cap(spec)
    if spec.centrosymmetric:
        members = _centro_members(spec.length, spec.avoid)
    else:
        members = _general_members(spec.length, spec.avoid)
    if spec.subclass is None:
        yield from members
    else:
        for p in members:
            if _subclass_match(p, spec.subclass):
                yield p


def descent_histogram(spec: ClassSpec) -> dict:
    """Counter of descent numbers over the class, as a plain dict."""
    return dict(Counter(descent_count(p) for p in enumerate_class(spec)))
