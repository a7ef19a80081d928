"""Dyck prefixes: U/D lattice paths that never dip below the x-axis.

A Dyck prefix of length m has steps U = +1 and D = -1 and all partial sums
nonnegative.  A Dyck path additionally ends at height 0; a proper prefix
does not.  A return is a D step landing at height 0, and a prefix is
elevated when it has no return or a single return at the last step.  The
empty path counts as a Dyck path and is not elevated.
"""

from dataclasses import dataclass


class InvalidPath(ValueError):
    """Input is not a valid Dyck prefix."""


class LatticePath:
    """An U/D path staying weakly above the x-axis.

    >>> LatticePath("UUDU").final_height
    2
    """

    __slots__ = ("steps",)

    def __init__(self, steps: str):
        h = 0
        for i, c in enumerate(steps, start=1):
            if c == "U":
                h += 1
            elif c == "D":
                h -= 1
                if h < 0:
                    raise InvalidPath(f"path dips below the x-axis at step {i}")
            else:
                raise InvalidPath(f"illegal character {c!r} at step {i}")
        self.steps = steps

    def __len__(self):
        return len(self.steps)

    def __eq__(self, other):
        return isinstance(other, LatticePath) and self.steps == other.steps

    def __lt__(self, other):
        return self.steps < other.steps

    def __hash__(self):
        return hash(self.steps)

    def __repr__(self):
        return f"LatticePath({self.steps!r})"

    def __str__(self):
        return self.steps

    def heights(self) -> tuple:
        """Heights after each step (length len+1, starting at 0)."""
        out = [0]
        for c in self.steps:
            out.append(out[-1] + (1 if c == "U" else -1))
        return tuple(out)

    @property
    def final_height(self) -> int:
        return self.steps.count("U") - self.steps.count("D")

    @property
    def returns(self) -> int:
        """Number of D steps landing at height 0."""
        h = 0
        r = 0
        for c in self.steps:
            h += 1 if c == "U" else -1
            if h == 0 and c == "D":
                r += 1
        return r

    def last_return(self) -> int | None:
        """1-based index of the last D step landing at height 0, if any."""
        h = 0
        last = None
        for i, c in enumerate(self.steps, start=1):
            h += 1 if c == "U" else -1
            if h == 0 and c == "D":
                last = i
        return last

    @property
    def valleys(self) -> int:
        """Occurrences of the factor DU."""
        return self.steps.count("DU")

    @property
    def triple_falls(self) -> int:
        """Occurrences of the factor DDD, counted with overlaps.

        A maximal run of m >= 3 consecutive D steps contributes m - 2.
        """
        s = self.steps
        return sum(1 for i in range(len(s) - 2) if s[i : i + 3] == "DDD")

    @property
    def is_dyck_path(self) -> bool:
        return self.final_height == 0

    @property
    def is_elevated(self) -> bool:
        """No return, or exactly one return at the last step; empty path no."""
        if not self.steps:
            return False
        r = self.returns
        return r == 0 or (r == 1 and self.final_height == 0)


def make_path(text: str) -> LatticePath:
    return LatticePath(text)


def path_stats(path: LatticePath) -> dict:
    return {
        "height": path.final_height,
        "returns": path.returns,
        "valleys": path.valleys,
        "triple_falls": path.triple_falls,
    }


@dataclass(frozen=True)
class PathClassification:
    """Exactly one of: Dyck path, elevated proper prefix, or composite.

    Composite prefixes split at their last return into a nonempty Dyck path
    followed by a nonempty elevated proper prefix.  Elevated Dyck paths are
    Dyck paths with is_elevated set.
    """

    is_dyck_path: bool
    is_elevated: bool
    split: tuple | None  # (dyck_part, elevated_proper_part) when composite

    @property
    def kind(self) -> str:
        if self.is_dyck_path:
            return "dyck"
        return "elevated-proper" if self.split is None else "composite"


def classify(path: LatticePath) -> PathClassification:
    """Classify an even-length Dyck prefix."""
    if len(path) % 2:
        raise InvalidPath("classification requires even length")
    if path.is_dyck_path:
        return PathClassification(True, path.is_elevated, None)
    last = path.last_return()
    if last is None:
        # proper with no return: elevated proper prefix
        return PathClassification(False, True, None)
    left = LatticePath(path.steps[:last])
    right = LatticePath(path.steps[last:])
    return PathClassification(False, False, (left, right))


MAX_ENUMERATION_LENGTH = 32


def enumerate_prefixes(length: int, max_length: int = MAX_ENUMERATION_LENGTH):
    """All Dyck prefixes of the given even length, lexicographic with U < D.

    There are binomial(2n, n) prefixes of length 2n.
    """
    if length % 2:
        raise InvalidPath("length must be even")
    if not 0 <= length <= max_length:
        raise InvalidPath(f"length {length} exceeds enumeration cap {max_length}")

    buf = []

    def rec(h, remaining):
        if remaining == 0:
            yield LatticePath("".join(buf))
            return
        buf.append("U")
        yield from rec(h + 1, remaining - 1)
        buf.pop()
        if h > 0:
            buf.append("D")
            yield from rec(h - 1, remaining - 1)
            buf.pop()

    yield from rec(0, length)
