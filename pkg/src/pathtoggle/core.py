"""Independent sets of the path graph, vertex toggles and Coxeter words.

An independent set of the path graph on vertices ``1..n`` is stored as an
integer bitmask in which vertex ``i`` occupies bit ``n - i``.  With that
layout the string form reads most-significant bit first, so numeric order of
masks coincides with lexicographic order of the binary strings.
"""
from __future__ import annotations

import enum
import math
import random
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

MAX_N = 30


class CapacityError(ValueError):
    """Raised when a full enumeration of the state space would be too large."""


def check_capacity(n: int, max_n: int | None = None) -> None:
    limit = MAX_N if max_n is None else max_n
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    if n > limit:
        raise CapacityError(f"n={n} exceeds the enumeration limit max_n={limit}")


def _bit(n: int, i: int) -> int:
    return 1 << (n - i)


def _neighbours(n: int, i: int) -> int:
    m = 0
    if i > 1:
        m |= _bit(n, i - 1)
    if i < n:
        m |= _bit(n, i + 1)
    return m


def is_independent_mask(mask: int) -> bool:
    return mask & (mask >> 1) == 0


def toggle_mask(mask: int, n: int, i: int) -> int:
    b = _bit(n, i)
    if mask & b:
        return mask ^ b
    if mask & _neighbours(n, i):
        return mask
    return mask | b


def apply_word_mask(mask: int, n: int, word: Sequence[int]) -> int:
    for i in reversed(word):
        mask = toggle_mask(mask, n, i)
    return mask


def reverse_mask(mask: int, n: int) -> int:
    return int(format(mask, f"0{n}b")[::-1], 2)


def toggle_array(masks: np.ndarray, n: int, i: int) -> np.ndarray:
    """Vectorised toggle at vertex ``i`` over an array of masks."""
    b = np.int64(_bit(n, i))
    nb = np.int64(_neighbours(n, i))
    present = (masks & b) != 0
    blocked = (masks & nb) != 0
    return np.where(present, masks ^ b, np.where(blocked, masks, masks | b))


def independent_masks(n: int, max_n: int | None = None) -> np.ndarray:
    """All independent-set masks of the n-vertex path, ascending.

    Built from the recursion "0 + I(n-1)" followed by "10 + I(n-2)", which
    keeps the output sorted without a filter pass over all 2**n strings.
    """
    check_capacity(n, max_n)
    prev = np.array([0], dtype=np.int64)          # n = 0
    cur = np.array([0, 1], dtype=np.int64)        # n = 1
    for k in range(2, n + 1):
        prev, cur = cur, np.concatenate([cur, prev + (1 << (k - 1))])
    return cur


@dataclass(frozen=True, order=True)
class IndependentSet:
    """An independent set of the path graph on ``n`` vertices."""

    n: int
    mask: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError(f"mask {self.mask} out of range for n={self.n}")
        if not is_independent_mask(self.mask):
            raise ValueError(f"{format(self.mask, f'0{self.n}b')} contains adjacent vertices")

    @classmethod
    def from_string(cls, text: str) -> "IndependentSet":
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a binary string: {text!r}")
        return cls(len(text), int(text, 2))

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[int]) -> "IndependentSet":
        mask = 0
        for i in vertices:
            if not 1 <= i <= n:
                raise ValueError(f"vertex {i} outside 1..{n}")
            mask |= _bit(n, i)
        return cls(n, mask)

    @classmethod
    def empty(cls, n: int) -> "IndependentSet":
        return cls(n, 0)

    def __str__(self) -> str:
        return format(self.mask, f"0{self.n}b")

    def __repr__(self) -> str:
        return f"IndependentSet({str(self)!r})"

    def __contains__(self, i: int) -> bool:
        return self.bit(i) == 1

    def bit(self, i: int) -> int:
        """Indicator of vertex ``i``; positions outside ``1..n`` read as 0."""
        if not 1 <= i <= self.n:
            return 0
        return (self.mask >> (self.n - i)) & 1

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.n + 1) if self.bit(i))

    def __len__(self) -> int:
        return bin(self.mask).count("1")


def toggle(s: IndependentSet, i: int) -> IndependentSet:
    """Insert or remove vertex ``i`` when the result is still independent."""
    if not 1 <= i <= s.n:
        raise ValueError(f"toggle index {i} outside 1..{s.n}")
    return IndependentSet(s.n, toggle_mask(s.mask, s.n, i))


def reverse(s: IndependentSet) -> IndependentSet:
    return IndependentSet(s.n, reverse_mask(s.mask, s.n))


def is_symmetrical(s: IndependentSet) -> bool:
    return reverse_mask(s.mask, s.n) == s.mask


def enumerate_independent_sets(n: int, max_n: int | None = None) -> list[IndependentSet]:
    """Every independent set of the n-vertex path in lexicographic string order."""
    return [IndependentSet(n, int(m)) for m in independent_masks(n, max_n)]


_WORD_TOKEN = re.compile(r"^\s*(phi|phi_inv)\s*$", re.IGNORECASE)


@dataclass(frozen=True, eq=False)
class ToggleWord:
    """A product of toggles written left to right, applied right to left.

    Equality (``==``) is syntactic; use :func:`same_action` for equality of
    the maps the words induce.
    """

    n: int
    word: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(int(i) for i in self.word))
        for i in self.word:
            if not 1 <= i <= self.n:
                raise ValueError(f"toggle index {i} outside 1..{self.n}")

    @classmethod
    def parse(cls, text: str, n: int) -> "ToggleWord":
        """Parse ``"3,4,2"`` or the tokens ``phi`` / ``phi_inv``."""
        m = _WORD_TOKEN.match(text)
        if m:
            tok = m.group(1).lower()
            return cls(n, phi(n).word if tok == "phi" else phi_inverse(n).word)
        parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
        try:
            return cls(n, tuple(int(p) for p in parts))
        except ValueError as exc:
            raise ValueError(f"cannot parse toggle word {text!r}: {exc}") from None

    def __eq__(self, other):
        if not isinstance(other, ToggleWord):
            return NotImplemented
        return (self.n, self.word) == (other.n, other.word)

    def __hash__(self):
        return hash((self.n, self.word))

    def __call__(self, s: IndependentSet) -> IndependentSet:
        return apply_word(s, self)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return ",".join(map(str, self.word))

    def inverse(self) -> "ToggleWord":
        return ToggleWord(self.n, self.word[::-1])

    def then(self, other: "ToggleWord") -> "ToggleWord":
        """The word for ``other`` composed after ``self`` (``other * self``)."""
        return ToggleWord(self.n, other.word + self.word)

    def is_coxeter(self) -> bool:
        return sorted(self.word) == list(range(1, self.n + 1))

    def as_coxeter(self) -> "CoxeterWord":
        return CoxeterWord(self.n, self.word)

    def pretty(self) -> str:
        return "".join(f"t{i}" for i in self.word) or "id"


class CoxeterWord(ToggleWord):
    """A toggle word using every vertex toggle exactly once."""

    def __post_init__(self):
        super().__post_init__()
        if sorted(self.word) != list(range(1, self.n + 1)):
            raise ValueError(f"{self.word} is not a permutation of 1..{self.n}")

    @classmethod
    def parse(cls, text: str, n: int) -> "CoxeterWord":
        return ToggleWord.parse(text, n).as_coxeter()


def phi(n: int) -> CoxeterWord:
    """Toggle each vertex once from left to right: t_n ... t_2 t_1."""
    return CoxeterWord(n, tuple(range(n, 0, -1)))


def phi_inverse(n: int) -> CoxeterWord:
    return CoxeterWord(n, tuple(range(1, n + 1)))


def random_coxeter(n: int, rng: random.Random) -> CoxeterWord:
    order = list(range(1, n + 1))
    rng.shuffle(order)
    return CoxeterWord(n, tuple(order))


def apply_word(s: IndependentSet, w: ToggleWord) -> IndependentSet:
    if s.n != w.n:
        raise ValueError(f"word acts on n={w.n}, set has n={s.n}")
    return IndependentSet(s.n, apply_word_mask(s.mask, s.n, w.word))


def word_permutation(w: ToggleWord, max_n: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(masks, perm)`` with ``masks[perm[k]] == w(masks[k])``."""
    masks = independent_masks(w.n, max_n)
    images = masks
    for i in reversed(w.word):
        images = toggle_array(images, w.n, i)
    return masks, np.searchsorted(masks, images)


def same_action(u: ToggleWord, v: ToggleWord, max_n: int | None = None) -> bool:
    """Semantic equality: both words induce the same map on all independent sets."""
    if u.n != v.n:
        return False
    _, pu = word_permutation(u, max_n)
    _, pv = word_permutation(v, max_n)
    return bool(np.array_equal(pu, pv))


def cycle_lengths(perm: np.ndarray) -> list[int]:
    seen = np.zeros(len(perm), dtype=bool)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        k, j = 0, start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            k += 1
        lengths.append(k)
    return lengths


def element_order(w: ToggleWord, max_n: int | None = None) -> int:
    """Order of ``w`` as a permutation of the independent sets."""
    _, perm = word_permutation(w, max_n)
    return math.lcm(*cycle_lengths(perm))


class Direction(enum.Enum):
    TOWARD_LOWER = "<-"
    TOWARD_HIGHER = "->"


@dataclass(frozen=True)
class Orientation:
    """An orientation of the path graph; ``dirs[i-1]`` directs edge {i, i+1}."""

    n: int
    dirs: tuple[Direction, ...]

    def __post_init__(self):
        if len(self.dirs) != self.n - 1:
            raise ValueError(f"need {self.n - 1} edge directions, got {len(self.dirs)}")

    @classmethod
    def parse(cls, text: str) -> "Orientation":
        """Parse ASCII arrows such as ``"1<-2<-3->4"``."""
        tokens = re.findall(r"\d+|<-|->", text)
        verts = [int(t) for t in tokens[::2]]
        if verts != list(range(1, len(verts) + 1)):
            raise ValueError(f"vertices must read 1..n in order: {text!r}")
        return cls(len(verts), tuple(Direction(t) for t in tokens[1::2]))

    def __str__(self) -> str:
        out = "1"
        for i, d in enumerate(self.dirs, start=2):
            out += d.value + str(i)
        return out

    def edge(self, i: int) -> Direction:
        return self.dirs[i - 1]

    def _in_out(self, v: int) -> tuple[int, int]:
        incoming = outgoing = 0
        if v > 1:
            if self.edge(v - 1) is Direction.TOWARD_HIGHER:
                incoming += 1
            else:
                outgoing += 1
        if v < self.n:
            if self.edge(v) is Direction.TOWARD_LOWER:
                incoming += 1
            else:
                outgoing += 1
        return incoming, outgoing

    def sources(self) -> set[int]:
        return {v for v in range(1, self.n + 1) if self._in_out(v)[0] == 0}

    def sinks(self) -> set[int]:
        return {v for v in range(1, self.n + 1) if self._in_out(v)[1] == 0}

    def flip_vertex(self, v: int) -> "Orientation":
        """Reverse every edge at ``v``; turns a sink into a source and back."""
        dirs = list(self.dirs)
        for e in (v - 1, v):
            if 1 <= e <= self.n - 1:
                d = dirs[e - 1]
                dirs[e - 1] = (Direction.TOWARD_HIGHER if d is Direction.TOWARD_LOWER
                               else Direction.TOWARD_LOWER)
        return Orientation(self.n, tuple(dirs))


def coxeter_to_orientation(w: ToggleWord) -> Orientation:
    """Edge {i, i+1} points toward i iff t_i stands to the right of t_{i+1}."""
    if not w.is_coxeter():
        raise ValueError(f"{w.word} is not a Coxeter word on 1..{w.n}")
    pos = {v: k for k, v in enumerate(w.word)}
    return Orientation(w.n, tuple(
        Direction.TOWARD_LOWER if pos[i] > pos[i + 1] else Direction.TOWARD_HIGHER
        for i in range(1, w.n)))


def orientation_to_coxeter(o: Orientation) -> CoxeterWord:
    """Canonical Coxeter word for an orientation.

    The word is assembled from the right.  The rightmost toggle acts first, so
    it must be a sink; each step emits the smallest vertex that is a sink of
    the subgraph still unprocessed.
    """
    remaining = set(range(1, o.n + 1))
    right_to_left = []

    def is_sink(v):
        if v - 1 in remaining and o.edge(v - 1) is Direction.TOWARD_LOWER:
            return False
        if v + 1 in remaining and o.edge(v) is Direction.TOWARD_HIGHER:
            return False
        return True

    while remaining:
        v = min(u for u in remaining if is_sink(u))
        right_to_left.append(v)
        remaining.remove(v)
    return CoxeterWord(o.n, tuple(reversed(right_to_left)))
