"""Orbits of toggle words, orbit boards, indicator statistics and homomesy."""
from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .core import (
    IndependentSet,
    ToggleWord,
    apply_word_mask,
    reverse_mask,
    word_permutation,
)

SCHEMA_VERSION = 1


def mask_board(masks: Sequence[int], n: int) -> np.ndarray:
    """0/1 matrix with one row per mask and column ``j-1`` holding vertex ``j``."""
    arr = np.asarray(masks, dtype=np.int64)[:, None]
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)[None, :]
    return ((arr >> shifts) & 1).astype(np.int8)


def cycles_from_permutation(perm: np.ndarray) -> list[list[int]]:
    """Cycles of ``perm``, each starting at its smallest index, ordered by that index."""
    seen = np.zeros(len(perm), dtype=bool)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = int(perm[j])
        out.append(cyc)
    return out


@dataclass(frozen=True, eq=False)
class Orbit:
    """A cycle ``S^0, S^1, ...`` of a toggle word, rotated so ``S^0`` is lexicographically least."""

    word: ToggleWord
    masks: tuple[int, ...]

    def __post_init__(self):
        if not self.masks:
            raise ValueError("an orbit has at least one state")
        k = self.masks.index(min(self.masks))
        object.__setattr__(self, "masks", tuple(self.masks[k:] + self.masks[:k]))

    @property
    def n(self) -> int:
        return self.word.n

    def __len__(self) -> int:
        return len(self.masks)

    def __eq__(self, other):
        if not isinstance(other, Orbit):
            return NotImplemented
        return self.word == other.word and self.masks == other.masks

    def __hash__(self):
        return hash((self.word, self.masks))

    def __contains__(self, s: IndependentSet) -> bool:
        return s.n == self.n and s.mask in self.mask_set

    @cached_property
    def mask_set(self) -> frozenset[int]:
        return frozenset(self.masks)

    @property
    def states(self) -> list[IndependentSet]:
        return [IndependentSet(self.n, m) for m in self.masks]

    def starting_at(self, s: IndependentSet) -> list[IndependentSet]:
        """The states in cyclic order beginning at ``s``."""
        k = self.masks.index(s.mask)
        return [IndependentSet(self.n, m) for m in self.masks[k:] + self.masks[:k]]

    @cached_property
    def board(self) -> np.ndarray:
        return mask_board(self.masks, self.n)

    def S(self, i: int, j: int) -> int:
        """Board entry: row ``i`` taken mod the orbit size, 0 off the columns 1..n."""
        if not 1 <= j <= self.n:
            return 0
        return int(self.board[i % len(self), j - 1])

    @cached_property
    def column_sums(self) -> tuple[int, ...]:
        return tuple(int(x) for x in self.board.sum(axis=0))

    def __repr__(self):
        return f"Orbit(word={self.word.pretty()}, size={len(self)}, min={self.states[0]})"


OrbitBoard = Orbit


def orbit_of(s: IndependentSet, w: ToggleWord) -> Orbit:
    if s.n != w.n:
        raise ValueError(f"word acts on n={w.n}, set has n={s.n}")
    masks = [s.mask]
    m = apply_word_mask(s.mask, s.n, w.word)
    while m != s.mask:
        masks.append(m)
        m = apply_word_mask(m, s.n, w.word)
    return Orbit(w, tuple(masks))


def all_orbits(n: int, w: ToggleWord, max_n: int | None = None) -> list[Orbit]:
    """Partition of all independent sets into ``w``-orbits, ordered by least element."""
    if w.n != n:
        raise ValueError(f"word acts on n={w.n}, expected n={n}")
    masks, perm = word_permutation(w, max_n)
    return [Orbit(w, tuple(int(masks[k]) for k in cyc))
            for cyc in cycles_from_permutation(perm)]


def column_sums(o: Orbit) -> tuple[int, ...]:
    return o.column_sums


def is_reversible(o: Orbit) -> bool:
    return any(reverse_mask(m, o.n) in o.mask_set for m in o.masks)


def count_symmetrical_in(o: Orbit) -> int:
    return sum(reverse_mask(m, o.n) == m for m in o.masks)


_TERM = re.compile(r"([+-])?(\d+(?:/\d+)?)?\*?x(\d+)")


@dataclass(frozen=True)
class Statistic:
    """A rational linear combination ``sum_j c_j * chi_j`` of vertex indicators."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients",
                           tuple(Fraction(c) for c in self.coefficients))

    @property
    def n(self) -> int:
        return len(self.coefficients)

    @classmethod
    def zero(cls, n: int) -> "Statistic":
        return cls((0,) * n)

    @classmethod
    def indicator(cls, n: int, j: int) -> "Statistic":
        return cls.from_terms(n, {j: 1})

    @classmethod
    def from_terms(cls, n: int, terms: Mapping[int, Fraction | int]) -> "Statistic":
        coeffs = [Fraction(0)] * n
        for j, c in terms.items():
            if not 1 <= j <= n:
                raise ValueError(f"indicator index {j} outside 1..{n}")
            coeffs[j - 1] += Fraction(c)
        return cls(tuple(coeffs))

    @classmethod
    def parse(cls, text: str, n: int) -> "Statistic":
        """Parse forms like ``"2x1+x2-x7"`` or ``"1/2x3 - x4"``."""
        compact = re.sub(r"\s+", "", text)
        if not compact:
            raise ValueError("empty statistic")
        terms: dict[int, Fraction] = {}
        pos = 0
        for m in _TERM.finditer(compact):
            if m.start() != pos or (m.group(1) is None and pos != 0):
                raise ValueError(f"cannot parse statistic {text!r} near {compact[pos:]!r}")
            sign = -1 if m.group(1) == "-" else 1
            coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            j = int(m.group(3))
            terms[j] = terms.get(j, Fraction(0)) + sign * coef
            pos = m.end()
        if pos != len(compact):
            raise ValueError(f"cannot parse statistic {text!r} near {compact[pos:]!r}")
        return cls.from_terms(n, terms)

    def __add__(self, other: "Statistic") -> "Statistic":
        return Statistic(tuple(a + b for a, b in zip(self.coefficients, other.coefficients, strict=True)))

    def __sub__(self, other: "Statistic") -> "Statistic":
        return self + (-1) * other

    def __rmul__(self, k) -> "Statistic":
        return Statistic(tuple(Fraction(k) * c for c in self.coefficients))

    def __call__(self, s: IndependentSet) -> Fraction:
        return sum((c for j, c in enumerate(self.coefficients, 1) if s.bit(j)), Fraction(0))

    def __str__(self) -> str:
        parts = []
        for j, c in enumerate(self.coefficients, 1):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            parts.append(f"{sign}{'' if mag == 1 else mag}x{j}")
        if not parts:
            return "0"
        out = "".join(parts)
        return out[1:] if out.startswith("+") else out

    def total(self, sums: Sequence[int]) -> Fraction:
        return sum((c * s for c, s in zip(self.coefficients, sums)), Fraction(0))


def orbit_average(o: Orbit, f: Statistic) -> Fraction:
    if f.n != o.n:
        raise ValueError(f"statistic on n={f.n} applied to orbit with n={o.n}")
    return f.total(o.column_sums) / len(o)


@dataclass(frozen=True)
class HomomesyReport:
    """Outcome of a homomesy check.

    ``constant`` is set when every orbit average agrees; otherwise
    ``witnesses`` holds the first two orbits (in canonical order) whose
    averages differ, paired with those averages.
    """

    homomesic: bool
    constant: Fraction | None
    orbit_count: int
    witnesses: tuple[tuple[Orbit, Fraction], ...] = field(default=())

    def __bool__(self):
        return self.homomesic

    def describe(self) -> str:
        if self.homomesic:
            return f"{self.constant}-mesic over {self.orbit_count} orbits"
        (o1, a1), (o2, a2) = self.witnesses
        return (f"not homomesic: orbit of {o1.states[0]} (size {len(o1)}) averages {a1}, "
                f"orbit of {o2.states[0]} (size {len(o2)}) averages {a2}")


def homomesy_over(orbits: Iterable[Orbit], f: Statistic) -> HomomesyReport:
    first = None
    count = 0
    for o in orbits:
        count += 1
        avg = orbit_average(o, f)
        if first is None:
            first = (o, avg)
        elif avg != first[1]:
            return HomomesyReport(False, None, count, (first, (o, avg)))
    if first is None:
        raise ValueError("no orbits to check")
    return HomomesyReport(True, first[1], count)


def check_homomesy(n: int, w: ToggleWord, f: Statistic, max_n: int | None = None) -> HomomesyReport:
    """Decide exactly whether ``f`` has the same average on every ``w``-orbit."""
    return homomesy_over(all_orbits(n, w, max_n), f)


def orbit_to_json(o: Orbit) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "n": o.n,
        "word": list(o.word.word),
        "states": [str(s) for s in o.states],
        "column_sums": list(o.column_sums),
    }


def orbit_from_json(data: dict | str) -> Orbit:
    """Rebuild an orbit and check that consecutive states follow the word."""
    if isinstance(data, str):
        data = json.loads(data)
    n = int(data["n"])
    word = ToggleWord(n, tuple(data["word"]))
    states = [IndependentSet.from_string(s) for s in data["states"]]
    if any(s.n != n for s in states):
        raise ValueError("state length disagrees with n")
    masks = [s.mask for s in states]
    for a, b in zip(masks, masks[1:] + masks[:1]):
        if apply_word_mask(a, n, word.word) != b:
            raise ValueError("states do not form an orbit of the word")
    o = Orbit(word, tuple(masks))
    if "column_sums" in data and list(data["column_sums"]) != list(o.column_sums):
        raise ValueError("column_sums disagree with states")
    return o


def board_to_csv(o: Orbit) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(range(1, o.n + 1))
    writer.writerows(o.board.tolist())
    return buf.getvalue()


def board_from_csv(text: str) -> np.ndarray:
    rows = list(csv.reader(io.StringIO(text)))
    header, body = rows[0], rows[1:]
    if [int(h) for h in header] != list(range(1, len(header) + 1)):
        raise ValueError("CSV header must be 1..n")
    return np.array([[int(x) for x in r] for r in body], dtype=np.int8)
