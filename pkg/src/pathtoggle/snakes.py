"""Snake decompositions of phi-orbit boards and snake compositions.

In a phi-orbit board each 1 is followed either by a 1 two columns to the
right (a step recorded as ``2``) or by a 1 one row down and one column right
(recorded as ``1``).  Chains of such steps run from column 1 to column n and
their step sequences are compositions of n-1 into parts 1 and 2.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .core import IndependentSet, phi
from .orbits import Orbit, all_orbits, orbit_of


def least_rotation(seq: Sequence) -> tuple:
    """Lexicographically least cyclic rotation (Booth's algorithm)."""
    s = tuple(seq)
    k = len(s)
    if k == 0:
        return s
    doubled = s + s
    fail = [-1] * (2 * k)
    start = 0
    for j in range(1, 2 * k):
        c = doubled[j]
        i = fail[j - start - 1]
        while i != -1 and c != doubled[start + i + 1]:
            if c < doubled[start + i + 1]:
                start = j - i - 1
            i = fail[i]
        if i == -1 and c != doubled[start + i + 1]:
            if c < doubled[start + i + 1]:
                start = j
            fail[j - start] = -1
        else:
            fail[j - start] = i + 1
    return doubled[start:start + k]


def smallest_period(seq: Sequence) -> int:
    """Length of the smallest block whose repetition produces ``seq``."""
    k = len(seq)
    for d in range(1, k + 1):
        if k % d == 0 and all(seq[i] == seq[i % d] for i in range(k)):
            return d
    return k


@dataclass(frozen=True, order=True)
class SnakeComposition:
    """A composition into parts 1 and 2, the step record of one snake."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if not self.parts:
            raise ValueError("a snake composition has at least one part")
        if set(self.parts) - {1, 2}:
            raise ValueError(f"parts must be 1 or 2: {self.parts}")

    @classmethod
    def parse(cls, text: str) -> "SnakeComposition":
        text = text.strip()
        if not text.isdigit():
            raise ValueError(f"not a composition string: {text!r}")
        return cls(tuple(int(ch) for ch in text))

    def __str__(self) -> str:
        return "".join(map(str, self.parts))

    def __repr__(self) -> str:
        return f"SnakeComposition({str(self)!r})"

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def n(self) -> int:
        """Vertex count of the path whose snakes this composition describes."""
        return self.total + 1

    @property
    def N1(self) -> int:
        return self.parts.count(1)

    @property
    def N2(self) -> int:
        return self.parts.count(2)

    @cached_property
    def psi(self) -> int:
        return len(self.parts) // smallest_period(self.parts)

    @property
    def is_aperiodic(self) -> bool:
        return self.psi == 1

    def reversed(self) -> "SnakeComposition":
        return SnakeComposition(self.parts[::-1])

    def rotations(self) -> list["SnakeComposition"]:
        p = self.parts
        return [SnakeComposition(p[k:] + p[:k]) for k in range(len(p))]


def next_composition(c: SnakeComposition) -> SnakeComposition:
    """Composition of the next snake down the board: a left rotation."""
    return SnakeComposition(c.parts[1:] + c.parts[:1])


def next_start_offset(c: SnakeComposition) -> int:
    return 3 if c.parts[0] == 1 else 2


def composition_class(c: SnakeComposition) -> SnakeComposition:
    return SnakeComposition(least_rotation(c.parts))


def class_is_reversible(c: SnakeComposition) -> bool:
    return composition_class(c.reversed()) == composition_class(c)


def orbit_size(c: SnakeComposition) -> int:
    return (3 * c.N1 + 2 * c.N2) // c.psi


@dataclass(frozen=True)
class Snake:
    """Cells ``(row, column)`` of one snake.

    Rows are not reduced: a diagonal step always adds one, so a snake that
    wraps past the bottom of the board has rows >= the orbit size.  Use
    ``row % len(orbit)`` for the board position.
    """

    cells: tuple[tuple[int, int], ...]
    composition: SnakeComposition

    @property
    def start_row(self) -> int:
        return self.cells[0][0]


def _trace_snake(o: Orbit, row: int) -> Snake:
    n = o.n
    cells = [(row, 1)]
    parts = []
    r, j = row, 1
    while j < n:
        right = o.S(r, j + 2)
        diag = o.S(r + 1, j + 1)
        if right and diag:
            raise ValueError(f"cell ({r % len(o)},{j}) continues two ways; not a phi-orbit board")
        if right:
            j += 2
            parts.append(2)
        elif diag:
            r, j = r + 1, j + 1
            parts.append(1)
        else:
            raise ValueError(f"snake breaks at ({r % len(o)},{j}); not a phi-orbit board")
        if j > n:
            raise ValueError("snake overshoots the last column")
        cells.append((r, j))
    return Snake(tuple(cells), SnakeComposition(tuple(parts)))


def snake_decompose(o: Orbit) -> list[Snake]:
    """Partition the 1s of a phi-orbit board into snakes, ordered by starting row.

    Raises ``ValueError`` when the board does not split into snakes, which is
    what happens for most boards of Coxeter words other than phi.
    """
    if o.n < 2:
        raise ValueError("snakes need n >= 2")
    size = len(o)
    snakes = [_trace_snake(o, i) for i in range(size) if o.S(i, 1)]
    covered = Counter((r % size, j) for sn in snakes for r, j in sn.cells)
    if any(v > 1 for v in covered.values()):
        raise ValueError("snakes overlap; not a phi-orbit board")
    ones = {(i, j) for i in range(size) for j in range(1, o.n + 1) if o.S(i, j)}
    if set(covered) != ones:
        raise ValueError("snakes do not cover every 1; not a phi-orbit board")
    return snakes


def snake_cells(c: SnakeComposition, start_row: int = 0) -> list[tuple[int, int]]:
    cells = [(start_row, 1)]
    r, j = start_row, 1
    for p in c.parts:
        if p == 2:
            j += 2
        else:
            r, j = r + 1, j + 1
        cells.append((r, j))
    return cells


def _composition_rows(c: SnakeComposition) -> list[int]:
    n = c.n
    starts = []
    row, cur = 0, c
    while True:
        starts.append((row, cur))
        row += next_start_offset(cur)
        cur = next_composition(cur)
        if cur == c:
            break
    size = row
    rows = [0] * size
    for r0, comp in starts:
        for r, j in snake_cells(comp, r0):
            rows[r % size] |= 1 << (n - j)
    return rows


def orbit_from_composition(c: SnakeComposition) -> Orbit:
    """Rebuild the whole phi-orbit from a single snake composition.

    The seed snake starts at row 0, column 1.  Successive snakes start
    ``next_start_offset`` rows further down with the rotated composition,
    until the seed composition comes round again.
    """
    rows = _composition_rows(c)
    states = [IndependentSet(c.n, m) for m in rows]
    return Orbit(phi(c.n), tuple(s.mask for s in states))


def composition_seed(c: SnakeComposition) -> IndependentSet:
    """The state on the row where the seed snake of ``c`` begins."""
    return IndependentSet(c.n, _composition_rows(c)[0])


def compositions_12(total: int) -> Iterator[tuple[int, ...]]:
    """All compositions of ``total`` into parts 1 and 2."""
    if total == 0:
        yield ()
        return
    for first in (1, 2):
        if first <= total:
            for rest in compositions_12(total - first):
                yield (first,) + rest


def composition_classes(total: int) -> list[SnakeComposition]:
    """Canonical representatives of the cyclic classes of compositions of ``total``."""
    reps = {least_rotation(p) for p in compositions_12(total)}
    return [SnakeComposition(p) for p in sorted(reps)]


def orbit_sizes_for_n(n: int) -> list[int]:
    """Sorted phi-orbit sizes on the n-vertex path predicted from compositions."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return sorted(orbit_size(c) for c in composition_classes(n - 1))


def orbit_composition_class(o: Orbit) -> SnakeComposition:
    """Canonical composition class of a phi-orbit."""
    return composition_class(snake_decompose(o)[0].composition)


def phi_orbit_for_class(c: SnakeComposition) -> Orbit:
    """The phi-orbit of the state in row 0 of :func:`orbit_from_composition`."""
    seed = orbit_from_composition(c)
    return orbit_of(seed.states[0], phi(c.n))


def phi_orbits_by_class(n: int) -> dict[SnakeComposition, Orbit]:
    return {orbit_composition_class(o): o for o in all_orbits(n, phi(n))}


@dataclass(frozen=True)
class SizeClass:
    """One row of the orbit-size classification table."""

    size: int
    parts23: tuple[int, ...]

    @property
    def snake_pattern(self) -> SnakeComposition:
        return SnakeComposition(tuple(1 if p == 3 else 2 for p in self.parts23))

    @property
    def modulus(self) -> int:
        return sum(self.snake_pattern.parts)

    def occurs_for(self, n: int) -> bool:
        return n >= 2 and (n - 1) % self.modulus == 0

    def format_row(self) -> str:
        pattern = str(self.snake_pattern)
        residue = "all n" if self.modulus == 1 else f"n = 1 mod {self.modulus}"
        return (f"{self.size:>4} | {'+'.join(map(str, self.parts23)):<14} | "
                f"{pattern}{pattern}...{pattern:<10} | {residue}")


def _compositions_23(total: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in (2, 3):
        if first <= total:
            for rest in _compositions_23(total - first):
                yield (first,) + rest


def sizes_table(m: int) -> list[SizeClass]:
    """Aperiodic cyclic classes of compositions of ``m`` into 2s and 3s.

    A class with ``a`` threes and ``b`` twos gives a phi-orbit of size ``m``
    exactly on paths with ``n = 1 mod (a + 2b)``.  Each class is written as
    its lexicographically greatest rotation, so 3s lead.
    """
    if m < 1:
        raise ValueError("orbit size must be positive")
    reps = set()
    for p in _compositions_23(m):
        if smallest_period(p) == len(p):
            reps.add(tuple(-x for x in least_rotation(tuple(-x for x in p))))
    return [SizeClass(m, p) for p in sorted(reps, reverse=True)]


def size_moduli(m: int) -> list[tuple[int, int]]:
    """``(modulus, number of classes)`` pairs for orbit size ``m``."""
    counts = Counter(row.modulus for row in sizes_table(m))
    return sorted(counts.items())


def orbits_of_size(m: int, n: int) -> int:
    """Number of phi-orbits of size ``m`` on the n-vertex path, from the table."""
    return sum(row.occurs_for(n) for row in sizes_table(m))


def format_sizes_table(max_size: int) -> str:
    lines = [" size | parts 2/3      | snake pattern           | occurs for"]
    for m in range(1, max_size + 1):
        rows = sizes_table(m)
        if not rows:
            lines.append(f"{m:>4} | {'none':<14} | {'none':<23} | none")
        lines.extend(r.format_row() for r in rows)
    return "\n".join(lines)
