"""Order ideals of the zigzag (fence) poset, their toggles, promotion,
rowmotion and the equivariant bijection from independent sets.

The poset has elements a_1..a_n with a_{2i-1} < a_{2i} > a_{2i+1}.  Ideals use
the same bit layout as independent sets: element a_i sits at bit ``n - i``,
so the string ``"1011"`` is {a_1, a_3, a_4}.  Under that layout ``eta`` is an
XOR with the odd positions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import CoxeterWord, IndependentSet, ToggleWord, check_capacity
from .orbits import HomomesyReport, Orbit, Statistic, cycles_from_permutation, homomesy_over

IDEAL_MAX_N = 24


def _bit(n: int, i: int) -> int:
    return 1 << (n - i)


def odd_positions_mask(n: int) -> int:
    return sum(_bit(n, i) for i in range(1, n + 1, 2))


def lower_covers(n: int, i: int) -> list[int]:
    """Elements covered by a_i (nonempty only for even i)."""
    if i % 2:
        return []
    return [j for j in (i - 1, i + 1) if 1 <= j <= n]


def upper_covers(n: int, i: int) -> list[int]:
    """Elements covering a_i (nonempty only for odd i)."""
    if i % 2 == 0:
        return []
    return [j for j in (i - 1, i + 1) if 1 <= j <= n]


def is_ideal_mask(mask: int, n: int) -> bool:
    for i in range(2, n + 1, 2):
        if mask & _bit(n, i) and any(not mask & _bit(n, j) for j in lower_covers(n, i)):
            return False
    return True


@dataclass(frozen=True, order=True)
class OrderIdeal:
    n: int
    mask: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"element count must be positive, got {self.n}")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError(f"mask {self.mask} out of range for n={self.n}")
        if not is_ideal_mask(self.mask, self.n):
            raise ValueError(f"{format(self.mask, f'0{self.n}b')} is not downward closed")

    @classmethod
    def from_string(cls, text: str) -> "OrderIdeal":
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a binary string: {text!r}")
        return cls(len(text), int(text, 2))

    @classmethod
    def from_elements(cls, n: int, elements) -> "OrderIdeal":
        mask = 0
        for i in elements:
            if not 1 <= i <= n:
                raise ValueError(f"element a_{i} outside a_1..a_{n}")
            mask |= _bit(n, i)
        return cls(n, mask)

    def __str__(self) -> str:
        return format(self.mask, f"0{self.n}b")

    def __repr__(self) -> str:
        return f"OrderIdeal({str(self)!r})"

    def bit(self, i: int) -> int:
        if not 1 <= i <= self.n:
            return 0
        return (self.mask >> (self.n - i)) & 1

    def __contains__(self, i: int) -> bool:
        return self.bit(i) == 1

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.n + 1) if self.bit(i))

    def hasse(self) -> str:
        """Two-row drawing of the fence: maxima on top, filled dots for members."""
        def dot(i):
            return "●" if self.bit(i) else "○"
        width = 2 * self.n - 1
        top = [" "] * width
        mid = [" "] * width
        bottom = [" "] * width
        for i in range(1, self.n + 1):
            col = 2 * (i - 1)
            (top if i % 2 == 0 else bottom)[col] = dot(i)
            if i % 2 == 0:
                mid[col - 1] = "/"
                if i < self.n:
                    mid[col + 1] = "\\"
        return "\n".join("".join(row).rstrip() for row in (top, mid, bottom))


def toggle_ideal_mask(mask: int, n: int, i: int) -> int:
    b = _bit(n, i)
    if mask & b:
        if any(mask & _bit(n, j) for j in upper_covers(n, i)):
            return mask
        return mask ^ b
    if all(mask & _bit(n, j) for j in lower_covers(n, i)):
        return mask | b
    return mask


def ideal_toggle(I: OrderIdeal, i: int) -> OrderIdeal:
    """Add or remove a_i when the result is still an order ideal."""
    if not 1 <= i <= I.n:
        raise ValueError(f"toggle index {i} outside 1..{I.n}")
    return OrderIdeal(I.n, toggle_ideal_mask(I.mask, I.n, i))


def apply_ideal_word(I: OrderIdeal, w: ToggleWord) -> OrderIdeal:
    if I.n != w.n:
        raise ValueError(f"word acts on n={w.n}, ideal has n={I.n}")
    mask = I.mask
    for i in reversed(w.word):
        mask = toggle_ideal_mask(mask, I.n, i)
    return OrderIdeal(I.n, mask)


def promotion_word(n: int) -> CoxeterWord:
    return CoxeterWord(n, tuple(range(n, 0, -1)))


def rowmotion_word(n: int) -> CoxeterWord:
    """Toggle the maxima (even elements) first, then the minima (odd elements)."""
    if n < 2:
        raise ValueError("rowmotion word needs n >= 2")
    top = n if n % 2 == 0 else n - 1
    odd_top = n - 1 if n % 2 == 0 else n
    odds = tuple(range(odd_top, 0, -2))
    evens = tuple(range(top, 1, -2))
    return CoxeterWord(n, odds + evens)


def rowmotion_by_antichain(I: OrderIdeal) -> OrderIdeal:
    """Rowmotion from its definition: the ideal generated by the minimal
    elements of the complement."""
    n = I.n
    minimal = [i for i in range(1, n + 1)
               if not I.bit(i) and all(I.bit(j) for j in lower_covers(n, i))]
    members = set(minimal)
    for i in minimal:
        members.update(lower_covers(n, i))
    return OrderIdeal.from_elements(n, members)


def eta(s: IndependentSet) -> OrderIdeal:
    """a_i is in eta(S) iff i is odd and not in S, or i is even and in S."""
    return OrderIdeal(s.n, s.mask ^ odd_positions_mask(s.n))


def eta_inverse(I: OrderIdeal) -> IndependentSet:
    return IndependentSet(I.n, I.mask ^ odd_positions_mask(I.n))


def ideal_masks(n: int, max_n: int | None = None) -> np.ndarray:
    """Every order-ideal mask of the n-element fence, ascending, by direct filter."""
    check_capacity(n, IDEAL_MAX_N if max_n is None else max_n)
    x = np.arange(1 << n, dtype=np.int64)
    ok = np.ones(len(x), dtype=bool)
    for i in range(2, n + 1, 2):
        has_i = (x & _bit(n, i)) != 0
        for j in lower_covers(n, i):
            ok &= ~has_i | ((x & _bit(n, j)) != 0)
    return x[ok]


def toggle_ideal_array(masks: np.ndarray, n: int, i: int) -> np.ndarray:
    b = np.int64(_bit(n, i))
    up = np.int64(sum(_bit(n, j) for j in upper_covers(n, i)))
    down = np.int64(sum(_bit(n, j) for j in lower_covers(n, i)))
    present = (masks & b) != 0
    removable = (masks & up) == 0
    addable = (masks & down) == down
    return np.where(present, np.where(removable, masks ^ b, masks),
                    np.where(addable, masks | b, masks))


class IdealOrbit(Orbit):
    """An orbit of a word in the ideal toggles; states are order ideals."""

    @property
    def states(self) -> list[OrderIdeal]:
        return [OrderIdeal(self.n, m) for m in self.masks]

    def __repr__(self):
        return f"IdealOrbit(word={self.word.pretty()}, size={len(self)}, min={self.states[0]})"


def ideal_orbit_of(I: OrderIdeal, w: ToggleWord) -> IdealOrbit:
    masks = [I.mask]
    cur = apply_ideal_word(I, w)
    while cur.mask != I.mask:
        masks.append(cur.mask)
        cur = apply_ideal_word(cur, w)
    return IdealOrbit(w, tuple(masks))


def all_ideal_orbits(n: int, w: ToggleWord, max_n: int | None = None) -> list[IdealOrbit]:
    if w.n != n:
        raise ValueError(f"word acts on n={w.n}, expected n={n}")
    masks = ideal_masks(n, max_n)
    images = masks
    for i in reversed(w.word):
        images = toggle_ideal_array(images, n, i)
    perm = np.searchsorted(masks, images)
    return [IdealOrbit(w, tuple(int(masks[k]) for k in cyc))
            for cyc in cycles_from_permutation(perm)]


def check_ideal_homomesy(n: int, w: ToggleWord, f: Statistic,
                         max_n: int | None = None) -> HomomesyReport:
    """Homomesy of a statistic in the element indicators chi_{a_j}."""
    return homomesy_over(all_ideal_orbits(n, w, max_n), f)


def translated_statistics(n: int) -> list[tuple[str, Statistic, Fraction]]:
    """Element-indicator statistics that are homomesic under every Coxeter
    element of the fence toggle group, with their averages."""
    ind = lambda j: Statistic.indicator(n, j)  # noqa: E731
    out = []
    for j in range(1, n + 1):
        if n % 2:
            out.append((f"a{j}-a{n + 1 - j}", ind(j) - ind(n + 1 - j), Fraction(0)))
        else:
            out.append((f"a{j}+a{n + 1 - j}", ind(j) + ind(n + 1 - j), Fraction(1)))
    out.append(("2a1-a2", 2 * ind(1) - ind(2), Fraction(1)))
    end = Fraction(1) if n % 2 else Fraction(0)
    out.append((f"2a{n}-a{n - 1}", 2 * ind(n) - ind(n - 1), end))
    return out
