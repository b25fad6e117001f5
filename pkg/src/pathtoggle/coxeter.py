"""Initial and final toggles, admissible conjugation, and the path from any
Coxeter word to phi."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .core import (
    CoxeterWord,
    Direction,
    ToggleWord,
    coxeter_to_orientation,
    orientation_to_coxeter,
    toggle_array,
    word_permutation,
)
from .orbits import all_orbits, cycles_from_permutation, mask_board


class StepKind(enum.Enum):
    BY_FINAL = "final"
    BY_INITIAL = "initial"


@dataclass(frozen=True)
class ConjugationStep:
    k: int
    kind: StepKind
    before: CoxeterWord
    after: CoxeterWord


def initial_toggles(w: ToggleWord) -> set[int]:
    """Toggles that can be commuted to the far left: sources of the orientation."""
    return coxeter_to_orientation(w).sources()


def final_toggles(w: ToggleWord) -> set[int]:
    """Toggles that can be commuted to the far right (applied first): sinks."""
    return coxeter_to_orientation(w).sinks()


def admissible_conjugate(w: ToggleWord, k: int) -> CoxeterWord:
    """``t_k w t_k`` for an initial or final ``t_k``, as a canonical Coxeter word.

    Conjugating by a final toggle moves it to the far left, which flips vertex
    ``k`` from sink to source; conjugating by an initial one does the reverse.
    """
    o = coxeter_to_orientation(w)
    if k not in o.sources() and k not in o.sinks():
        raise ValueError(f"t{k} is neither initial nor final in {w.pretty()}; "
                         "the conjugate would not be a Coxeter element")
    return orientation_to_coxeter(o.flip_vertex(k))


def conjugation_step(w: ToggleWord, k: int) -> ConjugationStep:
    before = w.as_coxeter()
    kind = StepKind.BY_FINAL if k in final_toggles(before) else StepKind.BY_INITIAL
    return ConjugationStep(k, kind, before, admissible_conjugate(before, k))


def _is_phi_orientation(w: ToggleWord) -> bool:
    return all(d is Direction.TOWARD_LOWER for d in coxeter_to_orientation(w).dirs)


@dataclass(frozen=True)
class ConjugationPath:
    """Steps taking ``start`` to phi; ``conjugator`` u satisfies phi = u^-1 start u."""

    start: CoxeterWord
    steps: tuple[ConjugationStep, ...]
    conjugator: ToggleWord

    def format_trace(self) -> str:
        lines = [f"start  {self.start.pretty():<24} {coxeter_to_orientation(self.start)}"]
        for st in self.steps:
            lines.append(f"t{st.k:<5} {st.after.pretty():<24} "
                         f"{coxeter_to_orientation(st.after)}  ({st.kind.value})")
        lines.append(f"u = {self.conjugator.pretty()}")
        return "\n".join(lines)


def path_to_phi(w: ToggleWord) -> ConjugationPath:
    """Conjugate by the largest final toggle until the word acts as phi."""
    cur = w.as_coxeter()
    n = cur.n
    steps = []
    while not _is_phi_orientation(cur):
        if len(steps) > n * n:
            raise RuntimeError(f"no convergence to phi after {n * n} conjugations")
        step = conjugation_step(cur, max(final_toggles(cur)))
        steps.append(step)
        cur = step.after
    return ConjugationPath(w.as_coxeter(), tuple(steps),
                           ToggleWord(n, tuple(st.k for st in steps)))


def conjugated(w: ToggleWord, u: ToggleWord) -> ToggleWord:
    """The word ``u^-1 w u``."""
    return ToggleWord(w.n, u.inverse().word + w.word + u.word)


@dataclass(frozen=True)
class CorrespondenceReport:
    """Result of mapping every ``w``-orbit through ``t_k`` onto ``w'``-orbits."""

    w: CoxeterWord
    k: int
    conjugate: CoxeterWord
    orbit_count: int
    ok: bool
    failures: tuple[str, ...] = field(default=())

    def __bool__(self):
        return self.ok


def verify_orbit_correspondence(w: ToggleWord, k: int, max_n: int | None = None) -> CorrespondenceReport:
    """Check that ``t_k`` carries each ``w``-orbit to a same-size ``w'``-orbit
    with identical column sums, where ``w' = t_k w t_k``."""
    w = w.as_coxeter()
    n = w.n
    w2 = admissible_conjugate(w, k)
    masks, perm = word_permutation(w, max_n)
    _, perm2 = word_permutation(w2, max_n)
    tk_index = np.searchsorted(masks, toggle_array(masks, n, k))
    failures = []
    cycles = cycles_from_permutation(perm)
    for cyc in cycles:
        image = [int(tk_index[i]) for i in cyc]
        for a, b in zip(image, image[1:] + image[:1]):
            if perm2[a] != b:
                failures.append(f"orbit of {format(int(masks[cyc[0]]), f'0{n}b')}: "
                                f"t{k}-image is not a w' orbit")
                break
        else:
            sums = mask_board(masks[cyc], n).sum(axis=0)
            sums2 = mask_board(masks[image], n).sum(axis=0)
            if not np.array_equal(sums, sums2):
                failures.append(f"orbit of {format(int(masks[cyc[0]]), f'0{n}b')}: "
                                f"column sums {sums.tolist()} vs {sums2.tolist()}")
    return CorrespondenceReport(w, k, w2, len(cycles), not failures, tuple(failures))


def orbit_size_multiset(w: ToggleWord, max_n: int | None = None) -> list[int]:
    return sorted(len(o) for o in all_orbits(w.n, w, max_n))


def alternating_word(n: int) -> CoxeterWord:
    """``t_2 t_4 ... t_{n-1} t_1 t_3 ... t_n``: evens after odds are applied."""
    evens = tuple(range(2, n + 1, 2))
    odds = tuple(range(1, n + 1, 2))
    return CoxeterWord(n, evens + odds)

