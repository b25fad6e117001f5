"""Closed-form counts of independent sets, necklaces and phi-orbits.

Each formula has a brute-force ``oracle_*`` counterpart that enumerates the
objects directly.  The oracles exist to check the formulas and are not meant
for production answers.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import check_capacity, phi, reverse_mask
from .orbits import all_orbits, is_reversible
from .snakes import SnakeComposition, composition_classes, least_rotation

ORACLE_MAX_LEN = 24


@lru_cache(maxsize=None)
def fib(k: int) -> int:
    """Fibonacci numbers with F(0) = 0, F(1) = 1."""
    if k < 0:
        raise ValueError("Fibonacci index must be nonnegative")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def totient(m: int) -> int:
    if m < 1:
        raise ValueError("totient needs a positive integer")
    result, rest, p = m, m, 2
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            result -= result // p
        p += 1
    if rest > 1:
        result -= result // rest
    return result


def divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def count_independent_sets(n: int) -> int:
    return fib(n + 2)


def count_symmetrical(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    if n % 2 == 0:
        return fib(n // 2 + 1)
    return fib((n + 1) // 2 + 2)


def count_strings_no11_open(n: int) -> int:
    """Strings of length n with no "11" that do not both start and end with 1."""
    if n < 1:
        raise ValueError("length must be positive")
    return fib(n - 1) + fib(n + 1)


def count_necklaces_no11(length: int) -> int:
    if length < 1:
        raise ValueError("length must be positive")
    total = sum(totient(length // d) * count_strings_no11_open(d) for d in divisors(length))
    q, r = divmod(total, length)
    if r:
        raise ArithmeticError(f"necklace sum {total} not divisible by {length}")
    return q


def count_bracelets_no11(length: int) -> int:
    value = Fraction(fib(length // 2 + 2) + count_necklaces_no11(length), 2)
    if value.denominator != 1:
        raise ArithmeticError(f"bracelet count {value} is not an integer")
    return int(value)


def count_self_reverse_necklaces(length: int) -> int:
    if length < 1:
        raise ValueError("length must be positive")
    return fib(length // 2 + 2)


def count_phi_orbits(n: int) -> int:
    if n < 2:
        raise ValueError("n must be at least 2")
    return count_necklaces_no11(n - 1)


def count_reversible_orbits(n: int) -> int:
    if n < 2:
        raise ValueError("n must be at least 2")
    return fib((n + 1) // 2 + 1)


def necklace_to_composition(s: str) -> SnakeComposition:
    """Read ``01`` as 2 and a lone ``0`` as 1; the string must start with 0."""
    if not s or set(s) - {"0", "1"}:
        raise ValueError(f"not a binary string: {s!r}")
    if s[0] == "1":
        raise ValueError(f"{s!r} starts with 1 and has no corresponding composition")
    if "11" in s + s[0]:
        raise ValueError(f"{s!r} contains 11 cyclically")
    parts = []
    k = 0
    while k < len(s):
        if s[k:k + 2] == "01":
            parts.append(2)
            k += 2
        elif s[k] == "0":
            parts.append(1)
            k += 1
        else:
            raise ValueError(f"{s!r} has a 1 not preceded by 0")
    return SnakeComposition(tuple(parts))


def composition_to_necklace(c: SnakeComposition) -> str:
    return "".join("01" if p == 2 else "0" for p in c.parts)


@dataclass(frozen=True)
class NecklaceClass:
    length: int
    representative: str
    self_reverse: bool


def _rot(x: int, k: int, length: int) -> int:
    full = (1 << length) - 1
    return ((x << k) | (x >> (length - k))) & full


def _necklace_rep(x: int, length: int) -> int:
    return min(_rot(x, k, length) for k in range(length))


def _cyclic_no11(x: int, length: int) -> bool:
    return x & _rot(x, 1, length) == 0


def _strings(length: int, no11: bool):
    check_capacity(length, ORACLE_MAX_LEN)
    for x in range(1 << length):
        if not no11 or _cyclic_no11(x, length):
            yield x


def necklace_classes(length: int, no11: bool = True) -> list[NecklaceClass]:
    """Enumerate necklaces by canonicalising every admissible string."""
    reps = sorted({_necklace_rep(x, length) for x in _strings(length, no11)})
    return [NecklaceClass(length, format(r, f"0{length}b"),
                          _necklace_rep(reverse_mask(r, length), length) == r)
            for r in reps]


def oracle_independent_sets(n: int) -> int:
    check_capacity(n, ORACLE_MAX_LEN)
    return sum(1 for x in range(1 << n) if x & (x >> 1) == 0)


def oracle_symmetrical(n: int) -> int:
    check_capacity(n, ORACLE_MAX_LEN)
    return sum(1 for x in range(1 << n) if x & (x >> 1) == 0 and reverse_mask(x, n) == x)


def oracle_strings_no11_open(n: int) -> int:
    check_capacity(n, ORACLE_MAX_LEN)
    ends = 1 | (1 << (n - 1))
    return sum(1 for x in range(1 << n) if x & (x >> 1) == 0 and x & ends != ends)


def oracle_necklaces(length: int, no11: bool = True) -> int:
    return len(necklace_classes(length, no11))


def oracle_bracelets(length: int, no11: bool = True) -> int:
    reps = {min(_necklace_rep(x, length), _necklace_rep(reverse_mask(x, length), length))
            for x in _strings(length, no11)}
    return len(reps)


def oracle_self_reverse_necklaces(length: int, no11: bool = True) -> int:
    return sum(c.self_reverse for c in necklace_classes(length, no11))


def oracle_phi_orbits(n: int) -> int:
    return len(all_orbits(n, phi(n)))


def oracle_reversible_orbits(n: int) -> int:
    return sum(is_reversible(o) for o in all_orbits(n, phi(n)))


def necklace_bijection_is_valid(length: int) -> bool:
    """Check the necklace-to-composition map is a bijection on classes."""
    images = []
    for cls in necklace_classes(length):
        r = cls.representative
        # rotate so the string starts with 0; always possible without cyclic 11
        k = r.index("0")
        c = necklace_to_composition(r[k:] + r[:k])
        images.append(least_rotation(c.parts))
    targets = [c.parts for c in composition_classes(length)]
    return len(images) == len(set(images)) and set(images) == set(targets)

