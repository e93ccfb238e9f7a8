"""Simple braids of B_n as permutations, with the prefix-order lattice.

A simple element is a positive braid in which any two strands cross at most
once; it is determined by its permutation.  The prefix order ``a <= b`` (``a``
is a left divisor of ``b`` among positive braids) is the right weak order on
permutations.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence

from . import kernel as K

MAX_STRANDS = 64


def check_strands(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"strand count must be an integer >= 2, got {n!r}")
    if n > MAX_STRANDS:
        raise ValueError(f"strand count {n} exceeds the supported maximum {MAX_STRANDS}")


class SimpleElement:
    """An element of the interval [1, Delta] in B_n.

    Internally the permutation is a ``bytes`` table with 0-based values; the
    public :attr:`perm` is 1-based.  Multiplying on the right by sigma_i swaps
    positions i and i+1 of the table.
    """

    __slots__ = ("n", "raw")

    def __init__(self, n: int, raw: bytes):
        self.n = n
        self.raw = raw

    @classmethod
    def from_perm(cls, perm: Sequence[int]) -> SimpleElement:
        n = len(perm)
        check_strands(n)
        if sorted(perm) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {tuple(perm)}")
        return cls(n, bytes(x - 1 for x in perm))

    @classmethod
    def identity(cls, n: int) -> SimpleElement:
        check_strands(n)
        return cls(n, K.identity(n))

    @classmethod
    def delta(cls, n: int) -> SimpleElement:
        check_strands(n)
        return cls(n, K.delta(n))

    @classmethod
    def from_word(cls, n: int, letters: Iterable[int]) -> SimpleElement:
        """The simple element spelled by a positive word; fails if it is not simple."""
        check_strands(n)
        p = bytearray(range(n))
        count = 0
        for i in letters:
            if not 1 <= i <= n - 1:
                raise ValueError(f"generator index {i} out of range for n={n}")
            p[i - 1], p[i] = p[i], p[i - 1]
            count += 1
        raw = bytes(p)
        if K.length(raw) != count:
            raise ValueError("word does not represent a simple element")
        return cls(n, raw)

    @property
    def perm(self) -> tuple[int, ...]:
        return tuple(x + 1 for x in self.raw)

    def is_identity(self) -> bool:
        return self.raw == K.identity(self.n)

    def is_delta(self) -> bool:
        return self.raw == K.delta(self.n)

    def length(self) -> int:
        return K.length(self.raw)

    def word(self) -> list[int]:
        """Lexicographically smallest reduced word, 1-based generator indices."""
        out = []
        r = bytearray(self.raw)
        while True:
            ld = K.left_descents(bytes(r))
            if not ld:
                return out
            i = (ld & -ld).bit_length() - 1
            out.append(i + 1)
            for k, x in enumerate(r):
                if x == i:
                    r[k] = i + 1
                elif x == i + 1:
                    r[k] = i

    def starting_set(self) -> list[int]:
        """Atoms (1-based) that are prefixes of this element."""
        ld = K.left_descents(self.raw)
        return [i + 1 for i in range(self.n - 1) if ld >> i & 1]

    def finishing_set(self) -> list[int]:
        """Atoms (1-based) that are suffixes of this element."""
        rd = K.right_descents(self.raw)
        return [i + 1 for i in range(self.n - 1) if rd >> i & 1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleElement):
            return NotImplemented
        return self.n == other.n and self.raw == other.raw

    def __hash__(self) -> int:
        return hash((self.n, self.raw))

    def __lt__(self, other: SimpleElement) -> bool:
        return (self.length(), self.raw) < (other.length(), other.raw)

    def __repr__(self) -> str:
        return f"SimpleElement(n={self.n}, word={self.word()})"

    def __str__(self) -> str:
        return " ".join(map(str, self.word()))


def _same(a: SimpleElement, b: SimpleElement) -> None:
    if a.n != b.n:
        raise ValueError(f"mismatched strand counts {a.n} and {b.n}")


def atom(n: int, i: int) -> SimpleElement:
    """sigma_i, 1 <= i <= n-1."""
    check_strands(n)
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n={n}")
    return SimpleElement(n, K.atom(n, i - 1))


def atoms(n: int) -> list[SimpleElement]:
    return [atom(n, i) for i in range(1, n)]


def meet(a: SimpleElement, b: SimpleElement) -> SimpleElement:
    _same(a, b)
    return SimpleElement(a.n, K.meet(a.raw, b.raw))


def join(a: SimpleElement, b: SimpleElement) -> SimpleElement:
    _same(a, b)
    return SimpleElement(a.n, K.join(a.raw, b.raw))


def prefix(a: SimpleElement, b: SimpleElement) -> bool:
    """a <= b in the prefix order."""
    _same(a, b)
    return K.is_prefix(a.raw, b.raw)


def complement(a: SimpleElement) -> SimpleElement:
    """The right complement a^-1 Delta."""
    return SimpleElement(a.n, K.complement(a.raw))


def tau_simple(a: SimpleElement, k: int = 1) -> SimpleElement:
    """Delta^-k a Delta^k."""
    if k % 2 == 0:
        return a
    return SimpleElement(a.n, K.flip(a.raw))


def left_weighted(a: SimpleElement, b: SimpleElement) -> bool:
    _same(a, b)
    return K.is_left_weighted(a.raw, b.raw)


def local_slide(a: SimpleElement, b: SimpleElement) -> tuple[SimpleElement, SimpleElement]:
    """The left-weighted pair (a', b') with a'b' = ab."""
    _same(a, b)
    x, y = K.slide(a.raw, b.raw)
    return SimpleElement(a.n, x), SimpleElement(a.n, y)


def product_if_simple(a: SimpleElement, b: SimpleElement) -> SimpleElement | None:
    """ab if it is simple, else None."""
    _same(a, b)
    c = K.compose(a.raw, b.raw)
    if K.length(c) == K.length(a.raw) + K.length(b.raw):
        return SimpleElement(a.n, c)
    return None


def left_quotient(a: SimpleElement, b: SimpleElement) -> SimpleElement:
    """a^-1 b, for a <= b."""
    _same(a, b)
    if not K.is_prefix(a.raw, b.raw):
        raise ValueError("left_quotient requires a to be a prefix of b")
    return SimpleElement(a.n, K.compose(K.inverse(a.raw), b.raw))


def all_simples(n: int) -> Iterator[SimpleElement]:
    """All n! simple elements, by increasing length then table order."""
    check_strands(n)
    perms = sorted((bytes(p) for p in itertools.permutations(range(n))),
                   key=lambda r: (K.length(r), r))
    for r in perms:
        yield SimpleElement(n, r)
