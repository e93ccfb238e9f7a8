"""Braids in left normal form Delta^p x_1 ... x_r and their arithmetic."""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from . import kernel as K
from .braid_garside import SimpleElement, check_strands


@dataclass(frozen=True)
class DeltaPower:
    """A Delta^k token inside a braid word."""

    k: int


_TOKEN = re.compile(r"^(?:(-?\d+)|D(?:\^(-?\d+))?)$")


@dataclass(frozen=True)
class BraidWord:
    """A word in the sigma_i^{+-1} and powers of Delta.

    Letters are nonzero ints (``-2`` is sigma_2^-1) or :class:`DeltaPower`.
    """

    n: int
    letters: tuple[int | DeltaPower, ...]

    def __post_init__(self) -> None:
        check_strands(self.n)
        for x in self.letters:
            if isinstance(x, DeltaPower):
                continue
            if not isinstance(x, int) or x == 0 or abs(x) > self.n - 1:
                raise ValueError(f"invalid generator {x!r} for n={self.n}")

    @classmethod
    def parse(cls, n: int, text: str) -> BraidWord:
        """Tokens split on whitespace or '.': signed ints, ``D`` or ``D^k``."""
        letters: list[int | DeltaPower] = []
        for tok in re.split(r"[\s.]+", text.strip()):
            if not tok:
                continue
            m = _TOKEN.match(tok)
            if m is None:
                raise ValueError(f"malformed token {tok!r}")
            if m.group(1) is not None:
                letters.append(int(m.group(1)))
            else:
                letters.append(DeltaPower(int(m.group(2)) if m.group(2) is not None else 1))
        return cls(n, tuple(letters))

    def inverse(self) -> BraidWord:
        out: list[int | DeltaPower] = []
        for x in reversed(self.letters):
            out.append(DeltaPower(-x.k) if isinstance(x, DeltaPower) else -x)
        return BraidWord(self.n, tuple(out))


def _tau_raw(raw: bytes, k: int) -> bytes:
    return K.flip(raw) if k % 2 else raw


class GroupElement:
    """Delta^p x_1 ... x_r with every pair (x_i, x_{i+1}) left-weighted.

    Factors are stored as raw permutation tables; :attr:`factors` wraps them.
    Use :func:`from_factors` to build from an arbitrary sequence of simples.
    """

    __slots__ = ("n", "p", "raw", "_hash")

    def __init__(self, n: int, p: int, raw: tuple[bytes, ...]):
        self.n = n
        self.p = p
        self.raw = raw
        self._hash: int | None = None

    # constructors

    @classmethod
    def identity(cls, n: int) -> GroupElement:
        check_strands(n)
        return cls(n, 0, ())

    @classmethod
    def delta_power(cls, n: int, k: int = 1) -> GroupElement:
        check_strands(n)
        return cls(n, k, ())

    @classmethod
    def from_simple(cls, s: SimpleElement) -> GroupElement:
        return from_factors(s.n, 0, [s.raw])

    @classmethod
    def from_word(cls, word: BraidWord) -> GroupElement:
        return normalize(word)

    @classmethod
    def parse(cls, n: int, text: str) -> GroupElement:
        return normalize(BraidWord.parse(n, text))

    # accessors

    @property
    def factors(self) -> tuple[SimpleElement, ...]:
        return tuple(SimpleElement(self.n, r) for r in self.raw)

    @property
    def inf(self) -> int:
        return self.p

    @property
    def sup(self) -> int:
        return self.p + len(self.raw)

    @property
    def canonical_length(self) -> int:
        return len(self.raw)

    def is_identity(self) -> bool:
        return self.p == 0 and not self.raw

    def is_delta_power(self) -> bool:
        return not self.raw

    def is_simple(self) -> bool:
        return (self.p == 0 and len(self.raw) <= 1) or (self.p == 1 and not self.raw)

    def is_positive(self) -> bool:
        return self.p >= 0

    def as_simple(self) -> SimpleElement:
        """This element as a simple, if it is one."""
        if self.p == 1 and not self.raw:
            return SimpleElement(self.n, K.delta(self.n))
        if self.p == 0 and not self.raw:
            return SimpleElement(self.n, K.identity(self.n))
        if self.p == 0 and len(self.raw) == 1:
            return SimpleElement(self.n, self.raw[0])
        raise ValueError(f"{self} is not a simple element")

    def key(self) -> tuple[int, tuple[bytes, ...]]:
        return (self.p, self.raw)

    def word(self) -> list[int | DeltaPower]:
        out: list[int | DeltaPower] = []
        if self.p:
            out.append(DeltaPower(self.p))
        for f in self.factors:
            out.extend(f.word())
        return out

    def serialize(self) -> str:
        parts = [f"D^{self.p}"]
        for f in self.factors:
            parts.append(" ".join(map(str, f.word())))
        return " . ".join(parts)

    def __str__(self) -> str:
        return self.serialize()

    def __repr__(self) -> str:
        return f"GroupElement(n={self.n}, {self.serialize()!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.n == other.n and self.p == other.p and self.raw == other.raw

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.p, self.raw))
        return self._hash

    # arithmetic

    def __mul__(self, other: GroupElement) -> GroupElement:
        return multiply(self, other)

    def __pow__(self, k: int) -> GroupElement:
        return power(self, k)

    def inverse(self) -> GroupElement:
        return inverse(self)

    def conjugate(self, a: GroupElement | SimpleElement) -> GroupElement:
        """a^-1 self a."""
        return conjugate(self, a)

    def tau(self, k: int = 1) -> GroupElement:
        return tau_element(self, k)


def from_factors(n: int, p: int, raws: Sequence[bytes]) -> GroupElement:
    """Normal form of Delta^p times the product of the given simple tables."""
    d, rest = K.normalize_factors(list(raws))
    return GroupElement(n, p + d, tuple(rest))


def _same(x: GroupElement, y: GroupElement) -> None:
    if x.n != y.n:
        raise ValueError(f"mismatched strand counts {x.n} and {y.n}")


def normalize(w: BraidWord) -> GroupElement:
    n = w.n
    facs: list[bytes] = []
    k = 0  # the word read so far equals facs * Delta^k
    for x in w.letters:
        if isinstance(x, DeltaPower):
            k += x.k
        elif x > 0:
            facs.append(_tau_raw(K.atom(n, x - 1), k))
        else:
            # sigma^-1 = complement(sigma) Delta^-1
            facs.append(_tau_raw(K.complement(K.atom(n, -x - 1)), k))
            k -= 1
    return from_factors(n, k, [_tau_raw(f, k) for f in facs])


def multiply(x: GroupElement, y: GroupElement) -> GroupElement:
    _same(x, y)
    if not y.raw:
        return GroupElement(x.n, x.p + y.p, tuple(_tau_raw(f, y.p) for f in x.raw))
    if not x.raw:
        return GroupElement(x.n, x.p + y.p, y.raw)
    return from_factors(x.n, x.p + y.p, [_tau_raw(f, y.p) for f in x.raw] + list(y.raw))


def multiply_all(n: int, items: Iterable[GroupElement | SimpleElement]) -> GroupElement:
    out = GroupElement.identity(n)
    for it in items:
        out = multiply(out, as_element(it))
    return out


def as_element(x: GroupElement | SimpleElement) -> GroupElement:
    if isinstance(x, SimpleElement):
        return GroupElement.from_simple(x)
    return x


def inverse(x: GroupElement) -> GroupElement:
    p, r = x.p, len(x.raw)
    out = []
    for i in range(r, 0, -1):
        out.append(_tau_raw(K.complement(x.raw[i - 1]), p + i))
    return GroupElement(x.n, -p - r, tuple(out))


def power(x: GroupElement, k: int) -> GroupElement:
    if k < 0:
        return power(inverse(x), -k)
    result = GroupElement.identity(x.n)
    base = x
    while k:
        if k & 1:
            result = multiply(result, base)
        k >>= 1
        if k:
            base = multiply(base, base)
    return result


def conjugate(x: GroupElement, a: GroupElement | SimpleElement) -> GroupElement:
    """x^a = a^-1 x a."""
    if isinstance(a, SimpleElement):
        return conjugate_simple(x, a)
    return multiply(multiply(inverse(a), x), a)


def conjugate_simple(x: GroupElement, s: SimpleElement) -> GroupElement:
    # s^-1 Delta^p x s = Delta^(p-1) tau^(p-1)(complement(s)) x s
    _same(x, GroupElement(s.n, 0, ()))
    lead = _tau_raw(K.complement(s.raw), x.p - 1)
    return from_factors(x.n, x.p - 1, [lead, *x.raw, s.raw])


def tau_element(x: GroupElement, k: int = 1) -> GroupElement:
    if k % 2 == 0:
        return x
    return GroupElement(x.n, x.p, tuple(K.flip(f) for f in x.raw))


def initial_factor(x: GroupElement) -> SimpleElement:
    if not x.raw:
        return SimpleElement(x.n, K.identity(x.n))
    return SimpleElement(x.n, _tau_raw(x.raw[0], x.p))


def final_factor(x: GroupElement) -> SimpleElement:
    if not x.raw:
        return SimpleElement(x.n, K.delta(x.n))
    return SimpleElement(x.n, x.raw[-1])


def interior(x: GroupElement) -> GroupElement:
    """x Delta^-p, a positive element with inf 0."""
    return GroupElement(x.n, 0, tuple(_tau_raw(f, x.p) for f in x.raw))


def prefix_leq(u: GroupElement, v: GroupElement) -> bool:
    """u <= v, i.e. u^-1 v is positive."""
    _same(u, v)
    return multiply(inverse(u), v).p >= 0


def _first_simple(x: GroupElement) -> bytes:
    """x meet Delta for a positive x."""
    if x.p >= 1:
        return K.delta(x.n)
    if x.raw:
        return x.raw[0]
    return K.identity(x.n)


def meet_element(u: GroupElement, v: GroupElement) -> GroupElement:
    """Greatest common prefix of two group elements."""
    _same(u, v)
    n = u.n
    m = min(u.p, v.p)
    a = GroupElement(n, u.p - m, u.raw)
    b = GroupElement(n, v.p - m, v.raw)
    e = K.identity(n)
    acc: list[bytes] = []
    while True:
        t = K.meet(_first_simple(a), _first_simple(b))
        if t == e:
            break
        acc.append(t)
        ti = inverse(from_factors(n, 0, [t]))
        a = multiply(ti, a)
        b = multiply(ti, b)
    return from_factors(n, m, acc)
