"""Cycling operations, summit sets and minimal simple conjugators.

The minimal conjugator c_Y(u) is found by a search restricted to simples
that keep Y in its super summit set.  For a simple u the smallest such simple
above u, written rho(u) below, is obtained by a monotone fixed-point iteration;
the search then walks upward from rho(u) in order of length.
"""

from __future__ import annotations

import heapq
from functools import lru_cache
from dataclasses import dataclass

from . import kernel as K
from .braid_garside import SimpleElement, all_simples, atom, check_strands
from .normal_form import (
    GroupElement,
    conjugate_simple,
    from_factors,
    initial_factor,
    final_factor,
    inverse,
    multiply,
    power,
)


@dataclass(frozen=True)
class UssInvariants:
    """Summit infimum and canonical length shared by a whole ultra summit set."""

    n: int
    inf_s: int
    len_s: int

    @property
    def sup_s(self) -> int:
        return self.inf_s + self.len_s


@dataclass(frozen=True)
class ConjugacyWitness:
    """target = conjugator^-1 * source * conjugator."""

    conjugator: GroupElement
    source: GroupElement
    target: GroupElement

    def __post_init__(self) -> None:
        if __debug__ and not self.verify():
            raise ValueError("witness does not conjugate source to target")

    def verify(self) -> bool:
        a = self.conjugator
        return multiply(multiply(inverse(a), self.source), a) == self.target


def _tau(raw: bytes, k: int) -> bytes:
    return K.flip(raw) if k % 2 else raw


def _need_length(x: GroupElement, what: str) -> None:
    if not x.raw:
        raise ValueError(f"{what} is undefined for elements of canonical length 0")


def _simple_el(n: int, raw: bytes) -> GroupElement:
    return from_factors(n, 0, [raw])


# cycling and friends


def cycling(x: GroupElement) -> GroupElement:
    _need_length(x, "cycling")
    return from_factors(x.n, x.p, [*x.raw[1:], _tau(x.raw[0], x.p)])


def decycling(x: GroupElement) -> GroupElement:
    _need_length(x, "decycling")
    return from_factors(x.n, x.p, [_tau(x.raw[-1], x.p), *x.raw[:-1]])


def twisted_decycling(x: GroupElement) -> GroupElement:
    _need_length(x, "twisted decycling")
    return conjugate_simple(x, SimpleElement(x.n, K.complement(x.raw[-1])))


def inverse_initial_factor(x: GroupElement) -> SimpleElement:
    """iota(x^-1) = complement(phi(x))."""
    return SimpleElement(x.n, K.complement(final_factor(x).raw))


def partial_cycling(x: GroupElement, s: SimpleElement) -> GroupElement:
    if not K.is_prefix(s.raw, initial_factor(x).raw):
        raise ValueError(f"{s} is not a prefix of the initial factor")
    return conjugate_simple(x, s)


def partial_twisted_decycling(x: GroupElement, s: SimpleElement) -> GroupElement:
    if not K.is_prefix(s.raw, inverse_initial_factor(x).raw):
        raise ValueError(f"{s} is not a prefix of the initial factor of the inverse")
    return conjugate_simple(x, s)


# summit sets


def to_sss(x: GroupElement) -> tuple[GroupElement, ConjugacyWitness]:
    n = x.n
    y = x
    w = GroupElement.identity(n)
    # raise inf by cycling until the trajectory closes
    seen = {y}
    while y.raw:
        c = cycling(y)
        w = multiply(w, _simple_el(n, _tau(y.raw[0], y.p)))
        if c.p > y.p:
            seen = {c}
        elif c in seen:
            y = c
            break
        seen.add(c)
        y = c
    # lower sup by decycling, same stopping rule
    seen = {y}
    while y.raw:
        d = decycling(y)
        w = multiply(w, inverse(_simple_el(n, y.raw[-1])))
        if d.sup < y.sup:
            seen = {d}
        elif d in seen:
            y = d
            break
        seen.add(d)
        y = d
    return y, ConjugacyWitness(w, x, y)


def invariants_of(y: GroupElement) -> UssInvariants:
    return UssInvariants(y.n, y.p, len(y.raw))


@lru_cache(maxsize=8192)
def to_uss(x: GroupElement) -> tuple[GroupElement, ConjugacyWitness, UssInvariants]:
    y, wit = to_sss(x)
    inv = invariants_of(y)
    if not y.raw:
        return y, wit, inv
    traj = [y]
    conj = [wit.conjugator]
    index = {y: 0}
    while True:
        cur = traj[-1]
        c = cycling(cur)
        if c in index:
            j = index[c]
            return traj[j], ConjugacyWitness(conj[j], x, traj[j]), inv
        index[c] = len(traj)
        conj.append(multiply(conj[-1], _simple_el(x.n, _tau(cur.raw[0], cur.p))))
        traj.append(c)


def uss_membership(z: GroupElement, inv: UssInvariants) -> bool:
    if z.p != inv.inf_s or len(z.raw) != inv.len_s:
        return False
    if not z.raw:
        return True
    seen = {z}
    c = z
    while True:
        c = cycling(c)
        if c == z:
            return True
        if c in seen:
            return False
        seen.add(c)


def reduce_by_partial_cyclings(
    x: GroupElement,
) -> tuple[GroupElement, ConjugacyWitness, list[SimpleElement]]:
    """Reach USS(x) using conjugations by prefixes of initial factors only.

    Decycling is replaced by the chain of partial cyclings by
    tau^-p(x_1), ..., tau^-p(x_{r-1}), which lands on tau^-p(d(x)).
    """
    n = x.n
    _, _, inv = to_uss(x)
    steps: list[SimpleElement] = []
    y = x

    def step(s_raw: bytes) -> None:
        nonlocal y
        s = SimpleElement(n, s_raw)
        if not K.is_prefix(s_raw, initial_factor(y).raw):
            raise AssertionError("emitted conjugator is not a partial cycling")
        y = conjugate_simple(y, s)
        steps.append(s)

    while y.p < inv.inf_s:
        step(_tau(y.raw[0], y.p))
    while y.sup > inv.sup_s:
        p = y.p
        for f in y.raw[:-1]:
            step(_tau(f, p))
    while not uss_membership(y, inv):
        step(_tau(y.raw[0], y.p))
    w = GroupElement.identity(n)
    for s in steps:
        w = multiply(w, _simple_el(n, s.raw))
    return y, ConjugacyWitness(w, x, y), steps


# minimal simple elements


def _inf_step(n: int, p: int, body: tuple[bytes, ...], s: bytes) -> bytes:
    """One round towards the smallest s' >= s with inf(y^s') >= p.

    With P the positive part of y, the condition reads tau^p(s') <= P s'.
    """
    return K.sss_step(list(body), p % 2 == 1, s)


def sss_closure(y: GroupElement, s: SimpleElement, y_inv: GroupElement | None = None) -> SimpleElement:
    """The smallest simple t >= s with y^t having the inf and sup of y.

    Assumes y is in its super summit set.
    """
    n = y.n
    if y_inv is None:
        y_inv = inverse(y)
    cur = s.raw
    while True:
        nxt = _inf_step(n, y.p, y.raw, cur)
        nxt = _inf_step(n, y_inv.p, y_inv.raw, nxt)
        if nxt == cur:
            return SimpleElement(n, cur)
        cur = nxt


def min_uss_conjugator(y: GroupElement, u: SimpleElement, inv: UssInvariants) -> SimpleElement:
    """c_Y(u): the smallest simple s with u <= s and y^s in the ultra summit set."""
    n = y.n
    y_inv = inverse(y)
    start = sss_closure(y, u, y_inv).raw
    heap = [(K.length(start), start)]
    seen = {start}
    while heap:
        _, s = heapq.heappop(heap)
        if uss_membership(conjugate_simple(y, SimpleElement(n, s)), inv):
            return SimpleElement(n, s)
        ext = K.left_descents(K.complement(s))
        for i in range(n - 1):
            if ext >> i & 1:
                t = sss_closure(y, SimpleElement(n, K.compose(s, K.atom(n, i))), y_inv).raw
                if t not in seen:
                    seen.add(t)
                    heapq.heappush(heap, (K.length(t), t))
    raise AssertionError("no ultra summit conjugator found; is y in its USS?")


def min_uss_conjugator_bruteforce(
    y: GroupElement, u: SimpleElement, inv: UssInvariants
) -> SimpleElement:
    """Reference c_Y(u) by scanning all n! simples in order of length."""
    for s in all_simples(y.n):
        if K.is_prefix(u.raw, s.raw) and uss_membership(conjugate_simple(y, s), inv):
            return s
    raise AssertionError("unreachable: Delta always qualifies")


def _minimal_among(cands: list[SimpleElement]) -> list[SimpleElement]:
    out: list[SimpleElement] = []
    for c in cands:
        if c in out:
            continue
        if any(d != c and K.is_prefix(d.raw, c.raw) for d in cands):
            continue
        out.append(c)
    return out


def black_atoms(y: GroupElement) -> list[int]:
    return initial_factor(y).starting_set() if y.raw else []


def grey_atoms(y: GroupElement) -> list[int]:
    return inverse_initial_factor(y).starting_set() if y.raw else []


def minimal_black(y: GroupElement, inv: UssInvariants) -> list[SimpleElement]:
    """Minimal simple elements that are prefixes of iota(y)."""
    return _minimal_among([min_uss_conjugator(y, atom(y.n, i), inv) for i in black_atoms(y)])


def minimal_grey(y: GroupElement, inv: UssInvariants) -> list[SimpleElement]:
    """Minimal simple elements that are prefixes of iota(y^-1)."""
    return _minimal_among([min_uss_conjugator(y, atom(y.n, i), inv) for i in grey_atoms(y)])


def minimal_simple_elements(y: GroupElement, inv: UssInvariants) -> list[SimpleElement]:
    """All minimal simple elements for y, ordered by their smallest atom.

    Every minimal simple element divides iota(y) or iota(y^-1), so only atoms
    of those two factors need c_Y.  Canonical length 0 gives no arrows.
    """
    if not y.raw:
        return []
    idx = sorted(set(black_atoms(y)) | set(grey_atoms(y)))
    return _minimal_among([min_uss_conjugator(y, atom(y.n, i), inv) for i in idx])


def minimal_simple_elements_all_atoms(y: GroupElement, inv: UssInvariants) -> list[SimpleElement]:
    """Same set computed from every atom, as a cross-check."""
    check_strands(y.n)
    return _minimal_among([min_uss_conjugator(y, atom(y.n, i), inv) for i in range(1, y.n)])


# predicates


def is_rigid(x: GroupElement) -> bool:
    if not x.raw:
        return False
    return K.meet(initial_factor(x).raw, inverse_initial_factor(x).raw) == K.identity(x.n)


def is_periodic(x: GroupElement) -> tuple[int, int] | None:
    """(m, k) with x^m = Delta^k, k != 0, m smallest; None if not periodic."""
    n = x.n
    cands = sorted({m for m in range(1, n + 1) if n % m == 0 or (n - 1) % m == 0})
    for m in cands:
        xm = power(x, m)
        if not xm.raw and xm.p != 0:
            return m, xm.p
    return None
