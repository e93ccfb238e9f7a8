"""Pure-Python permutation kernels for the classical Garside structure of B_n.

A simple braid is stored as a ``bytes`` object holding its permutation in
one-line notation with 0-based values.  Word concatenation corresponds to
function composition, so right multiplication by the atom ``s_i`` swaps the
entries at positions ``i`` and ``i + 1``.  All functions here are mirrored
one-for-one by the compiled ``_kernel`` extension.
"""

from __future__ import annotations

IMPLEMENTATION = "python"


def identity(n: int) -> bytes:
    return bytes(range(n))


def delta(n: int) -> bytes:
    return bytes(range(n - 1, -1, -1))


def atom(n: int, i: int) -> bytes:
    """Generator sigma_{i+1}, i.e. the transposition of positions i, i+1 (0-based)."""
    p = bytearray(range(n))
    p[i], p[i + 1] = p[i + 1], p[i]
    return bytes(p)


def compose(a: bytes, b: bytes) -> bytes:
    """Permutation of the product a*b (apply b, then a)."""
    return bytes(a[x] for x in b)


def inverse(a: bytes) -> bytes:
    inv = bytearray(len(a))
    for i, x in enumerate(a):
        inv[x] = i
    return bytes(inv)


def length(a: bytes) -> int:
    """Number of inversions = letter length of the positive simple braid."""
    n = len(a)
    return sum(1 for i in range(n) for j in range(i + 1, n) if a[i] > a[j])


def right_descents(a: bytes) -> int:
    mask = 0
    for i in range(len(a) - 1):
        if a[i] > a[i + 1]:
            mask |= 1 << i
    return mask


def left_descents(a: bytes) -> int:
    n = len(a)
    pos = [0] * n
    for i, x in enumerate(a):
        pos[x] = i
    mask = 0
    for i in range(n - 1):
        if pos[i] > pos[i + 1]:
            mask |= 1 << i
    return mask


def flip(a: bytes) -> bytes:
    """tau(a) = Delta^-1 a Delta, i.e. sigma_i -> sigma_{n-i}."""
    n = len(a)
    return bytes(n - 1 - a[n - 1 - i] for i in range(n))


def complement(a: bytes) -> bytes:
    """The right complement a^-1 Delta."""
    n = len(a)
    inv = inverse(a)
    return bytes(inv[n - 1 - i] for i in range(n))


def is_prefix(a: bytes, b: bytes) -> bool:
    """a is a prefix of b in the braid monoid (right weak order)."""
    ia = inverse(a)
    return length(compose(ia, b)) == length(b) - length(a)


def meet(a: bytes, b: bytes) -> bytes:
    c = bytearray(range(len(a)))
    ra = bytearray(a)
    rb = bytearray(b)
    while True:
        common = left_descents(bytes(ra)) & left_descents(bytes(rb))
        if not common:
            return bytes(c)
        i = (common & -common).bit_length() - 1
        c[i], c[i + 1] = c[i + 1], c[i]
        for r in (ra, rb):
            # left multiplication by s_i swaps the values i and i+1
            for k, x in enumerate(r):
                if x == i:
                    r[k] = i + 1
                elif x == i + 1:
                    r[k] = i


def join(a: bytes, b: bytes) -> bytes:
    # w -> w*Delta reverses the prefix order on simples
    return meet(a[::-1], b[::-1])[::-1]


def slide(a: bytes, b: bytes) -> tuple[bytes, bytes]:
    """Rewrite the pair (a, b) as the left-weighted pair with the same product."""
    pa = bytearray(a)
    pb = bytearray(b)
    while True:
        movable = left_descents(bytes(pb)) & ~right_descents(bytes(pa))
        if not movable:
            return bytes(pa), bytes(pb)
        i = (movable & -movable).bit_length() - 1
        pa[i], pa[i + 1] = pa[i + 1], pa[i]
        for k, x in enumerate(pb):
            if x == i:
                pb[k] = i + 1
            elif x == i + 1:
                pb[k] = i


def is_left_weighted(a: bytes, b: bytes) -> bool:
    return left_descents(b) & ~right_descents(a) == 0


def normalize_factors(factors: list[bytes]) -> tuple[int, list[bytes]]:
    """Left-weight a sequence of simples; return (#leading Deltas, remaining factors).

    Trailing identities are dropped.  The input list is not modified.
    """
    f = list(factors)
    size = len(f)
    if size == 0:
        return 0, f
    n = len(f[0])
    for i in range(1, size):
        j = i
        while j > 0:
            a, b = slide(f[j - 1], f[j])
            if a == f[j - 1]:
                break
            f[j - 1], f[j] = a, b
            j -= 1
    changed = True
    while changed:
        changed = False
        for j in range(size - 1):
            if not is_left_weighted(f[j], f[j + 1]):
                f[j], f[j + 1] = slide(f[j], f[j + 1])
                changed = True
    d = delta(n)
    e = identity(n)
    lo = 0
    while lo < size and f[lo] == d:
        lo += 1
    hi = size
    while hi > lo and f[hi - 1] == e:
        hi -= 1
    return lo, f[lo:hi]


def sss_step(body: list[bytes], flip_s: bool, s: bytes) -> bytes:
    """One round of the summit closure: s * (Q^-1 (Q v t)) with Q = body*s.

    ``body`` is a left-weighted sequence and t is s, flipped if ``flip_s``.
    """
    n = len(s)
    f = list(body) + [s]
    j = len(f) - 1
    while j > 0:
        a, b = slide(f[j - 1], f[j])
        if a == f[j - 1]:
            break
        f[j - 1], f[j] = a, b
        j -= 1
    d = delta(n)
    if f and f[0] == d:
        return s
    e = identity(n)
    cur = flip(s) if flip_s else s
    for q in f:
        if cur == e:
            break
        cur = compose(inverse(q), join(q, cur))
    return compose(s, cur)
