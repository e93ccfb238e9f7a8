"""Conjugacy decision: black/grey component intersection, a full-USS baseline
and a brute-force oracle over super summit sets."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .braid_garside import all_simples
from .conjugacy import ConjugacyWitness, invariants_of, to_sss, to_uss
from .normal_form import GroupElement, conjugate_simple, from_factors, inverse, multiply
from .uss_graph import black_component, build_graph, grey_component


@dataclass(frozen=True)
class ConjugacyResult:
    """Outcome of a conjugacy test; witness maps x to y when conjugate."""

    conjugate: bool
    witness: ConjugacyWitness | None = None

    def __post_init__(self) -> None:
        if self.conjugate != (self.witness is not None):
            raise ValueError("a witness is required exactly when conjugate")


class BudgetExhausted(RuntimeError):
    """The brute-force search stopped before deciding."""


def _check(x: GroupElement, y: GroupElement) -> None:
    if x.n != y.n:
        raise ValueError(f"mismatched strand counts {x.n} and {y.n}")


def _result(x: GroupElement, y: GroupElement, alpha: GroupElement) -> ConjugacyResult:
    return ConjugacyResult(True, ConjugacyWitness(alpha, x, y))


def _chain(*parts: GroupElement) -> GroupElement:
    out = parts[0]
    for p in parts[1:]:
        out = multiply(out, p)
    return out


def solve(x: GroupElement, y: GroupElement) -> ConjugacyResult:
    """Decide conjugacy by intersecting the black component of x' with the grey
    component of y', where x', y' are ultra summit representatives."""
    _check(x, y)
    xs, wx, inv_x = to_uss(x)
    ys, wy, inv_y = to_uss(y)
    if inv_x != inv_y:
        return ConjugacyResult(False)
    bx = black_component(xs, inv_x)
    gy = grey_component(ys, inv_y)
    common = [v for v in bx.vertices if v in gy.index]
    if not common:
        return ConjugacyResult(False)
    v = min(common, key=lambda z: z.serialize())
    cx = bx.conjugators[bx.vertex_id(v)]
    cy = gy.conjugators[gy.vertex_id(v)]
    alpha = _chain(wx.conjugator, cx, inverse(cy), inverse(wy.conjugator))
    return _result(x, y, alpha)


def solve_full_uss(x: GroupElement, y: GroupElement) -> ConjugacyResult:
    """Baseline: build all of USS(x) and look up an ultra summit element of y."""
    _check(x, y)
    ys, wy, inv_y = to_uss(y)
    if inv_y != to_uss(x)[2]:
        return ConjugacyResult(False)
    g = build_graph(x)
    if ys not in g.index:
        return ConjugacyResult(False)
    assert g.entry is not None
    c = g.conjugators[g.vertex_id(ys)]
    alpha = _chain(g.entry.conjugator, c, inverse(wy.conjugator))
    return _result(x, y, alpha)


def super_summit_set(
    x: GroupElement, budget: int = 200_000
) -> tuple[dict[GroupElement, GroupElement], ConjugacyWitness]:
    """SSS(x) by conjugating with every simple element, breadth first.

    Returns a map from each element to a conjugator from the first one, and
    the witness from x to that first element.  ``budget`` bounds the number
    of conjugations tried; running out raises :class:`BudgetExhausted`.
    """
    n = x.n
    xs, wx = to_sss(x)
    inf, sup = xs.inf, xs.sup
    simples = [s for s in all_simples(n) if not s.is_identity()]
    conj = {xs: GroupElement.identity(n)}
    queue = deque([xs])
    spent = 0
    while queue:
        z = queue.popleft()
        for s in simples:
            spent += 1
            if spent > budget:
                raise BudgetExhausted(f"no decision after {budget} conjugations")
            t = conjugate_simple(z, s)
            if t.inf == inf and t.sup == sup and t not in conj:
                conj[t] = multiply(conj[z], from_factors(n, 0, [s.raw]))
                queue.append(t)
    return conj, wx


def brute_force_conjugate(
    x: GroupElement, y: GroupElement, budget: int = 200_000
) -> ConjugacyResult:
    """Decide conjugacy by exhausting the super summit set of x.

    Raises :class:`BudgetExhausted` when ``budget`` conjugations do not suffice.
    """
    _check(x, y)
    ys, wy = to_sss(y)
    xs, _ = to_sss(x)
    if invariants_of(xs) != invariants_of(ys):
        return ConjugacyResult(False)
    conj, wx = super_summit_set(x, budget)
    if ys not in conj:
        return ConjugacyResult(False)
    alpha = _chain(wx.conjugator, conj[ys], inverse(wy.conjugator))
    return _result(x, y, alpha)
