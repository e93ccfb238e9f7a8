"""Structural checks run on every computed ultra summit graph.

Each ``check_*`` takes a built graph and raises AssertionError on a violation.
"""

from __future__ import annotations

import itertools
from collections import deque

from ussbraid import kernel as K
from ussbraid.braid_garside import SimpleElement, atom, complement, prefix
from ussbraid.conjugacy import (
    cycling,
    decycling,
    inverse_initial_factor,
    invariants_of,
    is_periodic,
    is_rigid,
    minimal_simple_elements,
    to_sss,
    uss_membership,
)
from ussbraid.normal_form import (
    GroupElement,
    conjugate,
    conjugate_simple,
    final_factor,
    initial_factor,
    interior,
    inverse,
    multiply_all,
    prefix_leq,
    tau_element,
)
from ussbraid.uss_graph import (
    BICOLORED,
    BLACK,
    GREY,
    UssGraph,
    arrow_color,
    build_graph,
    partial_transport_black,
    partial_transport_grey,
    transport,
)


def all_rigid(g: UssGraph) -> bool:
    return g.invariants.len_s > 1 and all(is_rigid(y) for y in g.vertices)


def check_cycling_conjugators(x: GroupElement) -> None:
    if not x.raw:
        return
    assert conjugate(x, initial_factor(x)) == cycling(x)
    assert conjugate(x, inverse(GroupElement.from_simple(final_factor(x)))) == decycling(x)
    assert conjugate(x, complement(final_factor(x))) == tau_element(decycling(x))
    assert tau_element(cycling(x)) == cycling(tau_element(x))
    assert tau_element(decycling(x)) == decycling(tau_element(x))


def check_closed_under_tau_c_d(g: UssGraph) -> None:
    for y in g.vertices:
        images = [tau_element(y)] + ([cycling(y), decycling(y)] if y.raw else [])
        for z in images:
            assert z in g.index, (y, z)


def check_minimal_elements(g: UssGraph) -> None:
    """Dichotomy for phi(y)s, and every minimal element divides iota(y) or iota(y^-1)."""
    for y in g.vertices:
        if not y.raw:
            continue
        phi = final_factor(y).raw
        for s in minimal_simple_elements(y, g.invariants):
            simple = K.length(K.compose(phi, s.raw)) == K.length(phi) + s.length()
            assert simple != K.is_left_weighted(phi, s.raw), (y, s)
            assert prefix(s, initial_factor(y)) or prefix(s, inverse_initial_factor(y))


def check_periodic_minimal_atoms(g: UssGraph) -> None:
    if g.invariants.len_s == 0 or is_periodic(g.base) is None:
        return
    for y in g.vertices:
        m = K.meet(initial_factor(y).raw, inverse_initial_factor(y).raw)
        expected = [atom(y.n, i) for i in SimpleElement(y.n, m).starting_set()]
        assert minimal_simple_elements(y, g.invariants) == expected, y


def check_rigid_interleaving(g: UssGraph) -> None:
    for i, y in enumerate(g.vertices):
        if not y.raw or not is_rigid(y):
            continue
        p, xs = y.p, y.raw
        for a in g.out_arrows(i):
            if not a.is_black():
                continue
            z = g.vertices[a.target]
            a0 = K.flip(a.label.raw) if p % 2 else a.label.raw
            b_prev = K.compose(K.inverse(a0), xs[0])
            for k in range(1, len(xs)):
                ak = K.compose(K.inverse(b_prev), z.raw[k - 1])
                assert K.is_prefix(ak, xs[k])
                b_prev = K.compose(K.inverse(ak), xs[k])
            last = K.compose(b_prev, K.flip(a0) if p % 2 else a0)
            assert z.p == p and z.raw[-1] == last


def check_length_one(x: GroupElement) -> None:
    y, _ = to_sss(x)
    if len(y.raw) == 1:
        assert uss_membership(y, invariants_of(y))


def check_rigid_inverse_minimal(g: UssGraph) -> None:
    for y in g.vertices:
        if not y.raw or not is_rigid(y):
            continue
        yi = inverse(y)
        mine = set(minimal_simple_elements(y, g.invariants))
        assert mine == set(minimal_simple_elements(yi, invariants_of(yi)))


def check_connected(g: UssGraph) -> None:
    seen = {0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for a in g.out_arrows(i):
            if a.target not in seen:
                seen.add(a.target)
                queue.append(a.target)
    assert seen == set(range(len(g)))


def check_arrows_are_partial_operations(g: UssGraph) -> None:
    for a in g.arrows:
        y = g.vertices[a.source]
        black = prefix(a.label, initial_factor(y))
        grey = prefix(a.label, inverse_initial_factor(y))
        assert black or grey
        assert a.color == arrow_color(y, a.label)
        assert conjugate_simple(y, a.label) == g.vertices[a.target]


def _paths(g: UssGraph, start: int, max_len: int):
    stack = [(start, [])]
    while stack:
        v, path = stack.pop()
        if path:
            yield path
        if len(path) < max_len:
            for a in g.out_arrows(v):
                stack.append((a.target, path + [a]))


def check_interior_paths(g: UssGraph, max_len: int) -> None:
    for i, y in enumerate(g.vertices):
        if not y.raw:
            continue
        pos, neg = interior(y), interior(inverse(y))
        for path in _paths(g, i, max_len):
            alpha = multiply_all(g.n, [a.label for a in path])
            if prefix_leq(alpha, pos):
                assert all(a.is_black() for a in path)
            if prefix_leq(alpha, neg):
                assert all(a.is_grey() for a in path)


def check_components_intersect(g: UssGraph) -> None:
    for bc, gc in itertools.product(g.black_components, g.grey_components):
        assert set(bc) & set(gc)


def check_rigid_iff_no_bicolored(g: UssGraph) -> None:
    for i, y in enumerate(g.vertices):
        if y.raw:
            bi = any(a.color == BICOLORED for a in g.out_arrows(i))
            assert is_rigid(y) != bi, y


def check_inverse_isomorphism(g: UssGraph) -> None:
    if not all_rigid(g):
        return
    gi = build_graph(inverse(g.base))
    assert len(gi) == len(g)
    swap = {BLACK: GREY, GREY: BLACK, BICOLORED: BICOLORED}
    for i, y in enumerate(g.vertices):
        j = gi.vertex_id(inverse(y))
        mine = {(a.label, a.target, a.color) for a in g.out_arrows(i)}
        theirs = {
            (a.label, g.vertex_id(inverse(gi.vertices[a.target])), swap[a.color])
            for a in gi.out_arrows(j)
        }
        assert mine == theirs


def check_arrow_characterizations(g: UssGraph) -> None:
    for y in g.vertices:
        if not y.raw:
            continue
        e = K.identity(y.n)
        yi = inverse(y)
        phi, phi_i = final_factor(y).raw, final_factor(yi).raw
        iota, iota_i = initial_factor(y).raw, initial_factor(yi).raw
        rigid = is_rigid(y)
        for s in minimal_simple_elements(y, g.invariants):
            r = s.raw

            def simple_after(f: bytes) -> bool:
                return K.length(K.compose(f, r)) == K.length(f) + K.length(r)

            black = [K.is_prefix(r, iota), simple_after(phi_i),
                     K.is_left_weighted(phi, r), K.meet(r, iota_i) == e]
            grey = [K.is_prefix(r, iota_i), simple_after(phi),
                    K.is_left_weighted(phi_i, r), K.meet(r, iota) == e]
            for conds in (black, grey):
                assert conds[0] == conds[1] and conds[2] == conds[3]
                if rigid:
                    assert len(set(conds)) == 1


def check_component_degrees(g: UssGraph) -> None:
    if not all_rigid(g):
        return

    def deg(i: int, black: bool) -> int:
        return sum(1 for a in g.out_arrows(i) if (a.is_black() if black else a.is_grey()))

    for comp in g.black_components:
        assert len({deg(i, False) for i in comp}) == 1
    for comp in g.grey_components:
        assert len({deg(i, True) for i in comp}) == 1


def check_partial_transport_squares(g: UssGraph) -> None:
    if not all_rigid(g):
        return
    for i, x in enumerate(g.vertices):
        out = g.out_arrows(i)
        for b in (a.label for a in out if a.color == BLACK):
            for gr in (a.label for a in out if a.color == GREY):
                gb = partial_transport_grey(x, gr, b)
                bg = partial_transport_black(x, b, gr)
                assert multiply_all(g.n, [b, gb]) == multiply_all(g.n, [gr, bg])
                cx = cycling(x)
                b1, g1 = transport(x, b), transport(x, gr)
                assert transport(conjugate_simple(x, b), gb) == partial_transport_grey(cx, g1, b1)
                assert transport(conjugate_simple(x, gr), bg) == partial_transport_black(cx, b1, g1)


def check_orbit_shift(g: UssGraph) -> None:
    for a in g.arrows:
        y = g.vertices[a.source]
        image = g.arrow_at(g.vertex_id(cycling(y)), transport(y, a.label))
        assert image is not None
        assert image.target == g.vertex_id(cycling(g.vertices[a.target]))
        assert image.color == a.color


def check_graph(g: UssGraph, path_len: int = 2) -> None:
    """Every graph-level invariant."""
    check_closed_under_tau_c_d(g)
    check_minimal_elements(g)
    check_periodic_minimal_atoms(g)
    check_rigid_interleaving(g)
    check_rigid_inverse_minimal(g)
    check_connected(g)
    check_arrows_are_partial_operations(g)
    check_interior_paths(g, path_len)
    check_components_intersect(g)
    check_rigid_iff_no_bicolored(g)
    check_inverse_isomorphism(g)
    check_arrow_characterizations(g)
    check_component_degrees(g)
    check_partial_transport_squares(g)
    check_orbit_shift(g)


def check_element(x: GroupElement) -> None:
    """Element-level invariants."""
    check_cycling_conjugators(x)
    check_length_one(x)
