"""The graph of an ultra summit set, its black and grey parts, and transport."""

from __future__ import annotations

import json
from collections import deque
from collections.abc import Callable
from dataclasses import dataclass, field

from . import kernel as K
from .braid_garside import SimpleElement, atom, product_if_simple
from .conjugacy import (
    ConjugacyWitness,
    UssInvariants,
    cycling,
    invariants_of,
    inverse_initial_factor,
    is_rigid,
    min_uss_conjugator,
    minimal_black,
    minimal_grey,
    minimal_simple_elements,
    to_uss,
)
from .normal_form import (
    GroupElement,
    conjugate_simple,
    from_factors,
    initial_factor,
    inverse,
    meet_element,
    multiply,
)

BLACK = "black"
GREY = "grey"
BICOLORED = "bicolored"


@dataclass(frozen=True)
class Arrow:
    source: int
    target: int
    label: SimpleElement
    color: str

    def is_black(self) -> bool:
        return self.color in (BLACK, BICOLORED)

    def is_grey(self) -> bool:
        return self.color in (GREY, BICOLORED)


def arrow_color(y: GroupElement, s: SimpleElement) -> str | None:
    """Color of a conjugation of y by s, or None if it is neither kind."""
    black = K.is_prefix(s.raw, initial_factor(y).raw) if y.raw else False
    grey = K.is_prefix(s.raw, inverse_initial_factor(y).raw) if y.raw else False
    if black and grey:
        return BICOLORED
    if black:
        return BLACK
    if grey:
        return GREY
    return None


def _elem(s: SimpleElement) -> GroupElement:
    return from_factors(s.n, 0, [s.raw])


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int) -> None:
        a, b = self.find(i), self.find(j)
        if a != b:
            self.parent[max(a, b)] = min(a, b)

    def groups(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for i in range(len(self.parent)):
            out.setdefault(self.find(i), []).append(i)
        return sorted(out.values(), key=lambda g: g[0])


@dataclass
class UssGraph:
    """Vertices of (part of) an ultra summit set with colored arrows.

    ``conjugators[i]`` conjugates ``base`` to ``vertices[i]``.
    """

    n: int
    base: GroupElement
    invariants: UssInvariants
    vertices: list[GroupElement] = field(default_factory=list)
    conjugators: list[GroupElement] = field(default_factory=list)
    arrows: list[Arrow] = field(default_factory=list)
    index: dict[GroupElement, int] = field(default_factory=dict)
    orbits: list[list[int]] = field(default_factory=list)
    orbit_of: list[int] = field(default_factory=list)
    black_components: list[list[int]] = field(default_factory=list)
    grey_components: list[list[int]] = field(default_factory=list)
    entry: ConjugacyWitness | None = None

    def __len__(self) -> int:
        return len(self.vertices)

    def vertex_id(self, y: GroupElement) -> int:
        return self.index[y]

    def witness(self, i: int) -> ConjugacyWitness:
        return ConjugacyWitness(self.conjugators[i], self.base, self.vertices[i])

    def out_arrows(self, i: int) -> list[Arrow]:
        return [a for a in self.arrows if a.source == i]

    def arrow_at(self, i: int, label: SimpleElement) -> Arrow | None:
        for a in self.arrows:
            if a.source == i and a.label == label:
                return a
        return None

    def _add(self, y: GroupElement, conj: GroupElement) -> int:
        i = len(self.vertices)
        self.vertices.append(y)
        self.conjugators.append(conj)
        self.index[y] = i
        return i

    def _finish(self) -> None:
        # cycling orbits, restricted to the vertices present
        self.orbit_of = [-1] * len(self.vertices)
        self.orbits = []
        for i, y in enumerate(self.vertices):
            if self.orbit_of[i] >= 0:
                continue
            members = [i]
            if y.raw:
                c = cycling(y)
                while c != y:
                    j = self.index.get(c)
                    if j is not None:
                        members.append(j)
                    c = cycling(c)
            oid = len(self.orbits)
            for j in members:
                self.orbit_of[j] = oid
            self.orbits.append(sorted(members))
        self.black_components = self._components(Arrow.is_black)
        self.grey_components = self._components(Arrow.is_grey)

    def _components(self, pick: Callable[[Arrow], bool]) -> list[list[int]]:
        uf = _UnionFind(len(self.vertices))
        for a in self.arrows:
            if pick(a):
                uf.union(a.source, a.target)
        return uf.groups()


def _closure(
    base: GroupElement,
    inv: UssInvariants,
    arrows_at: Callable[[GroupElement, UssInvariants], list[SimpleElement]],
    base_conj: GroupElement | None = None,
) -> UssGraph:
    n = base.n
    g = UssGraph(n, base, inv)
    g._add(base, base_conj if base_conj is not None else GroupElement.identity(n))
    queue = deque([0])
    while queue:
        i = queue.popleft()
        y = g.vertices[i]
        for s in arrows_at(y, inv):
            z = conjugate_simple(y, s)
            j = g.index.get(z)
            if j is None:
                j = g._add(z, multiply(g.conjugators[i], _elem(s)))
                queue.append(j)
            color = arrow_color(y, s)
            if color is None:
                raise AssertionError(f"arrow {s} at {y} is neither black nor grey")
            g.arrows.append(Arrow(i, j, s, color))
    g._finish()
    return g


def build_graph(x: GroupElement) -> UssGraph:
    """The whole graph of USS(x), explored breadth first from to_uss(x)."""
    y, wit, inv = to_uss(x)
    g = _closure(y, inv, minimal_simple_elements)
    g.entry = wit
    return g


def black_component(y: GroupElement, inv: UssInvariants | None = None) -> UssGraph:
    """Closure of y under minimal simple elements dividing the initial factor."""
    inv = inv or invariants_of(y)
    return _closure(y, inv, minimal_black)


def grey_component(y: GroupElement, inv: UssInvariants | None = None) -> UssGraph:
    """Closure of y under minimal simple elements dividing iota(y^-1)."""
    inv = inv or invariants_of(y)
    return _closure(y, inv, minimal_grey)


# transport


def transport(y: GroupElement, s: SimpleElement) -> SimpleElement:
    """s^(1) = iota(y)^-1 s iota(y^s), an arrow from c(y) to c(y^s)."""
    z = conjugate_simple(y, s)
    t = multiply(multiply(inverse(_elem(initial_factor(y))), _elem(s)), _elem(initial_factor(z)))
    if not t.is_simple():
        raise ValueError(f"transport of {s} is not simple; is it an arrow at a USS vertex?")
    return t.as_simple()


def _check_rigid_square(y: GroupElement, b: SimpleElement, g: SimpleElement) -> None:
    if len(y.raw) < 2 or not is_rigid(y):
        raise ValueError("partial transport needs a rigid element of canonical length > 1")
    if not K.is_prefix(b.raw, initial_factor(y).raw):
        raise ValueError(f"{b} is not a black arrow")
    if not K.is_prefix(g.raw, inverse_initial_factor(y).raw):
        raise ValueError(f"{g} is not a grey arrow")


def partial_transport_grey(y: GroupElement, g: SimpleElement, b: SimpleElement) -> SimpleElement:
    """g^[b] = d(phi(y^b)) meet (b^-1 g iota(y^g))."""
    _check_rigid_square(y, b, g)
    yb = conjugate_simple(y, b)
    yg = conjugate_simple(y, g)
    rhs = multiply(multiply(inverse(_elem(b)), _elem(g)), _elem(initial_factor(yg)))
    return meet_element(_elem(inverse_initial_factor(yb)), rhs).as_simple()


def partial_transport_black(y: GroupElement, b: SimpleElement, g: SimpleElement) -> SimpleElement:
    """b^[g] = iota(y^g) meet (g^-1 b d(phi(y^b)))."""
    _check_rigid_square(y, b, g)
    yb = conjugate_simple(y, b)
    yg = conjugate_simple(y, g)
    rhs = multiply(multiply(inverse(_elem(g)), _elem(b)), _elem(inverse_initial_factor(yb)))
    return meet_element(_elem(initial_factor(yg)), rhs).as_simple()


def complete_square_bg(
    x: GroupElement, b: SimpleElement, g: SimpleElement
) -> tuple[SimpleElement, SimpleElement]:
    """Turn the black-grey path (b, g) into a grey-black path (g', b') with bg = g'b'."""
    if len(x.raw) < 2 or not is_rigid(x):
        raise ValueError("complete_square_bg needs a rigid element of canonical length > 1")
    if not K.is_prefix(b.raw, initial_factor(x).raw):
        raise ValueError(f"{b} is not a black arrow")
    xb = conjugate_simple(x, b)
    if not K.is_prefix(g.raw, inverse_initial_factor(xb).raw):
        raise ValueError(f"{g} is not a grey arrow at the end of {b}")
    bg = product_if_simple(b, g)
    if bg is None:
        raise AssertionError("the product bg is not simple")
    g2 = SimpleElement(x.n, K.meet(inverse_initial_factor(x).raw, bg.raw))
    b2 = SimpleElement(x.n, K.compose(K.inverse(g2.raw), bg.raw))
    return g2, b2


# path factorization


def _head(alpha: GroupElement) -> bytes:
    if alpha.p > 0:
        return K.delta(alpha.n)
    return alpha.raw[0] if alpha.raw else K.identity(alpha.n)


def _lowest_atom(n: int, raw: bytes) -> SimpleElement:
    ld = K.left_descents(raw)
    return atom(n, (ld & -ld).bit_length())


def _split_rest(
    cur: GroupElement, alpha: GroupElement, inv: UssInvariants, color: str
) -> tuple[GroupElement, list[SimpleElement]]:
    """Write a positive alpha as a path of arrows, each of the given color."""
    out = []
    e = K.identity(cur.n)
    while not alpha.is_identity():
        head = _head(alpha)
        if head == e:
            raise ValueError("alpha must be a positive element")
        s = min_uss_conjugator(cur, _lowest_atom(cur.n, head), inv)
        assert K.is_prefix(s.raw, head)
        c = arrow_color(cur, s)
        if c != color and c != BICOLORED:
            raise AssertionError(f"expected a {color} arrow, got {c}")
        out.append(s)
        cur = conjugate_simple(cur, s)
        alpha = multiply(inverse(_elem(s)), alpha)
    return cur, out


def _check_path_input(y: GroupElement, alpha: GroupElement) -> UssInvariants:
    if not y.raw:
        raise ValueError("path factorization needs canonical length > 0")
    if alpha.p < 0:
        raise ValueError("alpha must be positive")
    return invariants_of(y)


def decompose_grey_black(
    y: GroupElement, alpha: GroupElement
) -> tuple[list[SimpleElement], list[SimpleElement]]:
    """Split alpha = g_1..g_s b_1..b_t along a grey path followed by a black path."""
    inv = _check_path_input(y, alpha)
    grey: list[SimpleElement] = []
    cur = y
    e = K.identity(y.n)
    while alpha.p > 0:
        g = minimal_grey(cur, inv)[0]
        grey.append(g)
        cur = conjugate_simple(cur, g)
        alpha = multiply(inverse(_elem(g)), alpha)
    while True:
        m = K.meet(inverse_initial_factor(cur).raw, _head(alpha))
        if m == e:
            break
        g = min_uss_conjugator(cur, _lowest_atom(y.n, m), inv)
        assert K.is_prefix(g.raw, m)
        grey.append(g)
        cur = conjugate_simple(cur, g)
        alpha = multiply(inverse(_elem(g)), alpha)
    _, black = _split_rest(cur, alpha, inv, BLACK)
    return grey, black


def decompose_black_grey(
    y: GroupElement, alpha: GroupElement
) -> tuple[list[SimpleElement], list[SimpleElement]]:
    """Split alpha = b_1..b_t g_1..g_s along a black path followed by a grey path."""
    inv = _check_path_input(y, alpha)
    black: list[SimpleElement] = []
    cur = y
    e = K.identity(y.n)
    while alpha.p > 0:
        b = minimal_black(cur, inv)[0]
        black.append(b)
        cur = conjugate_simple(cur, b)
        alpha = multiply(inverse(_elem(b)), alpha)
    while True:
        m = K.meet(initial_factor(cur).raw, _head(alpha))
        if m == e:
            break
        b = min_uss_conjugator(cur, _lowest_atom(y.n, m), inv)
        assert K.is_prefix(b.raw, m)
        black.append(b)
        cur = conjugate_simple(cur, b)
        alpha = multiply(inverse(_elem(b)), alpha)
    _, grey = _split_rest(cur, alpha, inv, GREY)
    return black, grey


def black_decompositions(g: UssGraph, i: int) -> list[list[SimpleElement]]:
    """All black paths from vertex i to c(vertex i) whose labels multiply to iota."""
    y = g.vertices[i]
    if not y.raw:
        return []
    target = g.index[cycling(y)]
    iota = initial_factor(y).raw
    out: list[list[SimpleElement]] = []

    def walk(v: int, acc: bytes, path: list[SimpleElement]) -> None:
        if acc == iota:
            if v == target:
                out.append(list(path))
            return
        for a in g.out_arrows(v):
            if not a.is_black():
                continue
            nxt = K.compose(acc, a.label.raw)
            if K.length(nxt) == K.length(acc) + a.label.length() and K.is_prefix(nxt, iota):
                path.append(a.label)
                walk(a.target, nxt, path)
                path.pop()

    walk(i, K.identity(y.n), [])
    return out


# quotient by the cycling automorphism


@dataclass
class QuotientGraph:
    """Cycling orbits of a USS graph with one arrow per transport class."""

    n: int
    orbits: list[list[int]]
    arrows: list[Arrow]
    arrow_classes: list[list[int]]
    source: UssGraph

    def __len__(self) -> int:
        return len(self.orbits)


def quotient_graph(g: UssGraph) -> QuotientGraph:
    by_key = {(a.source, a.label): k for k, a in enumerate(g.arrows)}
    uf = _UnionFind(len(g.arrows))
    for k, a in enumerate(g.arrows):
        y = g.vertices[a.source]
        src = g.index.get(cycling(y))
        t = transport(y, a.label)
        img = by_key.get((src, t)) if src is not None else None
        if img is None:
            raise AssertionError(f"transport of arrow {k} is not an arrow of the graph")
        if g.arrows[img].color != a.color:
            raise AssertionError(f"transport of arrow {k} changes its color")
        uf.union(k, img)
    classes = uf.groups() if g.arrows else []
    arrows = []
    for cls in classes:
        a = g.arrows[cls[0]]
        arrows.append(Arrow(g.orbit_of[a.source], g.orbit_of[a.target], a.label, a.color))
    return QuotientGraph(g.n, [list(o) for o in g.orbits], arrows, classes, g)


# exporters

_DOT_STYLE = {
    BLACK: 'color="black"',
    GREY: 'color="gray50"',
    BICOLORED: 'color="black:gray50", style="dashed"',
}


def export_dot(g: UssGraph | QuotientGraph) -> str:
    lines = ["digraph USS {"]
    if isinstance(g, QuotientGraph):
        for k, orbit in enumerate(g.orbits):
            lines.append(f'  o{k} [label="O{k} ({len(orbit)})"];')
        prefix = "o"
    else:
        for i, y in enumerate(g.vertices):
            lines.append(f'  v{i} [label="{y.serialize()}"];')
        prefix = "v"
    for a in g.arrows:
        lines.append(
            f'  {prefix}{a.source} -> {prefix}{a.target} [label="{a.label}", {_DOT_STYLE[a.color]}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_dict(g: UssGraph) -> dict:
    return {
        "n": g.n,
        "base": g.base.serialize(),
        "inf": g.invariants.inf_s,
        "len": g.invariants.len_s,
        "vertices": [
            {"id": i, "normal_form": y.serialize(), "orbit": g.orbit_of[i], "rigid": is_rigid(y)}
            for i, y in enumerate(g.vertices)
        ],
        "arrows": [
            {"source": a.source, "target": a.target, "label": str(a.label), "color": a.color}
            for a in g.arrows
        ],
        "black_components": g.black_components,
        "grey_components": g.grey_components,
    }


def quotient_to_dict(q: QuotientGraph) -> dict:
    return {
        "n": q.n,
        "orbits": [
            {"id": k, "size": len(o), "representative": q.source.vertices[o[0]].serialize()}
            for k, o in enumerate(q.orbits)
        ],
        "arrows": [
            {"source": a.source, "target": a.target, "label": str(a.label), "color": a.color}
            for a in q.arrows
        ],
    }


def export_json(g: UssGraph | QuotientGraph) -> str:
    d = quotient_to_dict(g) if isinstance(g, QuotientGraph) else graph_to_dict(g)
    return json.dumps(d, indent=2) + "\n"
