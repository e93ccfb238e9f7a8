"""Braids from the worked examples, with their listed normal forms."""

from __future__ import annotations

import random

from ussbraid.braid_garside import SimpleElement
from ussbraid.normal_form import GroupElement, from_factors


def el(n: int, word: str) -> GroupElement:
    return GroupElement.parse(n, word)


def simple(n: int, word: str) -> SimpleElement:
    return SimpleElement.from_word(n, [int(t) for t in word.split()])


def nf(n: int, factors: list[str], p: int = 0) -> GroupElement:
    """The element Delta^p f_1 ... f_r, checking that the factors are already normal."""
    raws = [simple(n, f).raw for f in factors]
    g = from_factors(n, p, raws)
    assert g.raw == tuple(raws) and g.p == p, f"{factors} is not a left normal form"
    return g


A_WORD = "1 2 3 2 2 1 3 1 3"
A_FACTORS = {
    (1, 1): ["1 2 3 2", "2 1 3", "1 3"],
    (1, 2): ["2 1 3", "1 3", "1 2 3 2"],
    (1, 3): ["1 3", "1 2 3 2", "2 1 3"],
    (2, 1): ["1 3 2 1", "2 1 3", "1 3"],
    (2, 2): ["2 1 3", "1 3", "1 3 2 1"],
    (2, 3): ["1 3", "1 3 2 1", "2 1 3"],
}
# inverses of A_{i,j} as elements of the single orbit of A^-1
A_INVERSE_INDEX = {(1, 1): 1, (1, 2): 3, (1, 3): 5, (2, 1): 4, (2, 2): 6, (2, 3): 2}

B_WORD = "2 1 4 3 2 1 5 4 2 4"
B_FACTORS = {
    (1, 1): ["2 1 4 3 2 1 5 4", "2 4"],
    (1, 2): ["2 4", "2 1 4 3 2 1 5 4"],
    (2, 1): ["2 1 3 4 3 2 5 4", "2 4"],
    (2, 2): ["2 4", "2 1 3 4 3 2 5 4"],
    (3, 1): ["1 4 3 2 1 5 4", "2 1 4"],
    (3, 2): ["2 1 4", "1 4 3 2 1 5 4"],
    (4, 1): ["2 1 3 2 4 5 4", "2 4 5"],
    (4, 2): ["2 4 5", "2 1 3 2 4 5 4"],
}
# grey arrow B_{1,1} -> B_{2,2} and its transport B_{1,2} -> B_{2,1}
B_TRANSPORT_S = "1 2 3 2 1 4 3 2 5 4 3 2 1"
B_TRANSPORT_T = "3 2 1 4 5 4 3"

C_WORD = "4 1 2 3 4"
D_WORD = "1 3 1"
D2_FACTORS = ["1 3", "3"]

E_WORD = (
    "2 1 7 6 5 4 3 8 7 11 10 . 1 2 3 2 1 4 3 10 . 1 3 4 10 . 1 10 . "
    "1 10 9 8 7 11 . 1 2 7 11"
)
F_WORD = (
    "3 2 1 4 6 8 7 6 9 10 11 10 . 1 2 4 3 2 1 5 7 10 11 10 . "
    "3 5 7 10 11 10 . 3 5 7 6 8 10 11"
)

U_WORD = "1 2 1 3 2"

# rigid braid with b v g != g b^[g]
X_FACTORS = ["2", "2 1 3 2", "2 1 3", "1 2"]

FIXTURES = {
    "A": (4, A_WORD),
    "B": (6, B_WORD),
    "C": (5, C_WORD),
    "D": (4, D_WORD),
}


def delta_braid(n: int) -> GroupElement:
    """sigma_{n-1} ... sigma_1."""
    return el(n, " ".join(str(i) for i in range(n - 1, 0, -1)))


def epsilon_braid(n: int) -> GroupElement:
    """delta sigma_1."""
    return el(n, " ".join(str(i) for i in range(n - 1, 0, -1)) + " 1")


def random_word(rng: random.Random, n: int, length: int) -> str:
    letters = []
    for _ in range(length):
        i = rng.randint(1, n - 1)
        letters.append(str(i if rng.random() < 0.5 else -i))
    return " ".join(letters)


def random_element(rng: random.Random, n: int, length: int) -> GroupElement:
    return el(n, random_word(rng, n, length))


def random_elements(seed: int, count: int, max_n: int = 6, max_len: int = 5):
    """Elements with n <= max_n and canonical length <= max_len."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(3, max_n)
        x = random_element(rng, n, rng.randint(1, 10))
        if len(x.raw) <= max_len:
            out.append(x)
    return out
