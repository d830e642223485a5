"""Permutations of the corner labels {0,1,2,3}, stored as 4-tuples of images."""

from itertools import permutations

IDENTITY = (0, 1, 2, 3)

ALL_PERMS = tuple(permutations(range(4)))


def compose(p, q):
    """Permutation p∘q: first apply q, then p."""
    return (p[q[0]], p[q[1]], p[q[2]], p[q[3]])


def inverse(p):
    inv = [0, 0, 0, 0]
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def sign(p):
    """Parity of a 4-permutation: +1 even, -1 odd."""
    s = 1
    for i in range(4):
        for j in range(i + 1, 4):
            if p[i] > p[j]:
                s = -s
    return s


def sign3(triple_a, triple_b):
    """Parity of the bijection sending the ordering triple_a to triple_b.

    Both arguments must be orderings of the same 3-element set.
    """
    # Map positions of triple_a entries into triple_b and take the parity.
    pos = [triple_b.index(x) for x in triple_a]
    s = 1
    for i in range(3):
        for j in range(i + 1, 3):
            if pos[i] > pos[j]:
                s = -s
    return s


EVEN_PERMS = tuple(p for p in ALL_PERMS if sign(p) == 1)
ODD_PERMS = tuple(p for p in ALL_PERMS if sign(p) == -1)

PERM_INDEX = {p: i for i, p in enumerate(ALL_PERMS)}
