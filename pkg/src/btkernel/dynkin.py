"""Untwisted affine Dynkin diagrams and their automorphisms.

Vertex labels follow Bourbaki, with 0 the extra affine node:

    A_n   cycle 0-1-...-n-0 (for n = 1 a single sentinel bond 0~1)
    B_n   0 and 1 both attached to 2, chain 2-...-n, n-1 => n
          (B_2: 0 => 2 <= 1)
    C_n   0 => 1 - 2 - ... - n-1 <= n
    D_n   left fork leaves 0, 1 on vertex 2, chain 2-...-(n-2),
          right fork leaves n-1, n on vertex n-2
    E6    legs (1,3), (6,5), (0,2) hanging off the center 4
    E7    chain 0-1-3-4-5-6-7, 2 attached to 4
    E8    chain 1-3-4-5-6-7-8-0, 2 attached to 4
    F4    0 - 1 - 2 => 3 - 4
    G2    0 - 2 => 1   (triple bond)

A multiple bond points from the long root to the short root; ``head``
records the short end.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import InvalidRankError

FAMILIES = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2")

#: multiplicity marker of the affine A_1 bond (label infinity)
A1_DOUBLE = "A1-double"

_FIXED_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}

VertexSet = tuple  # sorted tuple of vertex ids


def vertex_set(vertices) -> VertexSet:
    return tuple(sorted(set(vertices)))


@dataclass(frozen=True)
class Bond:
    v: int
    w: int
    multiplicity: int | str = 1
    head: int | None = None

    def __post_init__(self):
        if self.v == self.w:
            raise ValueError("loop bond at vertex %d" % self.v)
        if self.v > self.w:
            v, w = self.w, self.v
            object.__setattr__(self, "v", v)
            object.__setattr__(self, "w", w)
        if self.multiplicity in (2, 3):
            if self.head not in (self.v, self.w):
                raise ValueError("multiple bond needs an arrow head")
        elif self.multiplicity in (1, A1_DOUBLE):
            if self.head is not None:
                raise ValueError("arrow on a bond without orientation")
        else:
            raise ValueError("bad multiplicity %r" % (self.multiplicity,))

    def label_from(self, u: int):
        """Bond label as seen from endpoint ``u``: (multiplicity, arrow).

        arrow is +1 when the arrow points away from ``u``, -1 when it
        points at ``u``, 0 for unoriented bonds.
        """
        other = self.w if u == self.v else self.v
        if self.head is None:
            arrow = 0
        else:
            arrow = 1 if self.head == other else -1
        return (self.multiplicity, arrow)


@dataclass(frozen=True)
class Diagram:
    family: str
    rank: int
    bonds: tuple

    def __post_init__(self):
        for b in self.bonds:
            if not (0 <= b.v <= self.rank and 0 <= b.w <= self.rank):
                raise ValueError("bond %r leaves the vertex range" % (b,))
        if not _connected(range(self.rank + 1), self.bonds):
            raise ValueError("affine diagram must be connected")

    @property
    def vertices(self) -> range:
        return range(self.rank + 1)

    @property
    def size(self) -> int:
        return self.rank + 1

    @cached_property
    def labels(self) -> dict:
        """labels[u][w] -> bond label from u towards w."""
        out = {u: {} for u in self.vertices}
        for b in self.bonds:
            out[b.v][b.w] = b.label_from(b.v)
            out[b.w][b.v] = b.label_from(b.w)
        return out

    def neighbors(self, v: int):
        return sorted(self.labels[v])

    def degree(self, v: int) -> int:
        return len(self.labels[v])

    def name(self) -> str:
        if self.family in _FIXED_RANK:
            return "~" + self.family
        return "~%s%d" % (self.family, self.rank)

    def without(self, vertex: int) -> tuple:
        """Bonds not touching ``vertex``."""
        return tuple(b for b in self.bonds if vertex not in (b.v, b.w))

    def is_connected_without(self, vertex: int) -> bool:
        rest = [v for v in self.vertices if v != vertex]
        return _connected(rest, self.without(vertex))

    def cartan_matrix(self, drop=()):
        """Generalized Cartan matrix (as nested lists of ints).

        Entry [i][j] is <alpha_j, alpha_i^vee>; a long-to-short bond of
        multiplicity m gives -1 on the long row and -m on the short row.
        """
        keep = [v for v in self.vertices if v not in set(drop)]
        pos = {v: i for i, v in enumerate(keep)}
        n = len(keep)
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for b in self.bonds:
            if b.v not in pos or b.w not in pos:
                continue
            i, j = pos[b.v], pos[b.w]
            if b.multiplicity == A1_DOUBLE:
                a[i][j] = a[j][i] = -2
            elif b.head is None:
                a[i][j] = a[j][i] = -1
            else:
                short = pos[b.head]
                long_ = j if short == i else i
                a[long_][short] = -1
                a[short][long_] = -b.multiplicity
        return a


def _connected(vertices, bonds) -> bool:
    vertices = list(vertices)
    if not vertices:
        return True
    adj = {v: set() for v in vertices}
    for b in bonds:
        if b.v in adj and b.w in adj:
            adj[b.v].add(b.w)
            adj[b.w].add(b.v)
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def determinant(matrix) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return det


def _chain(vertices):
    return [Bond(a, b) for a, b in zip(vertices, vertices[1:])]


def check_rank(family: str, rank: int) -> None:
    if family not in FAMILIES:
        raise ValueError("unknown family %r" % (family,))
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise InvalidRankError("rank must be an integer, got %r" % (rank,))
    if family in _FIXED_RANK:
        if rank != _FIXED_RANK[family]:
            raise InvalidRankError(
                "%s has rank %d, got %d" % (family, _FIXED_RANK[family], rank))
    elif rank < _MIN_RANK[family]:
        raise InvalidRankError(
            "%s needs rank >= %d, got %d" % (family, _MIN_RANK[family], rank))


def build_affine_diagram(family: str, rank: int) -> Diagram:
    """Untwisted affine diagram of ``family`` with finite rank ``rank``."""
    check_rank(family, rank)
    n = rank
    if family == "A":
        if n == 1:
            bonds = [Bond(0, 1, A1_DOUBLE)]
        else:
            bonds = _chain(list(range(n + 1))) + [Bond(n, 0)]
    elif family == "B":
        if n == 2:
            bonds = [Bond(0, 2, 2, head=2), Bond(1, 2, 2, head=2)]
        else:
            bonds = [Bond(0, 2)] + _chain(list(range(1, n)))
            bonds.append(Bond(n - 1, n, 2, head=n))
    elif family == "C":
        bonds = [Bond(0, 1, 2, head=1)] + _chain(list(range(1, n)))
        bonds.append(Bond(n - 1, n, 2, head=n - 1))
    elif family == "D":
        bonds = [Bond(0, 2), Bond(1, 2)] + _chain(list(range(2, n - 1)))
        bonds += [Bond(n - 2, n - 1), Bond(n - 2, n)]
    elif family == "E6":
        bonds = _chain([1, 3, 4, 5, 6]) + [Bond(2, 4), Bond(0, 2)]
    elif family == "E7":
        bonds = _chain([0, 1, 3, 4, 5, 6, 7]) + [Bond(2, 4)]
    elif family == "E8":
        bonds = _chain([1, 3, 4, 5, 6, 7, 8, 0]) + [Bond(2, 4)]
    elif family == "F4":
        bonds = [Bond(0, 1), Bond(1, 2), Bond(2, 3, 2, head=3), Bond(3, 4)]
    else:  # G2
        bonds = [Bond(0, 2), Bond(1, 2, 3, head=1)]
    return Diagram(family, n, tuple(sorted(bonds, key=lambda b: (b.v, b.w))))


def _search_order(d: Diagram):
    # BFS from 0 so every later vertex has an already-placed neighbor
    order, seen = [0], {0}
    i = 0
    while i < len(order):
        for w in d.neighbors(order[i]):
            if w not in seen:
                seen.add(w)
                order.append(w)
        i += 1
    return order


def _signature(d: Diagram, v: int):
    return tuple(sorted(d.labels[v].values(), key=repr))


def automorphism_maps(d: Diagram) -> list:
    """All label-preserving vertex bijections, as image tuples."""
    order = _search_order(d)
    sig = {v: _signature(d, v) for v in d.vertices}
    labels = d.labels
    image = {}
    used = set()
    found = []

    def compatible(v, x):
        if sig[v] != sig[x]:
            return False
        for u, y in image.items():
            if labels[v].get(u) != labels[x].get(y):
                return False
        return True

    def extend(i):
        if i == len(order):
            found.append(tuple(image[v] for v in d.vertices))
            return
        v = order[i]
        placed = [u for u in labels[v] if u in image]
        if placed:
            candidates = labels[image[placed[0]]]
        else:
            candidates = d.vertices
        for x in candidates:
            if x in used or not compatible(v, x):
                continue
            image[v] = x
            used.add(x)
            extend(i + 1)
            del image[v]
            used.discard(x)

    extend(0)
    return sorted(found)


def diagram_automorphisms(d: Diagram):
    """Full automorphism group of ``d`` as a PermGroup."""
    from .permgroups import Permutation, PermGroup

    perms = [Permutation(m) for m in automorphism_maps(d)]
    return PermGroup.from_elements(perms)


def special_vertices(d: Diagram) -> VertexSet:
    """Orbit of the affine vertex 0 under the automorphism group."""
    return vertex_set(m[0] for m in automorphism_maps(d))
