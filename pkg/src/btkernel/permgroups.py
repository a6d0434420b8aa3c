"""Vertex permutations, small permutation groups, and the action presets.

Groups here never exceed the automorphism group of an affine diagram
(order <= 24 for the presets), so they are stored as explicit element
lists built by closure.

Preset conventions on affine D_n (vertex ids as in :mod:`btkernel.dynkin`):
the four numbered extremal vertices 1, 2, 3, 4 are the ids
0, 1, n-1, n respectively, see :func:`d_numbered`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .dynkin import Diagram, build_affine_diagram, check_rank
from .errors import DomainError

TWISTS = ("split", "2A", "2D", "3D4", "6D4", "2E6")


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("not a permutation: %r" % (images,))
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, *cycles) -> "Permutation":
        images = list(range(degree))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for v, w in enumerate(self.images):
            inv[w] = v
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self.images))

    def image_set(self, vertices) -> tuple:
        return tuple(sorted(self.images[v] for v in vertices))

    def cycles(self) -> list:
        seen, out = set(), []
        for start in range(self.degree):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            v = self.images[start]
            while v != start:
                cycle.append(v)
                seen.add(v)
                v = self.images[v]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation v -> p(q(v))."""
    if p.degree != q.degree:
        raise DomainError(
            "cannot compose permutations of degree %d and %d" % (p.degree, q.degree))
    return Permutation(tuple(p.images[w] for w in q.images))


class PermGroup:
    """A finite permutation group held as an explicit sorted element list."""

    def __init__(self, elements, generators=(), degree=None):
        elements = tuple(sorted(set(elements)))
        if not elements:
            if degree is None:
                raise ValueError("empty group needs a degree")
            elements = (Permutation.identity(degree),)
        self.degree = elements[0].degree
        self.elements = elements
        self.generators = tuple(generators)
        self._members = frozenset(elements)

    @classmethod
    def from_elements(cls, perms) -> "PermGroup":
        perms = list(perms)
        group = generate_group(perms)
        if len(group) != len(set(perms)):
            raise ValueError("element list is not closed under composition")
        return group

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls([Permutation.identity(degree)])

    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p) -> bool:
        return p in self._members

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self._members == other._members

    def __hash__(self):
        return hash(self._members)

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return "PermGroup(order=%d, gens=<%s>)" % (self.order(), gens)

    @property
    def gens(self) -> tuple:
        """Generators if known, else a greedily chosen generating set."""
        if not self.generators:
            chosen, span = [], {Permutation.identity(self.degree)}
            for g in self.elements:
                if g not in span:
                    chosen.append(g)
                    span = set(generate_group(chosen).elements)
            self.generators = tuple(chosen)
        return self.generators

    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def issubgroup(self, other: "PermGroup") -> bool:
        return self._members <= other._members

    def subgroup(self, keep) -> "PermGroup":
        """Elements satisfying ``keep``; the caller vouches for closure."""
        return PermGroup([g for g in self.elements if keep(g)], degree=self.degree)

    def set_stabilizer(self, vertices) -> "PermGroup":
        target = tuple(sorted(vertices))
        return self.subgroup(lambda g: g.image_set(target) == target)


def generate_group(gens, degree=None) -> PermGroup:
    """Breadth-first closure of ``gens`` under composition."""
    gens = list(gens)
    if not gens:
        if degree is None:
            raise ValueError("need a degree to build the trivial group")
        return PermGroup.trivial(degree)
    n = gens[0].degree
    for g in gens:
        if g.degree != n:
            raise DomainError("generators act on different vertex sets")
    ident = Permutation.identity(n)
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(g, x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return PermGroup(seen, generators=gens)


def conjugation_fixed(g: PermGroup, gamma: PermGroup) -> PermGroup:
    """Elements w of ``g`` with s w s^-1 = w for every s in ``gamma``."""
    if g.degree != gamma.degree:
        raise DomainError("groups act on different vertex sets")
    pairs = [(s, s.inverse()) for s in gamma]
    return g.subgroup(lambda w: all(s * w * s_inv == w for s, s_inv in pairs))


@dataclass(frozen=True)
class TwistedForm:
    family: str
    rank: int
    twist: str = "split"

    def __post_init__(self):
        check_rank(self.family, self.rank)
        if self.twist not in TWISTS:
            raise DomainError("unknown twist %r" % (self.twist,))
        ok = {
            "split": True,
            "2A": self.family == "A",
            "2D": self.family == "D" and self.rank >= 4,
            "3D4": self.family == "D" and self.rank == 4,
            "6D4": self.family == "D" and self.rank == 4,
            "2E6": self.family == "E6",
        }[self.twist]
        if not ok:
            raise DomainError(
                "twist %s is incompatible with %s%d" % (self.twist, self.family, self.rank))

    def diagram(self) -> Diagram:
        return build_affine_diagram(self.family, self.rank)

    def label(self) -> str:
        base = self.family if self.family[0] in "EFG" else "%s%d" % (self.family, self.rank)
        return base if self.twist == "split" else "%s[%s]" % (base, self.twist)


# -- named permutations --------------------------------------------------

def rotation(n: int) -> Permutation:
    """v -> v+1 on the cycle of affine A_n."""
    return Permutation(tuple((v + 1) % (n + 1) for v in range(n + 1)))


def a_reflection(n: int) -> Permutation:
    """Axial reflection v -> -v of affine A_n (fixes vertex 0)."""
    return Permutation(tuple((-v) % (n + 1) for v in range(n + 1)))


def d_numbered(n: int) -> dict:
    """Numbered extremal vertices of affine D_n: label -> vertex id."""
    return {1: 0, 2: 1, 3: n - 1, 4: n}


def d_tau(n: int) -> Permutation:
    """End swap of affine D_n: 1<->3, 2<->4, chain mirrored."""
    images = list(range(n + 1))
    images[0], images[n - 1] = n - 1, 0
    images[1], images[n] = n, 1
    for i in range(2, n - 1):
        images[i] = n - i
    return Permutation(tuple(images))


def d_tau_prime(n: int) -> Permutation:
    """Swap inside both forks: (1 2)(3 4)."""
    return Permutation.from_cycles(n + 1, (0, 1), (n - 1, n))


def d_sigma(n: int) -> Permutation:
    """Swap of the right fork leaves 3 and 4."""
    return Permutation.from_cycles(n + 1, (n - 1, n))


def d_phi(n: int) -> Permutation:
    """tau o sigma, the order-4 generator 1 -> 3 -> 2 -> 4 -> 1."""
    return compose(d_tau(n), d_sigma(n))


E6_ROTATION = Permutation.from_cycles(7, (1, 6, 0), (3, 5, 2))
E6_REFLECTION = Permutation.from_cycles(7, (1, 6), (3, 5))


def _check_form(form: TwistedForm, d: Diagram) -> None:
    if (form.family, form.rank) != (d.family, d.rank):
        raise DomainError(
            "form %s does not live on diagram %s" % (form.label(), d.name()))


def preset_xi_nr(form: TwistedForm, d: Diagram) -> PermGroup:
    """Image of the unramified points of the adjoint group in Aut(d).

    A_n: rotations (order n+1), whatever the twist.  D_n: <tau, tau'> for
    n even, <phi> for n odd.  E6: the order-3 rotation.  E7: the flip.
    B_n: swap of 0 and 1.  C_n: the flip.  E8, F4, G2: trivial.
    """
    _check_form(form, d)
    n, size = d.rank, d.size
    fam = d.family
    if fam == "A":
        gens = [rotation(n)]
    elif fam == "D":
        gens = [d_tau(n), d_tau_prime(n)] if n % 2 == 0 else [d_phi(n)]
    elif fam == "E6":
        gens = [E6_ROTATION]
    elif fam == "E7":
        gens = [Permutation.from_cycles(size, (0, 7), (1, 6), (3, 5))]
    elif fam == "B":
        gens = [Permutation.from_cycles(size, (0, 1))]
    elif fam == "C":
        gens = [Permutation(tuple(n - v for v in range(size)))]
    else:
        gens = []
    return generate_group(gens, degree=size)


def preset_galois(form: TwistedForm, d: Diagram) -> PermGroup:
    """Finite image of the unramified Galois group in Aut(d)."""
    _check_form(form, d)
    n, size = d.rank, d.size
    if form.twist == "split":
        gens = []
    elif form.twist == "2A":
        gens = [a_reflection(n)]
    elif form.twist == "2D":
        gens = [d_sigma(n)]
    elif form.twist == "3D4":
        gens = [Permutation.from_cycles(size, (1, 3, 4))]
    elif form.twist == "6D4":
        gens = [Permutation.from_cycles(size, (1, 3, 4)),
                Permutation.from_cycles(size, (3, 4))]
    else:  # 2E6
        gens = [E6_REFLECTION]
    return generate_group(gens, degree=size)
