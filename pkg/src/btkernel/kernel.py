"""Brute-force kernel computation on types.

A facet type is the set of diagram vertices spanning the facet, so the
chamber type is the full vertex set and incidence is containment.  A
multitype is a set of pairwise disjoint types.  For a Galois-stable
chamber type ``t_max`` the kernel of H^1 of the stabilizer into H^1 of
the group is in bijection with

    { w.t : w in xi_nr, w.t strongly gamma-invariant, w.t inside t_max } / xi

which is what :func:`kernel_size` enumerates.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .dynkin import Diagram, VertexSet, vertex_set
from .errors import ContractViolation, DomainError
from .permgroups import (PermGroup, Permutation, TwistedForm, conjugation_fixed,
                         preset_galois, preset_xi_nr)
from .unionfind import UnionFind


@dataclass(frozen=True, order=True)
class MultiType:
    parts: tuple = ()

    def __post_init__(self):
        parts = sorted({vertex_set(p) for p in self.parts})
        seen = set()
        for part in parts:
            if seen.intersection(part):
                raise DomainError("parts of a multitype must be disjoint: %r" % (parts,))
            seen.update(part)
        object.__setattr__(self, "parts", tuple(parts))

    @classmethod
    def single(cls, vertices) -> "MultiType":
        return cls((vertex_set(vertices),))

    @property
    def support(self) -> VertexSet:
        return vertex_set(v for part in self.parts for v in part)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "{" + ", ".join(format_type(p) for p in self.parts) + "}"

    def to_json(self) -> list:
        return [list(p) for p in self.parts]


def format_type(vertices) -> str:
    return "{" + ",".join(str(v) for v in sorted(vertices)) + "}"


def act_on_multitype(p: Permutation, t: MultiType) -> MultiType:
    return MultiType(tuple(p.image_set(part) for part in t.parts))


def orbit_of(t: MultiType, g: PermGroup) -> list:
    """Orbit of ``t`` under ``g``, in breadth-first discovery order."""
    gens = g.gens
    seen = {t}
    out = [t]
    queue = deque([t])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = act_on_multitype(s, x)
            if y not in seen:
                seen.add(y)
                out.append(y)
                queue.append(y)
    return out


def stabilizer_of(t: MultiType, g: PermGroup) -> PermGroup:
    return g.subgroup(lambda w: act_on_multitype(w, t) == t)


def is_strongly_invariant(t: MultiType, gamma: PermGroup) -> bool:
    return all(s.image_set(part) == part for s in gamma for part in t.parts)


def offending_element(t: MultiType, gamma: PermGroup):
    """First element of ``gamma`` moving some part of ``t``, else None."""
    for s in gamma:
        if any(s.image_set(part) != part for part in t.parts):
            return s
    return None


def strongly_invariant_filter(orbit, gamma: PermGroup) -> list:
    # each part must be fixed setwise; permuting the parts is not enough
    return [t for t in orbit if is_strongly_invariant(t, gamma)]


def incidence_filter(types, t_max) -> list:
    top = set(t_max)
    return [t for t in types if top.issuperset(t.support)]


def count_xi_classes(fixed, xi: PermGroup):
    """Number of ``xi``-orbits on ``fixed`` and one witness per orbit.

    Raises ContractViolation if ``xi`` does not map ``fixed`` into itself.
    """
    fixed = list(fixed)
    members = set(fixed)
    uf = UnionFind(fixed)
    for t in fixed:
        # generators suffice both for the closure check and the orbits
        for w in xi.gens:
            image = act_on_multitype(w, t)
            if image not in members:
                raise ContractViolation(
                    "%s maps %s outside the fixed set" % (w, t))
            uf.union(t, image)
    witnesses = sorted(min(cls) for cls in uf.classes())
    return len(witnesses), witnesses


@dataclass(frozen=True)
class KernelProblem:
    diagram: Diagram
    xi_nr: PermGroup
    gamma: PermGroup
    xi: PermGroup
    t: MultiType
    t_max: VertexSet = None

    def __post_init__(self):
        size = self.diagram.size
        t_max = self.t_max
        if t_max is None:
            t_max = tuple(self.diagram.vertices)
        t_max = vertex_set(t_max)
        object.__setattr__(self, "t_max", t_max)
        for name in ("xi_nr", "gamma", "xi"):
            if getattr(self, name).degree != size:
                raise DomainError("%s does not act on %s" % (name, self.diagram.name()))
        if not set(t_max) <= set(self.diagram.vertices):
            raise DomainError("t_max %r is not a vertex set of the diagram" % (t_max,))
        if not self.xi.issubgroup(self.xi_nr):
            raise ContractViolation("xi is not contained in xi_nr")
        if not set(self.t.support) <= set(t_max):
            raise ContractViolation("t %s is not incident to t_max %s"
                                    % (self.t, format_type(t_max)))
        if any(s.image_set(t_max) != t_max for s in self.gamma):
            raise ContractViolation("t_max is not gamma-invariant")


@dataclass(frozen=True)
class KernelReport:
    orbit_size: int
    fixed_count: int
    quotient_count: int
    witnesses: list = field(default_factory=list)

    def counts(self):
        return self.fixed_count, self.quotient_count


def kernel_size(p: KernelProblem) -> KernelReport:
    orbit = orbit_of(p.t, p.xi_nr)
    fixed = incidence_filter(strongly_invariant_filter(orbit, p.gamma), p.t_max)
    count, witnesses = count_xi_classes(fixed, p.xi)
    return KernelReport(len(orbit), len(fixed), count, witnesses)


def vertex_orbits(gamma: PermGroup, vertices) -> list:
    """Orbits of ``gamma`` on ``vertices`` (assumed gamma-stable)."""
    uf = UnionFind(vertices)
    for s in gamma:
        for v in vertices:
            uf.union(v, s(v))
    return sorted(vertex_set(c) for c in uf.classes())


def ext_action_kernel(d: Diagram, gamma: PermGroup, xi_nr: PermGroup, t_max) -> PermGroup:
    """Elements of (Stab_{xi_nr}(t_max))^gamma fixing every gamma-orbit in t_max."""
    t_max = vertex_set(t_max)
    if any(s.image_set(t_max) != t_max for s in gamma):
        raise ContractViolation("t_max is not gamma-invariant")
    candidates = conjugation_fixed(xi_nr.set_stabilizer(t_max), gamma)
    orbits = vertex_orbits(gamma, t_max)
    return candidates.subgroup(lambda w: all(w.image_set(o) == o for o in orbits))


@lru_cache(maxsize=None)
def form_context(form: TwistedForm):
    """(diagram, xi_nr, gamma, xi) of the quasi-split adjoint form."""
    d = form.diagram()
    xi_nr = preset_xi_nr(form, d)
    gamma = preset_galois(form, d)
    return d, xi_nr, gamma, conjugation_fixed(xi_nr, gamma)


def quasi_split_problem(form: TwistedForm, t: MultiType, t_max=None) -> KernelProblem:
    """Kernel problem of the quasi-split adjoint group of type ``form``."""
    return KernelProblem(*form_context(form), t, t_max)
