"""Closed-form kernel counts for quasi-split adjoint groups.

Each function returns ``(fixed_count, quotient_count)``: the number of
Galois-invariant types in the xi_nr-orbit of ``t``, and the number of
xi-classes among them.  Only single types (multitypes with at most one
part) have a closed form; multi-part multitypes go through the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dynkin import VertexSet, vertex_set
from .errors import DomainError
from .kernel import MultiType, form_context, is_strongly_invariant, offending_element, orbit_of
from .permgroups import TwistedForm, d_numbered, d_tau

CONSTANT_TWISTS = ("split", "3D4", "6D4", "2E6")

# galois-invariant subsets of the numbered vertices {1, 2, 3, 4}
D_R_SHAPES = ((), (1,), (2,), (1, 2), (3, 4), (1, 3, 4), (2, 3, 4), (1, 2, 3, 4))


def _single_part(t: MultiType) -> VertexSet:
    if len(t.parts) > 1:
        raise DomainError("no closed form for the multi-part multitype %s" % t)
    return t.support


def _require_invariant(form: TwistedForm, t: MultiType) -> None:
    gamma = form_context(form)[2]
    bad = offending_element(t, gamma)
    if bad is not None:
        raise DomainError("%s is not invariant under %s for %s" % (t, bad, form.label()))


def kernel_2A(n: int, t: MultiType):
    form = TwistedForm("A", n, "2A")
    _single_part(t)
    _require_invariant(form, t)
    m = len(orbit_of(t, form_context(form)[1]))
    if m % 2:
        return 1, 1
    if ((n + 1) // m) % 2:
        return 2, 1
    return 2, 2


@dataclass(frozen=True)
class TwoDnDecomposition:
    """t = S + R on affine D_n.

    ``s_part`` holds vertex ids away from the four numbered extremal
    vertices; ``r_part`` holds the numbered labels (1..4) that occur.
    """
    n: int
    s_part: VertexSet
    r_part: tuple

    @property
    def r_vertices(self) -> VertexSet:
        ids = d_numbered(self.n)
        return vertex_set(ids[k] for k in self.r_part)

    def tau_fixes_s(self) -> bool:
        tau = d_tau(self.n)
        return tau.image_set(self.s_part) == self.s_part


def decompose_2D(n: int, vertices) -> TwoDnDecomposition:
    labels = {v: k for k, v in d_numbered(n).items()}
    vertices = vertex_set(vertices)
    s_part = vertex_set(v for v in vertices if v not in labels)
    r_part = tuple(sorted(labels[v] for v in vertices if v in labels))
    return TwoDnDecomposition(n, s_part, r_part)


def kernel_2D(n: int, t: MultiType):
    form = TwistedForm("D", n, "2D")
    vertices = _single_part(t)
    _require_invariant(form, t)
    dec = decompose_2D(n, vertices)
    if dec.r_part not in D_R_SHAPES:
        raise DomainError("R part %r is not galois-invariant" % (dec.r_part,))
    size = len(dec.r_part)
    if size in (0, 4):
        return (1, 1) if dec.tau_fixes_s() else (2, 2)
    if size % 2:
        return 2, 1
    return 2, 2


def kernel_const(form: TwistedForm, t: MultiType):
    """Trialitary D4 and 2E6: one invariant type per orbit.

    Split forms have trivial galois action, so the whole orbit (of size m)
    is invariant while xi = xi_nr identifies it to one class: (m, 1).
    """
    if form.twist not in CONSTANT_TWISTS:
        raise DomainError("%s has no constant kernel" % form.label())
    if form.twist == "split":
        return len(orbit_of(t, form_context(form)[1])), 1
    return 1, 1


def has_closed_form(t: MultiType) -> bool:
    return len(t.parts) <= 1


def dispatch(form: TwistedForm, t: MultiType):
    _single_part(t)
    _require_invariant(form, t)
    if form.twist == "2A":
        return kernel_2A(form.rank, t)
    if form.twist == "2D":
        return kernel_2D(form.rank, t)
    return kernel_const(form, t)


def rule_case(form: TwistedForm, t: MultiType) -> str:
    """Which branch of the case analysis applies, e.g. ``m=2`` or ``R=(1,2)``."""
    if form.twist == "2A":
        xi_nr = form_context(form)[1]
        return "m=%d" % len(orbit_of(t, xi_nr))
    if form.twist == "2D":
        dec = decompose_2D(form.rank, t.support)
        case = "R=(" + ",".join(map(str, dec.r_part)) + ")"
        if len(dec.r_part) in (0, 4):
            case += ";tau(S)=S" if dec.tau_fixes_s() else ";tau(S)!=S"
        return case
    if form.twist == "split":
        return "split"
    return "const"


def invariant_types(form: TwistedForm, include_empty=True):
    """All galois-invariant single types of the form's diagram, by bitmask."""
    d, _, gamma, _ = form_context(form)
    start = 0 if include_empty else 1
    for mask in range(start, 1 << d.size):
        t = MultiType.single(v for v in d.vertices if mask >> v & 1)
        if is_strongly_invariant(t, gamma):
            yield t
