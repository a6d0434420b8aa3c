"""Reference computations shared by the test modules."""

from btkernel.permgroups import preset_galois, preset_xi_nr


def brute_kernel(form, t, t_max=None):
    """Independent recount: explicit element loop, frozenset types, min-image classes."""
    d = form.diagram()
    xi_nr, gamma = preset_xi_nr(form, d), preset_galois(form, d)
    top = frozenset(d.vertices if t_max is None else t_max)
    xi = [w for w in xi_nr.elements
          if all(tuple(s(w(s.inverse()(v))) for v in d.vertices) == w.images for s in gamma)]

    def act(w, mt):
        return frozenset(frozenset(w(v) for v in part) for part in mt)

    start = frozenset(frozenset(p) for p in t.parts)
    orbit = {act(w, start) for w in xi_nr.elements}
    fixed = {mt for mt in orbit
             if all(act(s, frozenset([part])) == frozenset([part]) for s in gamma for part in mt)
             and all(part <= top for part in mt)}

    def key(mt):
        return min(tuple(sorted(tuple(sorted(p)) for p in act(w, mt))) for w in xi)

    return len(orbit), len(fixed), len({key(mt) for mt in fixed})
