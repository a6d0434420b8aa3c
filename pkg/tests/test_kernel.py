import random

import pytest
from hypothesis import given, settings, strategies as st

from btkernel.dynkin import special_vertices
from btkernel.errors import ContractViolation, DomainError
from btkernel.groupspec import random_invariant_multitype
from btkernel.kernel import (KernelProblem, MultiType, act_on_multitype, count_xi_classes,
                             ext_action_kernel, incidence_filter, is_strongly_invariant,
                             kernel_size, orbit_of, quasi_split_problem, stabilizer_of,
                             strongly_invariant_filter)
from btkernel.permgroups import (Permutation, TwistedForm, conjugation_fixed, generate_group,
                                 preset_galois, preset_xi_nr, rotation)

from _oracles import brute_kernel

T = MultiType
P = Permutation.from_cycles

A3 = TwistedForm("A", 3, "2A")
FORMS = ([TwistedForm("A", n, "2A") for n in range(1, 10)]
         + [TwistedForm("A", n) for n in range(1, 6)]
         + [TwistedForm("D", n, "2D") for n in range(4, 8)]
         + [TwistedForm("D", 4, "3D4"), TwistedForm("D", 4, "6D4"),
            TwistedForm("E6", 6, "2E6"), TwistedForm("E6", 6), TwistedForm("E7", 7),
            TwistedForm("B", 3), TwistedForm("C", 4)])


def a3_groups():
    d = A3.diagram()
    xi_nr, gamma = preset_xi_nr(A3, d), preset_galois(A3, d)
    return d, xi_nr, gamma, conjugation_fixed(xi_nr, gamma)


# -- MultiType ---------------------------------------------------------------

def test_multitype_canonical_and_disjoint():
    assert T(((2, 0), (1,))).parts == ((0, 2), (1,))
    assert T(((1,), (0, 2))) == T(((0, 2), (1,)))
    with pytest.raises(DomainError):
        T(((0, 1), (1, 2)))


# -- act / orbit / filters -------------------------------------------------

def test_act_examples():
    t = T.single([0, 2])
    assert act_on_multitype(Permutation.identity(4), t) == t
    assert act_on_multitype(rotation(3), t) == T.single([1, 3])
    assert act_on_multitype(P(5, (3, 4)), T(((1,), (3,)))) == T(((1,), (4,)))


def test_orbit_examples():
    _, xi_nr, _, _ = a3_groups()
    assert orbit_of(T.single([0, 2]), xi_nr) == [T.single([0, 2]), T.single([1, 3])]
    assert len(orbit_of(T.single([0]), xi_nr)) == 4
    assert orbit_of(T(), xi_nr) == [T()]


def test_strongly_invariant_filter_examples():
    _, xi_nr, gamma, _ = a3_groups()
    pair = [T.single([0, 2]), T.single([1, 3])]
    assert strongly_invariant_filter(pair, gamma) == pair
    singles = orbit_of(T.single([0]), xi_nr)
    assert sorted(strongly_invariant_filter(singles, gamma)) == [T.single([0]), T.single([2])]
    trivial = generate_group([], degree=4)
    assert strongly_invariant_filter(singles, trivial) == singles


def test_strong_invariance_needs_each_part_fixed():
    gamma = generate_group([P(4, (1, 3))])
    # (1 3) swaps the two parts: invariant as a set of parts, not strongly
    t = T(((1,), (3,)))
    assert act_on_multitype(P(4, (1, 3)), t) == t
    assert not is_strongly_invariant(t, gamma)


def test_incidence_filter_examples():
    types = [T.single([0]), T.single([1])]
    assert incidence_filter(types, range(4)) == types
    assert incidence_filter(types, (0, 2)) == [T.single([0])]
    assert incidence_filter([], (0,)) == []


def test_count_xi_classes_examples():
    _, _, _, xi = a3_groups()
    count, witnesses = count_xi_classes([T.single([0, 2]), T.single([1, 3])], xi)
    assert count == 2 and witnesses == [T.single([0, 2]), T.single([1, 3])]
    assert count_xi_classes([T.single([0]), T.single([2])], xi) == (1, [T.single([0])])
    assert count_xi_classes([T.single([1, 3])], generate_group([], degree=4))[0] == 1


def test_count_xi_classes_contract():
    _, _, _, xi = a3_groups()
    with pytest.raises(ContractViolation):
        count_xi_classes([T.single([0])], xi)


# -- kernel_size ------------------------------------------------------------

def test_kernel_size_a3_examples():
    r = kernel_size(quasi_split_problem(A3, T.single([0, 2])))
    assert (r.orbit_size, r.fixed_count, r.quotient_count) == (2, 2, 2)
    r = kernel_size(quasi_split_problem(A3, T.single([0])))
    assert (r.orbit_size, r.fixed_count, r.quotient_count) == (4, 2, 1)
    r = kernel_size(quasi_split_problem(A3, T.single(range(4))))
    assert (r.orbit_size, r.fixed_count, r.quotient_count) == (1, 1, 1)


def test_kernel_problem_validation():
    d, xi_nr, gamma, xi = a3_groups()
    with pytest.raises(ContractViolation):
        KernelProblem(d, xi, gamma, xi_nr, T.single([0]))
    with pytest.raises(ContractViolation):
        KernelProblem(d, xi_nr, gamma, xi, T.single([1]), t_max=(0, 2))
    with pytest.raises(ContractViolation):
        KernelProblem(d, xi_nr, gamma, xi, T.single([0]), t_max=(0, 1))


def test_kernel_with_smaller_t_max():
    # stabilizer of {0,2} in the rotations is {1, r^2}; the 2A3 xi is inside it
    d, xi_nr, gamma, xi = a3_groups()
    report = kernel_size(KernelProblem(d, xi_nr, gamma, xi, T.single([0]), t_max=(0, 2)))
    assert report.counts() == brute_kernel(A3, T.single([0]), (0, 2))[1:] == (2, 1)


@pytest.mark.parametrize("form", FORMS, ids=lambda f: f.label())
def test_kernel_matches_brute_force_on_single_types(form):
    problem = quasi_split_problem(form, T())
    for mask in range(1 << problem.diagram.size):
        t = T.single(v for v in problem.diagram.vertices if mask >> v & 1)
        if not is_strongly_invariant(t, problem.gamma):
            continue
        r = kernel_size(quasi_split_problem(form, t))
        assert (r.orbit_size, r.fixed_count, r.quotient_count) == brute_kernel(form, t)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(FORMS), st.randoms(use_true_random=False))
def test_kernel_matches_brute_force_on_multitypes(form, rng):
    t = random_invariant_multitype(form, rng)
    r = kernel_size(quasi_split_problem(form, t))
    assert (r.orbit_size, r.fixed_count, r.quotient_count) == brute_kernel(form, t)
    assert r.quotient_count <= r.fixed_count <= r.orbit_size
    assert r.quotient_count in (1, 2)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(FORMS), st.randoms(use_true_random=False))
def test_orbit_stabilizer(form, rng):
    problem = quasi_split_problem(form, T())
    t = T.single(v for v in problem.diagram.vertices if rng.random() < 0.5)
    orbit = orbit_of(t, problem.xi_nr)
    assert len(orbit) * len(stabilizer_of(t, problem.xi_nr)) == len(problem.xi_nr)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(FORMS), st.randoms(use_true_random=False))
def test_xi_preserves_strong_invariance(form, rng):
    problem = quasi_split_problem(form, T())
    t = random_invariant_multitype(form, rng)
    for w in problem.xi:
        assert is_strongly_invariant(act_on_multitype(w, t), problem.gamma)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(FORMS), st.randoms(use_true_random=False))
def test_xi_class_sizes_divide_xi(form, rng):
    problem = quasi_split_problem(form, random_invariant_multitype(form, rng))
    fixed = strongly_invariant_filter(orbit_of(problem.t, problem.xi_nr), problem.gamma)
    count, witnesses = count_xi_classes(fixed, problem.xi)
    assert count <= len(fixed)
    for w in witnesses:
        assert len(problem.xi) % len(orbit_of(w, problem.xi)) == 0


@pytest.mark.parametrize("form", [f for f in FORMS if f.twist == "split"],
                         ids=lambda f: f.label())
def test_split_forms_have_trivial_kernel(form):
    rng = random.Random(7)
    for _ in range(30):
        t = random_invariant_multitype(form, rng)
        assert kernel_size(quasi_split_problem(form, t)).quotient_count == 1


# -- ext_action_kernel -----------------------------------------------------

def test_ext_action_kernel_examples():
    d, xi_nr, gamma, _ = a3_groups()
    assert ext_action_kernel(d, gamma, xi_nr, range(4)).is_trivial()
    trivial = generate_group([], degree=4)
    assert ext_action_kernel(d, trivial, xi_nr, range(4)).is_trivial()
    d4 = TwistedForm("D", 4, "2D")
    dd = d4.diagram()
    assert ext_action_kernel(dd, preset_galois(d4, dd), preset_xi_nr(d4, dd), range(5)).is_trivial()


def test_ext_action_kernel_without_fixed_special_vertex():
    # t_max = {1,3} on 2A3 holds no galois-fixed special vertex; r^2 survives
    d, xi_nr, gamma, _ = a3_groups()
    r = rotation(3)
    assert ext_action_kernel(d, gamma, xi_nr, (1, 3)) == generate_group([r * r])


def test_ext_action_kernel_requires_invariant_t_max():
    d, xi_nr, gamma, _ = a3_groups()
    with pytest.raises(ContractViolation):
        ext_action_kernel(d, gamma, xi_nr, (0, 1))


@pytest.mark.parametrize("form", FORMS, ids=lambda f: f.label())
def test_ext_kernel_trivial_with_fixed_special_vertex(form):
    problem = quasi_split_problem(form, T())
    d, gamma = problem.diagram, problem.gamma
    fixed_special = {v for v in special_vertices(d) if all(s(v) == v for s in gamma)}
    for mask in range(1, 1 << d.size):
        t_max = tuple(v for v in d.vertices if mask >> v & 1)
        if any(s.image_set(t_max) != t_max for s in gamma):
            continue
        kern = ext_action_kernel(d, gamma, problem.xi_nr, t_max)
        assert kern.issubgroup(problem.xi)
        if fixed_special & set(t_max):
            assert kern.is_trivial()
