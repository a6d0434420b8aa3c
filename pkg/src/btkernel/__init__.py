"""Exact computation of H^1 kernels of facet stabilizers on affine Dynkin types."""

from .closedform import dispatch, kernel_2A, kernel_2D, kernel_const
from .dynkin import Diagram, build_affine_diagram, diagram_automorphisms, special_vertices
from .errors import (BTKernelError, ConsistencyError, ContractViolation, DomainError,
                     InvalidRankError, SpecParseError, SpecSemanticError)
from .groupspec import FactorSpec, GroupSpec, Report, compute_kernel, parse_group_spec
from .kernel import (KernelProblem, KernelReport, MultiType, act_on_multitype,
                     count_xi_classes, ext_action_kernel, incidence_filter, kernel_size,
                     orbit_of, quasi_split_problem, strongly_invariant_filter)
from .permgroups import (PermGroup, Permutation, TwistedForm, compose, conjugation_fixed,
                         generate_group, preset_galois, preset_xi_nr)
from .tables import emit_table, verify_sweep

__version__ = "0.1.0"
