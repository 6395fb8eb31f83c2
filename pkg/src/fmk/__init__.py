"""Exact three-graded diagrammatic calculus with curved complexes.

The package implements, over Q or an odd prime field:

* a Z^3-graded super-commutative coefficient algebra with its
  differential, involution and divided-difference operator
  (``fmk.algebra``);
* the category of one-letter diagram words with exact normal forms for
  morphisms (``fmk.homs``);
* diagram sequences, curved differentials, homotopy search and the
  built-in curved objects and morphisms (``fmk.complexes``);
* mechanised degree searches (``fmk.search``);
* a named verification registry and CLI (``fmk.checks``, ``fmk.cli``).
"""

from .degrees import TriDegree, parity
from .scalars import (
    FieldConfigError,
    PrimeField,
    QQ,
    Rationals,
    default_field,
    field_from_name,
    set_default_field,
    using_field,
)
from .algebra import (
    AlgebraElement,
    Monomial,
    alpha_s,
    alpha_s_v,
    enumerate_monomials,
    nu_s,
    theta,
    theta_s,
    xi_s,
)
from .homs import (
    HomElement,
    ObjectLabel,
    canonicalize,
    compose,
    dim_in_degree,
    dim_in_degree_presentation,
    left_box,
    right_box,
)
from .complexes import (
    DiagramSequence,
    FMObject,
    SeqMorphism,
    T_empty,
    T_s,
    check_curved,
    eps_h_s,
    eps_s,
    eta_h_s,
    eta_s,
    hom_differential,
    is_exact,
    phi_s,
    seq_compose,
    star,
    star_morphism,
    theta_big,
)
from .search import DegreeSearchProblem, candidate_space, closed_subspace, cohomology_dim
from .parsing import ParseError, parse_expression
from .checks import CHECKS, CheckResult, VerifyContext, run_all, run_check

__version__ = "0.1.0"
