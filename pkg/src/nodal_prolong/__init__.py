"""Cartan prolongation of the family x1*x2 = t into the monster tower.

Exact rational arithmetic throughout. The main entry points:

* :mod:`~nodal_prolong.tower` -- chart labels, coordinates, projections;
* :mod:`~nodal_prolong.nodal_family` -- node binomials, the twig chain,
  multiplicities, the flat-limit check;
* :mod:`~nodal_prolong.strata` -- code words, node words and twig words;
* :mod:`~nodal_prolong.prolong` -- lifting parametrized curves, implicit
  differentiation.
"""

from .kernel import Polynomial, const, derivative, solve_linear_and_eliminate, substitute, var
from .nodal_family import (
    End,
    build_chain,
    binomials_by_differentiation,
    ideal_generators,
    multiplicities,
    multiplicity_sequence,
    node_binomial,
    verify_flat_limit,
)
from .prolong import check_identification, curve, implicit_system, lift_once, prolong
from .series import TruncatedSeries
from .strata import (
    CodeWord,
    annotate_chain,
    enumerate_code_words,
    node_word_explicit,
    node_word_recursive,
    trace_node_word,
    twig_word,
)
from .tower import chart_frame, charts_containing_node, coord, project, transition_last

__version__ = "0.1.0"
