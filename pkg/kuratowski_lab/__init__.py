"""
Kuratowski Lab - operator semigroups on finite posets

Enumerates small posets up to isomorphism, generates the monoids of self-maps that
closure, interior and pseudocomplement operators produce on them, and checks the
transcribed Hasse-diagram catalogs against exhaustive searches.

Features:
- Posets as bitmask relations with canonical codes and isomorphism-free enumeration
- Composition closure of named self-maps with length-lex witnesses
- Bergman-style critical pairs of explicit Hasse diagrams
- The eighteen Kuratowski monoids, the semigroups C(m, n) and their global collapses
- Interior/pseudocomplement monoids and sublocale operators on finite frames
- Context-tagged logging with optional Sentry reporting

Quick Start:
    from kuratowski_lab import Params, log_context, normal_form, search_collapses, setup_logging

    setup_logging(log_level='INFO')
    normal_form('stst', Params(3, 3))  # 'st'

    with log_context(run='nightly'):
        search_collapses(Params(2, 2), max_points=5)
"""

from .context import append_context, clear_context, get_context, log_context, set_context

from .formatters import ContextFormatter, get_compact_format, get_default_format, get_verbose_format

from .config import get_logger, setup_logging
from .config_loader import LabConfig, load_lab_config

from .errors import BudgetExceeded, InputError, LabError, VerificationError

from .posets import (
    Poset,
    antichain,
    canonical_form,
    chain,
    enumerate_posets,
    from_covers,
    validate_poset,
)
from .monoid import OperatorMonoid, element_partition, generate_monoid
from .diagrams import DiagramCatalog, critical_pairs, verify_catalog
from .kuratowski import classify, kuratowski_catalog, realize_labels
from .chittenden import Params, equivalent, hasse, multiply, normal_form, order_poset, wset
from .collapses import (
    Collapse,
    check_class_coherence,
    containment_order,
    lift_collapse,
    load_class_catalog,
    make_instance,
    satisfied_collapse,
    satisfied_order,
    search_collapses,
)
from .pseudo import (
    PseudoInstance,
    generate_m,
    implication_redundancy_check,
    localic_quotient_check,
    make_pseudo_instance,
    search_dashed_counterexamples,
    verify_edges,
)
from .locales import (
    FiniteFrame,
    check_frame,
    check_localic_laws,
    enumerate_frames,
    localic_monoid,
    localic_operators,
    nuclei,
    sublocale_lattice,
)

__all__ = [
    # Context management
    'get_context',
    'set_context',
    'append_context',
    'clear_context',
    'log_context',
    # Formatters
    'ContextFormatter',
    'get_default_format',
    'get_compact_format',
    'get_verbose_format',
    # Setup
    'setup_logging',
    'get_logger',
    'LabConfig',
    'load_lab_config',
    # Errors
    'LabError',
    'InputError',
    'VerificationError',
    'BudgetExceeded',
    # Posets and monoids
    'Poset',
    'antichain',
    'chain',
    'canonical_form',
    'enumerate_posets',
    'from_covers',
    'validate_poset',
    'OperatorMonoid',
    'generate_monoid',
    'element_partition',
    'DiagramCatalog',
    'critical_pairs',
    'verify_catalog',
    # Kuratowski monoids
    'classify',
    'kuratowski_catalog',
    'realize_labels',
    # C(m, n)
    'Params',
    'wset',
    'normal_form',
    'multiply',
    'equivalent',
    'order_poset',
    'hasse',
    'Collapse',
    'make_instance',
    'satisfied_collapse',
    'satisfied_order',
    'search_collapses',
    'lift_collapse',
    'load_class_catalog',
    'check_class_coherence',
    'containment_order',
    # Pseudocomplements and locales
    'PseudoInstance',
    'make_pseudo_instance',
    'generate_m',
    'verify_edges',
    'search_dashed_counterexamples',
    'implication_redundancy_check',
    'localic_quotient_check',
    'FiniteFrame',
    'check_frame',
    'nuclei',
    'sublocale_lattice',
    'localic_operators',
    'localic_monoid',
    'check_localic_laws',
    'enumerate_frames',
]

__version__ = '0.1.0'
