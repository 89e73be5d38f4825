"""piclass: exact conjugacy-class invariants of permutation groups.

The library computes, for a finite permutation group G and a set of primes
pi, the exact ratio of the number of conjugacy classes of pi-elements to the
pi-part of |G|, and machine-checks the structural facts that ratio controls
(abelian Hall subgroups, normal complements, quotient bounds) over a census
of concrete groups.
"""

__version__ = "0.1.0"

from .catalog import CensusRanges, GroupSpec, build, census, parse_group_file, parse_name, serialize_group_file
from .classes import ClassTable, conjugacy_classes, is_pi_element, k_pi, pi_part_of_element
from .config import Config, DEFAULT_CONFIG
from .errors import (
    CapExceededError,
    DegreeMismatchError,
    GroupFileError,
    NotInGroupError,
    PiclassError,
    PreconditionError,
)
from .group import PermGroup
from .invariants import (
    PiProfile,
    commuting_degree,
    d_pi,
    d_pi_hall_average,
    group_primes,
    has_normal_p_complement,
    has_normal_pi_complement,
    k_pi_by_centralizer_decomposition,
    pi_part_of_integer,
    product_lower_bound_check,
    class_count_product_bound,
)
from .perm import Permutation, compose, conjugate, parse_cycle_text
from .subgroups import (
    HallSearchOutcome,
    QuotientGroup,
    SubgroupHandle,
    are_conjugate_subgroups,
    center,
    centralizer_of_element,
    centralizer_of_subgroup,
    commutator_subgroup,
    derived_subgroup,
    enumerate_subgroups_up_to_conjugacy,
    fitting_subgroup,
    hall_search,
    is_simple,
    normal_closure,
    normal_subgroups,
    normalizer,
    o_pi_prime,
    quotient,
    socle,
    subgroup,
    sylow_subgroup,
)
from .suite import (
    CampaignResult,
    Limits,
    VerdictReport,
    run_census_campaign,
    run_group_suite,
)
