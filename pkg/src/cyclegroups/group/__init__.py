"""Finite permutation groups: enumeration, structure, automorphisms."""

from .automorphism import (
    BRUTEFORCE_LIMIT,
    Automorphism,
    AutomorphismGroup,
    automorphism_group,
    bruteforce_automorphisms,
    check_automorphism,
    greedy_generating_sequence,
    holomorph,
    mao,
    self_carrier,
)
from .core import (
    MAX_GROUP_ORDER,
    ConcreteGroup,
    GuardExceeded,
    Subgroup,
    closure,
    enumerate_from_generators,
)
from .families import (
    alternating,
    cyclic,
    dihedral,
    direct_power,
    direct_product,
    quaternion,
    symmetric,
    trivial_group,
    wreath_product,
)
from .structure import (
    NORMAL_SUBGROUP_LIMIT,
    center,
    centralizer,
    centralizer_of_perms,
    class_labels,
    class_representatives,
    commutator,
    conjugacy_classes,
    coset_labels,
    derived_series,
    derived_subgroup,
    is_semisimple,
    is_simple,
    is_solvable,
    minimal_normal_subgroups,
    normal_closure,
    normal_subgroups,
    quotient,
    socle,
    solvable_radical,
)


def element_order(G: ConcreteGroup, g: int) -> int:
    return G.element_order(g)


def meo(G: ConcreteGroup) -> int:
    return G.meo


def exponent(G: ConcreteGroup) -> int:
    return G.exponent
