"""Exact verification of false theta identities and their overpartition interpretations."""

from .diagrams import (
    PairClass,
    classify,
    conjugate,
    fixed_points,
    fq3_conjectured_fixed_point,
    involution_partner,
    phi_r,
    phi_s,
    render,
)
from .errors import FalseThetaError
from .partitions import (
    FQ3P,
    FQ4,
    BoxedPair,
    FQ3Prime,
    General,
    Overpartition,
    enumerate_pairs,
    make_overpartition,
    pair,
    parity_counts,
    predicted_count,
    q_weight,
    sign,
    signed_bivariate,
    signed_count,
    stats,
    z_weight,
)
from .qseries import (
    FQ3_ID,
    FQ4_ID,
    BivariateSeries,
    Identity,
    false_theta,
    general_z,
    identity_lhs,
    identity_rhs,
    series_from_enumeration,
)

__version__ = "0.1.0"
