"""Exact q-expansion toolkit for rational non-CM newforms of small level.

Submodules
----------
qseries    truncated power series with exact rational coefficients
arith      Kronecker symbols, fundamental discriminants, factoring mod p
rings      ring generators, identities and the newform catalog
dims       signed new-subspace dimensions and masses
heuristic  random-polynomial model for Hecke factorization
galrep     mod-ell projective Galois matching and congruences
catalog    tables as data files
suites     verification suites behind ``ratnewforms verify``
"""

from .arith import factor_degrees_mod_p, is_fundamental, kronecker, t_multiplicity
from .catalog import load_catalog, query, summatory
from .dims import dim_new_signed_exact, mass
from .galrep import governance, match_form_to_poly, sp_reduce, sturm_bound
from .heuristic import count_quadratics, pr_of_weight, prob_split, volume
from .qseries import (
    DEFAULT_PREC,
    EtaSpec,
    QSeries,
    eisenstein,
    eta_product,
    hecke_Tp,
    multiplicative_extend,
    push_up,
    theta_hex,
    theta_sq,
)
from .rings import generator_series, load_forms, newform_expansion, verify_identity

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_PREC",
    "EtaSpec",
    "QSeries",
    "count_quadratics",
    "dim_new_signed_exact",
    "eisenstein",
    "eta_product",
    "factor_degrees_mod_p",
    "generator_series",
    "governance",
    "hecke_Tp",
    "is_fundamental",
    "kronecker",
    "load_catalog",
    "load_forms",
    "mass",
    "match_form_to_poly",
    "multiplicative_extend",
    "newform_expansion",
    "pr_of_weight",
    "prob_split",
    "push_up",
    "query",
    "sp_reduce",
    "sturm_bound",
    "summatory",
    "t_multiplicity",
    "theta_hex",
    "theta_sq",
    "verify_identity",
    "volume",
]
