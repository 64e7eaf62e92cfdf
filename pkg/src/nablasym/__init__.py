"""Exact symmetric-function computations around nabla, creation operators and parking functions."""

from .exactalg import QTPoly, QTRat, ZSeries, qt, q, t
from .symfun import (SymFun, FundVector, DegreeOverflow, InconsistentSystem, m, s, e, h, p, one,
                     basis_extract, from_basis, hall, star, omega, petrie, fund_solve, symfun_to_fund,
                     get_trunc, set_trunc, truncation)
from .macdonald import htilde, nabla, kostka_column, nabla_positivity_report
from .hallops import c_apply, c_word, c_vee, c_star
from .parking import ParkingFunction, enumerate_pf, pf_genfun, stats
from .identities import check, IdentityCheck
from .expr import parse, eval_expr
from .kernels import BACKEND

__version__ = "0.1.0"
