"""Submodule zeta functions of integer matrices.

Matrices are lists of integer rows. Products of binomials
(1 - q^a t^b)^e come back as lists of (a, b, e) triples.
"""

import json

from . import _subzeta
from ._subzeta import BadPrimeError, BudgetExceeded, DegreeCapExceeded

__all__ = [
    "BadPrimeError",
    "BudgetExceeded",
    "DegreeCapExceeded",
    "analyze",
    "analyze_edv",
    "render",
    "verify",
    "count_invariant_sublattices",
    "w_lambda",
    "zpxn_zeta",
    "local_euler_factor",
    "dirichlet_coefficients",
    "powerseries_ring_coeffs",
    "functional_equation",
    "exceptional_coefficients",
    "campaign",
]

DEGREE_CAP = 24
BUDGET = 2_000_000_000


def _ints(text):
    return [int(x) for x in json.loads(text)]


def _matrix(rows):
    return json.dumps({"n": len(rows), "entries": [[str(int(x)) for x in r] for r in rows]})


def _edv(entries):
    return json.dumps(
        [{"poly": [str(int(c)) for c in poly], "partition": list(parts)} for poly, parts in entries]
    )


def _product(text):
    return [(f["a"], f["b"], f["e"]) for f in json.loads(text)]


def analyze(matrix, degree_cap=DEGREE_CAP):
    """Analysis document (EDV, global formula, abscissa, functional equation) as a dict."""
    return json.loads(_subzeta.analyze_json(_matrix(matrix), degree_cap))


def analyze_edv(entries, degree_cap=DEGREE_CAP):
    """Same as analyze() from (coefficients, partition) pairs, coefficients lowest degree first."""
    return json.loads(_subzeta.analyze_edv_json(_edv(entries), degree_cap))


def render(matrix, fmt="text", degree_cap=DEGREE_CAP):
    return _subzeta.render_json(_matrix(matrix), fmt, degree_cap)


def verify(matrix, primes, max_exp, budget=BUDGET, prune=False, max_n=4):
    return json.loads(_subzeta.verify_json(_matrix(matrix), list(primes), max_exp, budget, prune, max_n))


def count_invariant_sublattices(matrix, p, max_exp, budget=BUDGET, prune=False, max_n=4):
    """[a_1, a_p, ..., a_{p^E}] by brute-force HNF enumeration."""
    return _ints(_subzeta.count_json(_matrix(matrix), p, max_exp, budget, prune, max_n))


def w_lambda(parts):
    return _product(_subzeta.w_lambda_json(list(parts)))


def zpxn_zeta(n):
    return _product(_subzeta.zpxn_zeta_json(n))


def local_euler_factor(entries, p):
    return _product(_subzeta.local_euler_factor_json(_edv(entries), p))


def dirichlet_coefficients(product, p, max_exp):
    text = json.dumps([{"a": a, "b": b, "e": e} for a, b, e in product])
    return _ints(_subzeta.coefficients_json(text, p, max_exp))


def powerseries_ring_coeffs(n):
    """[a_1, ..., a_n] for the power series ring Z[[X]]."""
    return _ints(_subzeta.powerseries_json(n))


def functional_equation(parts):
    """(sign exponent, q exponent, s exponent, holds) for the nilpotent type `parts`."""
    return _subzeta.functional_equation(list(parts))


def exceptional_coefficients(e, p, max_exp):
    return _ints(_subzeta.exceptional_json(e, p, max_exp))


def campaign(count=50, seed=20260101, max_exp=3):
    return json.loads(_subzeta.campaign_json(count, seed, max_exp))
