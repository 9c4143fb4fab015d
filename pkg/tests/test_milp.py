"""The exported MILP must describe the same optimum the searches find.

The cross-check feeds the big-M model to an independent mixed-integer
solver (HiGHS via scipy) in floating point and compares against the exact
switching search within a numerical tolerance.
"""

from fractions import Fraction as F

import numpy as np
import pytest
from scipy.optimize import LinearConstraint, milp
from scipy.sparse import lil_matrix

from ldcflow.gadgets import Polarity, gsch
from ldcflow.msf import build_switching_milp, export_milp, solve_msf_exhaustive
from ldcflow.network import Network, NodeRole, fixed_edge
from ldcflow.reductions import SubsetSumInstance, encode_subset_sum_cactus_msf

TOL = 1e-6


def solve_with_scipy(program, binaries):
    """Generic float bridge: LinearProgram -> scipy.optimize.milp."""
    idx = {v: i for i, v in enumerate(program.variables)}
    n = len(program.variables)
    binary = set(binaries)
    integrality = np.array([1 if v in binary else 0 for v in program.variables])
    lb = np.array([-np.inf if program.lower[v] is None else float(program.lower[v]) for v in program.variables])
    ub = np.array([np.inf if program.upper[v] is None else float(program.upper[v]) for v in program.variables])

    a = lil_matrix((len(program.constraints), n))
    cl, cu = [], []
    for r, con in enumerate(program.constraints):
        for v, c in con.coeffs.items():
            a[r, idx[v]] = float(c)
        rhs = float(con.rhs)
        cl.append(rhs if con.rel in ("=", ">=") else -np.inf)
        cu.append(rhs if con.rel in ("=", "<=") else np.inf)
    c = np.zeros(n)
    for v, coef in program.objective.items():
        c[idx[v]] = -float(coef)  # scipy minimizes

    res = milp(
        c=c,
        constraints=LinearConstraint(a.tocsr(), np.array(cl), np.array(cu)),
        integrality=integrality,
        bounds=__import__("scipy.optimize", fromlist=["Bounds"]).Bounds(lb, ub),
    )
    assert res.success, res.message
    return -res.fun


@pytest.mark.parametrize(
    "network",
    [
        gsch(1, "v", Polarity.MINUS),
        Network([("g", NodeRole.GENERATOR), ("l", NodeRole.LOAD)], [fixed_edge("g", "l", 2, 4)]),
        Network(
            [("g", NodeRole.GENERATOR), ("b", NodeRole.PLAIN), ("l", NodeRole.LOAD)],
            [fixed_edge("g", "b", 1, 5), fixed_edge("b", "l", 1, 4), fixed_edge("g", "l", 1, 30)],
        ),
        encode_subset_sum_cactus_msf(SubsetSumInstance((1, 2), 2)).network,
    ],
    ids=["gadget", "single-edge", "triangle", "cactus"],
)
def test_external_solver_agrees_with_the_exact_search(network):
    program, binaries = build_switching_milp(network)
    external = solve_with_scipy(program, binaries)
    exact = solve_msf_exhaustive(network).value
    assert abs(external - float(exact)) < TOL


def test_export_text_shape():
    n = gsch(1, "v", Polarity.MINUS)
    text = export_milp(n)
    assert text.count("z[") >= 3  # one binary per edge
    binary_section = text.split("Binary")[1]
    assert len(binary_section.split()) >= 3
    for section in ("Maximize", "Subject To", "Bounds", "Binary", "End"):
        assert section in text
    assert "big-M" in text  # the derivation is documented in the header


def test_single_edge_has_one_binary():
    n = Network([("g", NodeRole.GENERATOR), ("l", NodeRole.LOAD)], [fixed_edge("g", "l", 1, 7)])
    program, binaries = build_switching_milp(n)
    assert len(binaries) == 1
    assert solve_with_scipy(program, binaries) == pytest.approx(7.0, abs=TOL)
