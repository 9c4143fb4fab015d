"""Independent reference implementations used only to check the library.

Everything here is deliberately brute force and shares no code with the
solvers it cross-checks: the LP oracle enumerates constraint-intersection
vertices, and the combinatorial oracles enumerate subsets/permutations.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations

from ldcflow.lp import LinearProgram


def gauss_solve(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve a square rational system; None when singular."""
    n = len(matrix)
    a = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def lp_vertex_oracle(p: LinearProgram) -> tuple[str, Fraction | None]:
    """Feasible maximum over all vertices of the constraint arrangement.

    Sound for programs whose feasible region is bounded (e.g. every
    variable boxed) or whose optimum lies at a vertex of the arrangement.
    Returns ("optimal", value) or ("infeasible", None).
    """
    variables = list(p.variables)
    n = len(variables)
    idx = {v: i for i, v in enumerate(variables)}

    rows: list[tuple[list[Fraction], str, Fraction]] = []
    for con in p.constraints:
        coeffs = [Fraction(0)] * n
        for v, c in con.coeffs.items():
            coeffs[idx[v]] += Fraction(c)
        rows.append((coeffs, con.rel, Fraction(con.rhs)))
    for v in variables:
        unit = [Fraction(0)] * n
        unit[idx[v]] = Fraction(1)
        if p.lower[v] is not None:
            rows.append((unit[:], ">=", Fraction(p.lower[v])))
        if p.upper[v] is not None:
            rows.append((unit[:], "<=", Fraction(p.upper[v])))

    def feasible(x: list[Fraction]) -> bool:
        for coeffs, rel, rhs in rows:
            lhs = sum(c * xi for c, xi in zip(coeffs, x))
            if rel == "<=" and lhs > rhs:
                return False
            if rel == ">=" and lhs < rhs:
                return False
            if rel == "=" and lhs != rhs:
                return False
        return True

    best: Fraction | None = None
    for subset in combinations(range(len(rows)), n):
        matrix = [rows[i][0] for i in subset]
        rhs = [rows[i][2] for i in subset]
        x = gauss_solve(matrix, rhs)
        if x is None or not feasible(x):
            continue
        value = sum(Fraction(c) * x[idx[v]] for v, c in p.objective.items())
        if best is None or value > best:
            best = value
    return ("infeasible", None) if best is None else ("optimal", best)


def subset_sum_solvable(values, target) -> bool:
    items = list(values)
    for r in range(len(items) + 1):
        for combo in combinations(items, r):
            if sum(combo) == target:
                return True
    return False


def exact_cover_exists(universe, sets) -> bool:
    universe = set(universe)
    family = [frozenset(x) for x in sets]
    for r in range(len(family) + 1):
        for combo in combinations(family, r):
            total = sum(len(x) for x in combo)
            union = frozenset().union(*combo) if combo else frozenset()
            if total == len(union) and union == universe:
                return True
    return False


def hamiltonian_path_exists(nodes, edges, a, b) -> bool:
    eset = {frozenset(e) for e in edges}
    middle = [v for v in nodes if v not in (a, b)]
    for perm in permutations(middle):
        path = [a, *perm, b]
        if all(frozenset(step) in eset for step in zip(path, path[1:])):
            return True
    return False
