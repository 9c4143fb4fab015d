"""Exact rational linear programming (maximization).

The solver is a two-phase dense-tableau simplex with Bland's anti-cycling
rule, run entirely over exact rationals: the optimum it reports is the
true optimum, and the returned assignment is a vertex of the feasible
region.  Determinism is part of the contract -- variable order, pivot
selection and presolve order are all fixed -- so repeated solves of the
same program return identical results.

Internally arithmetic uses gmpy2.mpq when available (several times faster
than fractions.Fraction); results convert back to Fraction at the
boundary.  Before the simplex runs, an exact presolve substitutes
variables fixed by their bounds and eliminates free variables through
equality rows (a Gaussian step); free variables that survive presolve are
split into differences of nonnegatives.  Both transformations are affine
bijections of the feasible region, so vertices map to vertices.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import MalformedProgram
from .rational import Rational, decimal_str, is_decimal_exact, rat_str

try:
    from gmpy2 import mpq as _q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _q = Fraction

_Q0 = _q(0)
_Q1 = _q(1)


def _to_q(x):
    """Boundary rational -> internal type (gmpy2 rejects Fractions holding mpz)."""
    if isinstance(x, Fraction):
        return _q(x.numerator, x.denominator)
    return _q(x)


def _from_q(x) -> Fraction:
    """Internal rational -> Fraction with plain-int internals."""
    return Fraction(int(x.numerator), int(x.denominator))

VarId = str

LE, EQ, GE = "<=", "=", ">="


@dataclass
class Constraint:
    coeffs: dict[VarId, Rational]
    rel: str
    rhs: Rational


@dataclass
class LinearProgram:
    """Maximize `objective` subject to linear constraints and variable bounds.

    Bounds of None mean unbounded on that side; variables are free by
    default and must be given explicit bounds where intended.
    """

    variables: list[VarId] = field(default_factory=list)
    lower: dict[VarId, Rational | None] = field(default_factory=dict)
    upper: dict[VarId, Rational | None] = field(default_factory=dict)
    constraints: list[Constraint] = field(default_factory=list)
    objective: dict[VarId, Rational] = field(default_factory=dict)

    def add_variable(self, name: VarId, lower: Rational | None = None, upper: Rational | None = None) -> VarId:
        if name in self.lower:
            raise MalformedProgram(f"variable {name} declared twice")
        self.variables.append(name)
        self.lower[name] = lower
        self.upper[name] = upper
        return name

    def add_constraint(self, coeffs: dict[VarId, Rational], rel: str, rhs: Rational) -> None:
        if rel not in (LE, EQ, GE):
            raise MalformedProgram(f"unknown relation {rel!r}")
        self.constraints.append(Constraint(dict(coeffs), rel, rhs))

    def set_objective(self, coeffs: dict[VarId, Rational]) -> None:
        self.objective = dict(coeffs)


class LpStatus(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpResult:
    status: LpStatus
    value: Rational | None = None
    assignment: dict[VarId, Rational] | None = None


class _Row:
    __slots__ = ("coeffs", "rel", "rhs")

    def __init__(self, coeffs, rel, rhs):
        self.coeffs = coeffs  # dict[VarId, mpq], zero entries absent
        self.rel = rel
        self.rhs = rhs

    def add_term(self, v, c):
        nv = self.coeffs.get(v, _Q0) + c
        if nv == 0:
            self.coeffs.pop(v, None)
        else:
            self.coeffs[v] = nv


def _validate(p: LinearProgram) -> None:
    declared = set(p.variables)
    if len(declared) != len(p.variables):
        raise MalformedProgram("duplicate variable names")
    for c in p.constraints:
        for v in c.coeffs:
            if v not in declared:
                raise MalformedProgram(f"constraint references undeclared variable {v}")
    for v in p.objective:
        if v not in declared:
            raise MalformedProgram(f"objective references undeclared variable {v}")
    for v in p.variables:
        lo, hi = p.lower[v], p.upper[v]
        if lo is not None and hi is not None and lo > hi:
            raise MalformedProgram(f"inverted bounds on {v}: [{lo}, {hi}]")


def _substitute(rows: list[_Row], obj: dict, var: VarId, expr: dict, const) -> object:
    """Replace var by (const + expr) in all rows and the objective.

    Returns the objective-constant contribution.
    """
    for row in rows:
        f = row.coeffs.pop(var, None)
        if f is not None:
            row.rhs -= f * const
            for v, cv in expr.items():
                row.add_term(v, f * cv)
    shift = _Q0
    f = obj.pop(var, None)
    if f is not None:
        shift = f * const
        for v, cv in expr.items():
            nv = obj.get(v, _Q0) + f * cv
            if nv == 0:
                obj.pop(v, None)
            else:
                obj[v] = nv
    return shift


def _pivot(T: list[list], Z: list, basis: list[int], r: int, j: int) -> None:
    prow = T[r]
    pv = prow[j]
    if pv != 1:
        inv = _Q1 / pv
        T[r] = prow = [x * inv for x in prow]
    for i in range(len(T)):
        if i != r:
            f = T[i][j]
            if f:
                row = T[i]
                T[i] = [a - f * b for a, b in zip(row, prow)]
    f = Z[j]
    if f:
        Z[:] = [a - f * b for a, b in zip(Z, prow)]
    basis[r] = j


def _simplex(T: list[list], Z: list, basis: list[int], ncols: int) -> str:
    """Bland-rule simplex on an already-feasible tableau; returns a status."""
    while True:
        enter = -1
        for j in range(ncols):
            if Z[j] > 0:
                enter = j
                break
        if enter < 0:
            return "optimal"
        leave = -1
        best = None
        for i in range(len(T)):
            tij = T[i][enter]
            if tij > 0:
                ratio = T[i][-1] / tij
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            return "unbounded"
        _pivot(T, Z, basis, leave, enter)


def solve_lp(p: LinearProgram) -> LpResult:
    """Exact optimum of a maximization program; see the module docstring."""
    _validate(p)

    lower = {v: None if p.lower[v] is None else _to_q(p.lower[v]) for v in p.variables}
    upper = {v: None if p.upper[v] is None else _to_q(p.upper[v]) for v in p.variables}
    rows = [
        _Row({v: _to_q(c) for v, c in con.coeffs.items() if c != 0}, con.rel, _to_q(con.rhs))
        for con in p.constraints
    ]
    obj = {v: _to_q(c) for v, c in p.objective.items() if c != 0}

    # Variables fixed by their bounds become constants.
    fixed: dict[VarId, object] = {}
    live: list[VarId] = []
    for v in p.variables:
        if lower[v] is not None and lower[v] == upper[v]:
            fixed[v] = lower[v]
            _substitute(rows, obj, v, {}, lower[v])
        else:
            live.append(v)

    # Gaussian elimination of free variables through equality rows.
    live_set = set(live)
    free = {v for v in live if lower[v] is None and upper[v] is None}
    eliminated: list[tuple[VarId, dict, object]] = []
    progress = True
    while progress:
        progress = False
        for ri, row in enumerate(rows):
            if row.rel != EQ:
                continue
            var = next((v for v in live if v in free and v in live_set and v in row.coeffs), None)
            if var is None:
                continue
            del rows[ri]
            c = row.coeffs.pop(var)
            expr = {v: -cv / c for v, cv in row.coeffs.items()}
            const = row.rhs / c
            _substitute(rows, obj, var, expr, const)
            eliminated.append((var, expr, const))
            live_set.discard(var)
            progress = True
            break

    # Constant rows are either trivially satisfied or witness infeasibility.
    remaining_rows: list[_Row] = []
    for row in rows:
        if row.coeffs:
            remaining_rows.append(row)
            continue
        sat = (row.rhs == 0) if row.rel == EQ else (row.rhs >= 0 if row.rel == LE else row.rhs <= 0)
        if not sat:
            return LpResult(LpStatus.INFEASIBLE)
    rows = remaining_rows

    # Map each live variable onto nonnegative columns.
    col_names: list[tuple[VarId, int]] = []  # (var, +1/-1) ; split vars get two entries
    col_shift: list = []  # x = sign*y + shift
    var_cols: dict[VarId, list[int]] = {}
    extra_rows: list[_Row] = []
    for v in live:
        if v not in live_set:
            continue
        lo, hi = lower[v], upper[v]
        if lo is None and hi is None:
            var_cols[v] = [len(col_names), len(col_names) + 1]
            col_names.extend([(v, 1), (v, -1)])
            col_shift.extend([_Q0, _Q0])
        elif lo is None:
            var_cols[v] = [len(col_names)]
            col_names.append((v, -1))
            col_shift.append(hi)
        else:
            var_cols[v] = [len(col_names)]
            col_names.append((v, 1))
            col_shift.append(lo)
            if hi is not None:
                extra_rows.append(_Row({v: _Q1}, LE, hi))

    def to_columns(coeffs: dict) -> dict[int, object]:
        out: dict[int, object] = {}
        for v, c in coeffs.items():
            for idx in var_cols[v]:
                _, sign = col_names[idx]
                cc = c if sign > 0 else -c
                out[idx] = out.get(idx, _Q0) + cc
        return out

    n_struct = len(col_names)
    std_rows: list[tuple[dict[int, object], str, object]] = []
    for row in rows + extra_rows:
        cols = to_columns(row.coeffs)
        rhs = row.rhs
        # substituting x = sign*y + shift moves c*shift to the rhs
        for v, c in row.coeffs.items():
            for idx in var_cols[v]:
                rhs -= c * col_shift[idx]
        rel = row.rel
        if rhs < 0:
            cols = {j: -c for j, c in cols.items()}
            rhs = -rhs
            rel = {LE: GE, GE: LE, EQ: EQ}[rel]
        std_rows.append((cols, rel, rhs))

    obj_cols = to_columns(obj)

    # Tableau layout: structural columns, slack/surplus columns, artificials.
    n_slack = sum(1 for _, rel, _ in std_rows if rel != EQ)
    n_art = sum(1 for _, rel, _ in std_rows if rel != LE)
    width = n_struct + n_slack + n_art
    T: list[list] = []
    basis: list[int] = []
    slack_at = n_struct
    art_at = n_struct + n_slack
    art_cols: list[int] = []
    for cols, rel, rhs in std_rows:
        dense = [_Q0] * (width + 1)
        for j, c in cols.items():
            dense[j] = c
        dense[-1] = rhs
        if rel == LE:
            dense[slack_at] = _Q1
            basis.append(slack_at)
            slack_at += 1
        elif rel == GE:
            dense[slack_at] = -_Q1
            slack_at += 1
            dense[art_at] = _Q1
            basis.append(art_at)
            art_cols.append(art_at)
            art_at += 1
        else:
            dense[art_at] = _Q1
            basis.append(art_at)
            art_cols.append(art_at)
            art_at += 1
        T.append(dense)

    if art_cols:
        Z1 = [_Q0] * (width + 1)
        for j in art_cols:
            Z1[j] = -_Q1
        for i, b in enumerate(basis):
            if b in art_cols:
                Z1 = [a + t for a, t in zip(Z1, T[i])]
        status = _simplex(T, Z1, basis, width)
        assert status == "optimal"  # phase 1 is bounded below by 0
        if -Z1[-1] < 0:
            return LpResult(LpStatus.INFEASIBLE)
        # pivot leftover artificials out of the basis, dropping redundant rows
        art_set = set(art_cols)
        keep: list[int] = []
        for i in range(len(T)):
            if basis[i] not in art_set:
                keep.append(i)
                continue
            j = next((j for j in range(n_struct + n_slack) if T[i][j] != 0), None)
            if j is None:
                continue  # redundant row
            _pivot(T, Z1, basis, i, j)
            keep.append(i)
        T = [T[i][: n_struct + n_slack] + [T[i][-1]] for i in keep]
        basis = [basis[i] for i in keep]
        width = n_struct + n_slack

    Z2 = [_Q0] * (width + 1)
    for j, c in obj_cols.items():
        Z2[j] = c
    for i, b in enumerate(basis):
        if Z2[b]:
            f = Z2[b]
            Z2 = [a - f * t for a, t in zip(Z2, T[i])]
    status = _simplex(T, Z2, basis, width)
    if status == "unbounded":
        return LpResult(LpStatus.UNBOUNDED)

    col_val = [_Q0] * width
    for i, b in enumerate(basis):
        col_val[b] = T[i][-1]

    assignment: dict[VarId, Fraction] = {}
    for v in live:
        if v not in live_set:
            continue
        idxs = var_cols[v]
        if len(idxs) == 2:
            val = col_val[idxs[0]] - col_val[idxs[1]]
        else:
            idx = idxs[0]
            _, sign = col_names[idx]
            val = col_shift[idx] + (col_val[idx] if sign > 0 else -col_val[idx])
        assignment[v] = _from_q(val)
    for var, expr, const in reversed(eliminated):
        val = const + sum((cv * _to_q(assignment[v]) for v, cv in expr.items()), _Q0)
        assignment[var] = _from_q(val)
    for v, val in fixed.items():
        assignment[v] = _from_q(val)

    value = sum((Fraction(c) * assignment[v] for v, c in p.objective.items()), Fraction(0))
    return LpResult(LpStatus.OPTIMAL, value, assignment)


# ---------------------------------------------------------------------------
# Textual export ("CPLEX LP" style): Maximize / Subject To / Bounds / End.
# ---------------------------------------------------------------------------


def _coef_str(c: Rational) -> tuple[str, bool]:
    """Decimal rendering plus a flag telling whether it is exact."""
    if is_decimal_exact(c):
        return decimal_str(c), True
    return decimal_str(c, 12), False


def _expr_str(coeffs: dict[VarId, Rational], order: list[VarId]) -> tuple[str, list[str]]:
    parts: list[str] = []
    notes: list[str] = []
    for v in order:
        if v not in coeffs or coeffs[v] == 0:
            continue
        c = coeffs[v]
        mag, exact = _coef_str(abs(c))
        if not exact:
            notes.append(f"{v}: {rat_str(c)}")
        sign = "-" if c < 0 else "+"
        term = v if mag == "1" else f"{mag} {v}"
        parts.append(f"{sign} {term}")
    if not parts:
        return "0 " + (order[0] if order else "x"), notes
    text = " ".join(parts)
    return (text[2:] if text.startswith("+ ") else text), notes


def write_lp_text(p: LinearProgram, *, binaries: list[VarId] | None = None, comments: list[str] | None = None) -> str:
    """Render a program in the conventional LP text format.

    Rationals print as decimals when exact; otherwise a truncated decimal
    is emitted and the exact p/q value is preserved in a comment line.
    """
    binaries = binaries or []
    out: list[str] = [f"\\ {line}" for line in (comments or [])]
    expr, notes = _expr_str(p.objective, p.variables)
    out += ["Maximize", f" obj: {expr}"]
    for note in notes:
        out.append(f"\\ exact obj coefficient {note}")
    out.append("Subject To")
    for i, con in enumerate(p.constraints):
        expr, notes = _expr_str(con.coeffs, p.variables)
        rel = con.rel if con.rel != EQ else "="
        rhs, rhs_exact = _coef_str(con.rhs)
        out.append(f" c{i}: {expr} {rel} {rhs}")
        for note in notes:
            out.append(f"\\ exact coefficient in c{i}: {note}")
        if not rhs_exact:
            out.append(f"\\ exact rhs of c{i}: {rat_str(con.rhs)}")
    out.append("Bounds")
    binary_set = set(binaries)
    for v in p.variables:
        if v in binary_set:
            continue
        lo, hi = p.lower[v], p.upper[v]
        if lo is None and hi is None:
            out.append(f" {v} free")
        elif lo is not None and hi is not None and lo == hi:
            val, _ = _coef_str(lo)
            out.append(f" {v} = {val}")
        else:
            lo_s = "-inf" if lo is None else _coef_str(lo)[0]
            hi_s = "+inf" if hi is None else _coef_str(hi)[0]
            out.append(f" {lo_s} <= {v} <= {hi_s}")
            for bound, tag in ((lo, "lower"), (hi, "upper")):
                if bound is not None and not is_decimal_exact(bound):
                    out.append(f"\\ exact {tag} bound of {v}: {rat_str(bound)}")
    if binaries:
        out.append("Binary")
        out.append(" " + " ".join(binaries))
    out.append("End")
    return "\n".join(out) + "\n"
