"""Exact linear programming over rationals, deterministic two-phase simplex.

Built for oracle-scale problems: a dense tableau with Bland's smallest-index
anti-cycling rule, every coefficient a ``Fraction``.  Problems are stated in
"maximize" form with ``<=`` and ``==`` rows and per-variable nonnegativity
flags.

The game oracle produces LPs with few variables and many constraints, so
``simplex_solve`` transparently solves the dual in that regime and recovers
the primal point from the dual's shadow prices; both routes give identical
answers and the direct route remains the fallback whenever the dual route is
inconclusive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import GraphInputError

LE = "<="
EQ = "=="

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class LinearProgram:
    """maximize objective . x  subject to  lhs x (<= | ==) rhs.

    Variables with ``nonneg[j]`` True are constrained to x_j >= 0; the rest
    are free.
    """

    objective: tuple[Fraction, ...]
    lhs: tuple[tuple[Fraction, ...], ...]
    senses: tuple[str, ...]
    rhs: tuple[Fraction, ...]
    nonneg: tuple[bool, ...]

    def __post_init__(self):
        n = len(self.objective)
        if len(self.nonneg) != n:
            raise GraphInputError("nonneg flags do not match variable count")
        if not (len(self.lhs) == len(self.senses) == len(self.rhs)):
            raise GraphInputError("constraint blocks have mismatched lengths")
        for row in self.lhs:
            if len(row) != n:
                raise GraphInputError("constraint row has wrong arity")
        for s in self.senses:
            if s not in (LE, EQ):
                raise GraphInputError(f"unknown sense {s!r}")


def make_lp(
    objective: Sequence[Fraction | int],
    rows: Sequence[tuple[Sequence[Fraction | int], str, Fraction | int]],
    nonneg: Sequence[bool],
) -> LinearProgram:
    return LinearProgram(
        tuple(Fraction(c) for c in objective),
        tuple(tuple(Fraction(a) for a in row) for row, _, _ in rows),
        tuple(sense for _, sense, _ in rows),
        tuple(Fraction(b) for _, _, b in rows),
        tuple(bool(f) for f in nonneg),
    )


@dataclass(frozen=True)
class SimplexResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None
    point: tuple[Fraction, ...] | None


class _Tableau:
    """Dense simplex tableau over Fractions, Bland pivoting throughout."""

    def __init__(self, lp: LinearProgram):
        self.lp = lp
        n = len(lp.objective)
        # free variables are split x_j = pos_j - neg_j
        self.split: list[int] = [j for j in range(n) if not lp.nonneg[j]]
        self.n_struct = n + len(self.split)

        rows: list[list[Fraction]] = []
        senses: list[str] = []
        rhs: list[Fraction] = []
        self.row_sign: list[int] = []
        for row, sense, b in zip(lp.lhs, lp.senses, lp.rhs):
            ext = list(row) + [-row[j] for j in self.split]
            if b < 0:
                ext = [-a for a in ext]
                b = -b
                sense = {LE: ">=", EQ: EQ}[sense]
                self.row_sign.append(-1)
            else:
                self.row_sign.append(1)
            rows.append(ext)
            senses.append(sense)
            rhs.append(b)

        r = len(rows)
        self.num_rows = r
        n_slack = sum(1 for s in senses if s == LE)
        n_surplus = sum(1 for s in senses if s == ">=")
        self.slack0 = self.n_struct
        self.art0 = self.n_struct + n_slack + n_surplus
        self.num_cols = self.art0 + r  # one artificial column per row
        self.art_col = [self.art0 + i for i in range(r)]

        self.T: list[list[Fraction]] = []
        self.basis: list[int] = []
        si = self.slack0
        for i in range(r):
            line = rows[i] + [ZERO] * (self.num_cols - self.n_struct) + [rhs[i]]
            # every row gets a unit artificial column so dual prices can be
            # read from reduced costs; only >=/== rows start with it basic
            line[self.art_col[i]] = ONE
            if senses[i] == LE:
                line[si] = ONE
                self.basis.append(si)
                si += 1
            elif senses[i] == ">=":
                line[si] = -ONE
                si += 1
                self.basis.append(self.art_col[i])
            else:
                self.basis.append(self.art_col[i])
            self.T.append(line)
        self.alive_rows = list(range(r))
        self.dropped: set[int] = set()
        self.barred = set(self.art_col)  # artificials may leave, never enter

    # -- pivoting ----------------------------------------------------------

    def _pivot(self, obj: list[Fraction], r: int, c: int) -> None:
        T = self.T
        piv = T[r][c]
        inv = ONE / piv
        T[r] = [a * inv for a in T[r]]
        rowr = T[r]
        for i in self.alive_rows:
            if i != r and T[i][c] != 0:
                f = T[i][c]
                T[i] = [a - f * b for a, b in zip(T[i], rowr)]
        if obj[c] != 0:
            f = obj[c]
            for j in range(len(obj)):
                obj[j] -= f * rowr[j]
        self.basis[r] = c

    def _optimize(self, obj: list[Fraction]) -> str:
        """Bland simplex to optimality on the current basis; returns status."""
        while True:
            enter = -1
            for j in range(self.num_cols):
                if obj[j] > 0 and j not in self.barred:
                    enter = j
                    break
            if enter < 0:
                return "optimal"
            leave = -1
            best = None
            for i in self.alive_rows:
                a = self.T[i][enter]
                if a > 0:
                    ratio = self.T[i][-1] / a
                    if best is None or ratio < best or (
                        ratio == best and self.basis[i] < self.basis[leave]
                    ):
                        best = ratio
                        leave = i
            if leave < 0:
                return "unbounded"
            self._pivot(obj, leave, enter)

    # -- phases --------------------------------------------------------------

    def solve(self) -> tuple[str, Fraction | None, tuple[Fraction, ...] | None]:
        # phase 1: maximize -(sum of artificials)
        obj1 = [ZERO] * self.num_cols + [ZERO]
        for c in self.art_col:
            obj1[c] = -ONE
        for i in self.alive_rows:
            if self.basis[i] in self.barred:
                for j in range(self.num_cols + 1):
                    obj1[j] += self.T[i][j]
        status = self._optimize(obj1)
        assert status == "optimal"  # phase 1 is always bounded
        if obj1[-1] != 0:
            return "infeasible", None, None

        # drive leftover artificials out of the basis; drop redundant rows
        for i in list(self.alive_rows):
            if self.basis[i] in self.barred:
                target = -1
                for j in range(self.art0):
                    if self.T[i][j] != 0:
                        target = j
                        break
                if target >= 0:
                    self._pivot(obj1, i, target)
                else:
                    self.alive_rows.remove(i)
                    self.dropped.add(i)

        # phase 2: original objective over the current basis
        ext_c = [ZERO] * self.num_cols
        n = len(self.lp.objective)
        for j in range(n):
            ext_c[j] = self.lp.objective[j]
        for k, j in enumerate(self.split):
            ext_c[n + k] = -self.lp.objective[j]
        obj2 = ext_c + [ZERO]
        for i in self.alive_rows:
            b = self.basis[i]
            if obj2[b] != 0:
                f = obj2[b]
                for j in range(self.num_cols + 1):
                    obj2[j] -= f * self.T[i][j]
        status = self._optimize(obj2)
        if status == "unbounded":
            return "unbounded", None, None

        value = -obj2[-1]
        self.final_obj = obj2
        point = self._extract_point()
        return "optimal", value, point

    def _extract_point(self) -> tuple[Fraction, ...]:
        col_val = [ZERO] * self.num_cols
        for i in self.alive_rows:
            col_val[self.basis[i]] = self.T[i][-1]
        n = len(self.lp.objective)
        x = [col_val[j] for j in range(n)]
        for k, j in enumerate(self.split):
            x[j] = x[j] - col_val[n + k]
        return tuple(x)

    def dual_prices(self) -> tuple[Fraction, ...]:
        """Optimal dual multipliers for the original constraint rows.

        Rows dropped as redundant get multiplier zero (the reduced system's
        dual extends with zeros; the stale artificial column of a dropped
        row carries no meaningful reduced cost).
        """
        prices = []
        for i in range(self.num_rows):
            if i in self.dropped:
                prices.append(ZERO)
                continue
            y = -self.final_obj[self.art_col[i]]
            prices.append(y * self.row_sign[i])
        return tuple(prices)


def _solve_direct(
    lp: LinearProgram,
) -> tuple[str, Fraction | None, tuple[Fraction, ...] | None, tuple[Fraction, ...] | None]:
    tab = _Tableau(lp)
    status, value, point = tab.solve()
    if status != "optimal":
        return status, None, None, None
    return status, value, point, tab.dual_prices()


def _dual_of(lp: LinearProgram) -> LinearProgram:
    """Dual in "maximize" form: max -rhs.y with one row per primal variable."""
    n = len(lp.objective)
    r = len(lp.rhs)
    rows = []
    senses = []
    rhs = []
    for j in range(n):
        col = tuple(lp.lhs[i][j] for i in range(r))
        if lp.nonneg[j]:
            rows.append(tuple(-a for a in col))
            senses.append(LE)
            rhs.append(-lp.objective[j])
        else:
            rows.append(col)
            senses.append(EQ)
            rhs.append(lp.objective[j])
    nonneg = tuple(s == LE for s in lp.senses)
    return LinearProgram(
        tuple(-b for b in lp.rhs), tuple(rows), tuple(senses), tuple(rhs), nonneg
    )


def _solve_via_dual(lp: LinearProgram) -> SimplexResult | None:
    """Solve through the dual; None when that leaves the status ambiguous.

    The primal point is recovered from the dual's shadow prices (the dual of
    the dual); a dual-infeasible outcome cannot distinguish an unbounded
    primal from an infeasible one, hence the None.
    """
    dual = _dual_of(lp)
    status, value, _point, prices = _solve_direct(dual)
    if status == "optimal":
        assert prices is not None and value is not None
        x = tuple(p if lp.nonneg[j] else -p for j, p in enumerate(prices))
        return SimplexResult("optimal", -value, x)
    if status == "unbounded":
        return SimplexResult("infeasible", None, None)
    return None


def simplex_solve(lp: LinearProgram) -> SimplexResult:
    """Exact optimum, or infeasible/unbounded, deterministically.

    Tall problems (many more rows than variables) are solved through the
    dual; the direct tableau is the fallback whenever that is inconclusive.
    """
    if len(lp.rhs) >= 3 * max(1, len(lp.objective)):
        res = _solve_via_dual(lp)
        if res is not None:
            return res
    status, value, point, _ = _solve_direct(lp)
    return SimplexResult(status, value, point)
