"""Exhaustive enumeration of perfect codes by exact-cover search.

A set of codewords is an e-perfect code exactly when the radius-e balls
around the codewords partition the space. Enumerating all perfect codes is
therefore an exact-cover problem: the universe is the point set, the
candidate sets are the balls B(x, e) for every center x, and a perfect code
is a selection of pairwise-disjoint balls whose union is the whole space.

The solver is Algorithm X over that incidence structure. It always branches
on the point with the fewest remaining candidate balls; near the simplex
corners balls are clipped small, so the corners are the most constrained
and get decided first. Solutions are reported in the canonical order
induced by the point enumeration, independent of worker count.

Counting convention: codes are counted as labeled point sets. Two codes
that are coordinate permutations of each other count separately; the
optional orbit count identifies them.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import permutations

from .codes import Code, count_binary_perfect, is_perfect
from .errors import BudgetExceededError
from .simplex import Point, SimplexSpace, ball, enumerate_space

DEFAULT_POINT_BUDGET = 50_000


@dataclass(frozen=True)
class SearchProblem:
    """One exhaustive-search instance: a space, a radius, and options.

    max_solutions = 0 means unbounded. point_budget bounds the space size;
    node_budget (0 = unbounded) bounds search-tree nodes. Runs with
    max_solutions or node_budget set are executed single-threaded so that
    node counts and truncation points cannot depend on scheduling.
    """

    space: SimplexSpace
    e: int
    max_solutions: int = 0
    count_only: bool = False
    symmetry_reduction: bool = False
    point_budget: int = DEFAULT_POINT_BUDGET
    node_budget: int = 0

    def __post_init__(self) -> None:
        if self.e < 0:
            raise ValueError(f"e must be >= 0, got {self.e}")
        for name in ("max_solutions", "point_budget", "node_budget"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")


@dataclass(frozen=True)
class SearchReport:
    """Everything a finished search found, plus how much work it took."""

    problem: SearchProblem
    solution_count: int
    solutions: tuple[Code, ...] | None
    orbit_count: int | None
    nodes_explored: int
    wall_time: float

    def to_dict(self) -> dict:
        p = self.problem
        out: dict = {
            "problem": {
                "n": p.space.n,
                "ell": p.space.ell,
                "e": p.e,
                "max_solutions": p.max_solutions,
                "count_only": p.count_only,
                "symmetry_reduction": p.symmetry_reduction,
                "point_budget": p.point_budget,
                "node_budget": p.node_budget,
            },
            "solution_count": self.solution_count,
        }
        if self.solutions is not None:
            out["solutions"] = [
                [list(w) for w in code.codewords] for code in self.solutions
            ]
        if self.orbit_count is not None:
            out["orbit_count"] = self.orbit_count
        out["nodes_explored"] = self.nodes_explored
        out["wall_time"] = self.wall_time
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


class _ExactCover:
    """Algorithm X over ball placements, dict-of-sets flavor.

    X maps each point id to the set of live candidate centers whose ball
    covers it; Y maps each candidate center to its (fixed) ball. Branching
    always picks the point with the fewest live candidates, ties broken by
    point id, so the exploration order is fully deterministic.
    """

    def __init__(self, balls: list[tuple[int, ...]], node_budget: int = 0):
        self.Y = balls
        self.X: dict[int, set[int]] = {}
        for c, pts in enumerate(balls):
            for j in pts:
                self.X.setdefault(j, set()).add(c)
        self.nodes = 0
        self.node_budget = node_budget

    def search(self, partial: list[int]):
        self.nodes += 1
        if self.node_budget and self.nodes > self.node_budget:
            raise BudgetExceededError(f"search exceeded node budget of {self.node_budget}")
        X = self.X
        if not X:
            yield tuple(partial)
            return
        col = min(X, key=lambda j: (len(X[j]), j))
        for c in sorted(X[col]):
            partial.append(c)
            removed = self.select(c)
            yield from self.search(partial)
            self.restore(c, removed)
            partial.pop()

    def select(self, c: int) -> list[set[int]]:
        X, Y = self.X, self.Y
        cols = []
        for j in Y[c]:
            for i in X[j]:
                for k in Y[i]:
                    if k != j:
                        X[k].remove(i)
            cols.append(X.pop(j))
        return cols

    def restore(self, c: int, cols: list[set[int]]) -> None:
        X, Y = self.X, self.Y
        for j in reversed(Y[c]):
            X[j] = cols.pop()
            for i in X[j]:
                for k in Y[i]:
                    if k != j:
                        X[k].add(i)


def _cover_matrix(space: SimplexSpace, e: int) -> tuple[list[Point], list[tuple[int, ...]]]:
    points = list(enumerate_space(space))
    index = {p: i for i, p in enumerate(points)}
    balls = [tuple(sorted(index[q] for q in ball(p, e))) for p in points]
    return points, balls


def _sequential(balls, *, max_solutions: int, node_budget: int):
    solver = _ExactCover(balls, node_budget)
    sols = []
    for sol in solver.search([]):
        if len(sol) < 2:
            continue
        sols.append(sol)
        if max_solutions and len(sols) == max_solutions:
            break
    return sols, solver.nodes


def _parallel(balls, workers: int):
    # Split on the first branching point; each candidate ball rooted there
    # becomes an independent subtree with its own copy of the structures.
    probe = _ExactCover(balls)
    col = min(probe.X, key=lambda j: (len(probe.X[j]), j))
    branches = sorted(probe.X[col])

    def run_branch(c: int):
        sub = _ExactCover(balls)
        sub.select(c)
        out = [sol for sol in sub.search([c]) if len(sol) >= 2]
        return out, sub.nodes

    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(run_branch, branches))
    sols = [s for out, _ in results for s in out]
    nodes = 1 + sum(n for _, n in results)  # 1 for the shared root
    return sols, nodes


def enumerate_perfect_codes(problem: SearchProblem, workers: int = 1) -> SearchReport:
    """Find every nontrivial e-perfect code in the space.

    Solutions with fewer than two codewords (a single ball swallowing the
    space) are never reported, and e = 0 admits no nontrivial code by
    definition, so such searches report zero. Every emitted code is
    re-verified with is_perfect before it enters the report.
    """
    space, e = problem.space, problem.e
    size = space.size()
    if size > problem.point_budget:
        raise BudgetExceededError(
            f"space has {size} points, over the point budget of {problem.point_budget}"
        )
    t0 = time.perf_counter()
    points, balls = _cover_matrix(space, e)
    if workers > 1 and not problem.max_solutions and not problem.node_budget:
        raw, nodes = _parallel(balls, workers)
    else:
        raw, nodes = _sequential(
            balls, max_solutions=problem.max_solutions, node_budget=problem.node_budget
        )

    codes = []
    if e >= 1:
        for sol in raw:
            code = Code(space, tuple(points[c] for c in sol), radius_claim=e)
            if not is_perfect(code, e):
                raise AssertionError(f"search produced a non-perfect code: {code!r}")
            codes.append(code)
    codes.sort(key=lambda c: c.codewords, reverse=True)

    orbit_count = None
    if problem.symmetry_reduction:
        orbit_count = len({canonicalize_code(c).codewords for c in codes})
    wall_time = time.perf_counter() - t0
    return SearchReport(
        problem=problem,
        solution_count=len(codes),
        solutions=None if problem.count_only else tuple(codes),
        orbit_count=orbit_count,
        nodes_explored=nodes,
        wall_time=wall_time,
    )


def canonicalize_code(code: Code) -> Code:
    """Canonical representative of a code under coordinate permutations.

    Of the (n+1)! permutation images (each re-sorted into canonical
    codeword order), picks the one whose codeword list comes first in the
    canonical point order. Idempotent; two codes have equal canonical forms
    exactly when one is a coordinate permutation of the other.
    """
    width = code.space.n + 1
    best: tuple[Point, ...] | None = None
    for perm in permutations(range(width)):
        image = tuple(
            sorted((tuple(w[k] for k in perm) for w in code.codewords), reverse=True)
        )
        if best is None or image > best:
            best = image
    assert best is not None
    return Code(code.space, best, radius_claim=code.radius_claim)


def predicted_perfect_count(n: int, ell: int, e: int) -> int:
    """Closed-form count of nontrivial e-perfect codes in the simplex.

    Binary alphabet: min(r+1, 2e+1-r) codes once ell >= 2e+1, where r is
    ell mod (2e+1). Ternary alphabet: exactly 2 codes when ell = 3e+1 and
    none otherwise. Larger alphabets admit none at all. The search sweep
    checks these predictions cell by cell.
    """
    if e < 1 or n < 1:
        return 0
    if n == 1:
        return count_binary_perfect(ell, e)
    if n == 2:
        return 2 if ell == 3 * e + 1 else 0
    return 0


@dataclass(frozen=True)
class SweepCell:
    n: int
    ell: int
    e: int
    predicted: int
    found: int | None  # None when the cell was skipped over budget
    skipped: bool

    @property
    def agree(self) -> bool | None:
        return None if self.skipped else self.found == self.predicted


@dataclass(frozen=True)
class SweepReport:
    """Grid of search-vs-prediction cells from verify_theorem_sweep."""

    cells: tuple[SweepCell, ...]

    @property
    def all_agree(self) -> bool:
        return all(c.agree for c in self.cells if not c.skipped)

    @property
    def any_skipped(self) -> bool:
        return any(c.skipped for c in self.cells)

    def to_tsv(self) -> str:
        lines = ["n\tell\te\tpredicted\tfound\tagree"]
        for c in self.cells:
            found = "skipped" if c.skipped else str(c.found)
            agree = "skipped" if c.skipped else ("yes" if c.agree else "no")
            lines.append(f"{c.n}\t{c.ell}\t{c.e}\t{c.predicted}\t{found}\t{agree}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "cells": [
                {
                    "n": c.n,
                    "ell": c.ell,
                    "e": c.e,
                    "predicted": c.predicted,
                    "found": c.found,
                    "agree": c.agree,
                }
                for c in self.cells
            ],
            "all_agree": self.all_agree,
            "any_skipped": self.any_skipped,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def verify_theorem_sweep(
    n_max: int,
    ell_max: int,
    e_max: int,
    *,
    point_budget: int = DEFAULT_POINT_BUDGET,
    workers: int = 1,
) -> SweepReport:
    """Exhaustively search every (n, ell, e) cell and compare with the closed forms.

    Cells whose space exceeds the point budget are marked skipped, never
    silently dropped: a nonexistence confirmation is only as good as the
    range it actually covered.
    """
    if n_max < 1 or ell_max < 1 or e_max < 1:
        raise ValueError("sweep bounds must all be >= 1")
    cells = []
    for n in range(1, n_max + 1):
        for ell in range(1, ell_max + 1):
            for e in range(1, e_max + 1):
                predicted = predicted_perfect_count(n, ell, e)
                try:
                    problem = SearchProblem(
                        SimplexSpace(n, ell), e, count_only=True, point_budget=point_budget
                    )
                    report = enumerate_perfect_codes(problem, workers=workers)
                except (BudgetExceededError, OverflowError):
                    cells.append(SweepCell(n, ell, e, predicted, None, True))
                else:
                    cells.append(
                        SweepCell(n, ell, e, predicted, report.solution_count, False)
                    )
    return SweepReport(tuple(cells))
