"""
Loose and tight extension matrices between algebras and coalgebras.

A row is an algebra (alpha, a) of T = Phi_* Phi^*; a column is a coalgebra
given as an algebra (beta, b) of the dual monad, whose structure map reads
Phi^* Phi_* beta (u) -> beta(u). A loose entry is a natural f: alpha ->
Phi_* beta that is a map of algebras into Phi_* beta, i.e. with transpose
f': beta -> Phi^* alpha,

    f(a(t))[u][y] == t[u][f'(y)]

for every t in T alpha (x), every object u and every y in beta(u). Tight
entries are the loose f that are pointwise injective and whose transpose is
pointwise surjective.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Any, Dict, List, Optional, Sequence, Tuple

from nucleuskit.core.config import DEFAULT_LIMITS, Budget, Limits
from nucleuskit.core.errors import InputError, InternalLawError
from nucleuskit.setcat.algebras import Algebra
from nucleuskit.setcat.naturality import (
    Components,
    is_epi,
    is_mono,
    is_natural,
    iter_nat_transforms,
)
from nucleuskit.setcat.presheaf import Presheaf
from nucleuskit.setcat.profunctor import Profunctor

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtensionCell:
    row: int
    col: int
    loose: Tuple[Components, ...]
    tight: Optional[Tuple[Components, ...]] = None

    def to_json(self, witnesses: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {"row": self.row, "col": self.col, "loose": len(self.loose)}
        if self.tight is not None:
            data["tight"] = len(self.tight)
        if witnesses:
            data["loose_witnesses"] = [[list(c) for c in f] for f in self.loose]
            if self.tight is not None:
                data["tight_witnesses"] = [[list(c) for c in f] for f in self.tight]
        return data


@dataclass(frozen=True)
class ExtensionMatrix:
    Phi: Profunctor
    rows: Tuple[Algebra, ...]
    cols: Tuple[Algebra, ...]
    cells: Tuple[Tuple[ExtensionCell, ...], ...]

    def loose_count(self) -> int:
        return sum(len(cell.loose) for row in self.cells for cell in row)

    def tight_count(self) -> int:
        return sum(len(cell.tight or ()) for row in self.cells for cell in row)

    def to_json(self, witnesses: bool = False) -> Dict[str, Any]:
        return {
            "rows": [algebra.to_json() for algebra in self.rows],
            "cols": [coalgebra.to_json() for coalgebra in self.cols],
            "cells": [[cell.to_json(witnesses) for cell in row] for row in self.cells],
        }


class _CellSolver:
    """Shared tables for one (algebra, coalgebra) pair"""

    def __init__(self, Phi: Profunctor, algebra: Algebra, coalgebra: Algebra, budget: Budget):
        self.Phi = Phi
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.budget = budget
        dual_upper = coalgebra.image.upper
        # Phi_* beta as a presheaf on A, labelled by cones d[u][y]
        self.lower_beta = Presheaf(Phi.A, dual_upper.sizes, dual_upper.act, dual_upper.elements)

    def candidates(self):
        return iter_nat_transforms(
            self.algebra.carrier, self.lower_beta.labelled(), budget=self.budget
        )

    def transpose(self, f: Components) -> Components:
        """f'(y)[x][e] = f(e)[u][y], as a map beta -> Phi^* alpha"""
        Phi, img = self.Phi, self.algebra.image
        carrier = self.algebra.carrier
        result = []
        for u in Phi.B.objects:
            row = []
            for y in range(self.coalgebra.carrier.sizes[u]):
                cone = tuple(
                    tuple(
                        self.lower_beta.elements[x][f[x][e]][u][y]
                        for e in range(carrier.sizes[x])
                    )
                    for x in Phi.A.objects
                )
                index = img.upper.find(u, cone)
                if index is None:
                    raise InternalLawError(f"transpose at object {u} is not a cone")
                row.append(index)
            result.append(tuple(row))
        return tuple(result)

    def transpose_consistent(self, f: Components) -> bool:
        """The transpose is natural and transposes back to f"""
        Phi, img = self.Phi, self.algebra.image
        g = self.transpose(f)
        beta = self.coalgebra.carrier.as_postsheaf()
        if not is_natural(beta, img.upper.labelled(), g):
            return False
        for x in Phi.A.objects:
            for e in range(self.algebra.carrier.sizes[x]):
                d = tuple(
                    tuple(img.upper.elements[u][g[u][y]][x][e] for y in range(len(g[u])))
                    for u in Phi.B.objects
                )
                if self.lower_beta.find(x, d) != f[x][e]:
                    return False
        return True

    def is_loose(self, f: Components) -> bool:
        """f(a(t))[u][y] == t[u][f'(y)]: f is a map of algebras into Phi_* beta"""
        Phi, img, a = self.Phi, self.algebra.image, self.algebra.structure
        g = self.transpose(f)
        for x in Phi.A.objects:
            for j, t in enumerate(img.lower.elements[x]):
                self.budget.spend()
                d = self.lower_beta.elements[x][f[x][a[x][j]]]
                for u in Phi.B.objects:
                    if any(d[u][y] != t[u][g[u][y]] for y in range(len(g[u]))):
                        return False
        return True

    def is_tight(self, f: Components) -> bool:
        return is_mono(f) and is_epi(self.transpose(f), self.algebra.image.upper)


def _solve(
    Phi: Profunctor, i: int, j: int, algebra: Algebra, coalgebra: Algebra, budget: Budget
) -> ExtensionCell:
    solver = _CellSolver(Phi, algebra, coalgebra, budget)
    loose = []
    for f in solver.candidates():
        if solver.is_loose(f):
            if not solver.transpose_consistent(f):
                raise InternalLawError(f"inconsistent transpose in cell ({i}, {j})")
            loose.append(f)
    return ExtensionCell(i, j, tuple(loose))


def loose_extension(
    Phi: Profunctor,
    algebras: Sequence[Algebra],
    coalgebras: Sequence[Algebra],
    limits: Limits = DEFAULT_LIMITS,
    jobs: int = 1,
) -> ExtensionMatrix:
    """
    Fill every (algebra, coalgebra) cell with the algebra maps into Phi_* beta.

    Args:
        Phi: the matrix both monads come from
        algebras: algebras of Phi_* Phi^*
        coalgebras: algebras of the dual monad (see ``enumerate_coalgebras``)
        limits: budget for the whole matrix
        jobs: number of cells evaluated concurrently

    Returns:
        The matrix with loose entries; tight entries are left empty
    """
    for algebra in algebras:
        if algebra.carrier.base != Phi.A:
            raise InputError("row algebras must live on the source category of the matrix")
    for coalgebra in coalgebras:
        if coalgebra.carrier.base != Phi.B.opposite():
            raise InputError("column coalgebras must come from the dual monad")
    budget = Budget(limits.budget, "loose extension")
    tasks = [(i, j) for i in range(len(algebras)) for j in range(len(coalgebras))]

    def run(task):
        i, j = task
        return _solve(Phi, i, j, algebras[i], coalgebras[j], budget)

    if jobs > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            solved = list(pool.map(run, tasks))
    else:
        solved = [run(task) for task in tasks]
    cells: List[List[ExtensionCell]] = [[] for _ in algebras]
    for cell in solved:
        cells[cell.row].append(cell)
    total = sum(len(cell.loose) for cell in solved)
    logger.debug(f"loose extension: {total} maps in {len(solved)} cells")
    return ExtensionMatrix(
        Phi, tuple(algebras), tuple(coalgebras), tuple(tuple(row) for row in cells)
    )


def tight_extension(E: ExtensionMatrix) -> ExtensionMatrix:
    """Keep the loose maps that are mono with an epi transpose"""
    budget = Budget(DEFAULT_LIMITS.budget, "tight extension")
    cells = []
    for row in E.cells:
        tight_row = []
        for cell in row:
            solver = _CellSolver(E.Phi, E.rows[cell.row], E.cols[cell.col], budget)
            tight = tuple(f for f in cell.loose if solver.is_tight(f))
            tight_row.append(replace(cell, tight=tight))
        cells.append(tuple(tight_row))
    return replace(E, cells=tuple(cells))


def transpose(Phi: Profunctor, algebra: Algebra, coalgebra: Algebra, f: Components) -> Components:
    """The transpose beta -> Phi^* alpha of a map alpha -> Phi_* beta"""
    return _CellSolver(Phi, algebra, coalgebra, Budget()).transpose(f)
