"""Run every identity checker over a parameter grid and summarize the verdicts."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import genfunc, identities, matrixgen
from .report import IdentityReport
from .sequences import SeqParams, engine_for

__all__ = ["FAMILIES", "SuiteGrid", "run_suite", "summarize", "abc_cube"]

FAMILIES = (
    "recurrence",
    "binet",
    "lemma1",
    "triple_sum",
    "vajda",
    "catalan",
    "cassini",
    "docagne",
    "partial_sum_scalar",
    "partial_sum",
    "genfunc",
    "column_relation",
    "matrix_identity",
)


def abc_cube(k: int) -> tuple[SeqParams, ...]:
    return tuple(SeqParams(a, b, c) for a, b, c in itertools.product(range(1, k + 1), repeat=3))


def _r(lo: int, hi: int) -> tuple[int, ...]:
    return tuple(range(lo, hi + 1))


@dataclass(frozen=True)
class SuiteGrid:
    abc: tuple[SeqParams, ...] = field(default_factory=lambda: abc_cube(4))
    seq_n: tuple[int, ...] = _r(0, 40)
    lemma_n: tuple[int, ...] = _r(0, 30)
    triple_n: tuple[int, ...] = _r(0, 24)
    vajda_n: tuple[int, ...] = _r(0, 12)
    vajda_p: tuple[int, ...] = _r(-4, 4)
    vajda_q: tuple[int, ...] = _r(-4, 4)
    catalan_n: tuple[int, ...] = _r(0, 12)
    catalan_p: tuple[int, ...] = _r(0, 4)
    cassini_n: tuple[int, ...] = _r(1, 12)
    docagne_n: tuple[int, ...] = _r(0, 12)
    docagne_m: tuple[int, ...] = _r(0, 12)
    sum_n: tuple[int, ...] = _r(0, 20)
    genfunc_N: tuple[int, ...] = (20,)
    genfunc_abc: tuple[SeqParams, ...] = field(default_factory=lambda: abc_cube(3))
    matrix_n: tuple[int, ...] = _r(0, 12)
    matrix_abc: tuple[SeqParams, ...] = field(default_factory=lambda: abc_cube(3))
    only: frozenset[str] | None = None
    printed_denominator: bool = False

    @classmethod
    def empty(cls) -> SuiteGrid:
        return cls(
            abc=(), seq_n=(), lemma_n=(), triple_n=(), vajda_n=(), vajda_p=(), vajda_q=(),
            catalan_n=(), catalan_p=(), cassini_n=(), docagne_n=(), docagne_m=(), sum_n=(), genfunc_N=(), genfunc_abc=(),
            matrix_n=(), matrix_abc=(),
        )

    def wants(self, family: str) -> bool:
        return self.only is None or family in self.only


def _run_task(grid: SuiteGrid, family: str, params: SeqParams | None, keep_sides: bool) -> list[IdentityReport]:
    out: list[IdentityReport] = []
    add = out.append
    if family == "recurrence":
        for n in grid.seq_n:
            if n >= 0:
                add(identities.check_recurrence(n, params))
    elif family == "binet":
        for n in grid.seq_n:
            add(identities.check_binet(n, params))
    elif family == "lemma1":
        for n in grid.lemma_n:
            add(identities.check_lemma1(n))
    elif family == "triple_sum":
        for n in grid.triple_n:
            add(identities.check_triple_sum(n, params))
    elif family == "vajda":
        for n, p, q in itertools.product(grid.vajda_n, grid.vajda_p, grid.vajda_q):
            out.extend(identities.check_vajda(n, p, q, params))
        engine_for(params).clear_products()
    elif family == "catalan":
        for n, p in itertools.product(grid.catalan_n, grid.catalan_p):
            add(identities.check_catalan(n, p, params))
    elif family == "cassini":
        for n in grid.cassini_n:
            add(identities.check_cassini(n, params))
    elif family == "docagne":
        for n, m in itertools.product(grid.docagne_n, grid.docagne_m):
            add(identities.check_docagne(n, m, params))
    elif family == "partial_sum_scalar":
        for n in grid.sum_n:
            add(identities.check_partial_sum_scalar(n))
    elif family == "partial_sum":
        for n in grid.sum_n:
            add(identities.check_partial_sum(n, params))
    elif family == "genfunc":
        for N in grid.genfunc_N:
            add(genfunc.check_genfunc(N, params, printed_denominator=grid.printed_denominator))
    elif family == "column_relation":
        for n in grid.matrix_n:
            if n >= 1:
                add(matrixgen.check_column_relation(n, params))
    elif family == "matrix_identity":
        for n in grid.matrix_n:
            add(matrixgen.check_matrix_identity(n, params))
    else:
        raise ValueError(f"unknown identity family {family!r}")
    if not keep_sides:
        out = [r if not r.equal else r.without_sides() for r in out]
    return out


def _tasks(grid: SuiteGrid) -> list[tuple[str, SeqParams | None]]:
    tasks = []
    for family in FAMILIES:
        if not grid.wants(family):
            continue
        if family in ("lemma1", "partial_sum_scalar"):
            tasks.append((family, None))
        elif family == "genfunc":
            tasks.extend((family, p) for p in grid.genfunc_abc)
        elif family in ("column_relation", "matrix_identity"):
            tasks.extend((family, p) for p in grid.matrix_abc)
        else:
            tasks.extend((family, p) for p in grid.abc)
    return tasks


def _run_packed(args):
    return _run_task(*args)


def run_suite(grid: SuiteGrid | None = None, *, workers: int = 1, keep_sides: bool = False) -> list[IdentityReport]:
    """Execute every selected checker over ``grid``.

    Passing reports drop their ``lhs``/``rhs`` unless ``keep_sides`` is set;
    failing reports always keep them.  The result is sorted by identity name
    and parameters, so it does not depend on ``workers``.
    """
    grid = grid or SuiteGrid()
    jobs = [(grid, family, params, keep_sides) for family, params in _tasks(grid)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_run_packed, jobs))
    else:
        chunks = [_run_packed(job) for job in jobs]
    reports = [r for chunk in chunks for r in chunk]
    reports.sort(key=IdentityReport.sort_key)
    return reports


def summarize(reports: list[IdentityReport]) -> dict:
    by_identity: dict[str, dict[str, int]] = {}
    first_failure = None
    for r in reports:
        slot = by_identity.setdefault(r.identity, {"total": 0, "failed": 0})
        slot["total"] += 1
        if not r.equal:
            slot["failed"] += 1
            if first_failure is None:
                first_failure = r
    failed = sum(v["failed"] for v in by_identity.values())
    return {
        "total": len(reports),
        "passed": len(reports) - failed,
        "failed": failed,
        "by_identity": dict(sorted(by_identity.items())),
        "first_failure": first_failure.to_json() if first_failure else None,
    }
