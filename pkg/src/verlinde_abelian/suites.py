"""Verification suites run by ``verlinde verify``.

Each suite tallies how many times each named identity was checked and how
many checks failed.  Any library error raised while checking counts as a
failure of that identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import (
    count_coordinate_solutions,
    count_torsion_solutions_direct,
    divisors,
    solve_congruence_pair,
    _check_pair,
)
from .errors import VerlindeError
from .families import (
    degree_zero_pairs,
    lemma_a2_instances,
    random_lemma_a1_instances,
    random_orthogonal_pairs,
    random_twist_cases,
)
from .heisenberg import multiplicity_from_traces, trace_from_decomposition
from .verlinde import (
    decompose,
    decompose_minus,
    decompose_plus,
    duality_check,
    trace,
    twist_invariance_check,
    verlinde_number,
)

SUITES = ("duality", "twist", "bookkeeping", "appendix")
MAX_RECORDED_FAILURES = 20


@dataclass
class Tally:
    checked: dict = field(default_factory=dict)
    failed: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def record(self, name: str, ok: bool, detail: str = "") -> None:
        self.checked[name] = self.checked.get(name, 0) + 1
        if not ok:
            self.failed[name] = self.failed.get(name, 0) + 1
            if len(self.failures) < MAX_RECORDED_FAILURES:
                self.failures.append(f"{name}: {detail}")

    def check(self, name: str, fn, detail: str = "") -> None:
        try:
            ok = bool(fn())
            msg = detail
        except VerlindeError as exc:
            ok, msg = False, f"{detail} ({type(exc).__name__}: {exc})"
        self.record(name, ok, msg)

    @property
    def ok(self) -> bool:
        return not self.failed

    def to_json(self) -> dict:
        return {
            "results": {
                k: {"checked": self.checked[k], "failed": self.failed.get(k, 0)}
                for k in sorted(self.checked)
            },
            "failures": list(self.failures),
            "ok": self.ok,
        }


def _duality(tally: Tally, max_d: int, seed: int, count: int = 200) -> None:
    for v, w in random_orthogonal_pairs(count, seed=seed, max_d=max_d):
        tag = f"v={v} w={w}"
        try:
            report = duality_check(v, w)
        except VerlindeError as exc:
            tally.record("duality_check", False, f"{tag} ({type(exc).__name__}: {exc})")
            continue
        for name, ok in sorted(report.identities.items()):
            tally.record(name, ok, tag)


def _twist(tally: Tally, max_d: int, seed: int, count: int = 100) -> None:
    for v, w, ell in random_twist_cases(count, seed=seed, max_d=max_d):
        tally.check("twist_invariance", lambda: twist_invariance_check(v, w, ell), f"v={v} w={w} ell={ell}")


def _bookkeeping(tally: Tally, max_d: int, seed: int) -> None:
    for v, w in degree_zero_pairs(max_sum=max_d):
        tag = f"v={v} w={w}"

        def full():
            tab = decompose(v, w)
            return tab.total_rank == verlinde_number(tab.d_v, tab.d_w)

        tally.check("full_rank_bookkeeping", full, tag)
        tally.check("plus_rank_bookkeeping", lambda: decompose_plus(v, w).total_rank == verlinde_number(v.d, w.d), tag)
        tally.check("minus_rank_bookkeeping", lambda: decompose_minus(v, w).total_rank == verlinde_number(v.d, w.d), tag)
        tally.check("multiplicity_from_traces", lambda: multiplicity_from_traces(v, w) is not None, tag)

        def traces():
            tab = decompose(v, w)
            return all(
                trace_from_decomposition(tab, dl, seed=seed) == trace(v, w, dl)
                for dl in divisors(tab.delta)
            )

        tally.check("trace_round_trip", traces, tag)


def _appendix(tally: Tally, max_d: int, seed: int, a1_count: int = 50) -> None:
    for inst in lemma_a2_instances(coef_bound=8, max_d=max_d):
        tally.record(
            "lemma_a2_count",
            count_coordinate_solutions(*inst.as_tuple()) == inst.d,
            f"{inst.as_tuple()}",
        )
    for inst in lemma_a2_instances(coef_bound=2, max_d=min(max_d, 3)):
        tally.check(
            "lemma_a2_reduction",
            lambda: count_torsion_solutions_direct(inst) == count_coordinate_solutions(*inst.as_tuple()) ** 4,
            f"{inst.as_tuple()}",
        )
    for inst in random_lemma_a1_instances(a1_count, seed=seed):
        tally.check("lemma_a1_solver", lambda: _check_pair(inst, *solve_congruence_pair(inst)), f"{inst.as_tuple()}")


_RUNNERS = {"duality": _duality, "twist": _twist, "bookkeeping": _bookkeeping, "appendix": _appendix}


def run_suite(name: str, max_d: int = 30, seed: int = 0) -> dict:
    """Run one suite (or ``"all"``) and return a JSON-ready summary."""
    names = SUITES if name == "all" else (name,)
    tally = Tally()
    for suite in names:
        _RUNNERS[suite](tally, max_d, seed)
    doc = {"suite": name, "max_d": max_d, "seed": seed}
    doc.update(tally.to_json())
    return doc
