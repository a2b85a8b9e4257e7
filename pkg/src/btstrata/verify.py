"""Verification suites behind ``btstrata verify``.

Each suite returns a list of :class:`CheckResult`; a suite passes when all of
its checks do.
"""

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .coxeter import (
    lusztig_degree_S,
    lusztig_degree_T,
    s_symbol,
    t_symbol,
    verify_restriction_identity,
)
from .harish_chandra import induce, restrict_sp
from .oracle import oracle_counts
from .partitions import add_strip, partitions_of, remove_strip
from .qpoly import Q, eval_at
from .strata import (
    ab_split,
    cohomology_from_e1,
    cohomology_of_S,
    e1_closed_form,
    e1_page,
    lagrangian_count,
    point_count_S,
    point_count_stratum,
)
from .symbols import (
    Symbol,
    cohooks,
    defect,
    degree,
    enumerate_symbols,
    hooks,
    rank,
    shift,
    steinberg_symbol,
    symbol_to_label,
)

LEFSCHETZ_CASES = [(1, 2, 1), (1, 2, 2), (1, 3, 2), (2, 2, 1), (2, 2, 2), (2, 3, 1),
                   (2, 3, 2), (3, 2, 1), (3, 2, 2)]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"[{status}] {self.name}{extra} [{self.seconds:.2f}s]"


def _timed(name, fn):
    t0 = time.perf_counter()
    try:
        passed, detail = fn()
    except Exception as exc:  # a crash is a failed check, not an aborted suite
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(name, passed, detail, time.perf_counter() - t0)


RANK2_CENSUS = {
    Symbol((2,), ()): (1, ((2,), ())),
    Symbol((0, 1), (2,)): (1, ((), (2,))),
    Symbol((0, 2), (1,)): (1, ((1,), (1,))),
    Symbol((1, 2), (0,)): (1, ((1, 1), ())),
    Symbol((0, 1, 2), (1, 2)): (1, ((), (1, 1))),
    Symbol((0, 1, 2), ()): (3, ((), ())),
}


def census():
    def run():
        got = {s: (defect(s), symbol_to_label(s).bip) for s in enumerate_symbols(2)}
        return got == RANK2_CENSUS, f"{len(got)} symbols"
    return [_timed("symbol census rank 2", run)]


def degrees(theta_max=6):
    def run():
        bad = []
        for theta in range(1, theta_max + 1):
            for i in range(theta + 1):
                if degree(s_symbol(theta, i)) != lusztig_degree_S(theta, i):
                    bad.append(f"S({theta},{i})")
            for j in range(theta - 1):
                if degree(t_symbol(theta, j)) != lusztig_degree_T(theta, j):
                    bad.append(f"T({theta},{j})")
            if degree(steinberg_symbol(theta)) != Q ** (theta * theta):
                bad.append(f"St({theta})")
        cusp = Symbol((0, 1, 2), ())
        if degree(cusp) != Q * (Q - 1) ** 2 * Fraction(1, 2):
            bad.append("theta10")
        return not bad, ", ".join(bad) or f"theta <= {theta_max}"
    return [_timed("hook formula vs closed-form degrees", run)]


def restriction(theta_max=6):
    return [_timed(f"restriction identity theta={t}", lambda t=t: (verify_restriction_identity(t), ""))
            for t in range(2, theta_max + 1)]


def e1(theta_max=5):
    def run():
        bad = []
        for theta in range(theta_max + 1):
            page = e1_page(theta)
            for tp in range(theta + 1):
                for i in range(tp + 1):
                    if e1_closed_form(theta, tp, i) != page[(tp, i)]:
                        bad.append(f"({theta},{tp},{i})")
        return not bad, ", ".join(bad) or f"theta <= {theta_max}"
    return [_timed("E1 closed form vs induction", run)]


def ladder(theta_max=5):
    def run():
        bad = []
        for theta in range(theta_max + 1):
            page = e1_page(theta)
            splits = {(tp, i): ab_split(theta, tp, i, page)
                      for tp in range(theta + 1) for i in range(tp + 1)}
            for i in range(theta + 1):
                top = splits[(theta, i)]
                if top.A1 or top.B1:
                    bad.append(f"top({theta},{i})")
            for (tp, i), sp in splits.items():
                if tp < theta:
                    if sp.A1 != splits[(tp + 1, i)].A0:
                        bad.append(f"A({theta},{tp},{i})")
                    if i + 2 <= tp and sp.B1 != splits[(tp + 1, i)].B0:
                        bad.append(f"B({theta},{tp},{i})")
        return not bad, ", ".join(bad) or f"theta <= {theta_max}"
    return [_timed("A/B ladder identities", run)]


def main_theorem(theta_max=6):
    def run():
        bad = []
        for theta in range(theta_max + 1):
            coh = cohomology_of_S(theta)
            if coh.even != cohomology_from_e1(theta).even:
                bad.append(f"E1({theta})")
            graded = coh.graded()
            if any(k % 2 for k in graded):
                bad.append(f"odd({theta})")
            for i in range(theta + 1):
                if coh.symbols_in_degree(2 * i) != coh.symbols_in_degree(2 * (theta - i)):
                    bad.append(f"duality({theta},{i})")
            for k, terms in graded.items():
                if any(ev.exp != k // 2 for _, ev in terms):
                    bad.append(f"weight({theta},{k})")
        return not bad, ", ".join(bad) or f"theta <= {theta_max}"
    return [_timed("main theorem consistency", run)]


def euler(theta_max=4):
    def run():
        bad = [t for t in range(theta_max + 1) if point_count_S(t, 1) != lagrangian_count(t)]
        return not bad, f"failing theta {bad}" if bad else f"theta <= {theta_max}"
    return [_timed("Euler characteristic / rational points", run)]


def lefschetz(cases=None, max_work=None):
    out = []
    for theta, q, n in cases or LEFSCHETZ_CASES:
        def run(theta=theta, q=q, n=n):
            total, per = oracle_counts(theta, q, n, max_work=max_work)
            page = e1_page(theta)
            pred = eval_at(point_count_S(theta, n), q)
            per_pred = {tp: eval_at(point_count_stratum(theta, tp, n, page), q)
                        for tp in range(theta + 1)}
            ok = total == pred and per == per_pred
            return ok, f"oracle {total} {dict(per)} vs predicted {int(pred)}"
        out.append(_timed(f"Lefschetz vs brute force theta={theta} q={q} n={n}", run))
    return out


def _random_symbol(rng):
    theta = rng.randint(1, 8)
    return rng.choice(enumerate_symbols(theta))


def properties(seed=0, theta_max=5):
    rng = random.Random(seed)

    def shift_invariance():
        for _ in range(200):
            s = _random_symbol(rng)
            t = shift(s, rng.randint(1, 3))
            if (rank(t), defect(t), hooks(t), cohooks(t), degree(t)) != (
                    rank(s), defect(s), hooks(s), cohooks(s), degree(s)):
                return False, f"{s}"
        return True, "200 symbols"

    def strip_duality():
        for size in range(9):
            for t in partitions_of(size):
                for d in range(5):
                    for u in add_strip(t, d):
                        if t not in remove_strip(u, d):
                            return False, f"{t} {u}"
                    for u in remove_strip(t, d):
                        if t not in add_strip(u, d):
                            return False, f"{t} {u}"
        return True, "|t| <= 8, d <= 4"

    def reciprocity():
        for theta in range(theta_max + 1):
            for s in enumerate_symbols(theta) if theta else [Symbol((0,), ())]:
                for a in range(1, 4):
                    for t in induce(a, s):
                        if s not in restrict_sp(a, t):
                            return False, f"{s} -> {t}"
                    if a <= theta:
                        for t in restrict_sp(a, s):
                            if s not in induce(a, t):
                                return False, f"{s} <- {t}"
        return True, f"theta <= {theta_max}, a <= 3"

    def integrality():
        for theta in range(1, theta_max + 1):
            for s in enumerate_symbols(theta):
                deg = degree(s)
                for q0 in (2, 3, 4, 5, 7, 9):
                    v = eval_at(deg, q0)
                    if v.denominator != 1 or v <= 0:
                        return False, f"{s} at q={q0}"
        return True, f"theta <= {theta_max}"

    return [
        _timed("shift invariance", shift_invariance),
        _timed("strip duality", strip_duality),
        _timed("induce/restrict reciprocity", reciprocity),
        _timed("degree integrality", integrality),
    ]


def run_suite(name, theta_max=None, max_work=None):
    """Run one suite (or ``"all"``) and return its results."""
    def cap(default):
        return default if theta_max is None else min(default, theta_max)

    suites = {
        "census": lambda: census(),
        "degrees": lambda: degrees(cap(6)),
        "restriction": lambda: restriction(cap(6)),
        "e1": lambda: e1(cap(5)),
        "ladder": lambda: ladder(cap(5)),
        "main": lambda: main_theorem(cap(6)),
        "euler": lambda: euler(cap(4)),
        "lefschetz": lambda: lefschetz(
            [c for c in LEFSCHETZ_CASES if theta_max is None or c[0] <= theta_max], max_work),
        "properties": lambda: properties(theta_max=cap(5)),
    }
    if name == "all":
        return [r for key in suites for r in suites[key]()]
    if name not in suites:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(['all', *suites])}")
    return suites[name]()


SUITES = ["all", "census", "degrees", "restriction", "e1", "ladder", "main", "euler",
          "lefschetz", "properties"]
