"""Named verification checks.

``paper`` is the fixed list of fourteen acceptance checks (published examples and identities).
``all`` runs the structural invariants at a chosen rank n and always passes
on a correct installation.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from .bases import delta_delta, homogeneous_prefactor, kl_polynomial, vanishing_report
from .ctengine import ct_A, ct_N, ct_N_punctured, homogeneous_M, homogeneous_M_ct
from .exactalg import TAU, LaurentT, TauPoly, as_ratfunc, tau_express
from .polyring import EvalPoint, MultiPoly, act_sequence, baxterized_T, evaluate, hecke_T
from .schubert import flag_schur_det, schubert, schubert_sum_N, ybar, ytilde
from .shapes import (LabeledDiagram, Partition, kl_labels, n_lambda, parse_word, partition_from_word, schedule, staircase,
                     sub_partitions)
from .symbolic import SymPoly, sym
from .tableaux import (augment_filling, enumerate_fillings, enumerate_nilp, even_column_shapes,
                       filling_to_nilp, filling_to_skew_tableau, flagged_gen, flagged_tableaux,
                       nilp_generating_function, nilp_to_filling, nilp_weight, specialize_weights,
                       tableau_to_filling)
from .transition import (ExpansionTable, YMonomial, YPoly, apply_hecke_to_table, coefficient,
                         expand_maximal, shift_table, verify_expansion)

__all__ = ["CheckResult", "ACCEPTANCE_CHECKS", "run_suite", "invariant_checks"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.name} ({self.seconds:.1f}s): {self.detail}"


def _run(name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crashing check is a failing check
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(name, bool(ok), detail, time.perf_counter() - start)


def _tau(text: str) -> TauPoly:
    return TauPoly.parse(text)


def _random_poly(rng: random.Random, n: int, terms: int = 4, deg: int = 3) -> MultiPoly:
    data = {}
    for _ in range(terms):
        exps = tuple(rng.randint(0, deg) for _ in range(n))
        data[exps] = LaurentT({rng.randint(-1, 1): rng.randint(-3, 3) or 1})
    return MultiPoly(n, data)


# ---------------------------------------------------------------------------
# the fourteen published checks

def hecke_relations(samples: int = 100, seed: int = 2024) -> tuple[bool, str]:
    rng = random.Random(seed)
    t = LaurentT.monomial(1)
    bad = []
    for k in range(samples):
        n = rng.randint(3, 8)
        f = _random_poly(rng, n)
        i = rng.randint(1, n - 1)
        Tf = hecke_T(i, f)
        if hecke_T(i, Tf) - Tf.scale(t - t ** -1) - f != MultiPoly.zero(n):
            bad.append(("quadratic", k))
        if i < n - 1:
            lhs = hecke_T(i, hecke_T(i + 1, hecke_T(i, f)))
            rhs = hecke_T(i + 1, hecke_T(i, hecke_T(i + 1, f)))
            if lhs != rhs:
                bad.append(("braid", k))
            u, v = rng.randint(1, 5), rng.randint(1, 5)
            lhs = baxterized_T(i, u, baxterized_T(i + 1, u + v, baxterized_T(i, v, f)))
            rhs = baxterized_T(i + 1, v, baxterized_T(i, u + v, baxterized_T(i + 1, u, f)))
            if lhs != rhs:
                bad.append(("yang-baxter", k))
        far = [j for j in range(1, n) if abs(j - i) > 1]
        if far:
            j = rng.choice(far)
            if hecke_T(i, hecke_T(j, f)) != hecke_T(j, hecke_T(i, f)):
                bad.append(("commutation", k))
    return not bad, f"{samples} random polynomials, failures: {bad or 'none'}"


KL_N3_PRODUCTS = {
    "111000": [],
    "110100": [(3, 1)],
    "101100": [(2, 1), (3, 2)],
    "110010": [(4, 1), (3, 2)],
    "101010": [(2, 1), (4, 1), (3, 2)],
}
KL_N5_WORD = "1101101000"
KL_N5_PRODUCT = [(6, 1), (3, 1), (4, 2), (5, 3)]


def kl_goldens() -> tuple[bool, str]:
    bad = []
    for word, prod in KL_N3_PRODUCTS.items():
        if kl_polynomial(partition_from_word(parse_word(word)), 3) != act_sequence(prod, delta_delta(3)):
            bad.append(word)
    lam = partition_from_word(parse_word(KL_N5_WORD))
    if kl_polynomial(lam, 5) != act_sequence(KL_N5_PRODUCT, delta_delta(5)):
        bad.append(KL_N5_WORD)
    return not bad, f"mismatches: {bad or 'none'}"


def vanishing() -> tuple[bool, str]:
    reports = [vanishing_report(n) for n in (2, 3)]
    return all(r.ok for r in reports), ", ".join(f"n={r.n}: {len(r.words)}x{len(r.words)} ok={r.ok}" for r in reports)


EXPANSION_TUPLES = {
    2: [(0,), (1,), (2,)],
    3: [(0, 1), (1, 1), (2, 3)],
    4: [(0, 1, 2), (1, 1, 1), (2, 3, 1)],
}


def expansion_identity(ranks=(2, 3, 4)) -> tuple[bool, str]:
    bad = []
    for n in ranks:
        for u in EXPANSION_TUPLES[n]:
            if not verify_expansion(n, u).ok:
                bad.append((n, u))
    return not bad, f"failures: {bad or 'none'}"


def expansion_goldens() -> tuple[bool, str]:
    expected = ExpansionTable.parse("(2,1): 1\n(2): y1\n(1,1): y2\n(): y2\n(1): y1*y2", 3)
    ok3 = expand_maximal(3).entries == expected.entries
    ok7 = coefficient(Partition((2, 2)), 7) == YMonomial.parse("y3*y5*y6")
    ok4 = apply_hecke_to_table(shift_table(expand_maximal(3)), 4) == _as_ypolys(expand_maximal(4))
    okd = non_kl_diagram_identity()
    return (ok3 and ok7 and ok4 and okd,
            f"n=3 table {ok3}, c(2,2) at n=7 {ok7}, n=4 via Hecke step {ok4}, diagram [3 2 1|1|1] {okd}")


def non_kl_diagram_identity() -> bool:
    """The diagram (3,1,1) labelled [3 2 1 | 1 | 1] at n=4 is KL_(3,1,1) + KL_(3)."""
    lam = Partition((3, 1, 1))
    labels = {(1, 1): 3, (1, 2): 2, (1, 3): 1, (2, 1): 1, (3, 1): 1}
    d = LabeledDiagram(4, lam, tuple(sorted(labels.items())))
    lhs = act_sequence(schedule(d), delta_delta(4))
    return lhs == kl_polynomial(lam, 4) + kl_polynomial(Partition((3,)), 4)


def _as_ypolys(table: ExpansionTable) -> dict:
    return {p: YPoly.mono(m) for p, m in table.entries.items()}


def tau_specialisation(ranks=(2, 3, 4, 5)) -> tuple[bool, str]:
    inv = as_ratfunc(TAU).inverse()
    bad = []
    for n in ranks:
        y = {k: inv for k in range(1, n)}
        for lam in sub_partitions(staircase(n)):
            if coefficient(lam, n).evaluate(y) != as_ratfunc(TAU) ** (-n_lambda(lam, n)):
                bad.append((n, str(lam)))
    return not bad, f"failures: {bad or 'none'}"


def evaluations() -> tuple[bool, str]:
    m = tau_express(homogeneous_M(staircase(3), 3, (1, 1)))
    ones = EvalPoint.ones(6)
    total = sum((evaluate(kl_polynomial(lam, 3), ones) for lam in sub_partitions(staircase(3))),
                as_ratfunc(0))
    k = tau_express(total / homogeneous_prefactor(3))
    ok = m == _tau("3*T^-1 + 3*T + T^3") and k == _tau("1 + 3*T + 2*T^2 + T^3")
    return ok, f"M ratio {m}; KL sum ratio {k}"


PROP_TUPLES = [(1, 1), (2, 2), (1, 3)]


def prop_homogeneous() -> tuple[bool, str]:
    bad = [(str(lam), u) for lam in sub_partitions(staircase(3)) for u in PROP_TUPLES
           if homogeneous_M(lam, 3, u) != homogeneous_M_ct(lam, 3, u)]
    return not bad, f"failures: {bad or 'none'}"


def tsscpp_identity(ranks=(2, 3, 4)) -> tuple[bool, str]:
    t, T = sym("t"), sym("T")
    bad = []
    for n in ranks:
        lhs = ct_N(n, specialize_weights(n, t, T))
        rhs = ct_A(tuple(range(1, 2 * n, 2)), [t] * (n - 1))
        if lhs != rhs:
            bad.append(n)
    return not bad, f"failures: {bad or 'none'}"


PUNCTURED = "1 + 7*T + 12*T^2 + 14*T^3"


def punctured() -> tuple[bool, str]:
    target = SymPoly.parse(PUNCTURED)
    ct = ct_N_punctured(3, 2)
    a = ct_A((1, 2, 3, 5, 7), [1, 1, 1, 1])
    m = tau_express(homogeneous_M(Partition((2, 1)), 5, (-1, -1, -1, -1)))
    routes = {"punctured CT": ct == target, "A_12357": a == target, "M at u=-1": m == _tau(PUNCTURED)}
    return all(routes.values()), "; ".join(f"{k}: {v}" for k, v in routes.items()) + f" (M route gives {m})"


EXSCHU = "t0 + t1 + t0^2*t1 + t0^2*t2 + t0*t1^2 + t0*t1*t2 + t1^2*t2"


def schubert_goldens() -> tuple[bool, str]:
    y = ybar(6)
    rho = staircase(3)
    small = SymPoly.parse("t0 + t1")
    big = SymPoly.parse("t0^2*t1 + t0^2*t2 + t0*t1^2 + t0*t1*t2 + t1^2*t2")
    checks = {
        "Y[0,1,0,0,0]": schubert((0, 1, 0, 0, 0), y, 0) == small,
        "Y[0,2,0,1,0]": schubert((0, 2, 0, 1, 0), y, 0) == big,
        "det (21/2)": flag_schur_det(rho, Partition((2,)), ytilde(3), (2, 3)) == small,
        "det (21/0)": flag_schur_det(rho, Partition(), ytilde(3), (2, 3)) == big,
        "N(t0,t1,t2)": schubert_sum_N(3) == SymPoly.parse(EXSCHU),
    }
    return all(checks.values()), ", ".join(f"{k} {v}" for k, v in checks.items())


def three_routes(ranks=(2, 3, 4)) -> tuple[bool, str]:
    bad = []
    for n in ranks:
        a, b, c = nilp_generating_function(n), ct_N(n), schubert_sum_N(n)
        if not a == b == c:
            bad.append(n)
    return not bad, f"failures: {bad or 'none'}"


def nilp_goldens() -> tuple[bool, str]:
    t, T = sym("t"), sym("T")
    # the seven-path example lives at rank 3 in our indexing (paths for t0..t2)
    seven = len(enumerate_nilp(3)) == 7
    gen = nilp_generating_function(3, specialize_weights(3, t, T)) == SymPoly.parse("T^3 + 2*t*T^2 + 2*t^2*T + T + t")
    inv = nilp_generating_function(3, specialize_weights(3, T ** -1, T)) == SymPoly.parse("3*T^-1 + 3*T + T^3")
    one = nilp_generating_function(3, specialize_weights(3, 1, T)) == SymPoly.parse("1 + 3*T + 2*T^2 + T^3")
    counts = [len(enumerate_nilp(n)) for n in range(1, 5)]
    ok = seven and gen and inv and one and counts == [1, 2, 7, 42]
    return ok, f"seven={seven}, N(t,T)={gen}, N(1/T,T)={inv}, N(1,T)={one}, counts={counts}"


def bijections(ranks=(1, 2, 3)) -> tuple[bool, str]:
    bad = []
    for n in ranks:
        for f in enumerate_fillings(n):
            af = augment_filling(f)
            cfg = filling_to_nilp(af)
            tab = filling_to_skew_tableau(af)
            if not (cfg.is_non_intersecting() and nilp_to_filling(cfg) == af
                    and tableau_to_filling(tab) == af and tab.is_valid()
                    and tab.weight() == nilp_weight(cfg)):
                bad.append((n, str(f)))
        inner = even_column_shapes(n)
        count = sum(len(list(flagged_tableaux(staircase(n), mu, n))) for mu in inner)
        if count != len(enumerate_fillings(n)):
            bad.append((n, "count"))
    return not bad, f"failures: {bad or 'none'}"


ACCEPTANCE_CHECKS: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
    ("1 Hecke and Yang-Baxter relations", hecke_relations),
    ("2 KL operator products", kl_goldens),
    ("3 KL vanishing property", vanishing),
    ("4 M = sum c KL at n=2,3,4", expansion_identity),
    ("5 expansion tables", expansion_goldens),
    ("6 c at y=1/tau is tau^-n", tau_specialisation),
    ("7 homogeneous evaluations", evaluations),
    ("8 homogeneous M as constant term", prop_homogeneous),
    ("9 N(t,tau) = A_{1,3,..}(t)", tsscpp_identity),
    ("10 punctured N_{3,2}", punctured),
    ("11 Schubert polynomials and determinants", schubert_goldens),
    ("12 three routes to N", three_routes),
    ("13 lattice path enumeration", nilp_goldens),
    ("14 filling, path and tableau bijections", bijections),
]


# ---------------------------------------------------------------------------
# invariants at a chosen rank

def invariant_checks(n: int) -> list[tuple[str, Callable[[], tuple[bool, str]]]]:
    def schedules():
        bad = []
        for lam in sub_partitions(staircase(n)):
            d = kl_labels(lam, n)
            polys = [act_sequence(schedule(d, o), delta_delta(n)) for o in ("antidiagonal", "rows", "columns")]
            if not polys[0] == polys[1] == polys[2]:
                bad.append(str(lam))
        return not bad, f"schedule-order failures: {bad or 'none'}"

    def expansion():
        u = tuple(range(1, n))
        return verify_expansion(n, u).ok, f"u={u}"

    def hecke_step():
        if n < 3:
            return True, "trivial below rank 3"
        step = apply_hecke_to_table(shift_table(expand_maximal(n - 1)), n)
        return step == _as_ypolys(expand_maximal(n)), "shifted table"

    def routes():
        a, b, c = nilp_generating_function(n), ct_N(n), schubert_sum_N(n)
        d = schubert_sum_N(n, method="det")
        return a == b == c == d, f"{a.num_terms()} terms"

    def flagged():
        bad = [str(mu) for mu in even_column_shapes(n)
               if flagged_gen(staircase(n), mu, n) != flag_schur_det(staircase(n), mu.conjugate(), ytilde(n), tuple(range(2, n + 1)))]
        return not bad, f"failures: {bad or 'none'}"

    return [
        (f"vanishing at n={n}", lambda: (vanishing_report(n).ok, "")),
        (f"schedule independence at n={n}", schedules),
        (f"M = sum c KL at n={n}", expansion),
        (f"Hecke step reproduces the table at n={n}", hecke_step),
        (f"three routes to N at n={n}", routes),
        (f"flagged tableaux = flagged determinant at n={n}", flagged),
        (f"bijections at n={n}", lambda: bijections((n,))),
    ]


def run_suite(suite: str = "paper", n: int = 3, only: list[int] | None = None) -> list[CheckResult]:
    if suite == "paper":
        checks = ACCEPTANCE_CHECKS
        if only:
            checks = [ACCEPTANCE_CHECKS[k - 1] for k in only]
    elif suite == "all":
        checks = invariant_checks(n)
    else:
        raise ValueError(f"unknown suite {suite!r}")
    return [_run(name, fn) for name, fn in checks]
