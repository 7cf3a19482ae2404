"""Reconciliation suite: closed forms against enumeration and printed text."""

from __future__ import annotations

from fractions import Fraction
from time import perf_counter

from . import closed, oracle, polyq
from .closed import Variant
from .errors import BudgetExceeded, IdentityViolated, Mismatch, NeitherSign
from .gf import make_field
from .oracle import PosetKind
from .quadspace import AmbientKind, SubspaceClass, dot_space, lambda_dot_space
from .report import CheckRecord, Status, VerifyReport

# posets pay O(nodes^2) containment scans, so they stay small
POSET_Q_MAX = 5
POSET_N_MAX = 4
KSET_N_MAX = 16

_VARIANT_BY_CELL = {
    (AmbientKind.DOT, SubspaceClass.DOT_TYPE): Variant.DD,
    (AmbientKind.DOT, SubspaceClass.LAMBDA_DOT_TYPE): Variant.DL,
    (AmbientKind.LAMBDA_DOT, SubspaceClass.DOT_TYPE): Variant.LD,
    (AmbientKind.LAMBDA_DOT, SubspaceClass.LAMBDA_DOT_TYPE): Variant.LL,
}


def _ambient(field, kind, n):
    if kind is AmbientKind.DOT:
        return dot_space(field, n)
    return lambda_dot_space(field, n)


def _record(add, check, params, expected, actual, note=""):
    status = Status.PASS if expected == actual else Status.FAIL
    add(CheckRecord(check, params, str(expected), str(actual), status, note))


def _subspace_family(add, field, q, n, budget, jobs):
    for kind in (AmbientKind.DOT, AmbientKind.LAMBDA_DOT):
        ambient = _ambient(field, kind, n)
        for k in range(n + 1):
            params = f"q={q} n={n} k={k} ambient={kind.value}"
            try:
                tallies = oracle.count_subspaces_by_class(
                    ambient, k, budget=budget, jobs=jobs
                )
            except BudgetExceeded as exc:
                add(CheckRecord(
                    "oracle/subspace-count", params, "", "",
                    Status.SKIPPED, str(exc),
                ))
                continue
            for klass in (SubspaceClass.DOT_TYPE, SubspaceClass.LAMBDA_DOT_TYPE):
                variant = _VARIANT_BY_CELL[kind, klass]
                _record(
                    add, "oracle/subspace-count",
                    f"{params} variant={variant.value}",
                    closed.dot_binom_variant(q, n, k, variant),
                    tallies[klass],
                )
        params = f"q={q} n={n} ambient={kind.value}"
        try:
            got = oracle.count_lines(ambient, budget=budget, jobs=jobs)
        except BudgetExceeded as exc:
            add(CheckRecord("oracle/line-count", params, "", "",
                            Status.SKIPPED, str(exc)))
            continue
        _record(add, "oracle/line-count", params,
                closed.line_counts(q, n, kind), got)


def _closed_family(add, q, n):
    params = f"q={q} n={n}"
    try:
        closed.pascal_check(q, n)
        add(CheckRecord("closed/pascal", params,
                        "identities hold", "identities hold", Status.PASS))
    except IdentityViolated as exc:
        add(CheckRecord("closed/pascal", params,
                        "identities hold", "violated", Status.FAIL, str(exc)))
    shape = closed.shape_checks(q, n)
    actual = "euclidean={} lorentzian={}".format(
        "ok" if shape.euclidean.ok else "violated",
        "ok" if shape.lorentzian.ok else "violated",
    )
    add(CheckRecord(
        "closed/shape", params, "euclidean=ok lorentzian=ok", actual,
        Status.PASS if shape.ok else Status.FAIL,
    ))
    for k in range(1, n):
        kp = f"q={q} n={n} k={k}"
        try:
            closed.quotient_identity_check(q, n, k)
            add(CheckRecord("closed/quotient-identity", kp,
                            "identity holds", "identity holds", Status.PASS))
        except IdentityViolated as exc:
            add(CheckRecord("closed/quotient-identity", kp,
                            "identity holds", "violated", Status.FAIL, str(exc)))


def _poset_family(add, field, q, n, poset_budget):
    ambient = dot_space(field, n)
    params = f"q={q} n={n}"
    try:
        snap = oracle.build_poset(ambient, PosetKind.EUCLIDEAN, budget=poset_budget)
    except BudgetExceeded as exc:
        add(CheckRecord("oracle/poset-ranks", params + " kind=euclidean",
                        "", "", Status.SKIPPED, str(exc)))
        return
    _record(add, "oracle/poset-ranks", params + " kind=euclidean",
            tuple(closed.pascal_row(q, n)), snap.rank_sizes())
    _record(add, "oracle/flag-count", params,
            closed.bracket_factorial(q, n), oracle.count_flags(snap))
    _record(add, "oracle/mobius", params,
            closed.mobius_sequence(q, n).mu[n], oracle.mobius_bottom(snap))
    lo = oracle.build_poset(ambient, PosetKind.LORENTZIAN, budget=poset_budget)
    want = (1,) + tuple(
        closed.dot_binom_variant(q, n, k, Variant.DL) for k in range(1, n)
    ) + (1,)
    _record(add, "oracle/poset-ranks", params + " kind=lorentzian",
            want, lo.rank_sizes())


def _group_family(add, field, q, n, budget, jobs):
    params = f"q={q} n={n}"
    want = closed.group_order(q, n)
    try:
        got = oracle.enumerate_orthogonal_group(
            dot_space(field, n), budget=budget, jobs=jobs
        )
    except BudgetExceeded as exc:
        add(CheckRecord("oracle/group-order", params, str(want), "",
                        Status.SKIPPED, str(exc)))
        return
    _record(add, "oracle/group-order", params, want, got)


def _published_family(add, field, q, n, budget, jobs):
    for kind in (AmbientKind.DOT, AmbientKind.LAMBDA_DOT):
        note = ""
        try:
            s, t, _ = oracle.count_lines(
                _ambient(field, kind, n), budget=budget, jobs=jobs
            )
        except BudgetExceeded:
            s, t, _ = closed.line_counts(q, n, kind)
            note = "expected from fitted bracket; enumeration beyond budget"
        expected = {"spacelike": s, "timelike": t}
        for which in ("spacelike", "timelike"):
            verbatim = closed.verbatim_line_count(q, n, kind, which)
            status = (Status.PASS if verbatim == expected[which]
                      else Status.PAPER_DISCREPANCY)
            add(CheckRecord(
                "published/line-count",
                f"q={q} n={n} ambient={kind.value} which={which}",
                str(expected[which]), str(verbatim), status, note,
            ))
    params = f"q={q} n={n}"
    want = closed.group_order(q, n)
    value, note = closed.verbatim_group_order(q, n)
    if value is None:
        add(CheckRecord("published/group-order", params, str(want),
                        "not evaluable", Status.SKIPPED, note))
    else:
        status = Status.PASS if value == want else Status.PAPER_DISCREPANCY
        add(CheckRecord("published/group-order", params,
                        str(want), str(value), status, note))


def _poly_cell(add, key, compare_paper):
    params = f"class={key.q_class} n={key.n} k={key.k}"
    poly = polyq.dot_binom_poly(key)
    interior = 0 < key.k < key.n
    want_lead = polyq.HALF if interior else Fraction(1)
    _record(
        add, "poly/degree-lead", params,
        f"degree={key.k * (key.n - key.k)} lead={want_lead}",
        f"degree={poly.degree} lead={poly.leading_coefficient}",
    )
    if not interior:
        return
    try:
        sign = polyq.functional_equation_check(key)
    except NeitherSign as exc:
        add(CheckRecord("poly/sign", params, "definite sign", "neither",
                        Status.FAIL, str(exc)))
        sign = None
    else:
        if compare_paper:
            published = polyq.published_functional_sign(key)
            status = (Status.PASS if published is sign
                      else Status.PAPER_DISCREPANCY)
            note = ("" if status is Status.PASS
                    else "printed case list disagrees with coefficient reversal")
            add(CheckRecord("poly/sign", params, published.value, sign.value,
                            status, note))
        else:
            add(CheckRecord("poly/sign", params, "definite sign", sign.value,
                            Status.PASS))
    if compare_paper:
        rep = polyq.coefficient_symmetry_report(key)
        issues = []
        if not rep.bound_consistent:
            issues.append(
                f"printed index bound {rep.printed_bound} does not match "
                f"depressed degree {rep.depressed_degree}"
            )
        if not rep.matches_published:
            computed = rep.computed.value if rep.computed else "neither"
            issues.append(
                f"printed symmetry {rep.published.value} vs computed {computed}"
            )
        add(CheckRecord(
            "poly/symmetry", params, "printed table consistent",
            "consistent" if not issues else "; ".join(issues),
            Status.PASS if not issues else Status.PAPER_DISCREPANCY,
        ))
    x = 1 if key.q_class == 1 else -1
    _record(add, "poly/limit", f"{params} at q={x}",
            closed.limit_value(key.n, key.k), poly.evaluate(x))


def _poly_family(add, qs, max_n, compare_paper):
    for q_class in (1, 3):
        eval_qs = [q for q in qs if q % 4 == q_class]
        for n in range(1, max_n + 1):
            for k in range(n + 1):
                key = polyq.PolyFamilyKey(q_class, n, k)
                _poly_cell(add, key, compare_paper)
                for q in eval_qs:
                    params = f"class={q_class} n={n} k={k} q={q}"
                    try:
                        polyq.eval_consistency(key, q)
                        add(CheckRecord("poly/eval", params,
                                        "values agree", "values agree",
                                        Status.PASS))
                    except Mismatch as exc:
                        add(CheckRecord("poly/eval", params,
                                        "values agree", "mismatch",
                                        Status.FAIL, str(exc)))
            _record(
                add, "poly/row-symmetry", f"class={q_class} n={n}",
                "symmetric",
                "symmetric" if polyq.row_symmetric(q_class, n) else "asymmetric",
            )


def _kset_family(add):
    for n in range(2, KSET_N_MAX + 1):
        want = tuple(closed.limit_value(n, k) for k in range(1, n))
        got = tuple(oracle.count_symmetric_ksets(n, k) for k in range(1, n))
        _record(add, "ksets/limit-equality", f"n={n}", want, got)


def run_verify(qs, max_n, budget=oracle.DEFAULT_BUDGET, jobs=1,
               compare_paper=True,
               poset_budget=oracle.DEFAULT_POSET_BUDGET) -> VerifyReport:
    """Run every check family over the given field sizes and dimensions."""
    started = perf_counter()
    records = []
    add = records.append
    for q in qs:
        p, e = closed.odd_prime_power(q)
        field = make_field(p, e)
        for n in range(1, max_n + 1):
            _subspace_family(add, field, q, n, budget, jobs)
            _closed_family(add, q, n)
            if q <= POSET_Q_MAX and n <= POSET_N_MAX:
                _poset_family(add, field, q, n, poset_budget)
            _group_family(add, field, q, n, budget, jobs)
            if compare_paper:
                _published_family(add, field, q, n, budget, jobs)
    _poly_family(add, qs, max_n, compare_paper)
    _kset_family(add)
    return VerifyReport(tuple(records), perf_counter() - started)
