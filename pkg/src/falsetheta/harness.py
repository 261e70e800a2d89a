"""Verification suites that cross-check the series, enumeration and involution routes."""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Iterator, Sequence

from . import diagrams as dg
from . import partitions as pt
from . import qseries as qs
from .errors import FalseThetaError

SCHEMA_VERSION = 1


@dataclass
class VerificationReport:
    suite: str
    parameters: dict[str, Any]
    failures: list[dict[str, str]] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def status(self) -> str:
        return "fail" if self.failures else "pass"

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, what: Any, expected: Any, actual: Any) -> None:
        self.failures.append({"input": str(what), "expected": str(expected), "actual": str(actual)})

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        out = {
            "suite": self.suite,
            "parameters": self.parameters,
            "status": self.status,
            "failures": self.failures,
        }
        if timing:
            out["elapsed_ms"] = self.elapsed_ms
        return out

    def summary(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        line = f"{self.status.upper():4} {self.suite} [{params}]"
        if self.failures:
            line += f" ({len(self.failures)} failures)"
        return line


@contextmanager
def _timed(suite: str, **params: Any) -> Iterator[VerificationReport]:
    report = VerificationReport(suite, {k: str(v) for k, v in params.items()})
    start = time.perf_counter()
    yield report
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)


def workers() -> int:
    try:
        return max(1, int(os.environ.get("FALSETHETA_THREADS", "1")))
    except ValueError:
        return 1


# --------------------------------------------------------------------------- series


def expected_rhs_terms(ident: qs.Identity, N: int) -> dict[tuple[int, int], int]:
    """Closed-form support of the right side, built without the series code."""
    out = {}
    j = 0
    while True:
        if ident.name == "fq4":
            key = (0, 2 * j * (j + 1))
        elif ident.name == "fq3":
            key = (0, 3 * j * (j + 1) // 2)
        else:
            key = (2 * j, j * (ident.m * j + 2 * ident.r))
        if key[1] > N:
            return out
        out[key] = (-1) ** j
        j += 1


def identity_suite(ident: qs.Identity, N: int) -> VerificationReport:
    with _timed(f"identity:{ident}", N=N) as rep:
        lhs = qs.identity_lhs(ident, N)
        rhs = qs.identity_rhs(ident, N)
        expected = expected_rhs_terms(ident, N)
        if rhs.terms() != expected:
            rep.fail("rhs support", expected, rhs.terms())
        got = lhs.terms()
        for key in sorted(set(got) | set(expected), key=lambda t: (t[1], t[0])):
            if got.get(key, 0) != expected.get(key, 0):
                rep.fail(f"z^{key[0]} q^{key[1]}", expected.get(key, 0), got.get(key, 0))
    return rep


def series_agreement_suite(family: pt.Family, N: int) -> VerificationReport:
    """Enumerated signed counts against the left side of the matching identity."""
    with _timed(f"series-vs-enumeration:{family}", N=N) as rep:
        ident = qs.identity_for(family)
        combin = qs.series_from_enumeration(family, N)
        lhs = qs.identity_lhs(ident, N)
        if combin != lhs:
            a, b = combin.terms(), lhs.terms()
            for key in sorted(set(a) | set(b), key=lambda t: (t[1], t[0])):
                if a.get(key, 0) != b.get(key, 0):
                    rep.fail(f"z^{key[0]} q^{key[1]}", b.get(key, 0), a.get(key, 0))
    return rep


def ring_law_suite(seed: int = 0, trials: int = 40, N: int = 30) -> VerificationReport:
    rng = random.Random(seed)

    def sample(unit: bool = False) -> qs.BivariateSeries:
        terms = {(rng.randrange(4), rng.randrange(N + 1)): rng.randint(-5, 5) for _ in range(8)}
        if unit:
            terms = {key: c for key, c in terms.items() if key[1] > 0}
            terms[(0, 0)] = 1
        return qs.BivariateSeries(N, terms)

    with _timed("ring-laws", seed=seed, trials=trials, N=N) as rep:
        one = qs.BivariateSeries.one(N)
        for t in range(trials):
            a, b, c = sample(), sample(), sample()
            if (a * b) * c != a * (b * c):
                rep.fail(f"trial {t} associativity", "equal", "differs")
            if a * b != b * a or a + b != b + a:
                rep.fail(f"trial {t} commutativity", "equal", "differs")
            if a * (b + c) != a * b + a * c:
                rep.fail(f"trial {t} distributivity", "equal", "differs")
            if not (a + (-a)).is_zero():
                rep.fail(f"trial {t} negation", 0, a + (-a))
            u = sample(unit=True)
            inv = u.invert()
            if u * inv != one or inv.invert() != u:
                rep.fail(f"trial {t} inverse", "1", u * inv)
    return rep


# --------------------------------------------------------------------------- enumeration


def enumeration_suite(family: pt.Family, n_max: int) -> VerificationReport:
    with _timed(f"signed-count:{family}", n_max=n_max) as rep:
        for n in range(n_max + 1):
            pairs = pt.enumerate_pairs(n, family)
            even, odd = pt.parity_counts(n, family)
            if even + odd != len(pairs):
                rep.fail(f"n={n} parity total", len(pairs), even + odd)
            got, want = even - odd, pt.predicted_count(n, family)
            if got != want:
                rep.fail(f"n={n}", want, got)
            if isinstance(family, pt.General):
                j = pt.predicted_index(n, family)
                expect = {} if j is None else {2 * j: (-1) ** j}
                poly = pt.signed_bivariate(n, family)
                if poly != expect:
                    rep.fail(f"n={n} z-refinement", expect, poly)
                if sum(poly.values()) != got:
                    rep.fail(f"n={n} z=1 specialization", got, sum(poly.values()))
    return rep


# --------------------------------------------------------------------------- involution


def check_involution_at(n: int, family: pt.General) -> tuple[list[dict[str, str]], int]:
    """Every involution property at one n; returns failures and the telescoped sum."""
    failures: list[dict[str, str]] = []

    def fail(what: Any, expected: Any, actual: Any) -> None:
        failures.append({"input": f"n={n} {what}", "expected": str(expected), "actual": str(actual)})

    pairs = pt.enumerate_pairs(n, family)
    members = set(pairs)
    fixed = []
    for p in pairs:
        try:
            cls = dg.classify(p)
            partner, is_fixed = dg.involution_partner(p)
        except FalseThetaError as exc:
            fail(p, "a partner", f"{type(exc).__name__}: {exc}")
            continue
        if is_fixed:
            fixed.append(p)
            continue
        if partner == p:
            fail(p, "partner != pair", partner)
        if partner not in members:
            fail(p, "partner in the same family and weight", partner)
            continue
        if pt.sign(partner) != -pt.sign(p):
            fail(p, "opposite sign", partner)
        if pt.z_weight(partner) != pt.z_weight(p):
            fail(p, f"z-weight {pt.z_weight(p)}", pt.z_weight(partner))
        try:
            back, _ = dg.involution_partner(partner)
            partner_cls = dg.classify(partner)
        except FalseThetaError as exc:
            fail(partner, "a partner", f"{type(exc).__name__}: {exc}")
            continue
        if back != p:
            fail(p, "involution", back)
        if partner_cls != dg.PARTNER_CLASS[cls]:
            fail(p, f"{cls} -> {dg.PARTNER_CLASS[cls]}", partner_cls)
    want_fixed = dg.fixed_points(n, family)
    if fixed != want_fixed:
        fail("fixed points", [str(p) for p in want_fixed], [str(p) for p in fixed])
    telescoped = sum(pt.sign(p) for p in fixed)
    if telescoped != pt.predicted_count(n, family):
        fail("telescoped sum", pt.predicted_count(n, family), telescoped)
    return failures, telescoped


def involution_suite(family: pt.Family, n_max: int) -> VerificationReport:
    if not isinstance(family, pt.General):
        raise dg.NotApplicable("no involution is known for FQ3Prime")
    with _timed(f"involution:{family}", n_max=n_max) as rep:
        ns = list(range(n_max + 1))
        nw = workers()
        if nw > 1:
            with ProcessPoolExecutor(max_workers=nw) as pool:
                results = list(pool.map(check_involution_at, ns, [family] * len(ns)))
        else:
            results = [check_involution_at(n, family) for n in ns]
        for failures, _ in results:
            rep.failures.extend(failures)
    return rep


def triple_agreement_suite(family: pt.Family, n_max: int) -> VerificationReport:
    """Series coefficient = signed enumeration = telescoped involution sum = prediction."""
    with _timed(f"triple-agreement:{family}", n_max=n_max) as rep:
        coeffs = qs.identity_lhs(qs.identity_for(family), n_max).q_coefficients()
        for n in range(n_max + 1):
            want = pt.predicted_count(n, family)
            routes = {"series": coeffs[n], "enumeration": pt.signed_count(n, family)}
            if isinstance(family, pt.General):
                routes["involution"] = check_involution_at(n, family)[1]
            for name, got in routes.items():
                if got != want:
                    rep.fail(f"n={n} {name}", want, got)
    return rep


def fixed_point_listing(family: pt.Family, n_max: int) -> list[tuple[int, pt.BoxedPair]]:
    """``(n, pair)`` for each proven fixed point, or each conjectured one for FQ3Prime."""
    out = []
    if isinstance(family, pt.General):
        for n in range(n_max + 1):
            out.extend((n, p) for p in dg.fixed_points(n, family))
        return out
    k = 0
    while 3 * k * (k + 1) // 2 <= n_max:
        out.append((3 * k * (k + 1) // 2, dg.fq3_conjectured_fixed_point(k)))
        k += 1
    return out


# --------------------------------------------------------------------------- examples


WORKED_EXAMPLES = (
    ("conjugate", (4, "9,9,7,7,5,5,3"), (7, "15,13,9,5")),
    ("conjugate", (3, "7,5o,5,5,3o,1,1,1"), (8, "11,9o,3o")),
    ("phi_s", (4, "9,9,9,7o,7,5o"), (5, "11,11,11,7o,5o")),
    ("phi_r", (5, "11,11,9,9,7o,7,7"), (8, "17,17,15,9o")),
)


def worked_examples_suite() -> VerificationReport:
    with _timed("worked-examples") as rep:
        for name, arg, want in WORKED_EXAMPLES:
            fn = getattr(dg, name)
            p, expect = pt.pair(*arg), pt.pair(*want)
            try:
                got = fn(p)
            except FalseThetaError as exc:
                got = f"{type(exc).__name__}: {exc}"
            if got != expect:
                rep.fail(f"{name}{p}", expect, got)
    return rep


def fq3_conjecture_suite(k_max: int = 12) -> VerificationReport:
    with _timed("fq3-conjectured-fixed-points", k_max=k_max) as rep:
        for k in range(k_max + 1):
            try:
                p = dg.fq3_conjectured_fixed_point(k)
            except FalseThetaError as exc:
                rep.fail(f"k={k}", "valid FQ3Prime pair", exc)
                continue
            n = 3 * k * (k + 1) // 2
            if pt.q_weight(p) != n:
                rep.fail(f"k={k} q_weight", n, pt.q_weight(p))
            if pt.sign(p) != pt.predicted_count(n, pt.FQ3P):
                rep.fail(f"k={k} sign", pt.predicted_count(n, pt.FQ3P), pt.sign(p))
    return rep


# --------------------------------------------------------------------------- report-all


@dataclass(frozen=True)
class ReportConfig:
    fq4_series_N: int = 200
    fq4_count_n_max: int = 30
    fq4_involution_n_max: int = 22
    z_series_N: int = 100
    general_series_N: int = 80
    general_enum_N: int = 25
    general_involution_n_max: int = 16
    fq3_series_N: int = 200
    fq3_count_n_max: int = 25
    fq3_conjecture_k_max: int = 12
    general_pairs: Sequence[tuple[int, int]] = ((3, 1), (3, 2), (4, 1), (4, 3), (5, 2))
    involution_pairs: Sequence[tuple[int, int]] = ((3, 1), (3, 2), (4, 1))


def report_all(config: ReportConfig = ReportConfig()) -> list[VerificationReport]:
    c = config
    reports = [
        identity_suite(qs.FQ4_ID, c.fq4_series_N),
        enumeration_suite(pt.FQ4, c.fq4_count_n_max),
        involution_suite(pt.FQ4, c.fq4_involution_n_max),
        worked_examples_suite(),
        identity_suite(qs.general_z(2, 1), c.z_series_N),
    ]
    for m, r in c.general_pairs:
        reports.append(identity_suite(qs.general_z(m, r), c.general_series_N))
        reports.append(series_agreement_suite(pt.General(m, r), c.general_enum_N))
    for m, r in c.involution_pairs:
        reports.append(involution_suite(pt.General(m, r), c.general_involution_n_max))
    reports += [
        identity_suite(qs.FQ3_ID, c.fq3_series_N),
        enumeration_suite(pt.FQ3P, c.fq3_count_n_max),
        fq3_conjecture_suite(c.fq3_conjecture_k_max),
        ring_law_suite(),
        series_agreement_suite(pt.FQ4, c.general_enum_N),
        series_agreement_suite(pt.FQ3P, c.fq3_count_n_max),
        triple_agreement_suite(pt.FQ4, c.general_enum_N),
        triple_agreement_suite(pt.FQ3P, c.fq3_count_n_max),
    ]
    return reports


def aggregate(reports: Sequence[VerificationReport], timing: bool = True) -> dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "status": "pass" if all(r.passed for r in reports) else "fail",
        "suites": [r.to_dict(timing) for r in reports],
    }
