"""Named verification suites with machine-readable reports.

Each suite re-derives one family of claims by direct computation and
compares against frozen expectations or cross-computed values.  Reports
carry every failing case; an empty failure list is the pass condition and
maps to exit code 0 in the CLI.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from math import factorial

from . import bounds, characters, group_algebra, permmatrix, reference_data, twoway, young

SUITES = (
    "centrality",
    "operator",
    "characters",
    "hooks",
    "dims",
    "table1",
    "asym",
    "automata",
)


@dataclass
class CaseFailure:
    case: str
    expected: str
    actual: str
    claim: str


@dataclass
class VerifyReport:
    suite: str
    cases: int = 0
    failures: list[CaseFailure] = field(default_factory=list)
    elapsed_s: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, case: str, expected, actual, claim: str = "") -> None:
        self.cases += 1
        if expected != actual:
            self.failures.append(CaseFailure(case, repr(expected), repr(actual), claim))

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": [vars(f) for f in self.failures],
            "elapsed_s": round(self.elapsed_s, 3),
            "ok": self.ok,
        }

    def summary_lines(self) -> list[str]:
        lines = [
            f"suite {self.suite}: {self.cases} cases, "
            f"{len(self.failures)} failures, {self.elapsed_s:.2f}s "
            f"[{'PASS' if self.ok else 'FAIL'}]"
        ]
        for f in self.failures:
            lines.append(f"  FAIL {f.case}: expected {f.expected}, got {f.actual}  ({f.claim})")
        return lines


def _suite_centrality(report: VerifyReport, max_n: int) -> None:
    for n in range(1, max_n + 1):
        report.check(
            f"cyclic class sum central, degree {n}",
            True,
            group_algebra.is_central(group_algebra.cyclic_class_sum(n)),
            "sum of all n-cycles commutes with every group element",
        )
    report.check(
        "single transposition not central, degree 3",
        False,
        group_algebra.is_central(group_algebra.basis((1, 0, 2))),
        "negative control",
    )


def _suite_operator(report: VerifyReport, max_n: int) -> None:
    for n in range(1, max_n + 1):
        direct = permmatrix.cycle_quotient_matrix(n)
        operator = permmatrix.left_multiplication_matrix(n)
        report.check(
            f"operator matrix = quotient matrix, degree {n}",
            True,
            operator == direct,
            "left multiplication by the cyclic class sum has the quotient matrix",
        )
        report.check(
            f"operator column sums, degree {n}",
            [factorial(n - 1)] * factorial(n),
            operator.to_dense().sum(axis=0).tolist(),
            "each column has one term per n-cycle",
        )


def _suite_characters(report: VerifyReport, max_n: int) -> None:
    report.check(
        "character table, degree 3",
        reference_data.CHARACTER_TABLE_3,
        characters.character_table(3),
        "frozen table",
    )
    report.check(
        "character table, degree 4",
        reference_data.CHARACTER_TABLE_4,
        characters.character_table(4),
        "frozen table",
    )
    for n in range(1, max_n + 1):
        shapes = young.partitions(n)
        classes = list(reversed(shapes))
        sizes = [characters.class_size(mu) for mu in classes]
        table = characters.character_table(n)
        bad = []
        for i, lam in enumerate(shapes):
            for j in range(i, len(shapes)):
                dot = sum(s * a * b for s, a, b in zip(sizes, table[i], table[j]))
                if dot != (factorial(n) if i == j else 0):
                    bad.append((lam, shapes[j], dot))
        report.check(
            f"row orthogonality, degree {n}",
            [],
            bad,
            "weighted character rows are orthogonal with norm n!",
        )
        report.check(
            f"class sizes sum to n!, degree {n}",
            factorial(n),
            sum(sizes),
            "conjugacy classes partition the group",
        )
        report.check(
            f"dimensions from identity column, degree {n}",
            [characters.specht_dim(lam) for lam in shapes],
            [row[0] for row in table],
            "character at the identity equals the tableau count",
        )


def _suite_hooks(report: VerifyReport, max_n: int) -> None:
    for n in range(1, max_n + 1):
        bad = []
        for lam in young.partitions(n):
            closed = characters.character_at_full_cycle(lam)
            recursive = characters.character(lam, (n,))
            expected = ((-1) ** (len(lam) - 1)) if young.is_hook(lam) else 0
            if not closed == recursive == expected:
                bad.append((lam, closed, recursive, expected))
        report.check(
            f"full-cycle characters, degree {n}",
            [],
            bad,
            "nonzero exactly on hook shapes, value (-1)**(rows-1)",
        )


def _suite_dims(report: VerifyReport, max_n: int) -> None:
    for n in range(1, max_n + 1):
        report.check(
            f"sum of squared dimensions, degree {n}",
            factorial(n),
            sum(young.syt_count(lam) ** 2 for lam in young.partitions(n)),
            "squared tableau counts add up to the group order",
        )
    for n in range(1, min(max_n, 8) + 1):
        bad = [
            lam
            for lam in young.partitions(n)
            if young.syt_count(lam) != len(young.standard_tableaux(lam))
        ]
        report.check(
            f"hook length formula vs enumeration, degree {n}",
            [],
            bad,
            "formula count equals explicit tableau enumeration",
        )


def _suite_table1(report: VerifyReport, max_n: int = 10) -> None:
    for n, (earlier, new, upper) in reference_data.BOUNDS_TABLE.items():
        report.check(
            f"bound table row {n}",
            (earlier, new, upper),
            (bounds.bound_earlier(n), bounds.bound_new(n), bounds.bound_upper(n)),
            "all three closed forms match the frozen row",
        )


def _suite_asym(report: VerifyReport, max_n: int = 400) -> None:
    import mpmath

    deviations = []
    for n, frozen in sorted(reference_data.ASYMPTOTIC_RATIOS.items()):
        if n > max_n:
            continue
        r = bounds.asymptotic_ratio(n, digits=40)
        with mpmath.workdps(45):
            diff = abs(r - mpmath.mpf(frozen))
            report.check(
                f"ratio at n={n}",
                True,
                diff < mpmath.mpf(10) ** -25,
                "matches the frozen oracle value to 25+ digits",
            )
            if n > 1:
                deviations.append((n, abs(r - 1)))
    report.check(
        "deviation strictly decreasing",
        True,
        all(a[1] > b[1] for a, b in zip(deviations, deviations[1:])),
        "|ratio - 1| shrinks along 10, 50, 100, 200, 400",
    )
    if max_n >= 400:
        report.check(
            "deviation cap at n=400",
            True,
            float(abs(bounds.asymptotic_ratio(400, digits=40) - 1))
            < reference_data.ASYMPTOTIC_CAP_AT_400,
            "within the cap fixed by the oracle pre-run",
        )


def _suite_automata(report: VerifyReport, machines: int = 100, seed: int = 0) -> None:
    rng = random.Random(seed)
    strings = twoway.all_strings("ab", 6)
    samples = twoway.all_strings("ab", 3)
    for i in range(machines):
        automaton = twoway.random_automaton(rng, n_states=3)
        dfa = twoway.to_dfa(automaton)
        mismatches = [w for w in strings if dfa.accepts(w) != twoway.accepts(automaton, w)]
        report.check(
            f"machine {i}: one-way conversion agrees",
            [],
            mismatches,
            "behavior DFA recognizes the same language on all strings up to length 6",
        )
        report.check(
            f"machine {i}: behavior count within ceiling",
            True,
            dfa.n_states <= bounds.dfa_bound(3),
            "reachable crossing tables never exceed n(n^n-(n-1)^n)+1",
        )
        report.check(
            f"machine {i}: rank bound vs minimal DFA",
            True,
            twoway.schmidt_lower_bound(automaton, samples, samples)
            <= dfa.minimize().n_states,
            "a DFA is unambiguous, so the sampled rank bounds its size",
        )


def run_suite(
    name: str,
    *,
    quick: bool = False,
    max_n: int | None = None,
    seed: int = 0,
) -> VerifyReport:
    """Run one named suite (or 'all') and return its report."""
    if name == "all":
        merged = VerifyReport("all")
        t0 = time.perf_counter()
        for sub in SUITES:
            sub_report = run_suite(sub, quick=quick, max_n=max_n, seed=seed)
            merged.cases += sub_report.cases
            merged.failures.extend(sub_report.failures)
        merged.elapsed_s = time.perf_counter() - t0
        return merged
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or 'all'")

    cap = 6 if quick else None

    def limit(default: int) -> int:
        n = max_n if max_n is not None else default
        return min(n, cap) if cap is not None else n

    report = VerifyReport(name)
    t0 = time.perf_counter()
    if name == "centrality":
        _suite_centrality(report, limit(6))
    elif name == "operator":
        _suite_operator(report, limit(5))
    elif name == "characters":
        _suite_characters(report, limit(8))
    elif name == "hooks":
        _suite_hooks(report, limit(10))
    elif name == "dims":
        _suite_dims(report, limit(10))
    elif name == "table1":
        _suite_table1(report)
    elif name == "asym":
        _suite_asym(report)
    elif name == "automata":
        _suite_automata(report, machines=25 if quick else 100, seed=seed)
    report.elapsed_s = time.perf_counter() - t0
    return report
