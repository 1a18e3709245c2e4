"""Checkable statements: each pairs a closed formula with an independent oracle.

Every checker returns data (a value or a CheckReport); whether a failure
aborts or is merely reported is the caller's business.  Reports only speak
for the parameter ranges they actually ran.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .errors import NonCoprimeError
from .exact import binomial, catalan_number, det_exact, det_qpoly, hessenberg_catalan_det
from .partitions import Partition, subpartitions
from .paths import count_rect_paths, enumerate_gd, enumerate_rect_paths, gd_to_ideal
from .posets import build_gap_poset, consecutive_poset, ideal_to_core, multi_catalan
from .qpoly import QPolynomial, q_binomial
from .series import PowerSeries


@dataclass
class CheckReport:
    """Outcome of one verification run over an explicit parameter range."""

    statement: str
    tested: str
    total: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def first_counterexample(self) -> str | None:
        return self.failures[0] if self.failures else None

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.statement} [{self.tested}] {self.total} instances in {self.duration:.2f}s"
        if self.failures:
            line += f"\n  first counterexample: {self.failures[0]}"
        return line

    def to_json_dict(self) -> dict:
        return {
            "statement": self.statement,
            "tested": self.tested,
            "instances": self.total,
            "passed": self.passed,
            "failures": self.failures,
            "notes": self.notes,
            "duration_seconds": self.duration,
        }


def _run_report(statement: str, tested: str,
                instances: Iterable[tuple[str, Callable[[], tuple[bool, str]]]],
                jobs: int = 1) -> CheckReport:
    items = list(instances)
    start = time.perf_counter()
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(lambda it: it[1](), items))
    else:
        outcomes = [fn() for _, fn in items]
    report = CheckReport(statement=statement, tested=tested, total=len(items))
    for (label, _), (ok, detail) in zip(items, outcomes):
        if not ok:
            report.failures.append(f"{label}: {detail}")
        elif detail:
            report.notes.append(f"{label}: {detail}")
    report.duration = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# determinant formulas

def kreweras_count(p: Partition) -> int:
    """Subpartition count of a shape as det C(parts[j]+1, j-i+1)."""
    k = len(p)
    rows = [
        [binomial(p.parts[j - 1] + 1, j - i + 1) for j in range(1, k + 1)]
        for i in range(1, k + 1)
    ]
    return det_exact(rows)


def qdet_coarea(p: Partition) -> QPolynomial:
    """Size generating polynomial of subpartitions, as a q-determinant.

    Entry (i, j) is q^C(j-i+1, 2) [parts[j]+1 over j-i+1]_q; at q = 1 this
    collapses to the subpartition-count determinant.
    """
    k = len(p)
    rows = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, k + 1):
            c = j - i + 1
            if c < 0:
                row.append(QPolynomial.zero())
            else:
                row.append(QPolynomial.monomial(1, binomial(c, 2)) * q_binomial(p.parts[j - 1] + 1, c))
        rows.append(row)
    return det_qpoly(rows)


def subpartition_size_polynomial(p: Partition) -> QPolynomial:
    """Brute-force sum of q^|mu| over subpartitions; the oracle for qdet_coarea."""
    coeffs = [0] * (p.size + 1)
    for mu in subpartitions(p):
        coeffs[mu.size] += 1
    return QPolynomial(coeffs)


def catalan_identity(n: int) -> int:
    """Value of sum_{k=1..n} (-1)^k C(k+1, n-k) C_k; zero for n >= 2."""
    if n < 2:
        raise ValueError(f"the alternating Catalan identity needs n >= 2, got {n}")
    return sum((-1) ** k * binomial(k + 1, n - k) * catalan_number(k) for k in range(1, n + 1))


# ---------------------------------------------------------------------------
# two-generator arithmetic

def _fractional(x: Fraction) -> Fraction:
    return x - math.floor(x)


def popoviciu(s: int, t: int, m: int) -> int:
    """Exact count of representations m = s*k + t*l with k, l >= 0.

    Closed form m/(st) - {t^{-1}m/s} - {s^{-1}m/t} + 1 with modular inverses
    t^{-1}t = 1 (mod s) and s^{-1}s = 1 (mod t); fractional parts are exact
    rationals, never floats.
    """
    if s < 1 or t < 1:
        raise ValueError(f"generators must be >= 1, got ({s}, {t})")
    g = math.gcd(s, t)
    if g != 1:
        raise NonCoprimeError(s, t, g)
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    t_inv = pow(t, -1, s)
    s_inv = pow(s, -1, t)
    value = (
        Fraction(m, s * t)
        - _fractional(Fraction(t_inv * m, s))
        - _fractional(Fraction(s_inv * m, t))
        + 1
    )
    assert value.denominator == 1, f"representation count came out non-integral: {value}"
    return int(value)


def count_representations(s: int, t: int, m: int) -> int:
    """Brute-force oracle for popoviciu."""
    return sum(1 for k in range(m // s + 1) if (m - s * k) % t == 0)


def frobenius_pair(s: int, t: int) -> int:
    """st - s - t, cross-checked against the largest sieved gap."""
    if s < 2 or t < 2:
        raise ValueError(f"need s, t >= 2, got ({s}, {t})")
    g = math.gcd(s, t)
    if g != 1:
        raise NonCoprimeError(s, t, g)
    expected = s * t - s - t
    largest = build_gap_poset((s, t)).frobenius_number
    assert largest == expected, f"sieve says largest gap {largest}, formula {expected}"
    return expected


def sylvester_check(s: int, t: int) -> bool:
    """Exactly half of 1..(s-1)(t-1) are gaps of the two-generator semigroup."""
    poset = build_gap_poset((s, t))
    bound = (s - 1) * (t - 1)
    n_gaps = sum(1 for gap in poset.gaps if gap <= bound)
    return 2 * n_gaps == bound


def symmetry_check(s: int) -> CheckReport:
    """Complement symmetry of the (s-1) x (s+1) value rectangle for {s, s+2}.

    For odd s >= 3 the value (s+1)(j-1)+i is a gap exactly when
    (s+1)(s-1-j)+i is not, for 1 <= i <= s+1, 1 <= j <= s-1.
    """
    if s % 2 == 0:
        raise ValueError(f"s must be odd (the {{s, s+2}} gap set is infinite for even s), got {s}")
    if s < 3:
        raise ValueError(f"need s >= 3, got {s}")
    poset = build_gap_poset((s, s + 2))

    def is_gap(v: int) -> bool:
        return v >= 1 and not poset.is_representable(v)

    instances = []
    for i in range(1, s + 2):
        for j in range(1, s):
            v1 = (s + 1) * (j - 1) + i
            v2 = (s + 1) * (s - 1 - j) + i

            def thunk(v1=v1, v2=v2):
                ok = is_gap(v1) != is_gap(v2)
                return ok, "" if ok else f"{v1} gap={is_gap(v1)} but {v2} gap={is_gap(v2)}"

            instances.append((f"s={s} i={i} j={j}", thunk))
    return _run_report("twin-gap symmetry", f"s={s}, all (i, j)", instances)


# ---------------------------------------------------------------------------
# multi-Catalan statements

def motzkin_identity_check(s: int) -> bool:
    """multi_catalan(s, 2) equals sum_k C(s, 2k) * C_k."""
    if s < 0:
        raise ValueError(f"need s >= 0, got {s}")
    rhs = sum(binomial(s, 2 * k) * catalan_number(k) for k in range(s // 2 + 1))
    return multi_catalan(s, 2) == rhs


def gf_coefficients(p: int, n_terms: int) -> list[int]:
    """First n_terms coefficients of the closed generating function.

    The closed form with radical parameter r expands to the sequence for
    p = r - 1 consecutive extra generators, so r = p + 1 here (r = 2 gives
    Catalan numbers, r = 3 Motzkin).  Divisibility by 2 x^(r-1) and
    integrality of every coefficient are asserted, not assumed.
    """
    if p < 1:
        raise ValueError(f"need p >= 1, got {p}")
    if n_terms < 1:
        raise ValueError(f"need n_terms >= 1, got {n_terms}")
    r = p + 1
    order = n_terms + r
    one = PowerSeries.constant(1, order)
    x = PowerSeries.monomial(1, 1, order)
    correction = (PowerSeries.monomial(1, 2, order) - PowerSeries.monomial(1, r - 1, order)).divide(one - x)
    a = one - x + correction
    radicand = a * a - 4 * x * x
    numerator = PowerSeries.constant(2, order) - 2 * x - a - radicand.sqrt()
    series = numerator.divide_monomial(r - 1, 2)
    return series.integer_coefficients()[:n_terms]


def conjecture_total_size(s: int) -> tuple[int, int]:
    """Total size of all cores for {s, s+1, s+2} vs the weighted Motzkin sum.

    lhs enumerates lower ideals and sizes their partitions; rhs is
    sum_{j=0}^{s-2} C(j+3, 3) * multi_catalan(j, 2).
    """
    if s < 3:
        raise ValueError(f"need s >= 3, got {s}")
    poset = consecutive_poset(s, 2)
    lhs = sum(ideal_to_core(poset, ideal).size for ideal in poset.iter_lower_ideals())
    rhs = sum(binomial(j + 3, 3) * multi_catalan(j, 2) for j in range(s - 1))
    return lhs, rhs


def total_core_size_via_paths(s: int) -> int:
    """Independent lhs for the total-size conjecture, via generalized paths."""
    poset = consecutive_poset(s, 2)
    total = 0
    seen = set()
    for path in enumerate_gd(s, 2):
        ideal = gd_to_ideal(path, poset)
        assert ideal not in seen, f"two paths map to the ideal {sorted(ideal)}"
        seen.add(ideal)
        total += ideal_to_core(poset, ideal).size
    return total


# ---------------------------------------------------------------------------
# equinumerosity

def _coprime_pairs(max_sum: int) -> list[tuple[int, int]]:
    return [
        (s, t)
        for s in range(1, max_sum)
        for t in range(s, max_sum + 1 - s)
        if math.gcd(s, t) == 1
    ]


def _check_pair(s: int, t: int) -> tuple[bool, str]:
    poset = build_gap_poset((s, t))
    ideals = list(poset.iter_lower_ideals())
    n_paths = sum(1 for _ in enumerate_rect_paths(s, t))
    formula = count_rect_paths(s, t)
    cores = [ideal_to_core(poset, ideal) for ideal in ideals]
    distinct = len(set(cores)) == len(cores)
    all_cores = all(c.is_multicore((s, t)) for c in cores)
    ok = len(ideals) == n_paths == formula and distinct and all_cores
    detail = f"ideals={len(ideals)} paths={n_paths} formula={formula} cores ok={distinct and all_cores}"
    return ok, detail if not ok else ""


def _check_consecutive(n: int, k: int) -> tuple[bool, str]:
    poset = consecutive_poset(n, k)
    ideals = set(poset.iter_lower_ideals())
    paths = list(enumerate_gd(n, k))
    images = {gd_to_ideal(path, poset) for path in paths}
    cores = [ideal_to_core(poset, ideal) for ideal in ideals]
    distinct = len(set(cores)) == len(cores)
    all_cores = all(c.is_multicore(poset.generators) for c in cores)
    ok = (
        len(paths) == len(ideals) == multi_catalan(n, k)
        and images == ideals
        and distinct
        and all_cores
    )
    detail = (
        f"paths={len(paths)} ideals={len(ideals)} multi_catalan={multi_catalan(n, k)} "
        f"bijection={'yes' if images == ideals else 'NO'}"
    )
    return ok, detail if not ok else ""


def equinumerosity_suite(max_pair_sum: int = 16, max_n: int = 8, max_k: int = 3,
                         jobs: int = 1) -> CheckReport:
    """Cores = paths = ideals, for coprime pairs and consecutive runs."""
    instances: list[tuple[str, Callable[[], tuple[bool, str]]]] = []
    for s, t in _coprime_pairs(max_pair_sum):
        instances.append((f"pair ({s},{t})", lambda s=s, t=t: _check_pair(s, t)))
    for n in range(1, max_n + 1):
        for k in range(1, max_k + 1):
            instances.append((f"consecutive ({n},{k})", lambda n=n, k=k: _check_consecutive(n, k)))
    return _run_report(
        "equinumerosity",
        f"pairs with s+t <= {max_pair_sum}; consecutive n <= {max_n}, k <= {max_k}",
        instances,
        jobs=jobs,
    )


# ---------------------------------------------------------------------------
# range runners for the CLI

def check_symmetry_range(min_s: int = 3, max_s: int = 25, jobs: int = 1) -> CheckReport:
    instances = []
    for s in range(min_s | 1, max_s + 1, 2):
        def thunk(s=s):
            rep = symmetry_check(s)
            return rep.passed, rep.first_counterexample or f"{rep.total} cells"
        instances.append((f"s={s}", thunk))
    return _run_report("twin-gap symmetry", f"odd s in [{min_s}, {max_s}]", instances, jobs=jobs)


def check_popoviciu_range(max_t: int = 12, jobs: int = 1) -> CheckReport:
    instances = []
    for s in range(1, max_t + 1):
        for t in range(s + 1, max_t + 1):
            if math.gcd(s, t) != 1:
                continue

            def thunk(s=s, t=t):
                for m in range(s * t + 1):
                    formula = popoviciu(s, t, m)
                    brute = count_representations(s, t, m)
                    if formula != brute:
                        return False, f"m={m}: formula {formula} vs brute force {brute}"
                if s >= 2 and frobenius_pair(s, t) != s * t - s - t:
                    return False, "largest gap mismatch"
                if not sylvester_check(s, t):
                    return False, "gap count is not half the interval"
                return True, ""

            instances.append((f"(s,t)=({s},{t})", thunk))
    return _run_report("two-generator counting", f"coprime s < t <= {max_t}, m <= st", instances, jobs=jobs)


def check_catalan_identity_range(max_n: int = 30, max_hessenberg: int = 12, jobs: int = 1) -> CheckReport:
    def identity_thunk(n):
        value = catalan_identity(n)
        return value == 0, "" if value == 0 else f"sum = {value}"

    def det_thunk(n):
        det, cat = hessenberg_catalan_det(n), catalan_number(n)
        return det == cat, "" if det == cat else f"det {det} vs C_{n} = {cat}"

    instances = []
    for n in range(2, max_n + 1):
        instances.append((f"identity n={n}", lambda n=n: identity_thunk(n)))
    for n in range(1, max_hessenberg + 1):
        instances.append((f"determinant n={n}", lambda n=n: det_thunk(n)))
    return _run_report(
        "alternating Catalan identity",
        f"identity n in [2, {max_n}]; Hessenberg determinant n <= {max_hessenberg}",
        instances, jobs=jobs,
    )


def check_gf_range(max_p: int = 3, terms: int = 20, jobs: int = 1) -> CheckReport:
    instances = []
    for p in range(1, max_p + 1):
        def thunk(p=p):
            coeffs = gf_coefficients(p, terms)
            expected = [multi_catalan(s, p) for s in range(terms)]
            ok = coeffs == expected
            return ok, "" if ok else f"series {coeffs[:8]}... vs recursion {expected[:8]}..."
        instances.append((f"p={p}", thunk))
    return _run_report("closed generating function", f"p <= {max_p}, {terms} terms", instances, jobs=jobs)


def check_conjecture_range(min_s: int = 3, max_s: int = 10, jobs: int = 1) -> CheckReport:
    instances = []
    for s in range(min_s, max_s + 1):
        def thunk(s=s):
            lhs, rhs = conjecture_total_size(s)
            lhs_paths = total_core_size_via_paths(s)
            assert lhs == lhs_paths, (
                f"s={s}: the two enumeration strategies disagree ({lhs} vs {lhs_paths})"
            )
            ok = lhs == rhs
            detail = f"lhs={lhs} rhs={rhs}"
            if not ok:
                detail = f"counterexample to the total-size conjecture: {detail} (lhs double-checked)"
            return ok, detail
        instances.append((f"s={s}", thunk))
    return _run_report("total-size conjecture", f"s in [{min_s}, {max_s}]", instances, jobs=jobs)


def check_motzkin_range(max_s: int = 20, jobs: int = 1) -> CheckReport:
    instances = [
        (f"s={s}", lambda s=s: (motzkin_identity_check(s), ""))
        for s in range(max_s + 1)
    ]
    return _run_report("Motzkin sum identity", f"s <= {max_s}", instances, jobs=jobs)


def run_all_checks(jobs: int = 1) -> list[CheckReport]:
    return [
        check_symmetry_range(jobs=jobs),
        check_popoviciu_range(jobs=jobs),
        check_catalan_identity_range(jobs=jobs),
        check_motzkin_range(jobs=jobs),
        check_gf_range(jobs=jobs),
        check_conjecture_range(jobs=jobs),
        equinumerosity_suite(jobs=jobs),
    ]
