"""One-command brute-force verification sweeps.

Every suite quantifies one closed-form identity over all enumerated minimal
coset words of a scope (or over all Young diagrams in a box range, for the
Grassmannian suites) and reports exact check counts plus serialized
counterexamples.  Sweeps are deterministic: identical scopes produce
identical reports up to the timing fields.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import comb
from multiprocessing import get_context

from .bott_samelson import BottSamelsonData, alpha_sequence, build
from .components import (
    Partition,
    component_count,
    partition_data,
    partition_hole_count,
    picard_rank_open_orbit,
)
from .errors import AuditBudgetError, InvariantViolation
from .root_system import RootSystem, build_root_system, classify_minuscule
from .weyl import Word, enumerate_minuscule_cosets, reduced_words, weyl_involution

SUITES: tuple[str, ...] = (
    "positivity",
    "bounds",
    "chow-oracle",
    "reversal",
    "pgqb",
    "fin",
    "rectif",
    "pgqmoins1",
    "contracted",
    "hat-duality",
    "tangent-nonneg",
    "swap",
    "last-letter",
    "grassmannian-count",
    "hole-pic",
)

_WORD_SUITES = frozenset(SUITES) - {"grassmannian-count", "hole-pic"}


@dataclass(frozen=True)
class AuditScope:
    """What to sweep: quotient triples, bounds, and enumeration caps."""

    cases: tuple[tuple[str, int, int], ...]
    max_length: int | None = None
    max_degree: int = 4
    chain_window: int = 12
    word_cap: int = 100
    budget: int = 10_000_000
    grass_box: tuple[int, int] = (3, 3)
    hole_pic_box: tuple[int, int] = (3, 4)

    def sample_cap(self, family: str, rank: int) -> int | None:
        """All reduced words at A rank <= 4, a deterministic cap elsewhere."""
        if family == "A" and rank <= 4:
            return None
        return self.word_cap

    def to_dict(self) -> dict:
        return {
            "cases": [list(c) for c in self.cases],
            "max_length": self.max_length,
            "max_degree": self.max_degree,
            "chain_window": self.chain_window,
            "word_cap": self.word_cap,
            "budget": self.budget,
            "grass_box": list(self.grass_box),
            "hole_pic_box": list(self.hole_pic_box),
        }


def default_scope(**overrides) -> AuditScope:
    """A_2..A_4 over all minuscule weights plus the D_4 and D_5 quotients."""
    cases = [("A", r, k) for r in (2, 3, 4) for k in range(1, r + 1)]
    cases += [("D", 4, k) for k in (1, 3, 4)]
    cases += [("D", 5, k) for k in (1, 4, 5)]
    return AuditScope(cases=tuple(cases), **overrides)


def empty_scope() -> AuditScope:
    return AuditScope(cases=(), grass_box=(0, 0), hole_pic_box=(0, 0))


def exceptional_cases() -> tuple[tuple[str, int, int], ...]:
    """The E_6 and E_7 minuscule quotients, admitted behind an opt-in flag."""
    return (("E", 6, 1), ("E", 6, 6), ("E", 7, 7))


@dataclass
class SuiteResult:
    suite: str
    checks: int
    failures: list[dict]
    seconds: float
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "checks": self.checks,
            "failures": self.failures,
            "passed": self.passed,
            "info": self.info,
        }
        if timing:
            out["seconds"] = round(self.seconds, 6)
        return out


@dataclass
class AuditReport:
    scope: AuditScope
    results: list[SuiteResult]
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "scope": self.scope.to_dict(),
            "suites": [r.to_dict(timing=timing) for r in self.results],
            "passed": self.passed,
        }
        if timing:
            out["seconds"] = round(self.seconds, 6)
        return out

    def render_text(self) -> str:
        lines = []
        width = max((len(r.suite) for r in self.results), default=10)
        for r in self.results:
            status = "pass" if r.passed else f"FAIL ({len(r.failures)} counterexamples)"
            lines.append(
                f"{r.suite:<{width}}  checks={r.checks:>9}  {r.seconds:8.2f}s  {status}"
            )
        for r in self.results:
            for f in r.failures[:20]:
                lines.append(f"  counterexample[{r.suite}]: {f}")
        lines.append(f"total: {'pass' if self.passed else 'FAIL'}")
        return "\n".join(lines)


# -- scope expansion ---------------------------------------------------------


def _validate_scope(scope: AuditScope) -> None:
    for family, rank, weight in scope.cases:
        rs = build_root_system(family, rank)
        flags = {k: m for k, m, _ in classify_minuscule(rs)}
        if not flags.get(weight, False):
            raise ValueError(f"scope case {family}{rank} weight {weight} is not minuscule")


def _coset_tasks(scope: AuditScope) -> list[tuple[str, int, int, tuple[Word, ...]]]:
    """One task per coset: (family, rank, weight, sampled reduced words)."""
    tasks = []
    for family, rank, weight in scope.cases:
        rs = build_root_system(family, rank)
        cap = scope.sample_cap(family, rank)
        for coset in enumerate_minuscule_cosets(rs, weight, scope.max_length):
            words = tuple(reduced_words(rs, coset, cap=cap))
            tasks.append((family, rank, weight, words))
    return tasks


def _partitions_in_box(rows: int, cols: int):
    def rec(prefix: tuple[int, ...], bound: int, left: int):
        yield prefix
        if left == 0:
            return
        for p in range(min(bound, cols), 0, -1):
            yield from rec(prefix + (p,), p, left - 1)

    yield from rec((), cols, rows)


def _all_boxes(limit: tuple[int, int]):
    for rows in range(1, limit[0] + 1):
        for cols in range(1, limit[1] + 1):
            yield rows, cols


# -- per-word checkers -------------------------------------------------------


def _letters_chained(bs: BottSamelsonData, i: int, j: int) -> bool:
    """Whether positions i < j are linked by a chain of non-commuting letters.

    This is dependence in the word's commutation classes: i = t_0 < ... < t_r = j
    with consecutive letters pairing nonzero, i.e. letter i cannot be pushed
    past position j by exchanging adjacent commuting letters.
    """
    reach = {i}
    for t in range(i + 1, j + 1):
        if any(bs.pair_beta[s - 1][t - 1] != 0 for s in reach):
            reach.add(t)
    return j in reach


def _fin_predicted(bs: BottSamelsonData, i: int, j: int) -> int:
    """Value of <a_i^vee, a_j> predicted from the letters alone (i < j, b_j special).

    Commutation-class form of the case analysis: rows with the special letter
    vanish; otherwise the single 1 of row i sits at the first special position
    chained to i, and every other special position gives 0.  (The un-simplified
    interval form mispredicts once words with branching commutation classes
    appear; see the decisions ledger.)
    """
    if bs.beta[i - 1] == bs.special_root:
        return 0
    for q in range(i + 1, j + 1):
        if bs.beta[q - 1] == bs.special_root and _letters_chained(bs, i, q):
            return 1 if q == j else 0
    return 0


def _hat_vector(bs: BottSamelsonData, i: int) -> tuple[int, ...]:
    a = [0] * bs.n
    for k in range(i, bs.n):
        a[k] = bs.pair_alpha[i - 1][k]
    a[i - 1] = 1
    return tuple(a)


def _check_word(bs: BottSamelsonData, suite: str, scope: AuditScope, fail) -> int:
    """Run one suite's checks on one word's data; returns the check count."""
    n = bs.n
    pa = bs.pair_alpha
    pb = bs.pair_beta
    checks = 0

    if suite == "positivity":
        for i in range(n):
            for j in range(n):
                checks += 1
                if pa[i][j] < 0:
                    fail({"indices": [i + 1, j + 1], "observed": pa[i][j], "expected": ">= 0"})

    elif suite == "bounds":
        for i in range(n):
            for j in range(n):
                checks += 1
                v = pa[i][j]
                same = bs.alpha[i] == bs.alpha[j]
                if v > 2 or (v == 2) != same:
                    fail({"indices": [i + 1, j + 1], "observed": v, "expected": "<= 2, = 2 iff equal roots"})

    elif suite == "chow-oracle":
        for i in range(1, n + 1):
            for j in range(i + 1, min(i + scope.chain_window, n) + 1):
                checks += 1
                oracle = bs.chow_pairing_oracle(i, j, max_window=scope.chain_window)
                closed = bs.c_dot_xi(i, j)
                if not oracle == closed == pb[i - 1][j - 1]:
                    fail({
                        "indices": [i, j],
                        "observed": {"oracle": oracle, "closed": closed, "letters": pb[i - 1][j - 1]},
                        "expected": "all equal",
                    })

    elif suite == "reversal":
        tilde = alpha_sequence(bs.rs, tuple(reversed(bs.beta)))
        pt = [[bs.rs.pairing(x, y) for y in tilde] for x in tilde]
        for i in range(n):
            for j in range(n):
                checks += 1
                if pa[i][j] != pt[n - 1 - i][n - 1 - j]:
                    fail({
                        "indices": [i + 1, j + 1],
                        "observed": pa[i][j],
                        "expected": pt[n - 1 - i][n - 1 - j],
                    })

    elif suite == "pgqb":
        tilde = alpha_sequence(bs.rs, tuple(reversed(bs.beta)))
        s = bs.special_root - 1
        for i, root in enumerate(tilde):
            checks += 1
            if root[s] != 1 or any(c < 0 for c in root):
                fail({"indices": [i + 1], "observed": list(root), "expected": "root >= special letter, coefficient 1"})

    elif suite == "fin":
        for j in range(1, n + 1):
            if bs.beta[j - 1] != bs.special_root:
                continue
            for i in range(1, j):
                checks += 1
                want = _fin_predicted(bs, i, j)
                if pa[i - 1][j - 1] != want:
                    fail({"indices": [i, j], "observed": pa[i - 1][j - 1], "expected": want})

    elif suite == "rectif":
        for i in range(1, n + 1):
            checks += 1
            total = sum(
                pa[i - 1][k - 1]
                for k in range(i + 1, n + 1)
                if bs.beta[k - 1] == bs.special_root
            )
            want = 0 if bs.beta[i - 1] == bs.special_root else 1
            if total != want:
                fail({"indices": [i], "observed": total, "expected": want})

    elif suite == "pgqmoins1":
        for i in range(n):
            for x in range(n):
                if pa[i][x] != 1:
                    continue
                for j in range(n):
                    checks += 1
                    v = pa[i][j] - pa[x][j]
                    if v < -1:
                        fail({"indices": [i + 1, x + 1, j + 1], "observed": v, "expected": ">= -1"})

    elif suite == "contracted":
        for x in sorted(bs.contracted):
            checks += 1
            if not any(bs.c_dot_xi(i, x) == -1 for i in range(1, x)):
                fail({"indices": [x], "observed": "no i < x with [C_i].xi_x = -1", "expected": "exists"})
        for x in range(1, n):
            checks += 1
            if not any(pa[x - 1][j - 1] == 1 for j in range(x + 1, n + 1)):
                fail({"indices": [x], "observed": "no j > x with pairing 1", "expected": "exists"})

    elif suite == "hat-duality":
        hats = [_hat_vector(bs, i) for i in range(1, n + 1)]
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                checks += 1
                got = bs.class_dot_xi(hats[i - 1], j)
                want = 1 if i == j else 0
                if got != want:
                    fail({"indices": [i, j], "observed": got, "expected": want})
        for x in sorted(bs.contracted):
            for i in range(1, n + 1):
                if pa[i - 1][x - 1] != 1:
                    continue
                checks += 1
                g = tuple(u - v for u, v in zip(hats[i - 1], hats[x - 1]))
                bad = {}
                for j in range(1, n + 1):
                    got = bs.class_dot_xi(g, j)
                    want = (1 if j == i else 0) - (1 if j == x else 0)
                    if got != want:
                        bad[j] = (got, want)
                deg = bs.curve_degree(g)
                if deg != 0:
                    bad["degree"] = (deg, 0)
                if bad:
                    fail({"indices": [x, i], "observed": bad, "expected": "gamma-class laws"})
        for j in range(1, n + 1):
            checks += 1
            deg = bs.curve_degree(bs.tilde_curve(j))
            want = 1 if j == n else 0
            if deg != want:
                fail({"indices": [j], "observed": deg, "expected": want, "law": "tilde degree"})

    elif suite == "tangent-nonneg":
        for i in range(1, n + 1):
            h = _hat_vector(bs, i)
            for k in range(1, n + 1):
                checks += 1
                t = bs.class_dot_tangent(h, k)
                x = bs.class_dot_xi(h, k)
                if t < 0 or t - x < 0:
                    fail({"indices": [i, k], "observed": {"T": t, "T-xi": t - x}, "expected": ">= 0"})

    elif suite == "last-letter":
        if n:
            checks += 1
            if bs.beta[-1] != bs.special_root:
                fail({"indices": [n], "observed": bs.beta[-1], "expected": bs.special_root})

    else:  # pragma: no cover - guarded by SUITES
        raise ValueError(f"unknown word suite {suite!r}")

    return checks


def _transposed(table, i0: int):
    """Table with positions i0, i0+1 (0-based) exchanged on both axes."""
    n = len(table)
    perm = list(range(n))
    perm[i0], perm[i0 + 1] = perm[i0 + 1], perm[i0]
    return tuple(tuple(table[perm[a]][perm[b]] for b in range(n)) for a in range(n))


def _check_swap(
    rs: RootSystem,
    weight: int,
    words: tuple[Word, ...],
    bss: list[BottSamelsonData],
    scope: AuditScope,
    fail,
) -> int:
    checks = 0
    for word, bs in zip(words, bss):
        n = bs.n
        for i0 in range(n - 1):
            if bs.pair_beta[i0][i0 + 1] != 0:
                continue
            checks += 1
            swapped = list(word)
            swapped[i0], swapped[i0 + 1] = swapped[i0 + 1], swapped[i0]
            try:
                other = build(rs, weight, tuple(swapped))
            except (ValueError, InvariantViolation) as exc:
                fail({"word": list(word), "indices": [i0 + 1], "observed": f"swap build failed: {exc}"})
                continue
            perm = list(range(n))
            perm[i0], perm[i0 + 1] = perm[i0 + 1], perm[i0]
            ok = (
                other.beta == tuple(bs.beta[p] for p in perm)
                and other.alpha == tuple(bs.alpha[p] for p in perm)
                and other.pair_alpha == _transposed(bs.pair_alpha, i0)
                and other.pair_beta == _transposed(bs.pair_beta, i0)
                and other.contracted == frozenset(perm[x - 1] + 1 for x in bs.contracted)
                and other.special_root == bs.special_root
            )
            if not ok:
                fail({
                    "word": list(word),
                    "indices": [i0 + 1, i0 + 2],
                    "observed": other.to_dict(),
                    "expected": "index-transposed original",
                })
    base = None
    for word, bs in zip(words, bss):
        counts = [component_count(bs, d) for d in range(scope.max_degree + 1)]
        if base is None:
            base = counts
        for d in range(scope.max_degree + 1):
            checks += 1
            if counts[d] != base[d]:
                fail({
                    "word": list(word),
                    "indices": [d],
                    "observed": counts[d],
                    "expected": base[d],
                })
    return checks


def _degree_profile(bs: BottSamelsonData) -> tuple[bool, bool]:
    """Whether the image degree functional equals the pairing against the
    line bundle of the defining weight, resp. of its involuted weight,
    on the coordinates free of contracted divisors."""
    free = [k for k in range(1, bs.n + 1) if k not in bs.contracted]
    hat_deg = {k: bs.curve_degree(_hat_vector(bs, k)) for k in free}
    lam = bs.rs.fundamental_weight(bs.weight_index)
    lam_i = bs.rs.fundamental_weight(weyl_involution(bs.rs, bs.weight_index))
    lbw = bs.line_bundle_class(lam)
    lbi = bs.line_bundle_class(lam_i)
    return (
        all(lbw[k - 1] == hat_deg[k] for k in free),
        all(lbi[k - 1] == hat_deg[k] for k in free),
    )


# -- sweep drivers -----------------------------------------------------------


def _run_coset_task(args) -> dict:
    family, rank, weight, words, suites, scope = args
    rs = build_root_system(family, rank)
    case = f"{family}{rank}:w{weight}"
    out: dict[str, list] = {s: [0, [], {}, 0.0] for s in suites}

    bss: list[BottSamelsonData] = []
    broken: list[tuple[Word, str]] = []
    built_words: list[Word] = []
    for word in words:
        try:
            bss.append(build(rs, weight, word))
            built_words.append(word)
        except InvariantViolation as exc:
            broken.append((word, str(exc)))

    for suite in suites:
        slot = out[suite]
        t0 = time.perf_counter()
        for word, msg in broken:
            slot[1].append({"case": case, "word": list(word), "observed": f"build invariant failed: {msg}"})
        if suite == "swap":
            def fail(record):
                record.setdefault("case", case)
                slot[1].append(record)

            slot[0] += _check_swap(rs, weight, tuple(built_words), bss, scope, fail)
        else:
            for word, bs in zip(built_words, bss):
                def fail(record, word=word):
                    record.setdefault("case", case)
                    record.setdefault("word", list(word))
                    slot[1].append(record)

                slot[0] += _check_word(bs, suite, scope, fail)
        if suite == "hat-duality":
            mw = mi = 0
            for bs in bss:
                a, b = _degree_profile(bs)
                mw += a
                mi += b
            slot[2] = {
                "degree_matches_weight": mw,
                "degree_matches_involuted_weight": mi,
                "cases": len(bss),
            }
        slot[3] = time.perf_counter() - t0
    return out


def _estimate_word_checks(suite: str, n: int, scope: AuditScope) -> int:
    if suite in ("positivity", "bounds", "reversal", "hat-duality", "tangent-nonneg", "fin"):
        return n * n
    if suite == "chow-oracle":
        if n < 2:
            return 0
        return sum((n - g) << (g - 1) for g in range(1, min(scope.chain_window, n - 1) + 1))
    if suite == "pgqmoins1":
        return n * n * n
    if suite in ("pgqb", "rectif"):
        return n
    if suite == "contracted":
        return 2 * n
    if suite == "swap":
        return n + scope.max_degree + 1
    if suite == "last-letter":
        return 1
    raise ValueError(f"unknown suite {suite!r}")


def estimate_checks(scope: AuditScope, suite: str, tasks=None) -> int:
    """Upper-bound estimate of a suite's elementary checks over a scope."""
    if suite in ("grassmannian-count", "hole-pic"):
        box = scope.grass_box if suite == "grassmannian-count" else scope.hole_pic_box
        total = 0
        for rows, cols in _all_boxes(box):
            npart = sum(1 for _ in _partitions_in_box(rows, cols))
            per = (scope.max_degree + 1) if suite == "grassmannian-count" else 1
            total += npart * per
        return total
    if tasks is None:
        tasks = _coset_tasks(scope)
    return sum(
        _estimate_word_checks(suite, len(w), scope) for _, _, _, words in tasks for w in words
    )


def _run_grass_suite(suite: str, scope: AuditScope):
    checks = 0
    failures: list[dict] = []
    if suite == "grassmannian-count":
        for rows, cols in _all_boxes(scope.grass_box):
            for parts in _partitions_in_box(rows, cols):
                p = Partition(parts, (rows, cols))
                bs = partition_data(p)
                r = partition_hole_count(p)
                for d in range(scope.max_degree + 1):
                    checks += 1
                    got = component_count(bs, d)
                    want = comb(d + r - 1, d) if r >= 1 else (1 if d == 0 else 0)
                    if got != want:
                        failures.append({
                            "case": f"box {rows}x{cols}",
                            "partition": list(parts),
                            "indices": [d],
                            "observed": got,
                            "expected": want,
                        })
    else:
        for rows, cols in _all_boxes(scope.hole_pic_box):
            for parts in _partitions_in_box(rows, cols):
                p = Partition(parts, (rows, cols))
                checks += 1
                holes = partition_hole_count(p)
                pic = picard_rank_open_orbit(partition_data(p))
                if holes != pic:
                    failures.append({
                        "case": f"box {rows}x{cols}",
                        "partition": list(parts),
                        "observed": holes,
                        "expected": pic,
                    })
    return checks, failures


def run_suites(
    scope: AuditScope, suites: list[str] | None = None, jobs: int = 1
) -> AuditReport:
    """Run the selected suites (all of them by default) over one scope."""
    names = list(SUITES) if suites is None else list(suites)
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}: expected one of {', '.join(SUITES)}")
    _validate_scope(scope)

    started = time.perf_counter()
    word_names = [n for n in names if n in _WORD_SUITES]
    tasks = _coset_tasks(scope) if word_names else []
    for name in names:
        est = estimate_checks(scope, name, tasks=tasks)
        if est > scope.budget:
            raise AuditBudgetError(
                f"suite {name!r}: estimated {est} elementary checks exceeds the "
                f"budget of {scope.budget}"
            )

    merged: dict[str, SuiteResult] = {
        n: SuiteResult(suite=n, checks=0, failures=[], seconds=0.0) for n in names
    }

    if word_names and tasks:
        job_args = [
            (family, rank, weight, words, tuple(word_names), scope)
            for family, rank, weight, words in tasks
        ]
        if jobs > 1:
            with get_context("fork").Pool(jobs) as pool:
                partials = pool.map(_run_coset_task, job_args)
        else:
            partials = [_run_coset_task(a) for a in job_args]
        for part in partials:
            for name, (checks, failures, info, seconds) in part.items():
                res = merged[name]
                res.checks += checks
                res.failures.extend(failures)
                res.seconds += seconds
                for key, val in info.items():
                    res.info[key] = res.info.get(key, 0) + val

    for name in names:
        if name in ("grassmannian-count", "hole-pic"):
            t0 = time.perf_counter()
            checks, failures = _run_grass_suite(name, scope)
            merged[name].checks = checks
            merged[name].failures = failures
            merged[name].seconds = time.perf_counter() - t0

    report = AuditReport(scope=scope, results=[merged[n] for n in names])
    report.seconds = time.perf_counter() - started
    return report


def run_suite(scope: AuditScope, suite: str, jobs: int = 1) -> AuditReport:
    """Run a single named suite over a scope."""
    return run_suites(scope, [suite], jobs=jobs)
