"""Property suites over exhaustive and seeded random braid corpora."""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable

from . import alexander as alex
from . import burau, hopf_rep, rt
from .braid import BraidWord, closure_permutation, cable, cycle_count, is_knot_closure
from .ring import DEFAULT_ORDER

__all__ = [
    "SUITES",
    "RunReport",
    "ItemResult",
    "all_words",
    "exhaustive_knots",
    "random_words",
    "random_knots",
    "knot_corpus",
    "run_suite",
    "SuiteArgs",
    "word_corpus",
]

EXHAUSTIVE_STRANDS = (2, 3)
EXHAUSTIVE_LENGTH = 6
LAMBDAS = (0, 1, -1, Fraction(5, 2))


# --- corpora ----------------------------------------------------------------


def all_words(n: int, max_length: int) -> Iterable[BraidWord]:
    letters = [s * i for i in range(1, n) for s in (1, -1)]
    for length in range(max_length + 1):
        for w in product(letters, repeat=length):
            yield BraidWord(n, w)


def exhaustive_knots(strands=EXHAUSTIVE_STRANDS, max_length: int = EXHAUSTIVE_LENGTH) -> list[BraidWord]:
    return [w for n in strands for w in all_words(n, max_length) if is_knot_closure(w)]


def random_words(rng: random.Random, count: int, max_strands: int, max_length: int) -> list[BraidWord]:
    out = []
    for _ in range(count):
        n = rng.randint(2, max_strands)
        length = rng.randint(0, max_length)
        out.append(BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length))))
    return out


def _repair(rng: random.Random, w: BraidWord) -> BraidWord:
    """Append generators joining distinct cycles until the closure is a knot.

    Multiplying by a transposition of points in different cycles merges the
    two cycles, so each appended letter removes one component.
    """
    letters = list(w.letters)
    while True:
        perm = closure_permutation(BraidWord(w.strands, tuple(letters)))
        label = [-1] * len(perm)
        for start in range(len(perm)):
            j = start
            while label[j] < 0:
                label[j] = start
                j = perm[j]
        joins = [i for i in range(w.strands - 1) if label[i] != label[i + 1]]
        if not joins:
            return BraidWord(w.strands, tuple(letters))
        letters.append(rng.choice((1, -1)) * (rng.choice(joins) + 1))


def random_knots(rng: random.Random, count: int, max_strands: int, max_length: int) -> list[BraidWord]:
    out = []
    while len(out) < count:
        (w,) = random_words(rng, 1, max_strands, max_length)
        if not is_knot_closure(w):
            w = _repair(rng, w)
            if len(w) > max_length:
                continue
        out.append(w)
    return out


def knot_corpus(seed: int, count: int, max_strands: int, max_length: int) -> list[BraidWord]:
    rng = random.Random(seed)
    return exhaustive_knots() + random_knots(rng, count, max_strands, max_length)


def word_corpus(seed: int, count: int, max_strands: int, max_length: int) -> list[BraidWord]:
    """Knots and links alike."""
    rng = random.Random(seed)
    words = [w for n in EXHAUSTIVE_STRANDS for w in all_words(n, EXHAUSTIVE_LENGTH)]
    return words + random_words(rng, count, max_strands, max_length)


# --- per-item checks --------------------------------------------------------
# Each returns None on success or a short failure description.


def _check_thm1(w: BraidWord, order: int):
    if not rt.theorem1_check(w, order):
        return "universal invariant != 1/Delta(a)"
    if rt.long_knot_form_entry(w, order) != 1:
        return "open-strand form entry != 1"
    if rt.universal_invariant(w, order).series[0] != 1:
        return "constant term != 1"
    return None


def _check_thm2(w: BraidWord, order: int):
    d1 = alex.alexander_thm2(w)
    d2 = alex.alexander_reduced(w)
    if d1 != d2:
        return f"routes disagree: {d1} vs {d2}"
    if d1.at_one() != 1:
        return f"Delta(1) = {d1.at_one()}"
    if not d1.is_symmetric():
        return "Delta(1/t) != Delta(t)"
    return None


def _check_lemma2(w: BraidWord, order: int):
    return None if alex.lemma2_check(w) else "Burau determinant identity fails"


def _check_schur(w: BraidWord, order: int):
    return None if rt.schur_identity_check(w) else "c adj(I-hat) b != (1-d) det(I-hat)"


def _check_rowrel(w: BraidWord, order: int):
    try:
        ok = burau.row_relation_check(w)
    except burau.BlockShapeError as e:
        return str(e)
    return None if ok else "row relation fails"


def _check_markov(w: BraidWord, order: int):
    base = alex.alexander_thm2(w)
    z = rt.universal_invariant(w, order).series
    rng = random.Random(f"B{w.strands}:{w}")
    alpha = BraidWord(w.strands, tuple(rng.choice((1, -1)) * rng.randint(1, w.strands - 1)
                                       for _ in range(rng.randint(1, 4))) if w.strands > 1 else ())
    variants = {
        "stabilize+": w.stabilize(1),
        "stabilize-": w.stabilize(-1),
        "conjugate": w.conjugate(alpha),
        "mirror": w.mirror(),
    }
    for name, v in variants.items():
        if alex.alexander_thm2(v) != base:
            return f"{name}: Delta changed"
        if rt.universal_invariant(v, order).series != z:
            return f"{name}: invariant series changed"
    return None


def _check_cable(item, order: int):
    w, m = item
    c = cable(w, m)
    if cycle_count(closure_permutation(c)) != 1:
        return "cable is not a knot"
    got = alex.alexander_thm2(c).poly
    want = alex.substitute(alex.alexander_thm2(w), m)
    return None if got == want else f"Delta(cable) = {got}, expected {want}"


def _check_hopf(item, order: int):
    kind, arg = item
    if kind == "relations":
        lam, degree = arg
        rep = hopf_rep.commutator_check(lam, order, degree)
        if not rep.ok:
            return "; ".join(rep.violations)
        if not hopf_rep.central_element_check(lam, order, degree):
            return "central element is not lambda*h"
        return None
    p, q = arg
    return None if hopf_rep.r_matrix_action_check(p, q, order) else "R-matrix action mismatch"


@dataclass(frozen=True)
class Suite:
    name: str
    check: Callable
    corpus: Callable  # (args) -> list of items


CABLE_KNOTS = {
    "unknot": BraidWord(2, (1,)),
    "trefoil": BraidWord(2, (1, 1, 1)),
    "figure-eight": BraidWord(3, (1, -2, 1, -2)),
    "trefoil-3": BraidWord(3, (1, 2, 1, 2)),
    "cinquefoil": BraidWord(2, (1, 1, 1, 1, 1)),
}


def _cable_items(args) -> list:
    items = [(w, m) for w in CABLE_KNOTS.values() for m in (2, 3)]
    rng = random.Random(args.seed)
    for w in random_knots(rng, 10, 3, 6):
        items.append((w, 2))
    return items


def _hopf_items(args) -> list:
    lams = LAMBDAS if args.lam is None else (args.lam,)
    items: list = [("relations", (lam, args.degree)) for lam in lams]
    items += [("rmatrix", (p, q)) for p in range(7) for q in range(7 - p)]
    return items


def _knots(args):
    return knot_corpus(args.seed, args.count, args.max_strands, args.max_length)


def _words(args):
    return word_corpus(args.seed, args.count, args.max_strands, args.max_length)


def _words_n2(args):
    return [w for w in _words(args) if w.strands >= 2]


def _knots_n2(args):
    return [w for w in _knots(args) if w.strands >= 2]


SUITES: dict[str, Suite] = {
    "thm1": Suite("thm1", _check_thm1, _knots),
    "thm2": Suite("thm2", _check_thm2, _knots),
    "lemma2": Suite("lemma2", _check_lemma2, _words_n2),
    "schur": Suite("schur", _check_schur, _knots_n2),
    "rowrel": Suite("rowrel", _check_rowrel, _words_n2),
    "markov": Suite("markov", _check_markov, _knots),
    "cable": Suite("cable", _check_cable, _cable_items),
    "hopf": Suite("hopf", _check_hopf, _hopf_items),
}


# --- running ----------------------------------------------------------------


@dataclass
class SuiteArgs:
    seed: int = 0
    count: int = 200
    max_strands: int = 5
    max_length: int = 12
    order: int = DEFAULT_ORDER
    degree: int = 12
    lam: object = None
    jobs: int = 1


@dataclass
class ItemResult:
    item: str
    ok: bool
    detail: str | None = None
    seconds: float = 0.0


@dataclass
class RunReport:
    suite: str
    command: list[str]
    results: list[ItemResult] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(r.ok for r in self.results)

    @property
    def failed(self) -> int:
        return len(self.results) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    @property
    def failures(self) -> list[ItemResult]:
        return [r for r in self.results if not r.ok]

    def to_json(self, timings: bool = False) -> dict:
        def item(r: ItemResult) -> dict:
            d = {"item": r.item, "ok": r.ok}
            if r.detail:
                d["detail"] = r.detail
            if timings:
                d["seconds"] = round(r.seconds, 6)
            return d

        return {
            "suite": self.suite,
            "command": self.command,
            "passed": self.passed,
            "failed": self.failed,
            "failing_inputs": [r.item for r in self.failures],
            "results": [item(r) for r in self.results],
        }


def describe(item) -> str:
    if isinstance(item, BraidWord):
        return f"B{item.strands}: {item}"
    if isinstance(item, tuple) and item and isinstance(item[0], BraidWord):
        return f"B{item[0].strands}: {item[0]} | m={item[1]}"
    kind, arg = item
    if kind == "relations":
        return f"relations lambda={arg[0]} degree={arg[1]}"
    return f"rmatrix p={arg[0]} q={arg[1]}"


def _sort_key(item):
    if isinstance(item, BraidWord):
        return (0, item.strands, len(item), item.letters)
    if isinstance(item, tuple) and item and isinstance(item[0], BraidWord):
        w, m = item
        return (1, w.strands, len(w), w.letters, m)
    return (2, describe(item))


def _run_one(job):
    name, item, order = job
    t0 = time.perf_counter()
    try:
        detail = SUITES[name].check(item, order)
    except Exception as e:  # a raised error is a failing item, not a crash
        detail = f"{type(e).__name__}: {e}"
    return ItemResult(describe(item), detail is None, detail, time.perf_counter() - t0)


def run_suite(name: str, args: SuiteArgs | None = None, command: list[str] | None = None) -> RunReport:
    """Run one suite; results are sorted by input so reports are reproducible."""
    args = args or SuiteArgs()
    suite = SUITES[name]
    items = sorted(suite.corpus(args), key=_sort_key)
    jobs = [(name, it, args.order) for it in items]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_run_one, jobs, chunksize=64))
    else:
        results = [_run_one(j) for j in jobs]
    return RunReport(name, list(command or []), results)
