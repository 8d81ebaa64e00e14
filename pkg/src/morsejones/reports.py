"""Benchmark records, the twist-invariance report and text formatting used by the CLI."""
from __future__ import annotations

import csv
import random
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .diagram import (MorseDiagram, Orientation, complexity_c, girth, random_diagram,
                      torus_closure, trace_components, writhe)
from .evaluator import (BRUTEFORCE_LIMIT, ExceptionalRootWarning, bracket_bruteforce,
                        bruteforce_ops, format_t, is_exceptional, jones_at_root,
                        jones_symbolic, sweep_stats)
from .exactnum import CycloInt, complex_approx
from .moves import Certificate, Move, MoveKind, run_certificate, verify_certificate
from .tqft import TqftParams, fusion_dim, fusion_dim_verlinde, s_row, theta, verlinde_bound

CSV_HEADER = ["id", "girth", "events", "crossings", "state_peak", "steps", "ms", "bf_ok", "bf_ms"]


@dataclass
class BenchRecord:
    id: str
    girth: int
    events: int
    crossings: int
    state_peak: int
    steps: int
    ms: float
    bf_ok: bool
    bf_ms: float | None = None
    bf_ops: int | None = None

    def row(self) -> list[str]:
        return [self.id, str(self.girth), str(self.events), str(self.crossings),
                str(self.state_peak), str(self.steps), f"{self.ms:.3f}",
                "1" if self.bf_ok else "0",
                "" if self.bf_ms is None else f"{self.bf_ms:.3f}"]


def bench_one(ident: str, D: MorseDiagram, bf_limit: int = BRUTEFORCE_LIMIT) -> BenchRecord:
    t0 = time.perf_counter()
    res = sweep_stats(D)
    ms = (time.perf_counter() - t0) * 1e3
    rec = BenchRecord(ident, girth(D), len(D.events), D.crossings, res.peak, res.steps, ms,
                      bf_ok=D.crossings <= min(bf_limit, BRUTEFORCE_LIMIT))
    if rec.bf_ok:
        t0 = time.perf_counter()
        bf = bracket_bruteforce(D)
        rec.bf_ms = (time.perf_counter() - t0) * 1e3
        rec.bf_ops = bruteforce_ops(D)
        if bf != res.bracket:
            raise AssertionError(f"{ident}: sweep and state sum disagree")
    return rec


def _bench_task(args):
    return bench_one(*args)


def torus_family(p: int, qs) -> list[tuple[str, MorseDiagram]]:
    return [(f"torus-{p}-{q:05d}", torus_closure(p, q)) for q in qs]


def random_family(g: int, count: int, length: int, seed: int = 0) -> list[tuple[str, MorseDiagram]]:
    return [(f"random-g{g}-{k:04d}", random_diagram(f"{seed}-{k}", g, length))
            for k in range(count)]


def twist_family(r: int, count: int, seed: int = 0, max_girth: int = 6,
                 length: int = 20) -> list[tuple[str, MorseDiagram]]:
    out = []
    for k in range(count):
        rng = random.Random(f"twist-{seed}-{k}")
        D = random_diagram(rng.random(), max_girth, length)
        cert = random_twist_certificate(D, r, rng, stacked=1)
        out.append((f"twist-r{r}-{k:04d}", _replay(D, cert)))
    return out


def run_bench(family: list[tuple[str, MorseDiagram]], bf_limit: int = BRUTEFORCE_LIMIT,
              workers: int = 1) -> list[BenchRecord]:
    tasks = [(ident, D, bf_limit) for ident, D in family]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            records = list(pool.map(_bench_task, tasks))
    else:
        records = [bench_one(*t) for t in tasks]
    return sorted(records, key=lambda rec: rec.id)


def write_csv(records: list[BenchRecord], path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for rec in records:
            w.writerow(rec.row())


def linear_fit_r2(xs, ys) -> float:
    n = len(xs)
    mx, my = sum(xs) / n, sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    syy = sum((y - my) ** 2 for y in ys)
    if syy == 0:
        return 1.0
    return sxy * sxy / (sxx * syy)


# --- twist invariance ---------------------------------------------------------

def random_twist_certificate(D: MorseDiagram, r: int, rng: random.Random,
                             stacked: int = 1, ns=(1, 2, 3)) -> Certificate:
    """Up to ``stacked`` twist moves at random standard-form loci."""
    moves = []
    cur = D
    for _ in range(stacked):
        n = rng.choice(ns)
        gaps = [j for j, c in enumerate(cur.levels) if c >= n]
        if not gaps:
            n = 1
            gaps = [j for j, c in enumerate(cur.levels) if c >= 1]
        gap = rng.choice(gaps)
        start = rng.randint(0, cur.levels[gap] - n)
        m = Move(MoveKind.TWIST, True, gap, start, sign=rng.choice((1, -1)), n=n, r=r)
        moves.append(m)
        cur = _replay(cur, Certificate(r, (m,)))
    return Certificate(r, tuple(moves))


def _replay(D: MorseDiagram, cert: Certificate) -> MorseDiagram:
    return run_certificate(D, cert)[-1]


@dataclass
class LemmaRow:
    r: int
    trials: int
    equal: int
    exceptional: bool

    @property
    def failures(self) -> int:
        return self.trials - self.equal


def lemma_trials(r: int, trials: int, seed: int, max_girth: int = 6,
                 length: int = 24) -> LemmaRow:
    rng = random.Random(f"lemma-{seed}-{r}")
    equal = 0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ExceptionalRootWarning)
        for k in range(trials):
            D = random_diagram(rng.random(), max_girth, length)
            cert = random_twist_certificate(D, r, rng, stacked=1 + k % 2)
            target = _replay(D, cert)
            verify_certificate(D, target, cert)
            o = Orientation.default(D)
            if jones_at_root(D, o, r) == jones_at_root(target, o, r):
                equal += 1
    return LemmaRow(r, trials, equal, is_exceptional(r))


def lemma_report(rs, trials: int, seed: int = 0) -> list[LemmaRow]:
    for r in rs:
        if r < 3:
            raise ValueError(f"r must be at least 3, got {r}")
    return [lemma_trials(r, trials, seed) for r in rs]


def format_lemma_report(rows: list[LemmaRow]) -> str:
    lines = []
    for row in rows:
        if row.exceptional:
            lines.append(f"WARNING: r={row.r} is an exceptional root (q^4 = 1 or q^6 = 1)")
        status = "PASS" if row.failures == 0 else "FAIL"
        lines.append(f"r={row.r} trials={row.trials} equal={row.equal} "
                     f"failures={row.failures} {status}")
    return "\n".join(lines)


# --- formatting ---------------------------------------------------------------

def fmt_half(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_stats(D: MorseDiagram) -> str:
    return (f"girth={girth(D)} c={fmt_half(complexity_c(D))} "
            f"components={trace_components(D).count} writhe={writhe(D):+d}")


def format_complex(z: complex) -> str:
    return f"{z.real:.4f}{z.imag:+.4f}i"


def format_cyclo(c: CycloInt) -> str:
    return f"order={c.order} rep={list(c.rep)}"


def format_eval(D: MorseDiagram, r: int) -> str:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ExceptionalRootWarning)
        val = jones_at_root(D, None, r)
    return f"r={r} {format_cyclo(val)}\napprox={format_complex(complex_approx(val))}"


def format_symbolic(D: MorseDiagram) -> str:
    J = jones_symbolic(D)
    return f"A: {J}\nt: {format_t(J)}"


def format_tqft(r: int, what: str | None = None, arg: int | None = None) -> str:
    params = TqftParams(r)
    if what == "theta":
        return "\n".join(f"a={a} exponent={(a * a + 2 * a) % (4 * r)} {format_cyclo(theta(a, r))}"
                         for a in params.labels)
    if what == "srow":
        return "\n".join(f"i={i} S={v:.12f}" for i, v in enumerate(s_row(r).values))
    if what == "fusion":
        return f"fusion_dim={fusion_dim(r, arg)} verlinde={fusion_dim_verlinde(r, arg):.9f}"
    if what == "bound":
        return f"bound={verlinde_bound(r, arg):.6f}"
    return (f"r={r} level={params.level} labels={len(params.labels)} "
            f"exceptional={'yes' if params.exceptional else 'no'}")
