"""Acceptance gate.  Each test prints one ``[criterion N] PASS|FAIL`` line."""
import itertools
import random
import time
from fractions import Fraction
from pathlib import Path

import pytest

from morsejones import diagram as dg
from morsejones import reports
from morsejones.evaluator import (DELTA, bracket_bruteforce, bracket_sweep, catalan,
                                  jones_at_root, jones_symbolic, jones_t_terms)
from morsejones.exactnum import CycloInt, LaurentInt
from morsejones.moves import (Certificate, FinalMismatch, Move, MoveFailed, MoveKind,
                              WeightMismatch, apply_move, c_growth_check, inverse_move,
                              load_certificate, move_weight, parse_certificate,
                              run_certificate, serialize_certificate, verify_certificate)
from morsejones.tqft import (TqftParams, fusion_dim, fusion_dim_verlinde, theta,
                             verlinde_bound)

from helpers import forward_loci, random_forward_move

SAMPLES = Path(__file__).resolve().parent.parent / "samples"
NON_TWIST = [k for k in MoveKind if k is not MoveKind.TWIST]
LEMMA_RS = (5, 7, 8, 9, 10)


@pytest.fixture
def gate(capsys):
    def report(n, name, failures, detail=""):
        status = "PASS" if not failures else "FAIL"
        with capsys.disabled():
            print(f"\n[criterion {n}] {status} {name} {detail}".rstrip())
        assert not failures, failures[:5]
    return report


def test_c1_sweep_equals_state_sum(gate):
    t0 = time.perf_counter()
    failures = []
    exhaustive = 0
    corpus = itertools.chain(dg.enumerate_closed(14, 2),
                             (D for D in dg.enumerate_closed(8, 4) if dg.girth(D) == 4))
    for D in corpus:
        if D.crossings > 8:
            continue
        exhaustive += 1
        if bracket_sweep(D) != bracket_bruteforce(D):
            failures.append(str(D))
    rng = random.Random("c1-random")
    sampled = 0
    while sampled < 500:
        D = dg.random_diagram(rng.random(), rng.choice((4, 6, 8, 10)), rng.randint(10, 34))
        if D.crossings > 20:
            continue
        sampled += 1
        if bracket_sweep(D) != bracket_bruteforce(D):
            failures.append(str(D))
    secs = time.perf_counter() - t0
    if secs >= 300:
        failures.append(f"runtime {secs:.0f}s over 5 min")
    gate(1, "oracle equivalence", failures,
         f"exhaustive={exhaustive} random={sampled} secs={secs:.1f}")


def test_c2_known_values(gate):
    failures = []
    J = jones_t_terms(jones_symbolic(dg.trefoil()))
    if J != {-4: -1, -3: 1, -1: 1}:
        failures.append(f"trefoil {J}")
    if jones_symbolic(dg.unknot()) != LaurentInt.const(1):
        failures.append("unknot")
    for m in range(1, 8):
        if bracket_sweep(dg.unlink(m)) != DELTA ** m:
            failures.append(f"unlink({m})")
    gate(2, "known values", failures, "trefoil=-t^-4+t^-3+t^-1 unknot=1 unlink(m)=delta^m")


def test_c3_move_invariance(gate):
    failures = []
    for kind in NON_TWIST:
        rng = random.Random(f"c3-{kind.value}")
        for trial in range(200):
            D, m = random_forward_move(kind, rng, max_girth=6, length=16)
            E = apply_move(D, m)
            if jones_symbolic(E) != jones_symbolic(D):
                failures.append(f"{kind.value} #{trial} changed J")
            back = apply_move(E, inverse_move(D, m))
            if dg.serialize(back) != dg.serialize(D):
                failures.append(f"{kind.value} #{trial} fwd/rev not identity")
    gate(3, "move invariance", failures, f"kinds={len(NON_TWIST)} x 200")


def _twist_case(rng, r, n, sign):
    while True:
        D = dg.random_diagram(rng.random(), 6, rng.randint(8, 24))
        gaps = [j for j, c in enumerate(D.levels) if c >= n]
        if gaps:
            gap = rng.choice(gaps)
            start = rng.randint(0, D.levels[gap] - n)
            return D, Move(MoveKind.TWIST, True, gap, start, sign=sign, n=n, r=r)


def test_c4_twist_invariance_at_roots(gate):
    t0 = time.perf_counter()
    failures = []
    combos = list(itertools.product((1, 2, 3), (1, -1), (1, 2)))
    counts = {}
    for r in LEMMA_RS:
        rng = random.Random(f"c4-{r}")
        counts[r] = 0
        for trial in range(60):
            n, sign, stacked = combos[trial % len(combos)]
            D, m = _twist_case(rng, r, n, sign)
            moves = [m]
            cur = apply_move(D, m)
            if stacked == 2:
                # second twist on any legal locus of the twisted diagram
                n2 = rng.choice((1, 2, 3))
                gaps = [j for j, c in enumerate(cur.levels) if c >= n2] or [0]
                n2 = n2 if cur.levels[gaps[0]] >= n2 else 1
                gap = rng.choice([j for j, c in enumerate(cur.levels) if c >= n2])
                m2 = Move(MoveKind.TWIST, True, gap, rng.randint(0, cur.levels[gap] - n2),
                          sign=rng.choice((1, -1)), n=n2, r=r)
                moves.append(m2)
                cur = apply_move(cur, m2)
            verify_certificate(D, cur, Certificate(r, tuple(moves)))
            if jones_at_root(D, None, r) != jones_at_root(cur, None, r):
                failures.append(f"r={r} trial={trial} {dg.serialize(D)!r} {moves}")
            counts[r] += 1
    secs = time.perf_counter() - t0
    if secs >= 600:
        failures.append(f"runtime {secs:.0f}s over 10 min")
    gate(4, "twist invariance at exp(2 pi i/r)", failures,
         " ".join(f"r{r}={c}" for r, c in counts.items()) + f" secs={secs:.1f}")


def _random_certificate(rng):
    r = rng.choice(LEMMA_RS)
    D = dg.random_diagram(rng.random(), rng.choice((2, 4, 6)), rng.randint(4, 16))
    moves, cur = [], D
    for _ in range(rng.randint(1, 6)):
        if rng.random() < 0.35:
            n = rng.choice((1, 2, 3))
            gaps = [j for j, c in enumerate(cur.levels) if c >= n]
            if not gaps:
                continue
            gap = rng.choice(gaps)
            m = Move(MoveKind.TWIST, True, gap, rng.randint(0, cur.levels[gap] - n),
                     sign=rng.choice((1, -1)), n=n, r=r)
        else:
            loci = forward_loci(cur, rng.choice(NON_TWIST))
            if not loci:
                continue
            m = rng.choice(loci)
        if moves and rng.random() < 0.15:
            m = inverse_move(prev, moves[-1])
        prev = cur
        moves.append(m)
        cur = apply_move(cur, m)
    return D, Certificate(r, tuple(moves))


def test_c5_twist_accounting(gate):
    failures = []
    rng = random.Random("c5")
    twists = 0
    for k in range(1000):
        D, cert = _random_certificate(rng)
        chain = run_certificate(D, cert)
        for step, (m, before, after) in enumerate(zip(cert.moves, chain, chain[1:])):
            w = move_weight(m, cert.r)
            dc = dg.complexity_c(after) - dg.complexity_c(before)
            if dc > 2 * w:
                failures.append(f"cert {k} step {step}: dc={dc} > 2w={2 * w}")
            if m.kind is MoveKind.TWIST:
                sgn = 1 if m.forward else -1
                expect = 2 * cert.r * m.n * (m.n - 1)
                twists += 1
                if after.crossings - before.crossings != sgn * 2 * expect:
                    failures.append(f"cert {k} step {step}: crossings")
                if w != expect or dc != sgn * expect:
                    failures.append(f"cert {k} step {step}: weight or c")
        if c_growth_check(D, cert) < dg.complexity_c(chain[-1]):
            failures.append(f"cert {k}: c exceeds c(D) + 2W")
    gate(5, "twist accounting", failures, f"certificates=1000 twist_steps={twists}")


def test_c6_torus_girth_and_girth_two(gate):
    failures = []
    for p in range(1, 6):
        for q in range(p, 8):
            g = dg.girth(dg.torus_closure(p, q))
            if g != 2 * min(p, q):
                failures.append(f"torus({p},{q}) girth {g}")
    seen = 0
    for D in dg.enumerate_closed(12, 2):
        seen += 1
        m = dg.trace_components(D).count
        if jones_symbolic(D) != DELTA ** (m - 1):
            failures.append(str(D))
    gate(6, "torus girth and girth-2 unlinks", failures, f"girth2_diagrams={seen}")


def test_c7_tqft_identities(gate):
    failures = []
    worst = 0.0
    for r in range(3, 13):
        one = CycloInt.one(4 * r)
        for a in TqftParams(r).labels:
            if theta(a, r) ** (4 * r) != one:
                failures.append(f"theta({a},{r})")
        for n in range(0, 21, 2):
            d = fusion_dim(r, n)
            v = fusion_dim_verlinde(r, n)
            worst = max(worst, abs(v - d))
            if round(v) != d or abs(v - d) >= 1e-6:
                failures.append(f"fusion r={r} n={n}: {d} vs {v}")
            if not d < verlinde_bound(r, n):
                failures.append(f"bound r={r} n={n}")
    gate(7, "tqft identities", failures, f"max_verlinde_error={worst:.1e}")


def test_c8_thin_scaling(gate):
    failures = []
    qs = (10, 100, 1000, 2000)
    records = reports.run_bench(reports.torus_family(2, qs))
    records += reports.run_bench(reports.random_family(8, 30, 40, seed=8), bf_limit=18)
    records += reports.run_bench(reports.twist_family(5, 10, seed=8))
    torus = [rec for rec in records if rec.id.startswith("torus-")]
    r2 = reports.linear_fit_r2([int(rec.id.rsplit("-", 1)[1]) for rec in torus],
                               [rec.steps for rec in torus])
    if not r2 > 0.99:
        failures.append(f"R^2={r2}")
    for rec in records:
        if rec.state_peak > catalan(rec.girth // 2):
            failures.append(f"{rec.id} peak {rec.state_peak}")
    gate(8, "thin-diagram scaling", failures,
         f"R2={r2:.6f} steps={[rec.steps for rec in torus]} benchmarked={len(records)}")


def _library():
    U, T = dg.unknot(), dg.trefoil()
    lib = [(T, Certificate(5)), (U, Certificate(7))]
    sample = load_certificate(SAMPLES / "unknot-chain.cert")
    lib.append((dg.load(SAMPLES / "unknot.morse"), sample))
    lib.append((T, Certificate(5, (Move(MoveKind.R2, True, 3, 1, sign=-1),
                                   Move(MoveKind.SLIDE, False, 1, 1),
                                   Move(MoveKind.R1, True, 1, 0, sign=1)))))
    lib.append((dg.unlink(2), Certificate(9, (Move(MoveKind.LEVEL, True, 1, 0, sign=1),
                                              Move(MoveKind.ZIGZAG, True, 2, 1, sign=-1),
                                              Move(MoveKind.LEVEL, True, 0, 0, sign=-1)))))
    lib.append((dg.torus_closure(3, 2), Certificate(8, (
        Move(MoveKind.TWIST, True, 3, 0, sign=-1, n=3),
        Move(MoveKind.R2, True, 3, 1, sign=1)))))
    return lib


def test_c9_certificate_verifier(gate):
    failures = []
    accepted = rejected = 0
    for idx, (base, cert) in enumerate(_library()):
        target = run_certificate(base, cert)[-1]
        text = serialize_certificate(cert)
        cert = parse_certificate(text)
        try:
            w = verify_certificate(base, target, cert)
            if w != cert.computed_weight():
                failures.append(f"cert {idx}: weight {w}")
            accepted += 1
        except Exception as exc:
            failures.append(f"cert {idx} rejected: {exc!r}")
            continue
        # wrong declared weight
        bumped = parse_certificate(text.replace(f"weight {int(2 * cert.weight)}",
                                                f"weight {int(2 * cert.weight) + 1}"))
        try:
            verify_certificate(base, target, bumped)
            failures.append(f"cert {idx}: wrong weight accepted")
        except WeightMismatch:
            rejected += 1
        # wrong target
        wrong = dg.concat(target, dg.unknot())
        try:
            verify_certificate(base, wrong, cert)
            failures.append(f"cert {idx}: wrong target accepted")
        except FinalMismatch:
            rejected += 1
        # wrong locus, one step at a time
        for step, m in enumerate(cert.moves):
            moved = list(cert.moves)
            moved[step] = Move(m.kind, m.forward, m.event + 1000, m.strand, m.sign, m.n, m.r)
            try:
                verify_certificate(base, target, Certificate(cert.r, tuple(moved), cert.weight))
                failures.append(f"cert {idx}: bad locus at step {step} accepted")
            except MoveFailed as exc:
                if exc.step != step:
                    failures.append(f"cert {idx}: reported step {exc.step}, expected {step}")
                rejected += 1
    if not any(len(c.moves) == 0 for _, c in _library()):
        failures.append("library lacks the empty certificate")
    gate(9, "certificate verifier", failures, f"accepted={accepted} rejected={rejected}")
