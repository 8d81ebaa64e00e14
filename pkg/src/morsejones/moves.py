"""Weighted rewrite moves on event words and certificates built from them.

Loci are ``(event, strand)``.  For moves that insert events, ``event`` is the
gap index (insert before that event) and ``strand`` the strand position on
that gap.  Removal moves use the same locus as the insertion they undo, so
``fwd`` and ``rev`` at one locus are inverse.  In-place moves (r3, slide,
level) address the first event of the pattern and the lowest strand of the
window.

Patterns (``s`` is the move sign, ``i`` the strand):

========  ==========================================  ============================
kind      forward                                     reverse
========  ==========================================  ============================
r1        insert  cup i+1, x(s) i, cap i+1            remove it
r2        insert  x(s) i, x(-s) i                     remove it
r3        x(a) i, x(b) i+1, x(c) i                    back
          -> x(c) i+1, x(b) i, x(a) i+1
zigzag    s=+: insert cup i+1, cap i                  remove it (death)
          s=-: insert cup i, cap i+1
slide     cup i, x(k) i+1  -> cup i+1, x(-k) i        back
          x(k) i, cap i+1  -> x(-k) i+1, cap i
level     swap events e, e+1 on disjoint strands      same operation
twist     insert 4r full twists on strands i..i+n-1   remove them
========  ==========================================  ============================
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

from .diagram import Event, Kind, MorseDiagram, complexity_c


class MoveKind(enum.Enum):
    R1 = "r1"
    R2 = "r2"
    R3 = "r3"
    ZIGZAG = "zigzag"
    LEVEL = "level"
    SLIDE = "slide"
    TWIST = "twist"


class MoveError(ValueError):
    pass


class PatternMismatch(MoveError):
    pass


class BadGap(MoveError):
    pass


class BadStrandRange(MoveError):
    pass


class CertificateError(ValueError):
    pass


class MoveFailed(CertificateError):
    def __init__(self, step: int, reason: str):
        super().__init__(f"step {step}: {reason}")
        self.step = step
        self.reason = reason


class FinalMismatch(CertificateError):
    pass


class WeightMismatch(CertificateError):
    pass


class BoundViolated(CertificateError):
    pass


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    forward: bool
    event: int
    strand: int
    sign: int = 1
    n: int | None = None
    r: int | None = None

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.kind is MoveKind.TWIST and (self.n is None or self.n < 1):
            raise ValueError("twist needs n >= 1")


def move_weight(m: Move, r: int | None = None) -> Fraction:
    if m.kind is MoveKind.R1:
        return Fraction(3, 2)
    if m.kind is MoveKind.TWIST:
        r = m.r if r is None else r
        if r is None or r < 3:
            raise ValueError(f"twist weight needs r >= 3, got {r}")
        return Fraction(2 * r * m.n * (m.n - 1))
    return Fraction(1)


def full_twist_word(start: int, n: int, sign: int, r: int) -> list[Event]:
    """``((s_start ... s_{start+n-2})**n)**(4r)`` with crossings of one sign."""
    one = [Event.cross(start + j, sign) for j in range(n - 1)] * n
    return one * (4 * r)


def _check_gap(D: MorseDiagram, gap: int) -> int:
    if not 0 <= gap <= len(D.events):
        raise BadGap(f"gap {gap} outside 0..{len(D.events)}")
    return D.levels[gap]


def insert_full_twists(D: MorseDiagram, gap_index: int, start_strand: int, n: int,
                       sign: int, r: int) -> MorseDiagram:
    if r < 3:
        raise ValueError(f"r must be at least 3, got {r}")
    if n < 1:
        raise BadStrandRange("n must be at least 1")
    count = _check_gap(D, gap_index)
    if start_strand < 0 or start_strand + n > count:
        raise BadStrandRange(f"strands {start_strand}..{start_strand + n - 1} not all on a "
                             f"line of {count} strands")
    word = full_twist_word(start_strand, n, sign, r)
    evs = D.events
    return MorseDiagram(evs[:gap_index] + tuple(word) + evs[gap_index:])


def _window(D: MorseDiagram, e: int, length: int) -> tuple[Event, ...]:
    if e < 0 or e + length > len(D.events):
        raise PatternMismatch(f"events {e}..{e + length - 1} out of range")
    return D.events[e:e + length]


def _splice(D: MorseDiagram, e: int, length: int, new: Sequence[Event]) -> MorseDiagram:
    return MorseDiagram(D.events[:e] + tuple(new) + D.events[e + length:])


def _insertion(m: Move) -> list[Event]:
    i, s = m.strand, m.sign
    if m.kind is MoveKind.R1:
        return [Event.cup(i + 1), Event.cross(i, s), Event.cap(i + 1)]
    if m.kind is MoveKind.R2:
        return [Event.cross(i, s), Event.cross(i, -s)]
    if m.kind is MoveKind.ZIGZAG:
        return [Event.cup(i + 1), Event.cap(i)] if s > 0 else [Event.cup(i), Event.cap(i + 1)]
    if m.kind is MoveKind.TWIST:
        if m.r is None:
            raise MoveError("twist move carries no r")
        return full_twist_word(i, m.n, s, m.r)
    raise AssertionError(m.kind)


def _insert_or_remove(D: MorseDiagram, m: Move) -> MorseDiagram:
    word = _insertion(m)
    if m.forward:
        count = _check_gap(D, m.event)
        need = m.n if m.kind is MoveKind.TWIST else 1
        if m.kind is MoveKind.R2:
            need = 2
        if m.strand < 0 or m.strand + need > count:
            raise PatternMismatch(f"strand {m.strand} (width {need}) not on a line of {count}")
        return MorseDiagram(D.events[:m.event] + tuple(word) + D.events[m.event:])
    found = _window(D, m.event, len(word))
    if list(found) != word:
        raise PatternMismatch(f"expected {' / '.join(map(str, word))} at event {m.event}")
    return _splice(D, m.event, len(word), ())


def _r3(D: MorseDiagram, m: Move) -> MorseDiagram:
    i, e = m.strand, m.event
    w = _window(D, e, 3)
    if not all(ev.kind.is_crossing for ev in w):
        raise PatternMismatch(f"r3 needs three crossings at event {e}")
    lo, hi = (i, i + 1) if m.forward else (i + 1, i)
    if (w[0].pos, w[1].pos, w[2].pos) != (lo, hi, lo):
        raise PatternMismatch(f"r3 pattern mismatch at event {e}")
    a, b, c = (ev.kind.sign for ev in w)
    # the moving strand must pass entirely over or under the other crossing
    if a == c != b:
        raise PatternMismatch(f"r3 at event {e}: no strand lies above both others")
    return _splice(D, e, 3, [Event.cross(hi, c), Event.cross(lo, b), Event.cross(hi, a)])


def _slide(D: MorseDiagram, m: Move) -> MorseDiagram:
    i, e = m.strand, m.event
    first, second = _window(D, e, 2)
    src, dst = (i, i + 1) if m.forward else (i + 1, i)
    if first.kind is Kind.CUP and second.kind.is_crossing:
        if (first.pos, second.pos) != (src, dst):
            raise PatternMismatch(f"slide pattern mismatch at event {e}")
        return _splice(D, e, 2, [Event.cup(dst), Event.cross(src, -second.kind.sign)])
    if first.kind.is_crossing and second.kind is Kind.CAP:
        if (first.pos, second.pos) != (src, dst):
            raise PatternMismatch(f"slide pattern mismatch at event {e}")
        return _splice(D, e, 2, [Event.cross(dst, -first.kind.sign), Event.cap(src)])
    raise PatternMismatch(f"slide needs cup+crossing or crossing+cap at event {e}")


_W_IN = {Kind.CUP: 0, Kind.CAP: 2, Kind.XPOS: 2, Kind.XNEG: 2}
_W_OUT = {Kind.CUP: 2, Kind.CAP: 0, Kind.XPOS: 2, Kind.XNEG: 2}


def exchange_levels(u: Event, v: Event, tie_right: bool = True) -> tuple[Event, Event] | None:
    """Commute ``u`` (below) past ``v`` (above), or None if they share strands.

    A cap followed by a cup at the same point can go either way round;
    ``tie_right`` puts the cup to the right of the cap's strands.
    """
    a, b = u.pos, v.pos
    wu, wv = _W_OUT[u.kind], _W_IN[v.kind]
    right = b >= a + wu
    left = b + wv <= a
    if right and left:
        right, left = tie_right, not tie_right
    if right:
        return Event(v.kind, b - wu + _W_IN[u.kind]), Event(u.kind, a)
    if left:
        return Event(v.kind, b), Event(u.kind, a + _W_OUT[v.kind] - wv)
    return None


def _level(D: MorseDiagram, m: Move) -> MorseDiagram:
    u, v = _window(D, m.event, 2)
    res = exchange_levels(u, v, tie_right=m.sign > 0)
    if res is None:
        raise PatternMismatch(f"events {m.event}, {m.event + 1} share strands")
    return _splice(D, m.event, 2, res)


def apply_move(D: MorseDiagram, m: Move) -> MorseDiagram:
    if m.kind in (MoveKind.R1, MoveKind.R2, MoveKind.ZIGZAG, MoveKind.TWIST):
        return _insert_or_remove(D, m)
    if m.kind is MoveKind.R3:
        return _r3(D, m)
    if m.kind is MoveKind.SLIDE:
        return _slide(D, m)
    if m.kind is MoveKind.LEVEL:
        return _level(D, m)
    raise AssertionError(m.kind)


def inverse_move(D: MorseDiagram, m: Move) -> Move:
    """The move undoing ``m`` when applied to ``apply_move(D, m)``."""
    if m.kind is not MoveKind.LEVEL:
        return replace(m, forward=not m.forward)
    u, v = D.events[m.event:m.event + 2]
    moved = exchange_levels(u, v, tie_right=m.sign > 0)
    for s in (1, -1):
        if exchange_levels(*moved, tie_right=s > 0) == (u, v):
            return replace(m, forward=not m.forward, sign=s)
    raise AssertionError("level exchange has no inverse")


# --- certificates -------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    r: int
    moves: tuple[Move, ...] = ()
    weight: Fraction | None = None   # declared; None means "compute"

    def __post_init__(self):
        object.__setattr__(self, "moves", tuple(
            replace(m, r=self.r) if m.kind is MoveKind.TWIST and m.r != self.r else m
            for m in self.moves))
        if self.weight is None:
            object.__setattr__(self, "weight", self.computed_weight())

    def computed_weight(self) -> Fraction:
        return sum((move_weight(m, self.r) for m in self.moves), Fraction(0))


def run_certificate(D: MorseDiagram, cert: Certificate) -> list[MorseDiagram]:
    """Every intermediate diagram, starting with ``D``."""
    out = [D]
    for k, m in enumerate(cert.moves):
        try:
            out.append(apply_move(out[-1], m))
        except (MoveError, ValueError) as exc:
            raise MoveFailed(k, str(exc)) from exc
    return out


def verify_certificate(D: MorseDiagram, target: MorseDiagram, cert: Certificate) -> Fraction:
    """Replay ``cert`` from ``D``; returns the witnessed weight."""
    final = run_certificate(D, cert)[-1]
    if final.events != target.events:
        raise FinalMismatch("certificate does not end at the target diagram")
    computed = cert.computed_weight()
    if computed != cert.weight:
        raise WeightMismatch(f"declared weight {cert.weight}, computed {computed}")
    return computed


def c_growth_check(D: MorseDiagram, cert: Certificate) -> Fraction:
    """Check that each step raises c by at most twice its weight; returns
    ``c(D) + 2 * weight``."""
    chain = run_certificate(D, cert)
    c0 = complexity_c(D)
    budget = Fraction(0)
    for k, (m, before, after) in enumerate(zip(cert.moves, chain, chain[1:])):
        w = move_weight(m, cert.r)
        budget += w
        if complexity_c(after) - complexity_c(before) > 2 * w:
            raise BoundViolated(f"step {k}: c grew by more than 2 x weight {w}")
        if complexity_c(after) > c0 + 2 * budget:
            raise BoundViolated(f"step {k}: c exceeds c(D) + 2 x weight so far")
    return c0 + 2 * cert.computed_weight()


def fmt_move(m: Move) -> str:
    line = f"{m.kind.value} {'fwd' if m.forward else 'rev'} at {m.event} strand {m.strand}"
    sign = "+" if m.sign > 0 else "-"
    if m.kind is MoveKind.TWIST:
        line += f" n={m.n} sign={sign}"
    elif m.kind in (MoveKind.R1, MoveKind.R2, MoveKind.ZIGZAG, MoveKind.LEVEL):
        line += f" sign={sign}"
    return line


def serialize_certificate(cert: Certificate) -> str:
    lines = [f"cert v1 r={cert.r}"]
    lines.extend(fmt_move(m) for m in cert.moves)
    lines.append(f"weight {int(cert.weight * 2)}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> Certificate:
    lines = [ln.split("#", 1)[0].strip() for ln in text.split("\n")]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise CertificateError("empty certificate")
    head = lines[0].split()
    if len(head) != 3 or head[:2] != ["cert", "v1"] or not head[2].startswith("r="):
        raise CertificateError("first line must be 'cert v1 r=<r>'")
    r = int(head[2][2:])
    if len(lines) < 2 or not lines[-1].startswith("weight "):
        raise CertificateError("last line must be 'weight <doubled-integer>'")
    weight = Fraction(int(lines[-1].split()[1]), 2)
    moves = []
    for lineno, line in enumerate(lines[1:-1], start=2):
        toks = line.split()
        try:
            if len(toks) < 6 or toks[2] != "at" or toks[4] != "strand":
                raise ValueError(line)
            kind = MoveKind(toks[0])
            if toks[1] not in ("fwd", "rev"):
                raise ValueError(toks[1])
            opts = dict(t.split("=", 1) for t in toks[6:])
            if set(opts) - {"n", "sign"}:
                raise ValueError(line)
            sign = {"+": 1, "-": -1}[opts.get("sign", "+")]
            n = int(opts["n"]) if "n" in opts else None
            moves.append(Move(kind, toks[1] == "fwd", int(toks[3]), int(toks[5]),
                              sign=sign, n=n, r=r if kind is MoveKind.TWIST else None))
        except (ValueError, KeyError) as exc:
            raise CertificateError(f"line {lineno}: bad move {line!r}") from exc
    return Certificate(r, tuple(moves), weight)


def load_certificate(path) -> Certificate:
    with open(path, encoding="utf-8") as fh:
        return parse_certificate(fh.read())
