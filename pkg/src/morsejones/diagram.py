"""Link diagrams in Morse position, read bottom to top as a word of events.

A diagram is a sequence of cups (minima), caps (maxima) and crossings
acting on the strands cut by a generic horizontal line.  Positions are
zero-based and count strands from the left.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence


class Kind(enum.Enum):
    CUP = "cup"
    CAP = "cap"
    XPOS = "x+"
    XNEG = "x-"

    @property
    def is_crossing(self) -> bool:
        return self in (Kind.XPOS, Kind.XNEG)

    @property
    def sign(self) -> int:
        return {Kind.XPOS: 1, Kind.XNEG: -1}.get(self, 0)

    def mirror(self) -> "Kind":
        return {Kind.XPOS: Kind.XNEG, Kind.XNEG: Kind.XPOS}.get(self, self)


# lexicographic rank used by enumeration
_KIND_ORDER = {Kind.CUP: 0, Kind.CAP: 1, Kind.XPOS: 2, Kind.XNEG: 3}
# integer codes shared with the compiled kernels
KIND_CODE = {Kind.CUP: 0, Kind.CAP: 1, Kind.XPOS: 2, Kind.XNEG: 3}


class Event(NamedTuple):
    kind: Kind
    pos: int

    def __str__(self):
        return f"{self.kind.value} {self.pos}"

    @classmethod
    def cup(cls, i):
        return cls(Kind.CUP, i)

    @classmethod
    def cap(cls, i):
        return cls(Kind.CAP, i)

    @classmethod
    def xpos(cls, i):
        return cls(Kind.XPOS, i)

    @classmethod
    def xneg(cls, i):
        return cls(Kind.XNEG, i)

    @classmethod
    def cross(cls, i, sign):
        return cls(Kind.XPOS if sign > 0 else Kind.XNEG, i)


class DiagramError(ValueError):
    def __init__(self, message: str, index: int | None = None):
        super().__init__(message if index is None else f"event {index}: {message}")
        self.index = index


class NegativeStrands(DiagramError):
    pass


class IndexOutOfRange(DiagramError):
    pass


class NonClosed(DiagramError):
    pass


class InconsistentOrientation(ValueError):
    pass


class LimitExceeded(ValueError):
    pass


class FormatError(ValueError):
    pass


def _step(count: int, ev: Event, index: int) -> int:
    kind, i = ev
    if kind is Kind.CUP:
        if not 0 <= i <= count:
            raise IndexOutOfRange(f"cup at {i} with {count} strands", index)
        return count + 2
    if count < 2:
        if kind is Kind.CAP:
            raise NegativeStrands(f"cap at {i} with {count} strands", index)
        raise IndexOutOfRange(f"{kind.value} at {i} with {count} strands", index)
    if not 0 <= i <= count - 2:
        raise IndexOutOfRange(f"{kind.value} at {i} with {count} strands", index)
    return count - 2 if kind is Kind.CAP else count


@dataclass(frozen=True)
class MorseDiagram:
    events: tuple[Event, ...]

    def __post_init__(self):
        count = 0
        for k, ev in enumerate(self.events):
            count = _step(count, ev, k)
        if count:
            raise NonClosed(f"diagram ends with {count} open strands")

    def __len__(self):
        return len(self.events)

    def __iter__(self):
        return iter(self.events)

    @cached_property
    def levels(self) -> tuple[int, ...]:
        """Strand counts on the generic lines: ``levels[j]`` sits just below event ``j``."""
        out = [0]
        for ev in self.events:
            out.append(_step(out[-1], ev, -1))
        return tuple(out)

    @property
    def crossings(self) -> int:
        return sum(1 for ev in self.events if ev.kind.is_crossing)

    @property
    def extrema(self) -> int:
        return sum(1 for ev in self.events if not ev.kind.is_crossing)

    def __str__(self):
        return " ".join(f"{ev.kind.value}{ev.pos}" for ev in self.events) or "(empty)"

    def codes(self) -> list[tuple[int, int]]:
        return [(KIND_CODE[ev.kind], ev.pos) for ev in self.events]

    @cached_property
    def _arcs(self) -> "_Arcs":
        return _Arcs.build(self)


def validate(events: Sequence[Event | tuple]) -> MorseDiagram:
    return MorseDiagram(tuple(Event(Kind(k) if not isinstance(k, Kind) else k, int(i))
                              for k, i in events))


def girth(D: MorseDiagram) -> int:
    return max(D.levels)


def complexity_doubled(D: MorseDiagram) -> int:
    return len(D.events)


def complexity_c(D: MorseDiagram) -> Fraction:
    """Half the crossings plus half the extrema."""
    return Fraction(complexity_doubled(D), 2)


# --- arc structure ------------------------------------------------------------

@dataclass
class _Arcs:
    """Strand segments between events.

    ``level_segs[j]`` lists segment ids on the line below event ``j``.
    ``ins[k]``/``outs[k]`` are the segment ids consumed/produced by event ``k``.
    """

    n_segs: int
    level_segs: list[tuple[int, ...]]
    ins: list[tuple[int, ...]]
    outs: list[tuple[int, ...]]

    @classmethod
    def build(cls, D: MorseDiagram) -> "_Arcs":
        nxt = 0
        cur: list[int] = []
        level_segs = [()]
        ins, outs = [], []
        for kind, i in D.events:
            if kind is Kind.CUP:
                new = (nxt, nxt + 1)
                nxt += 2
                cur[i:i] = new
                ins.append(())
                outs.append(new)
            elif kind is Kind.CAP:
                ins.append((cur[i], cur[i + 1]))
                outs.append(())
                del cur[i:i + 2]
            else:
                ins.append((cur[i], cur[i + 1]))
                new = (nxt, nxt + 1)
                nxt += 2
                cur[i:i + 2] = new
                outs.append(new)
            level_segs.append(tuple(cur))
        return cls(nxt, level_segs, ins, outs)


class Components(NamedTuple):
    count: int
    labels: tuple[tuple[int, ...], ...]   # per level, per strand
    seg_labels: tuple[int, ...]


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def trace_components(D: MorseDiagram) -> Components:
    """Label every strand by its link component.

    Components are numbered by first appearance in the bottom-up sweep.
    """
    arcs = D._arcs
    parent = list(range(arcs.n_segs))

    def union(a, b):
        ra, rb = _find(parent, a), _find(parent, b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for ev, i_s, o_s in zip(D.events, arcs.ins, arcs.outs):
        if ev.kind is Kind.CUP:
            union(*o_s)
        elif ev.kind is Kind.CAP:
            union(*i_s)
        else:
            union(i_s[0], o_s[1])
            union(i_s[1], o_s[0])
    names: dict[int, int] = {}
    seg_labels = []
    for s in range(arcs.n_segs):
        root = _find(parent, s)
        if root not in names:
            names[root] = len(names)
        seg_labels.append(names[root])
    labels = tuple(tuple(seg_labels[s] for s in segs) for segs in arcs.level_segs)
    return Components(len(names), labels, tuple(seg_labels))


@dataclass(frozen=True)
class Orientation:
    """Per-component reversal flags relative to the default orientation.

    By default each component runs left to right through its lowest cup.
    """

    flips: tuple[bool, ...] = ()

    @classmethod
    def default(cls, D: MorseDiagram) -> "Orientation":
        return cls((False,) * trace_components(D).count)


def strand_directions(D: MorseDiagram, o: Orientation | None = None) -> tuple[int, ...]:
    """Vertical direction (+1 up, -1 down) of every segment id."""
    comps = trace_components(D)
    if o is None:
        o = Orientation((False,) * comps.count)
    if len(o.flips) != comps.count:
        raise InconsistentOrientation(
            f"orientation has {len(o.flips)} flags, diagram has {comps.count} components")
    arcs = D._arcs
    # top/bottom end of each segment -> (partner segment, partner end)
    bottom: dict[int, tuple[int, str]] = {}
    top: dict[int, tuple[int, str]] = {}
    first_cup: dict[int, tuple[int, int]] = {}
    for ev, i_s, o_s in zip(D.events, arcs.ins, arcs.outs):
        if ev.kind is Kind.CUP:
            a, b = o_s
            bottom[a] = (b, "bottom")
            bottom[b] = (a, "bottom")
            first_cup.setdefault(comps.seg_labels[a], (a, b))
        elif ev.kind is Kind.CAP:
            a, b = i_s
            top[a] = (b, "top")
            top[b] = (a, "top")
        else:
            (a, b), (c, d) = i_s, o_s
            top[a] = (d, "bottom")
            bottom[d] = (a, "top")
            top[b] = (c, "bottom")
            bottom[c] = (b, "top")
    direction = [0] * arcs.n_segs
    for comp in range(comps.count):
        _, start = first_cup[comp]
        up = -1 if o.flips[comp] else 1
        seg, d = start, up
        while True:
            if direction[seg]:
                if direction[seg] != d:
                    raise InconsistentOrientation(f"segment {seg} traversed both ways")
                break
            direction[seg] = d
            nxt, end = top[seg] if d > 0 else bottom[seg]
            seg, d = nxt, (1 if end == "bottom" else -1)
    return tuple(direction)


def writhe(D: MorseDiagram, o: Orientation | None = None) -> int:
    dirs = strand_directions(D, o)
    arcs = D._arcs
    w = 0
    for ev, i_s in zip(D.events, arcs.ins):
        if ev.kind.is_crossing:
            w += ev.kind.sign * dirs[i_s[0]] * dirs[i_s[1]]
    return w


def mirror(D: MorseDiagram) -> MorseDiagram:
    return MorseDiagram(tuple(Event(ev.kind.mirror(), ev.pos) for ev in D.events))


def concat(*diagrams: MorseDiagram) -> MorseDiagram:
    """Split union, stacking closed diagrams vertically."""
    return MorseDiagram(tuple(ev for D in diagrams for ev in D.events))


# --- generators ---------------------------------------------------------------

def torus_closure(p: int, q: int, sign: int = 1) -> MorseDiagram:
    """Closure of the braid ``(s_1 ... s_{p-1})**q`` with ``min(p, q)`` strands.

    The braid runs on the right half of ``p`` nested cups and is closed off
    by ``p`` nested caps, so the girth is ``2 * min(p, q)``.
    """
    if p < 1 or q < 1:
        raise ValueError("torus parameters must be positive")
    if p > q:
        p, q = q, p
    evs = [Event.cup(k) for k in range(p)]
    for _ in range(q):
        evs.extend(Event.cross(p + j, sign) for j in range(p - 1))
    evs.extend(Event.cap(k) for k in reversed(range(p)))
    return MorseDiagram(tuple(evs))


def unlink(m: int) -> MorseDiagram:
    if m < 1:
        raise ValueError("unlink needs at least one component")
    return MorseDiagram((Event.cup(0), Event.cap(0)) * m)


def unknot() -> MorseDiagram:
    return unlink(1)


def trefoil(sign: int = -1) -> MorseDiagram:
    """Plat closure of three half twists: a trefoil of girth 4 and c = 7/2.

    The default ``sign=-1`` is the chirality whose Jones polynomial is
    ``-t^-4 + t^-3 + t^-1``; ``sign=+1`` gives its mirror.
    """
    x = Event.cross(1, sign)
    return MorseDiagram((Event.cup(0), Event.cup(2), x, x, x, Event.cap(0), Event.cap(0)))


def legal_events(count: int, max_girth: int) -> list[Event]:
    """Every event allowed on a line of ``count`` strands, in lexicographic order."""
    out = []
    if count + 2 <= max_girth:
        out.extend(Event.cup(i) for i in range(count + 1))
    if count >= 2:
        out.extend(Event.cap(i) for i in range(count - 1))
        out.extend(Event.xpos(i) for i in range(count - 1))
        out.extend(Event.xneg(i) for i in range(count - 1))
    return out


def random_diagram(seed, max_girth: int, length: int, crossing_bias: float = 0.5) -> MorseDiagram:
    """Random walk of ``length`` legal events, then closed off with caps."""
    if max_girth < 2 or max_girth % 2:
        raise ValueError("max_girth must be even and at least 2")
    rng = random.Random(seed)
    evs: list[Event] = []
    count = 0
    for _ in range(length):
        kinds = []
        if count + 2 <= max_girth:
            kinds.append(Kind.CUP)
        if count >= 2:
            kinds.append(Kind.CAP)
            kinds.append("x")
        if "x" in kinds and rng.random() < crossing_bias:
            kind = "x"
        else:
            kind = rng.choice(kinds)
        if kind is Kind.CUP:
            ev = Event.cup(rng.randint(0, count))
        elif kind is Kind.CAP:
            ev = Event.cap(rng.randint(0, count - 2))
        else:
            ev = Event.cross(rng.randint(0, count - 2), rng.choice((1, -1)))
        count = _step(count, ev, len(evs))
        evs.append(ev)
    while count:
        evs.append(Event.cap(0))
        count -= 2
    return MorseDiagram(tuple(evs))


def enumerate_closed(max_events: int, max_girth: int) -> Iterator[MorseDiagram]:
    """All closed diagrams with at most ``max_events`` events and girth at most
    ``max_girth``, in lexicographic order (prefixes first)."""
    if max_events > 14:
        raise LimitExceeded(f"max_events={max_events} exceeds the limit of 14")
    if max_girth not in (2, 4):
        raise LimitExceeded(f"max_girth must be 2 or 4, got {max_girth}")

    word: list[Event] = []

    def rec(count: int) -> Iterator[MorseDiagram]:
        if word and count == 0:
            yield MorseDiagram(tuple(word))
        remaining = max_events - len(word)
        # every open pair still needs a cap
        if remaining <= 0 or count // 2 > remaining:
            return
        for ev in legal_events(count, max_girth):
            nc = _step(count, ev, -1)
            if nc // 2 > remaining - 1:
                continue
            word.append(ev)
            yield from rec(nc)
            word.pop()

    yield from rec(0)


# --- text format --------------------------------------------------------------

HEADER = "morse v1"


def serialize(D: MorseDiagram) -> str:
    return HEADER + "\n" + "".join(f"{ev}\n" for ev in D.events)


def parse(text: str) -> MorseDiagram:
    lines = text.split("\n")
    if not lines or lines[0].split("#", 1)[0].strip() != HEADER:
        raise FormatError(f"first line must be '{HEADER}'")
    evs = []
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 2:
            raise FormatError(f"line {lineno}: expected '<kind> <index>', got {raw!r}")
        try:
            kind = Kind(toks[0])
            pos = int(toks[1])
        except ValueError:
            raise FormatError(f"line {lineno}: bad event {raw!r}") from None
        if pos < 0:
            raise FormatError(f"line {lineno}: negative index")
        evs.append(Event(kind, pos))
    return MorseDiagram(tuple(evs))


def load(path) -> MorseDiagram:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse(fh.read())


def save(D: MorseDiagram, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize(D))
