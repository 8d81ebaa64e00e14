"""Locus search for randomized move tests."""
import random

from morsejones import diagram as dg
from morsejones.diagram import Event, Kind
from morsejones.moves import Move, MoveKind

INSERTING = (MoveKind.R1, MoveKind.R2, MoveKind.ZIGZAG)


def forward_loci(D, kind):
    """Every forward move of ``kind`` applicable to ``D``."""
    evs, levels = D.events, D.levels
    out = []
    if kind in INSERTING:
        width = 2 if kind is MoveKind.R2 else 1
        for gap, count in enumerate(levels):
            for i in range(count - width + 1):
                for s in (1, -1):
                    out.append(Move(kind, True, gap, i, sign=s))
    elif kind is MoveKind.R3:
        for e in range(len(evs) - 2):
            w = evs[e:e + 3]
            if all(x.kind.is_crossing for x in w) and w[0].pos == w[2].pos == w[1].pos - 1:
                a, b, c = (x.kind.sign for x in w)
                if not (a == c != b):
                    out.append(Move(kind, True, e, w[0].pos))
    elif kind is MoveKind.SLIDE:
        for e in range(len(evs) - 1):
            u, v = evs[e], evs[e + 1]
            if ((u.kind is Kind.CUP and v.kind.is_crossing)
                    or (u.kind.is_crossing and v.kind is Kind.CAP)) and v.pos == u.pos + 1:
                out.append(Move(kind, True, e, u.pos))
    elif kind is MoveKind.LEVEL:
        from morsejones.moves import exchange_levels
        for e in range(len(evs) - 1):
            for s in (1, -1):
                if exchange_levels(evs[e], evs[e + 1], tie_right=s > 0) is not None:
                    out.append(Move(kind, True, e, 0, sign=s))
    return out


def plant_r3(rng, max_girth=6, length=16):
    """A random diagram with a three-crossing braid-relation window spliced in."""
    while True:
        D = dg.random_diagram(rng.random(), max_girth, length)
        gaps = [j for j, c in enumerate(D.levels) if c >= 3]
        if not gaps:
            continue
        gap = rng.choice(gaps)
        i = rng.randrange(D.levels[gap] - 2)
        a, b = rng.choice((1, -1)), rng.choice((1, -1))
        c = a if a == b else rng.choice((b, -a))
        word = (Event.cross(i, a), Event.cross(i + 1, b), Event.cross(i, c))
        return dg.MorseDiagram(D.events[:gap] + word + D.events[gap:])


def random_forward_move(kind, rng, max_girth=6, length=20):
    """A (diagram, move) pair with ``move`` applicable to the diagram."""
    while True:
        if kind is MoveKind.R3:
            D = plant_r3(rng, max_girth, length)
        else:
            D = dg.random_diagram(rng.random(), max_girth, length)
        loci = forward_loci(D, kind)
        if loci:
            return D, rng.choice(loci)
