"""Kauffman bracket and Jones polynomial of Morse diagrams.

The main route sweeps the diagram bottom to top through the span of planar
matchings of the current strands (a Temperley-Lieb state), so the cost is
governed by the girth rather than the crossing number.  A brute-force
state sum over all ``2**c`` smoothings is kept as an independent check.

Conventions: the empty diagram has bracket 1, a closed loop is worth
``delta = -A^2 - A^-2``, and a positive crossing expands as
``A * identity + A^-1 * (cap-cup)``.  The Jones polynomial uses ``q = A^-4``.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import _kernels_py, kernels
from .diagram import KIND_CODE, Kind, MorseDiagram, Orientation, _find, writhe
from .exactnum import CycloInt, LaurentInt, eval_at_root

DELTA = LaurentInt({2: -1, -2: -1})
BRUTEFORCE_LIMIT = 25


class TooManyCrossings(ValueError):
    pass


class ExceptionalRootWarning(UserWarning):
    """The root q = exp(2 pi i / r) has q^4 = 1 or q^6 = 1."""


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


# --- planar matchings ---------------------------------------------------------

def matching_to_parens(p: tuple[int, ...]) -> str:
    return "".join("(" if q > j else ")" for j, q in enumerate(p))


def parens_to_matching(s: str) -> tuple[int, ...]:
    out = [0] * len(s)
    stack = []
    for j, ch in enumerate(s):
        if ch == "(":
            stack.append(j)
        elif ch == ")":
            if not stack:
                raise ValueError(f"unbalanced parentheses: {s!r}")
            i = stack.pop()
            out[i], out[j] = j, i
        else:
            raise ValueError(f"bad character {ch!r}")
    if stack:
        raise ValueError(f"unbalanced parentheses: {s!r}")
    return tuple(out)


def planar_matchings(k: int) -> list[tuple[int, ...]]:
    """Every noncrossing perfect matching of ``k`` points, in parens order."""
    if k % 2:
        return []
    out = []

    def rec(prefix: str, opened: int, closed: int):
        if len(prefix) == k:
            out.append(parens_to_matching(prefix))
            return
        if opened < k // 2:
            rec(prefix + "(", opened + 1, closed)
        if closed < opened:
            rec(prefix + ")", opened, closed + 1)

    rec("", 0, 0)
    return out


class PlanarState:
    """Sparse vector over planar matchings with Laurent coefficients."""

    def __init__(self, terms: dict):
        self.terms = {p: (c if isinstance(c, LaurentInt) else LaurentInt(c))
                      for p, c in terms.items()}
        self.terms = {p: c for p, c in self.terms.items() if not c.is_zero()}

    def __len__(self):
        return len(self.terms)

    def dump(self) -> str:
        """One line per matching, sorted by its parenthesis word."""
        rows = sorted((matching_to_parens(p), c) for p, c in self.terms.items())
        return "\n".join(f"{word or '.'}\t{c}" for word, c in rows)


def sweep_trace(D: MorseDiagram):
    """Yield the sweep state on every generic line, bottom to top."""
    state = {(): {0: 1}}
    memo: dict = {}
    yield PlanarState(state)
    for code, i in D.codes():
        state = _kernels_py.step(state, code, i, memo)
        yield PlanarState(state)


@dataclass(frozen=True)
class SweepResult:
    bracket: LaurentInt
    peak: int
    steps: int


def sweep_stats(D: MorseDiagram, backend=None) -> SweepResult:
    mod = backend or kernels
    poly, peak, steps = mod.sweep(D.codes())
    return SweepResult(LaurentInt(poly), peak, steps)


def bracket_sweep(D: MorseDiagram) -> LaurentInt:
    return sweep_stats(D).bracket


def _bruteforce_setup(D: MorseDiagram):
    arcs = D._arcs
    parent = list(range(arcs.n_segs))
    for ev, i_s, o_s in zip(D.events, arcs.ins, arcs.outs):
        if ev.kind is Kind.CUP:
            a, b = (_find(parent, s) for s in o_s)
            if a != b:
                parent[a] = b
        elif ev.kind is Kind.CAP:
            a, b = (_find(parent, s) for s in i_s)
            if a != b:
                parent[a] = b
    node = {}
    for s in range(arcs.n_segs):
        node.setdefault(_find(parent, s), len(node))
    ids = [node[_find(parent, s)] for s in range(arcs.n_segs)]
    a_pairs, b_pairs = [], []
    for ev, i_s, o_s in zip(D.events, arcs.ins, arcs.outs):
        if not ev.kind.is_crossing:
            continue
        (a, b), (c, d) = [ids[s] for s in i_s], [ids[s] for s in o_s]
        straight = ((a, c), (b, d))
        hook = ((a, b), (c, d))
        if ev.kind is Kind.XPOS:
            a_pairs.append(straight)
            b_pairs.append(hook)
        else:
            a_pairs.append(hook)
            b_pairs.append(straight)
    return len(node), a_pairs, b_pairs


def bruteforce_ops(D: MorseDiagram) -> int:
    """Elementary operations of the state sum: one per (state, crossing)."""
    c = D.crossings
    return (1 << c) * max(c, 1)


def bracket_bruteforce(D: MorseDiagram, backend=None) -> LaurentInt:
    """Sum over all smoothings of ``A^(#A - #B) * delta^loops``."""
    if D.crossings > BRUTEFORCE_LIMIT:
        raise TooManyCrossings(f"{D.crossings} crossings exceeds the limit of {BRUTEFORCE_LIMIT}")
    if not D.events:
        return LaurentInt.const(1)
    mod = backend or kernels
    n, a_pairs, b_pairs = _bruteforce_setup(D)
    hist = mod.bruteforce_counts(n, a_pairs, b_pairs)
    total = LaurentInt()
    powers: dict[int, LaurentInt] = {}
    for (expo, loops), count in hist.items():
        if loops not in powers:
            powers[loops] = DELTA ** loops
        total = total + powers[loops].shift(expo) * count
    return total


def writhe_factor(w: int) -> LaurentInt:
    """``(-A)^(-3w)``."""
    return LaurentInt.monomial(-3 * w, -1 if w % 2 else 1)


def jones_symbolic(D: MorseDiagram, o: Orientation | None = None) -> LaurentInt:
    """Jones polynomial as a Laurent polynomial in A, normalised to 1 on the unknot."""
    w = writhe(D, o)
    return (writhe_factor(w) * bracket_sweep(D)).exact_div(DELTA)


def jones_t_terms(J: LaurentInt) -> dict[Fraction, int]:
    """Rewrite ``J`` in ``t = A^-4``; exponents may be half-integers for links."""
    return {Fraction(-e, 4): v for e, v in J.items()}


def format_t(J: LaurentInt) -> str:
    terms = sorted(jones_t_terms(J).items())
    if not terms:
        return "0"
    out = ""
    for k, (e, v) in enumerate(terms):
        sign = "-" if v < 0 else "+"
        mag = abs(v)
        mono = "1" if e == 0 else ("t" if e == 1 else f"t^{e}")
        body = mono if mag == 1 and e != 0 else (str(mag) if e == 0 else f"{mag}*{mono}")
        if k == 0:
            out = ("-" if v < 0 else "") + body
        else:
            out += f" {sign} {body}"
    return out


def is_exceptional(r: int) -> bool:
    return r < 5 or r == 6


def jones_at_root(D: MorseDiagram, o: Orientation | None, r: int) -> CycloInt:
    """``J(exp(2 pi i / r))`` as an element of ``Z[zeta_4r]``, with ``A = zeta_4r^-1``."""
    if r < 3:
        raise ValueError(f"r must be at least 3, got {r}")
    if is_exceptional(r):
        warnings.warn(f"r={r}: q^4 = 1 or q^6 = 1, an exceptional (easy) evaluation",
                      ExceptionalRootWarning, stacklevel=2)
    return eval_at_root(jones_symbolic(D, o), 4 * r, -1)


def sweep_cost_model(D: MorseDiagram) -> tuple[int, int]:
    """Predicted peak state support and number of sweep events."""
    g = max(D.levels)
    return catalan(g // 2), len(D.events)
