"""Pure-Python hot loops.  ``_kernels.pyx`` mirrors this file.

Event codes: 0 cup, 1 cap, 2 positive crossing, 3 negative crossing.
A planar matching is a tuple ``p`` with ``p[j]`` the partner of point ``j``.
Polynomials are plain ``{exponent: coefficient}`` dicts.
"""

BACKEND = "python"


def _cup(p, i):
    out = [0] * (len(p) + 2)
    for j, q in enumerate(p):
        out[j if j < i else j + 2] = q if q < i else q + 2
    out[i] = i + 1
    out[i + 1] = i
    return tuple(out)


def _cap(p, i):
    """Close points i, i+1.  Returns (matching, made_loop)."""
    a = p[i]
    if a == i + 1:
        lst = list(p)
        loop = True
    else:
        b = p[i + 1]
        lst = list(p)
        lst[a] = b
        lst[b] = a
        loop = False
    del lst[i:i + 2]
    return tuple(q if q < i else q - 2 for q in lst), loop


def _hook(p, i):
    """Temperley-Lieb generator e_i: cap then cup at i."""
    a = p[i]
    if a == i + 1:
        return p, True
    b = p[i + 1]
    lst = list(p)
    lst[a] = b
    lst[b] = a
    lst[i] = i + 1
    lst[i + 1] = i
    return tuple(lst), False


def _acc(target, poly, shift, loop, period):
    if loop:
        for e, v in poly.items():
            for k in (e + shift + 2, e + shift - 2):
                if period:
                    k %= period
                s = target.get(k, 0) - v
                if s:
                    target[k] = s
                else:
                    del target[k]
    else:
        for e, v in poly.items():
            k = e + shift
            if period:
                k %= period
            s = target.get(k, 0) + v
            if s:
                target[k] = s
            else:
                del target[k]


def step(state, code, i, memo, period=0):
    """Push one event through ``state`` ({matching: poly}); returns the new state."""
    new = {}
    if code == 0:
        for p, poly in state.items():
            key = (0, p, i)
            q = memo.get(key)
            if q is None:
                q = memo[key] = _cup(p, i)
            new[q] = poly
    elif code == 1:
        for p, poly in state.items():
            key = (1, p, i)
            res = memo.get(key)
            if res is None:
                res = memo[key] = _cap(p, i)
            q, loop = res
            tgt = new.get(q)
            if tgt is None:
                tgt = new[q] = {}
            _acc(tgt, poly, 0, loop, period)
    else:
        # positive crossing: A * identity + A^-1 * e_i
        s_id = 1 if code == 2 else -1
        for p, poly in state.items():
            tgt = new.get(p)
            if tgt is None:
                tgt = new[p] = {}
            _acc(tgt, poly, s_id, False, period)
            key = (2, p, i)
            res = memo.get(key)
            if res is None:
                res = memo[key] = _hook(p, i)
            q, loop = res
            tgt = new.get(q)
            if tgt is None:
                tgt = new[q] = {}
            _acc(tgt, poly, -s_id, loop, period)
    return {p: poly for p, poly in new.items() if poly}


def sweep(events, period=0):
    """Temperley-Lieb contraction of a closed event word.

    Returns ``(bracket, peak_support, steps)`` where ``steps`` counts one
    unit per (event, live matching) pair.  With ``period > 0`` exponents are
    reduced modulo ``period``.
    """
    state = {(): {0: 1}}
    peak = 1
    steps = 0
    memo = {}
    for code, i in events:
        steps += len(state)
        state = step(state, code, i, memo, period)
        if len(state) > peak:
            peak = len(state)
    return state.get((), {}), peak, steps


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def bruteforce_counts(n_nodes, a_pairs, b_pairs):
    """Enumerate all 2**c resolutions.

    ``a_pairs[k]``/``b_pairs[k]`` are the two node pairs joined by the A/B
    smoothing of crossing ``k``.  Returns ``{(#A - #B, loops): count}``.
    """
    c = len(a_pairs)
    hist = {}
    for state in range(1 << c):
        parent = list(range(n_nodes))
        comps = n_nodes
        na = 0
        for k in range(c):
            if (state >> k) & 1:
                pairs = b_pairs[k]
            else:
                pairs = a_pairs[k]
                na += 1
            for u, v in pairs:
                ru = _find(parent, u)
                rv = _find(parent, v)
                if ru != rv:
                    parent[ru] = rv
                    comps -= 1
        key = (2 * na - c, comps)
        hist[key] = hist.get(key, 0) + 1
    return hist
