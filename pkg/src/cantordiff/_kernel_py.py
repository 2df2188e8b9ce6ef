"""Pure-Python rule kernels.

A rule is a tuple ``(domain, range, flip)`` of two digit words and an int 0/1.
Rule ``(u, v, e)`` sends ``u + s`` to ``v + c^e(s)`` where ``c`` is the
digitwise complement.  These functions take and return plain tuples so the
compiled kernel can mirror them exactly.
"""

from bisect import bisect_left

DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


def compose_rules(g_rules, f_rules, table, max_depth):
    """Unreduced rules of ``g after f``.

    ``table`` is the complement translation table for the arity.  Returns
    ``None`` when a produced word is longer than ``max_depth``; the caller
    raises.
    """
    g_index = {u: (v, e) for u, v, e in g_rules}
    g_domains = sorted(g_index)
    out = []
    for u, v, e in f_rules:
        hit = None
        for k in range(len(v) + 1):
            hit = g_index.get(v[:k])
            if hit is not None:
                break
        if hit is not None:
            # v = u2 + s
            v2, e2 = hit
            s = v[k:]
            if e2:
                s = s.translate(table)
            ran = v2 + s
            if len(ran) > max_depth:
                return None
            out.append((u, ran, e ^ e2))
            continue
        # v is a proper prefix of one or more g domains
        lv = len(v)
        i = bisect_left(g_domains, v)
        while i < len(g_domains):
            u2 = g_domains[i]
            if not u2.startswith(v):
                break
            s = u2[lv:]
            if e:
                s = s.translate(table)
            dom = u + s
            if len(dom) > max_depth:
                return None
            v2, e2 = g_index[u2]
            out.append((dom, v2, e ^ e2))
            i += 1
    return out


def reduce_rules(rules, n):
    """Merge complete sibling families until none is left; sort by domain."""
    index = {}
    by_len = {}
    for u, v, e in rules:
        index[u] = (v, e)
        by_len.setdefault(len(u), set()).add(u)
    alphabet = DIGITS[:n]
    last = alphabet[-1]
    depth = max(by_len, default=0)
    while depth > 0:
        parents = {u[:-1] for u in by_len.get(depth, ())}
        for p in parents:
            first = index.get(p + "0")
            if first is None:
                continue
            v0, e0 = first
            if not v0:
                continue
            if e0:
                if v0[-1] != last:
                    continue
            elif v0[-1] != "0":
                continue
            q = v0[:-1]
            ok = True
            for i in range(1, n):
                child = index.get(p + alphabet[i])
                if child is None or child[1] != e0:
                    ok = False
                    break
                want = q + (alphabet[n - 1 - i] if e0 else alphabet[i])
                if child[0] != want:
                    ok = False
                    break
            if not ok:
                continue
            for d in alphabet:
                del index[p + d]
                by_len[depth].discard(p + d)
            index[p] = (q, e0)
            by_len.setdefault(depth - 1, set()).add(p)
        depth -= 1
    return tuple(sorted((u, v, e) for u, (v, e) in index.items()))


def expand_rule(rule, n, table):
    """The n child rules of one rule."""
    u, v, e = rule
    out = []
    for i in range(n):
        d = DIGITS[i]
        out.append((u + d, v + (d.translate(table) if e else d), e))
    return out
