# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled rule kernels; same contract as cantordiff._kernel_py."""

from bisect import bisect_left

cdef str DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


def compose_rules(tuple g_rules, tuple f_rules, dict table, Py_ssize_t max_depth):
    cdef dict g_index = {}
    cdef list g_domains
    cdef list out = []
    cdef str u, v, u2, v2, s, ran, dom
    cdef int e, e2
    cdef Py_ssize_t k, lv, i, nd
    cdef object hit
    cdef tuple rule
    for rule in g_rules:
        g_index[rule[0]] = (rule[1], rule[2])
    g_domains = sorted(g_index)
    nd = len(g_domains)
    for rule in f_rules:
        u = rule[0]
        v = rule[1]
        e = rule[2]
        lv = len(v)
        hit = None
        for k in range(lv + 1):
            hit = g_index.get(v[:k])
            if hit is not None:
                break
        if hit is not None:
            v2 = (<tuple>hit)[0]
            e2 = (<tuple>hit)[1]
            s = v[k:]
            if e2:
                s = s.translate(table)
            ran = v2 + s
            if len(ran) > max_depth:
                return None
            out.append((u, ran, e ^ e2))
            continue
        i = bisect_left(g_domains, v)
        while i < nd:
            u2 = <str>g_domains[i]
            if not u2.startswith(v):
                break
            s = u2[lv:]
            if e:
                s = s.translate(table)
            dom = u + s
            if len(dom) > max_depth:
                return None
            hit = g_index[u2]
            out.append((dom, (<tuple>hit)[0], e ^ <int>(<tuple>hit)[1]))
            i += 1
    return out


def reduce_rules(rules, int n):
    cdef dict index = {}
    cdef dict by_len = {}
    cdef str u, v, p, v0, q, alphabet, last, want, d
    cdef int e, e0
    cdef Py_ssize_t depth, i
    cdef bint ok
    cdef object first, child
    cdef set level, parents
    for rule in rules:
        u = rule[0]
        index[u] = (rule[1], rule[2])
        level = by_len.get(len(u))
        if level is None:
            level = set()
            by_len[len(u)] = level
        level.add(u)
    alphabet = DIGITS[:n]
    last = alphabet[n - 1]
    depth = max(by_len) if by_len else 0
    while depth > 0:
        level = by_len.get(depth)
        if level is None:
            depth -= 1
            continue
        parents = {w[:-1] for w in level}
        for p in parents:
            first = index.get(p + "0")
            if first is None:
                continue
            v0 = (<tuple>first)[0]
            e0 = (<tuple>first)[1]
            if not v0:
                continue
            if e0:
                if v0[len(v0) - 1] != last:
                    continue
            elif v0[len(v0) - 1] != "0":
                continue
            q = v0[:len(v0) - 1]
            ok = True
            for i in range(1, n):
                child = index.get(p + alphabet[i])
                if child is None or <int>(<tuple>child)[1] != e0:
                    ok = False
                    break
                want = q + (alphabet[n - 1 - i] if e0 else alphabet[i])
                if (<tuple>child)[0] != want:
                    ok = False
                    break
            if not ok:
                continue
            for d in alphabet:
                del index[p + d]
                level.discard(p + d)
            index[p] = (q, e0)
            if depth - 1 not in by_len:
                by_len[depth - 1] = set()
            (<set>by_len[depth - 1]).add(p)
        depth -= 1
    return tuple(sorted([(w, (<tuple>index[w])[0], (<tuple>index[w])[1]) for w in index]))


def expand_rule(tuple rule, int n, dict table):
    cdef str u = rule[0]
    cdef str v = rule[1]
    cdef int e = rule[2]
    cdef list out = []
    cdef str d
    cdef Py_ssize_t i
    for i in range(n):
        d = DIGITS[i]
        out.append((u + d, v + (d.translate(table) if e else d), e))
    return out
